#pragma once

#include <stdexcept>
#include <string>

namespace rge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing or structurally malformed input files.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Non-integer token in an integer field; the message carries file and line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Cross-file disagreement, e.g. an edge spanning two graphs.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Transport marginals with different total mass.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Training labels with a single class.
class DegenerateLabelError : public Error {
 public:
  using Error::Error;
};

// A class too small to appear in every fold.
class StratificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace rge
