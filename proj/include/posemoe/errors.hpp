#pragma once

#include <stdexcept>
#include <string>

namespace posemoe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension/shape contract violations (mismatched extents, bad axis, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (bad hyperparameters, unknown config keys, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Differentiation contract violations (non-scalar loss, ...).
class GradError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values where finiteness is part of the contract.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failures (cannot open/read/write).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized artifacts (PSEQ / PMCK files). The kind pins down
/// which part of the format contract was violated.
class FormatError : public Error {
 public:
  enum class Kind {
    BadMagic,
    Version,
    Truncated,
    HeaderMismatch,
    MissingParameter,
    ShapeMismatch,
  };

  FormatError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Synthetic generation could not satisfy its constraints (frustum, ...).
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Degenerate geometry in an alignment problem (rank-deficient point cloud).
class AlignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace posemoe
