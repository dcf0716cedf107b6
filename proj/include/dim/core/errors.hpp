#pragma once

#include <stdexcept>
#include <string>

namespace dim {

// Bad user-supplied configuration (unknown dataset name, unsupported shape...).
// CLI maps this family to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// Missing or corrupt input data files.
struct IngestError : std::runtime_error {
  explicit IngestError(const std::string& m) : std::runtime_error(m) {}
};

// Contract violation on an in-memory value (shape mismatch, out-of-range pixel...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// Non-finite values during optimization; carries the iteration it surfaced at.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& m) : std::runtime_error(m) {}
};

// Filesystem / serialization failures.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace dim
