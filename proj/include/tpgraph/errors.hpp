// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpgraph {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid arguments, malformed input files, bad configuration. CLI exit 2.
class ValueError : public Error {
public:
  explicit ValueError(const std::string& msg) : Error(msg) {}
};

// Numeric failures at runtime (singular systems, undefined quantities,
// batch-size violations). CLI exit 3.
class NumericError : public Error {
public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// A symmetric matrix failed its Cholesky factorization. Carries the index of
// the offending pivot so callers can distinguish which variable degenerated.
class SingularMatrixError : public NumericError {
public:
  SingularMatrixError(const std::string& msg, std::size_t pivot)
      : NumericError(msg), pivot_index(pivot) {}

  std::size_t pivot_index;
};

}  // namespace tpgraph
