#pragma once

#include <stdexcept>
#include <string>

namespace gshannon {

/// A bound's validity preconditions failed (C <= 0, n below the admissible
/// minimum, r outside the corridor): the certificate is void, no value is
/// produced.
class CertificateError : public std::runtime_error {
 public:
  explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature failed to reach the requested tolerance within its
/// subdivision budget.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gshannon
