#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sfm {

// Thrown on malformed input files or records that violate domain invariants.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is called outside its contract.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a numerical routine produces a non-finite result; carries the
// name of the offending block or observation.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(1 + exp(x)), stable for large |x|.
inline double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// d/dx softplus(x) = logistic(x).
inline double logistic(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log(logistic(x)) = -softplus(-x).
inline double log_logistic(double x) { return -softplus(-x); }

// log(1 - exp(x)) for x < 0, stable near both ends (Maechler's recipe).
inline double log1m_exp(double x) {
  if (x >= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x > -0.6931471805599453) return std::log(-std::expm1(x));
  return std::log1p(-std::exp(x));
}

inline double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

inline double square(double x) { return x * x; }

}  // namespace sfm
