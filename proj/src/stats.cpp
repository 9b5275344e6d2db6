#include "sfm/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>

#include "sfm/util.hpp"

namespace sfm {

namespace {
constexpr double kHalfLog2Pi = 0.91893853320467274178;
}

double normal_lpdf(double x, double mean, double sd) {
  const double z = (x - mean) / sd;
  return -0.5 * z * z - std::log(sd) - kHalfLog2Pi;
}

double exponential_lpdf(double x, double rate) {
  if (x < 0.0) return kNegInf;
  return std::log(rate) - rate * x;
}

double gamma_lpdf(double x, double shape, double rate) {
  if (x <= 0.0) return kNegInf;
  return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) -
         rate * x;
}

double inv_gamma_lpdf(double x, double shape, double scale) {
  if (x <= 0.0) return kNegInf;
  return shape * std::log(scale) - std::lgamma(shape) -
         (shape + 1.0) * std::log(x) - scale / x;
}

double inv_gamma_cdf(double x, double shape, double scale) {
  if (x <= 0.0) return 0.0;
  // X ~ InvGamma(a, b)  =>  P(X <= x) = Q(a, b / x).
  return boost::math::gamma_q(shape, scale / x);
}

std::pair<double, double> solve_interval_invgamma(double lower, double upper,
                                                  double mass) {
  if (!(lower > 0.0) || !(upper > lower)) {
    throw InvalidArgument(concat("solve_interval_invgamma: need 0 < lower < upper, got [",
                                 lower, ", ", upper, "]"));
  }
  if (!(mass > 0.0) || !(mass < 1.0)) {
    throw InvalidArgument(concat("solve_interval_invgamma: mass must be in (0,1), got ", mass));
  }
  const double tail = 0.5 * (1.0 - mass);

  // Pin the lower tail exactly for a trial shape, then measure the upper tail.
  // CDF(lower) = Q(a, b/lower) = tail  =>  b = lower * Q^{-1}(a, tail).
  const auto scale_for = [&](double shape) {
    return lower * boost::math::gamma_q_inv(shape, tail);
  };
  // Residual of the upper-tail condition; increasing in shape (larger shape
  // concentrates the distribution, pushing CDF(upper) toward 1).
  const auto residual = [&](double shape) {
    return inv_gamma_cdf(upper, shape, scale_for(shape)) - (1.0 - tail);
  };

  double lo = 1e-2, hi = 1.0;
  while (residual(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e7) {
      throw NumericalError("solve_interval_invgamma: no solution bracketed (shape > 1e7)");
    }
  }
  if (residual(lo) > 0.0) {
    throw NumericalError("solve_interval_invgamma: no solution bracketed (shape < 1e-2)");
  }
  while (hi - lo > 1e-8 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  const double shape = 0.5 * (lo + hi);
  return {shape, scale_for(shape)};
}

double quantile(std::vector<double> samples, double p) {
  if (samples.empty()) throw InvalidArgument("quantile: empty sample");
  if (p < 0.0 || p > 1.0) throw InvalidArgument(concat("quantile: p out of [0,1]: ", p));
  std::sort(samples.begin(), samples.end());
  const double h = p * static_cast<double>(samples.size() - 1);
  const auto i = static_cast<size_t>(h);
  if (i + 1 >= samples.size()) return samples.back();
  const double frac = h - static_cast<double>(i);
  return samples[i] + frac * (samples[i + 1] - samples[i]);
}

double std_normal_quantile(double p) {
  static const boost::math::normal_distribution<double> unit(0.0, 1.0);
  return boost::math::quantile(unit, p);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& x) {
  const size_t n = x.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (size_t k = i; k <= j; ++k) rank[order[k]] = r;
    i = j + 1;
  }
  return rank;
}

}  // namespace

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw InvalidArgument("pearson: need two samples of equal size >= 2");
  }
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  return sab / std::sqrt(saa * sbb);
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  return pearson(average_ranks(a), average_ranks(b));
}

}  // namespace sfm
