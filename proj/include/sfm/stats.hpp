#pragma once

#include <utility>
#include <vector>

namespace sfm {

// Log densities used by the prior system. Normal takes a standard deviation,
// exponential a rate, gamma shape and rate. All include normalizing constants
// so per-block totals can be checked against external references.
double normal_lpdf(double x, double mean, double sd);
double exponential_lpdf(double x, double rate);
double gamma_lpdf(double x, double shape, double rate);
double inv_gamma_lpdf(double x, double shape, double scale);

// P(X <= x) for X ~ InvGamma(shape, scale).
double inv_gamma_cdf(double x, double shape, double scale);

// Inverse-gamma parameters (shape, scale) such that the distribution puts
// `mass` inside [lower, upper] with equal tail probabilities on both sides.
// Solved by bracketed bisection on the shape to 1e-8; throws InvalidArgument
// when the inputs are out of contract and NumericalError when no solution is
// bracketed.
std::pair<double, double> solve_interval_invgamma(double lower, double upper,
                                                  double mass);

// Linear-interpolation quantile (R type 7) of an unsorted sample.
double quantile(std::vector<double> samples, double p);

// Standard normal quantile function.
double std_normal_quantile(double p);

// Spearman rank correlation; average ranks on ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

double pearson(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace sfm
