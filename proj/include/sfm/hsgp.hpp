#pragma once

#include <Eigen/Dense>
#include <vector>

namespace sfm {

struct SpectralScale {
  double lengthscale = 1.0;  // ell
  double amplitude = 1.0;    // iota
};

// Eigenpair of the Dirichlet Laplacian on [-L, L]:
//   lambda_j = (j*pi / (2L))^2,  phi_j(x) = sqrt(1/L) * sin(sqrt(lambda_j) (x + L)).
struct LaplacianEigenpair {
  double eigenvalue = 0.0;
  double half_width = 0.0;

  double operator()(double x) const;
};

LaplacianEigenpair laplacian_eigen(int j, double half_width);

// One-dimensional Matern-5/2 spectral density evaluated at frequency
// sqrt(lambda) for a unit-amplitude kernel with the given lengthscale.
double matern52_spectral_density(double sqrt_lambda, double lengthscale);

// d/d(lengthscale) of sqrt(matern52_spectral_density).
double matern52_sqrt_density_dlengthscale(double sqrt_lambda, double lengthscale);

// Precomputed reduced-rank basis for one input column. Inputs are centered on
// the midpoint of their observed range; L = boundary_factor * max |centered|.
struct HsgpBasis {
  int num_basis = 0;
  double boundary_factor = 0.0;
  double half_width = 0.0;  // L
  double center = 0.0;
  Eigen::VectorXd centered_inputs;  // N
  Eigen::VectorXd eigenvalues;      // B, strictly increasing
  Eigen::MatrixXd eigenvectors;     // N x B

  bool in_domain(double x) const;

  // Row of eigenfunction values at an arbitrary raw input inside the domain.
  Eigen::VectorXd eigenfunctions_at(double x) const;
};

HsgpBasis build_basis(const Eigen::VectorXd& inputs, int num_basis,
                      double boundary_factor);

// Per-basis weights w_b = sum over scales of iota * sqrt(s(sqrt(lambda_b) | ell)).
Eigen::VectorXd spectral_weights(const HsgpBasis& basis,
                                 const std::vector<SpectralScale>& scales);

// f = Phi * (w .* coeffs); the reduced-rank GP function on the basis inputs.
Eigen::VectorXd hsgp_evaluate(const HsgpBasis& basis,
                              const std::vector<SpectralScale>& scales,
                              const Eigen::VectorXd& coeffs);

}  // namespace sfm
