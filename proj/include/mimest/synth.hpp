#pragma once

#include <string>
#include <vector>

#include "mimest/dataset.hpp"

namespace mimest {

// Element-wise map applied to the latent Gaussian before an invertible
// mixing matrix. identity applies no matrix.
enum class Transform { identity, tanh_mat, cube_mat, exp_mat };

Transform transform_from_string(const std::string& name);
std::string to_string(Transform t);

// Non-linear transformation of a sparse-correlated multivariate Gaussian:
// x = f(eps_{<=d}), y = g(eps_{>d}) with corr(eps_i, eps_{i+d}) = rho.
struct NonlinearGaussianSpec {
  int d = 1;
  double rho = 0.0;
  Transform fx = Transform::identity;
  Transform gy = Transform::identity;
  void validate() const;
};

// Fixed well-conditioned mixing matrix for one side of the pair. Deterministic
// in (d, side): entries N(0, 1/d) resampled until the condition number is
// below 100, from a dedicated seed so every estimator sees the same task.
Matrix transform_matrix(int d, int side);

PairedDataset gen_nonlinear_gaussian(const NonlinearGaussianSpec& spec, int n, Rng& rng);
// Exact closed form, invariant to the bijective transforms.
double true_mi_nonlinear_gaussian(const NonlinearGaussianSpec& spec);

// Equal-weight mixture of Gaussians with component means m_k * 1 and the
// sparse block covariance of the non-linear Gaussian model (dependence rho_k).
struct MogSpec {
  int d = 1;
  std::vector<double> means;
  std::vector<double> rhos;
  int components() const { return static_cast<int>(means.size()); }
  void validate() const;
  static MogSpec mog1(int d);
  static MogSpec mog2(int d);
};

PairedDataset gen_mog(const MogSpec& spec, int n, Rng& rng);

struct MogLogDensities {
  Vector joint;  // log p(x, y)
  Vector x;      // log p(x)
  Vector y;      // log p(y)
};
// points is n x 2d, x block first.
MogLogDensities mog_logdensities(const MogSpec& spec, const Matrix& points);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};
// Monte-Carlo estimate of E[log p(x,y) - log p(x) - log p(y)] under the joint.
McEstimate mog_true_mi(const MogSpec& spec, int samples, Rng& rng);

// Spiral manifold in R^2 paired with a scalar: both driven by a correlated
// standard bivariate Gaussian pushed through the normal CDF.
struct SwissRollSpec {
  double rho = 0.0;
  void validate() const;
};

PairedDataset gen_swiss_roll(const SwissRollSpec& spec, int n, Rng& rng);
double true_mi_swiss_roll(const SwissRollSpec& spec);

// Permute the y rows by a uniform random permutation; exact marginals kept.
PairedDataset shuffle_marginals(const PairedDataset& ds, Rng& rng);

}  // namespace mimest
