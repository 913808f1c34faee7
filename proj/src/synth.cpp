#include "mimest/synth.hpp"

#include <cmath>
#include <numbers>

#include "mimest/errors.hpp"

namespace mimest {

Transform transform_from_string(const std::string& name) {
  if (name == "identity") return Transform::identity;
  if (name == "tanh") return Transform::tanh_mat;
  if (name == "cube") return Transform::cube_mat;
  if (name == "exp") return Transform::exp_mat;
  throw ConfigInvalid("unknown transform '" + name +
                      "' (use identity, tanh, cube or exp)");
}

std::string to_string(Transform t) {
  switch (t) {
    case Transform::identity: return "identity";
    case Transform::tanh_mat: return "tanh";
    case Transform::cube_mat: return "cube";
    case Transform::exp_mat: return "exp";
  }
  return "identity";
}

void NonlinearGaussianSpec::validate() const {
  if (d < 1) throw ConfigInvalid("d must be positive");
  if (!(std::abs(rho) < 1.0)) throw ConfigInvalid("rho must lie in (-1, 1)");
}

namespace {

constexpr uint64_t kTransformMatrixSeed = 0x7A5BC01DULL;

Matrix elementwise(const Matrix& e, Transform t) {
  switch (t) {
    case Transform::identity: return e;
    case Transform::tanh_mat: return e.array().tanh();
    case Transform::cube_mat: return e.array().cube();
    case Transform::exp_mat: return e.array().exp();
  }
  return e;
}

Matrix apply_transform(const Matrix& e, Transform t, int side) {
  if (t == Transform::identity) return e;
  return elementwise(e, t) * transform_matrix(static_cast<int>(e.cols()), side).transpose();
}

// Correlated latent pair: eps1 = z1, eps2 = rho*z1 + sqrt(1-rho^2)*z2 is the
// closed-form Cholesky of the sparse block covariance.
void sample_latent_pair(int n, int d, double rho, Rng& rng, Matrix& eps1, Matrix& eps2) {
  eps1.resize(n, d);
  eps2.resize(n, d);
  const double c = std::sqrt(1.0 - rho * rho);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      const double z1 = rng.normal();
      const double z2 = rng.normal();
      eps1(i, j) = z1;
      eps2(i, j) = rho * z1 + c * z2;
    }
  }
}

}  // namespace

Matrix transform_matrix(int d, int side) {
  const Rng base(kTransformMatrixSeed ^ fnv1a64(&d, sizeof d));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (uint64_t attempt = 0;; ++attempt) {
    Rng draw = base.split(static_cast<uint64_t>(side) * 1000003ULL + attempt);
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = scale * draw.normal();
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    // well-conditioned and bounded away from zero scale
    if (s(0) / s(s.size() - 1) < 100.0 && s(s.size() - 1) > 0.05) return m;
  }
}

PairedDataset gen_nonlinear_gaussian(const NonlinearGaussianSpec& spec, int n, Rng& rng) {
  spec.validate();
  Matrix eps1, eps2;
  sample_latent_pair(n, spec.d, spec.rho, rng, eps1, eps2);
  PairedDataset ds;
  ds.x = apply_transform(eps1, spec.fx, 0);
  ds.y = apply_transform(eps2, spec.gy, 1);
  return ds;
}

double true_mi_nonlinear_gaussian(const NonlinearGaussianSpec& spec) {
  spec.validate();
  return -0.5 * spec.d * std::log1p(-spec.rho * spec.rho);
}

void MogSpec::validate() const {
  if (d < 1) throw ConfigInvalid("d must be positive");
  if (means.empty() || means.size() != rhos.size())
    throw ConfigInvalid("mixture needs matching mean and rho lists");
  for (double r : rhos)
    if (!(std::abs(r) < 1.0)) throw ConfigInvalid("every rho must lie in (-1, 1)");
}

MogSpec MogSpec::mog1(int d) {
  return {d, {-0.4, -0.1, 0.0, 0.1, 0.4}, {0.5, 0.6, 0.7, 0.8, 0.9}};
}

MogSpec MogSpec::mog2(int d) {
  return {d, {-0.2, -0.1, 0.0, 0.3, 0.4}, {-0.2, -0.1, 0.0, 0.3, 0.4}};
}

PairedDataset gen_mog(const MogSpec& spec, int n, Rng& rng) {
  spec.validate();
  const int m = spec.components();
  PairedDataset ds;
  ds.x.resize(n, spec.d);
  ds.y.resize(n, spec.d);
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<size_t>(rng.below(static_cast<uint64_t>(m)));
    const double rho = spec.rhos[k];
    const double c = std::sqrt(1.0 - rho * rho);
    for (int j = 0; j < spec.d; ++j) {
      const double z1 = rng.normal();
      const double z2 = rng.normal();
      ds.x(i, j) = spec.means[k] + z1;
      ds.y(i, j) = spec.means[k] + rho * z1 + c * z2;
    }
  }
  return ds;
}

MogLogDensities mog_logdensities(const MogSpec& spec, const Matrix& points) {
  spec.validate();
  const int d = spec.d;
  if (points.cols() != 2 * d)
    throw ShapeMismatch("mog_logdensities: points must have 2*d columns");
  const int m = spec.components();
  const double log_m = std::log(static_cast<double>(m));
  const double log_2pi = std::log(2.0 * std::numbers::pi);
  MogLogDensities out;
  out.joint.resize(points.rows());
  out.x.resize(points.rows());
  out.y.resize(points.rows());
  std::vector<double> lj(static_cast<size_t>(m)), lx(static_cast<size_t>(m)),
      ly(static_cast<size_t>(m));
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (int k = 0; k < m; ++k) {
      const double mu = spec.means[static_cast<size_t>(k)];
      const double rho = spec.rhos[static_cast<size_t>(k)];
      const double om = 1.0 - rho * rho;
      double uu = 0.0, vv = 0.0, uv = 0.0;
      for (int j = 0; j < d; ++j) {
        const double u = points(i, j) - mu;
        const double v = points(i, d + j) - mu;
        uu += u * u;
        vv += v * v;
        uv += u * v;
      }
      // block covariance [[I, rho I], [rho I, I]]: det = (1-rho^2)^d and the
      // quadratic form reduces to (|u|^2 + |v|^2 - 2 rho u.v) / (1-rho^2)
      lj[static_cast<size_t>(k)] = -log_m - d * log_2pi - 0.5 * d * std::log(om) -
                                   0.5 * (uu + vv - 2.0 * rho * uv) / om;
      lx[static_cast<size_t>(k)] = -log_m - 0.5 * d * log_2pi - 0.5 * uu;
      ly[static_cast<size_t>(k)] = -log_m - 0.5 * d * log_2pi - 0.5 * vv;
    }
    out.joint(i) = logsumexp(lj);
    out.x(i) = logsumexp(lx);
    out.y(i) = logsumexp(ly);
  }
  return out;
}

McEstimate mog_true_mi(const MogSpec& spec, int samples, Rng& rng) {
  spec.validate();
  if (samples < 1000) throw ConfigInvalid("mog_true_mi needs at least 1000 samples");
  // draw in batches, accumulate mean and variance of the log ratio
  constexpr int kBatch = 16384;
  double mean = 0.0, m2 = 0.0;
  long count = 0;
  int remaining = samples;
  while (remaining > 0) {
    const int b = std::min(kBatch, remaining);
    remaining -= b;
    PairedDataset ds = gen_mog(spec, b, rng);
    Matrix points(b, 2 * spec.d);
    points.leftCols(spec.d) = ds.x;
    points.rightCols(spec.d) = ds.y;
    const MogLogDensities ld = mog_logdensities(spec, points);
    for (int i = 0; i < b; ++i) {
      const double ratio = ld.joint(i) - ld.x(i) - ld.y(i);
      ++count;
      const double delta = ratio - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (ratio - mean);
    }
  }
  const double var = m2 / static_cast<double>(count - 1);
  return {mean, std::sqrt(var / static_cast<double>(count))};
}

void SwissRollSpec::validate() const {
  if (!(std::abs(rho) < 1.0)) throw ConfigInvalid("rho must lie in (-1, 1)");
}

PairedDataset gen_swiss_roll(const SwissRollSpec& spec, int n, Rng& rng) {
  spec.validate();
  PairedDataset ds;
  ds.x.resize(n, 2);
  ds.y.resize(n, 1);
  const double c = std::sqrt(1.0 - spec.rho * spec.rho);
  for (int i = 0; i < n; ++i) {
    const double ex = rng.normal();
    const double ey = spec.rho * ex + c * rng.normal();
    const double t = 1.5 * std::numbers::pi * (1.0 + 2.0 * normal_cdf(ex));
    ds.x(i, 0) = t * std::cos(t) / 21.0;
    ds.x(i, 1) = t * std::sin(t) / 21.0;
    ds.y(i, 0) = normal_cdf(ey);
  }
  return ds;
}

double true_mi_swiss_roll(const SwissRollSpec& spec) {
  spec.validate();
  return -0.5 * std::log1p(-spec.rho * spec.rho);
}

PairedDataset shuffle_marginals(const PairedDataset& ds, Rng& rng) {
  if (ds.n() < 2) throw TooFewSamples("shuffle_marginals needs at least 2 samples");
  const std::vector<int> perm = random_permutation(ds.n(), rng);
  PairedDataset out;
  out.x = ds.x;
  out.y.resize(ds.y.rows(), ds.y.cols());
  for (int i = 0; i < ds.n(); ++i) out.y.row(i) = ds.y.row(perm[static_cast<size_t>(i)]);
  return out;
}

}  // namespace mimest
