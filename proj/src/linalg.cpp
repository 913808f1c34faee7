#include "mimest/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mimest/errors.hpp"

namespace mimest {

Matrix cholesky(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotPositiveDefinite("cholesky: matrix not square");
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("cholesky: matrix not positive-definite");
  return llt.matrixL();
}

Matrix nearest_correlation(const Matrix& m, double eig_floor) {
  const auto n = m.rows();
  Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  Vector vals = eig.eigenvalues().cwiseMax(eig_floor);
  Matrix out = eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().transpose();
  Vector scale = out.diagonal().cwiseSqrt().cwiseInverse();
  out = scale.asDiagonal() * out * scale.asDiagonal();
  // exact unit diagonal and exact symmetry after the rescale
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = 1.0;
  out = 0.5 * (out + out.transpose()).eval();
  return out;
}

double logsumexp(std::span<const double> v) {
  if (v.empty()) throw EmptyInput("logsumexp: empty input");
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;  // all -inf stays -inf
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

Matrix sample_mvn(Rng& rng, const Vector& mean, const Matrix& chol_lower, int n) {
  const auto dim = chol_lower.rows();
  Matrix z(n, dim);
  for (int i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = rng.normal();
  Matrix out = z * chol_lower.transpose();
  out.rowwise() += mean.transpose();
  return out;
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

namespace {

// Acklam's rational approximation to the probit function.
double probit_approx(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    return p <= 0.0 ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
  double x = probit_approx(p);
  // one Halley step against the exact CDF
  const double e = normal_cdf(x) - p;
  const double u = e * std::numbers::sqrt2 * std::sqrt(std::numbers::pi) *
                   std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double logdet_spd(const Matrix& m) {
  Matrix l = cholesky(m);
  return 2.0 * l.diagonal().array().log().sum();
}

}  // namespace mimest
