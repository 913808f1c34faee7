#pragma once

#include <Eigen/Dense>
#include <span>

#include "mimest/rng.hpp"

namespace mimest {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Lower-triangular Cholesky factor L with L*L^T = m.
// Throws NotPositiveDefinite when a pivot is not strictly positive.
Matrix cholesky(const Matrix& m);

// Project a symmetric matrix to the nearest-in-spirit correlation matrix:
// symmetrize, clip eigenvalues at eig_floor, rescale to unit diagonal.
// Total function; valid correlation matrices are (near-)fixed points.
Matrix nearest_correlation(const Matrix& m, double eig_floor = 1e-6);

// log(sum_i exp(v_i)), overflow-free. Throws EmptyInput on an empty view.
double logsumexp(std::span<const double> v);

// n i.i.d. rows from N(mean, L*L^T) given a lower-triangular factor L.
Matrix sample_mvn(Rng& rng, const Vector& mean, const Matrix& chol_lower, int n);

// Standard normal CDF and its inverse (Acklam's approximation polished with
// one Halley step; absolute error well below 1e-12 over the open unit interval).
double normal_cdf(double z);
double normal_quantile(double p);

// log det of an SPD matrix via its Cholesky factor.
double logdet_spd(const Matrix& m);

}  // namespace mimest
