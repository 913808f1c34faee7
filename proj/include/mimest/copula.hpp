#pragma once

#include <string>
#include <vector>

#include "mimest/dataset.hpp"

namespace mimest {

// Marginal-preserving reference distribution: per-dimension sorted marginal
// value tables plus a latent Gaussian correlation matrix. Sampling maps
// latent normals back onto the observed values through their ranks, so every
// sampled value belongs to the fitted data's marginal value set.
struct CopulaModel {
  int dx = 0, dy = 0;
  std::vector<std::vector<double>> tables;  // dx+dy sorted columns
  Matrix sigma;                             // (dx+dy)^2 correlation

  // cached Cholesky factors, rebuilt on load; not serialized
  Matrix chol_joint;
  Matrix chol_product;

  int dim() const { return dx + dy; }
  int population() const { return tables.empty() ? 0 : static_cast<int>(tables[0].size()); }

  std::string to_json() const;
  static CopulaModel from_json(const std::string& text);
  void save(const std::string& path) const;
  static CopulaModel load(const std::string& path);
};

// Rank-based Gaussianization: per dimension, latent scores are
// probit(rank / (n+1)) with ties broken by average rank; sigma is the
// projected correlation of those scores.
CopulaModel fit_copula(const PairedDataset& ds);

// n samples from q(x, y): latent draw from N(0, sigma), each coordinate
// mapped to the rank-indexed table value. Columns are x block then y block.
Matrix sample_joint(const CopulaModel& model, int n, Rng& rng);

// Same construction with the cross block of sigma zeroed: q(x)q(y).
Matrix sample_product(const CopulaModel& model, int n, Rng& rng);

// table[clamp(ceil(n * Phi(eps)), 1, n)], 1-indexed.
double rank_map(double eps, const std::vector<double>& table);

// MI of the latent Gaussian: -1/2 log ( det(sigma) / (det(sigma_xx) det(sigma_yy)) ).
double copula_gaussian_mi(const CopulaModel& model);

}  // namespace mimest
