#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mimest/copula.hpp"
#include "mimest/mlp.hpp"
#include "mimest/synth.hpp"

namespace mimest {

enum class EstimatorKind { mime, mre, mine, nwj, infonce, doe };

EstimatorKind estimator_from_string(const std::string& name);
std::string to_string(EstimatorKind kind);
const std::vector<std::string>& estimator_names();

enum class EstimateMode { ratio, dv };

struct EstimatorConfig {
  // network
  int hidden_layers = 3;
  int hidden_width = 500;
  double leaky_slope = 0.01;
  bool dense_skip = true;
  // optimizer
  double lr = 5e-4;
  double weight_decay = 1e-6;
  // schedule
  int batch_size = 512;
  int max_epochs = 200;
  int patience = 10;
  double val_fraction = 0.1;
  double eval_fraction = 0.1;
  int infonce_batch = 0;  // 0 means batch_size
  EstimateMode mode = EstimateMode::ratio;

  void validate() const;
  AdamConfig adam() const { return {lr, 0.9, 0.999, 1e-8, weight_decay}; }
};

struct MiEstimate {
  double value = 0.0;
  std::string estimator;
  std::string mode;
  int eval_count = 0;
  uint64_t seed = 0;
};

struct DataSplit {
  PairedDataset train, val, eval;
};

// Disjoint train/validation/evaluation split (fractions of the full set).
DataSplit split_dataset(const PairedDataset& ds, double val_fraction, double eval_fraction,
                        Rng& rng);

// Draws n fresh reference rows, columns ordered x block then y block.
using BatchSampler = std::function<Matrix(int, Rng&)>;

// Four-class joint/reference-joint/reference-product/shuffled training common
// to the multinomial estimators. Classes 1 and 4 come from the data split;
// classes 2 and 3 are sampled fresh every batch.
Mlp four_class_train(const PairedDataset& train, const PairedDataset& val,
                     const BatchSampler& ref_joint, const BatchSampler& ref_product,
                     const EstimatorConfig& cfg, Rng& rng);

Mlp mime_train(const PairedDataset& train, const PairedDataset& val, const CopulaModel& model,
               const EstimatorConfig& cfg, Rng& rng);

// Mean logit gap between the joint class and the shuffled class (the
// plugin MI estimate of the four-class classifier).
double mime_estimate(const Mlp& h, const PairedDataset& eval_pairs);

// (h1 - h4, sum of consecutive logit gaps); equal up to rounding.
std::pair<double, double> telescoped_ratio(const Mlp& h, const Vector& x, const Vector& y);

// Donsker-Varadhan bound mean(f) - log mean(exp f) over given critic values.
double dv_bound(const Vector& f_joint, const Vector& f_product);
// NWJ bound mean(f) - mean(exp(f - 1)).
double nwj_bound(const Vector& f_joint, const Vector& f_product);

// DV bound evaluated with f = h1 - h4; a lower-bound style estimate.
double dv_from_ratio(const Mlp& h, const PairedDataset& joint_eval,
                     const PairedDataset& product_eval);

struct GaussianMoments {
  Vector mean;
  Matrix cov;
};
GaussianMoments fit_gaussian_moments(const PairedDataset& pairs);

// Cholesky with an eigenvalue-floor projection fallback for singular input.
Matrix safe_cholesky(const Matrix& cov);

// Gaussian-model MI as entropy difference H[Y] - H[Y|X], in closed form.
double doe_gaussian_mi(const GaussianMoments& moments, int dx);

// Uniform entry point: split, train, estimate. Deterministic given
// (kind, dataset, config, seed).
MiEstimate run_estimator(EstimatorKind kind, const PairedDataset& ds,
                         const EstimatorConfig& cfg, uint64_t seed);

}  // namespace mimest
