#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mimest/linalg.hpp"

namespace mimest {

// Dense-net MLP: H hidden layers of width W with leaky-ReLU activations.
// With dense_skip on, the raw input is concatenated to the last hidden
// activation before the output layer.
struct MlpConfig {
  int input_dim = 1;
  int hidden_layers = 3;
  int hidden_width = 500;
  int output_dim = 1;
  bool dense_skip = true;
  double leaky_slope = 0.01;
};

class Mlp {
 public:
  Mlp() = default;
  // He-scaled normal weights, zero biases
  Mlp(const MlpConfig& cfg, Rng& rng);
  static Mlp zeros(const MlpConfig& cfg);

  struct Cache {
    Matrix input;
    std::vector<Matrix> pre;   // per hidden layer pre-activations
    std::vector<Matrix> act;   // per hidden layer activations
  };

  Matrix forward(const Matrix& batch) const;
  Matrix forward(const Matrix& batch, Cache& cache) const;
  // gradient of the scalar loss w.r.t. all parameters, given dLoss/dlogits
  Vector backward(const Cache& cache, const Matrix& dlogits) const;

  const MlpConfig& config() const { return cfg_; }
  const Vector& params() const { return theta_; }
  Vector& params() { return theta_; }

  std::string to_json() const;
  static Mlp from_json(const std::string& text);
  void save(const std::string& path) const;
  static Mlp load(const std::string& path);

 private:
  struct LayerShape {
    Eigen::Index w_off = 0, b_off = 0;
    int in = 0, out = 0;
  };

  void build_layout();
  Eigen::Map<const Matrix> weight(size_t l) const;
  Eigen::Map<const Vector> bias(size_t l) const;

  MlpConfig cfg_;
  Vector theta_;
  std::vector<LayerShape> layers_;  // hidden layers, then the output layer
};

double leaky_relu(double x, double slope);
double leaky_relu_grad(double x, double slope);

// Row-wise softmax probabilities (each row sums to one).
Matrix softmax_rows(const Matrix& logits);

struct XentResult {
  double loss;     // mean negative log softmax probability of the true class
  Matrix dlogits;  // gradient of that mean w.r.t. the logits
};
XentResult softmax_xent(const Matrix& logits, const std::vector<int>& labels);

struct AdamConfig {
  double lr = 5e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 1e-6;  // decoupled, applied after the adaptive step
};

struct AdamState {
  explicit AdamState(Eigen::Index dim, AdamConfig cfg = {});
  Vector m, v;
  long t = 0;
  AdamConfig cfg;
};

void adam_step(Vector& params, const Vector& grads, AdamState& state);

// Validation improvements below this delta do not reset the patience counter.
inline constexpr double kEarlyStopDelta = 1e-4;

struct TrainSchedule {
  int batch_size = 512;
  int max_epochs = 200;
  int patience = 10;           // evaluation rounds without improvement
  double val_fraction = 0.1;   // in (0, 0.5]
  double min_delta = kEarlyStopDelta;
  void validate(int num_classes) const;
};

// Tracks the best validation loss seen and the matching parameter snapshot.
// The snapshot follows every improvement; the patience counter only resets
// on improvements larger than min_delta.
class EarlyStopper {
 public:
  explicit EarlyStopper(int patience, double min_delta = kEarlyStopDelta)
      : patience_(patience), min_delta_(min_delta) {}
  bool observe(double val_loss, const Vector& params);
  bool should_stop() const { return since_significant_ > patience_; }
  double best_loss() const { return best_loss_; }
  int best_round() const { return best_round_; }
  const Vector& best_params() const { return best_params_; }

 private:
  int patience_;
  double min_delta_;
  int rounds_ = 0;
  int since_significant_ = 0;
  int best_round_ = -1;
  double best_loss_ = std::numeric_limits<double>::infinity();
  double significant_level_ = std::numeric_limits<double>::infinity();
  Vector best_params_;
};

struct LabeledBatch {
  Matrix x;
  std::vector<int> labels;
};

struct TrainResult {
  Mlp net;  // snapshot with the best validation loss
  std::vector<double> train_loss;
  std::vector<double> val_loss;
  int best_round = -1;
};

// Minibatch softmax cross-entropy training with early stopping on a fixed
// validation batch. epoch_begin runs before each epoch (e.g. to reshuffle);
// next_batch yields class-balanced batches.
TrainResult train_classifier(Mlp net,
                             const std::function<void(int epoch, Rng&)>& epoch_begin,
                             const std::function<LabeledBatch(int step, Rng&)>& next_batch,
                             int steps_per_epoch, const LabeledBatch& validation,
                             const TrainSchedule& schedule, const AdamConfig& adam_cfg,
                             Rng& rng);

}  // namespace mimest
