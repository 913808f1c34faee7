#include "mimest/mlp.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "mimest/errors.hpp"

namespace mimest {

void Mlp::build_layout() {
  layers_.clear();
  Eigen::Index off = 0;
  const int h = cfg_.hidden_layers;
  for (int l = 0; l < h; ++l) {
    LayerShape s;
    s.in = (l == 0) ? cfg_.input_dim : cfg_.hidden_width;
    s.out = cfg_.hidden_width;
    s.w_off = off;
    off += static_cast<Eigen::Index>(s.in) * s.out;
    s.b_off = off;
    off += s.out;
    layers_.push_back(s);
  }
  LayerShape out;
  out.in = (h == 0) ? cfg_.input_dim
                    : (cfg_.dense_skip ? cfg_.input_dim + cfg_.hidden_width : cfg_.hidden_width);
  out.out = cfg_.output_dim;
  out.w_off = off;
  off += static_cast<Eigen::Index>(out.in) * out.out;
  out.b_off = off;
  off += out.out;
  layers_.push_back(out);
  if (theta_.size() != off) theta_ = Vector::Zero(off);
}

Mlp::Mlp(const MlpConfig& cfg, Rng& rng) : cfg_(cfg) {
  build_layout();
  for (const auto& s : layers_) {
    const double scale = std::sqrt(2.0 / s.in);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(s.in) * s.out; ++i)
      theta_[s.w_off + i] = scale * rng.normal();
    // biases stay zero
  }
}

Mlp Mlp::zeros(const MlpConfig& cfg) {
  Mlp net;
  net.cfg_ = cfg;
  net.build_layout();
  return net;
}

Eigen::Map<const Matrix> Mlp::weight(size_t l) const {
  const auto& s = layers_[l];
  return {theta_.data() + s.w_off, s.in, s.out};
}

Eigen::Map<const Vector> Mlp::bias(size_t l) const {
  const auto& s = layers_[l];
  return {theta_.data() + s.b_off, s.out};
}

double leaky_relu(double x, double slope) { return x > 0.0 ? x : slope * x; }
double leaky_relu_grad(double x, double slope) { return x > 0.0 ? 1.0 : slope; }

Matrix Mlp::forward(const Matrix& batch) const {
  Cache cache;
  return forward(batch, cache);
}

Matrix Mlp::forward(const Matrix& batch, Cache& cache) const {
  if (batch.cols() != cfg_.input_dim)
    throw ShapeMismatch("forward: batch has " + std::to_string(batch.cols()) +
                        " columns, network expects " + std::to_string(cfg_.input_dim));
  const int h = cfg_.hidden_layers;
  cache.input = batch;
  cache.pre.assign(static_cast<size_t>(h), Matrix());
  cache.act.assign(static_cast<size_t>(h), Matrix());
  const Matrix* cur = &cache.input;
  const double slope = cfg_.leaky_slope;
  for (int l = 0; l < h; ++l) {
    Matrix z = (*cur) * weight(static_cast<size_t>(l));
    z.rowwise() += bias(static_cast<size_t>(l)).transpose();
    cache.pre[static_cast<size_t>(l)] = z;
    cache.act[static_cast<size_t>(l)] =
        z.unaryExpr([slope](double v) { return leaky_relu(v, slope); });
    cur = &cache.act[static_cast<size_t>(l)];
  }
  const auto& out = layers_.back();
  Matrix logits;
  if (h == 0) {
    logits = batch * weight(layers_.size() - 1);
  } else if (cfg_.dense_skip) {
    const Eigen::Map<const Matrix> w(theta_.data() + out.w_off, out.in, out.out);
    logits = batch * w.topRows(cfg_.input_dim) + (*cur) * w.bottomRows(cfg_.hidden_width);
  } else {
    logits = (*cur) * weight(layers_.size() - 1);
  }
  logits.rowwise() += bias(layers_.size() - 1).transpose();
  return logits;
}

Vector Mlp::backward(const Cache& cache, const Matrix& dlogits) const {
  const int h = cfg_.hidden_layers;
  Vector grad = Vector::Zero(theta_.size());
  const auto& out = layers_.back();
  const double slope = cfg_.leaky_slope;

  Eigen::Map<Matrix> dwout(grad.data() + out.w_off, out.in, out.out);
  Eigen::Map<Vector> dbout(grad.data() + out.b_off, out.out);
  dbout = dlogits.colwise().sum();

  Matrix dact;  // gradient flowing into the last hidden activation
  if (h == 0) {
    dwout = cache.input.transpose() * dlogits;
    return grad;
  }
  if (cfg_.dense_skip) {
    const Eigen::Map<const Matrix> w(theta_.data() + out.w_off, out.in, out.out);
    dwout.topRows(cfg_.input_dim) = cache.input.transpose() * dlogits;
    dwout.bottomRows(cfg_.hidden_width) = cache.act.back().transpose() * dlogits;
    dact = dlogits * w.bottomRows(cfg_.hidden_width).transpose();
  } else {
    dwout = cache.act.back().transpose() * dlogits;
    dact = dlogits * weight(layers_.size() - 1).transpose();
  }

  for (int l = h - 1; l >= 0; --l) {
    const auto& s = layers_[static_cast<size_t>(l)];
    Matrix dz = dact.cwiseProduct(cache.pre[static_cast<size_t>(l)].unaryExpr(
        [slope](double v) { return leaky_relu_grad(v, slope); }));
    const Matrix& below = (l == 0) ? cache.input : cache.act[static_cast<size_t>(l - 1)];
    Eigen::Map<Matrix> dw(grad.data() + s.w_off, s.in, s.out);
    Eigen::Map<Vector> db(grad.data() + s.b_off, s.out);
    dw = below.transpose() * dz;
    db = dz.colwise().sum();
    if (l > 0) dact = dz * weight(static_cast<size_t>(l)).transpose();
  }
  return grad;
}

Matrix softmax_rows(const Matrix& logits) {
  Matrix p = logits;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    const double m = p.row(i).maxCoeff();
    p.row(i) = (p.row(i).array() - m).exp();
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

XentResult softmax_xent(const Matrix& logits, const std::vector<int>& labels) {
  if (static_cast<Eigen::Index>(labels.size()) != logits.rows())
    throw ShapeMismatch("softmax_xent: label count does not match batch rows");
  const auto n = logits.rows();
  Matrix p = softmax_rows(logits);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int c = labels[static_cast<size_t>(i)];
    if (c < 0 || c >= logits.cols()) throw ShapeMismatch("softmax_xent: label out of range");
    loss -= std::log(std::max(p(i, c), 1e-300));
  }
  loss /= static_cast<double>(n);
  Matrix dlogits = p;
  for (Eigen::Index i = 0; i < n; ++i) dlogits(i, labels[static_cast<size_t>(i)]) -= 1.0;
  dlogits /= static_cast<double>(n);
  return {loss, std::move(dlogits)};
}

AdamState::AdamState(Eigen::Index dim, AdamConfig c)
    : m(Vector::Zero(dim)), v(Vector::Zero(dim)), cfg(c) {}

void adam_step(Vector& params, const Vector& grads, AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.m.size())
    throw ShapeMismatch("adam_step: parameter/gradient/state sizes differ");
  state.t += 1;
  const auto& c = state.cfg;
  state.m = c.beta1 * state.m + (1.0 - c.beta1) * grads;
  state.v = c.beta2 * state.v + (1.0 - c.beta2) * grads.cwiseProduct(grads);
  const double bc1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.t));
  const double bc2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.t));
  Vector denom = (state.v / bc2).cwiseSqrt();
  denom.array() += c.eps;
  params -= (c.lr / bc1) * state.m.cwiseQuotient(denom);
  if (c.weight_decay != 0.0) params -= (c.lr * c.weight_decay) * params;
}

void TrainSchedule::validate(int num_classes) const {
  if (batch_size < num_classes)
    throw ConfigInvalid("batch size must be at least the class count");
  if (!(val_fraction > 0.0 && val_fraction <= 0.5))
    throw ConfigInvalid("validation fraction must lie in (0, 0.5]");
  if (max_epochs < 1) throw ConfigInvalid("max epochs must be positive");
  if (patience < 0) throw ConfigInvalid("patience must be non-negative");
}

bool EarlyStopper::observe(double val_loss, const Vector& params) {
  ++rounds_;
  const bool improved = val_loss < best_loss_;
  if (improved) {
    best_loss_ = val_loss;
    best_params_ = params;
    best_round_ = rounds_ - 1;
  }
  if (val_loss < significant_level_) {
    significant_level_ = val_loss - min_delta_;
    since_significant_ = 0;
  } else {
    ++since_significant_;
  }
  return improved;
}

TrainResult train_classifier(Mlp net,
                             const std::function<void(int epoch, Rng&)>& epoch_begin,
                             const std::function<LabeledBatch(int step, Rng&)>& next_batch,
                             int steps_per_epoch, const LabeledBatch& validation,
                             const TrainSchedule& schedule, const AdamConfig& adam_cfg,
                             Rng& rng) {
  schedule.validate(net.config().output_dim);
  {
    std::vector<int> seen(static_cast<size_t>(net.config().output_dim), 0);
    for (int c : validation.labels) seen.at(static_cast<size_t>(c)) = 1;
    for (size_t c = 0; c < seen.size(); ++c)
      if (!seen[c])
        throw DegenerateData("class " + std::to_string(c) + " has zero samples");
  }

  TrainResult result;
  AdamState adam(net.params().size(), adam_cfg);
  EarlyStopper stopper(schedule.patience, schedule.min_delta);
  Mlp::Cache cache;
  for (int epoch = 0; epoch < schedule.max_epochs; ++epoch) {
    if (epoch_begin) epoch_begin(epoch, rng);
    double epoch_loss = 0.0;
    for (int step = 0; step < steps_per_epoch; ++step) {
      LabeledBatch batch = next_batch(step, rng);
      const Matrix logits = net.forward(batch.x, cache);
      auto [loss, dlogits] = softmax_xent(logits, batch.labels);
      const Vector grads = net.backward(cache, dlogits);
      adam_step(net.params(), grads, adam);
      epoch_loss += loss;
    }
    result.train_loss.push_back(epoch_loss / std::max(1, steps_per_epoch));
    const double val =
        softmax_xent(net.forward(validation.x), validation.labels).loss;
    result.val_loss.push_back(val);
    stopper.observe(val, net.params());
    if (stopper.should_stop()) break;
  }
  result.best_round = stopper.best_round();
  net.params() = stopper.best_params();
  result.net = std::move(net);
  return result;
}

std::string Mlp::to_json() const {
  nlohmann::json j;
  j["format"] = "mimest-mlp";
  j["version"] = 1;
  j["input_dim"] = cfg_.input_dim;
  j["hidden_layers"] = cfg_.hidden_layers;
  j["hidden_width"] = cfg_.hidden_width;
  j["output_dim"] = cfg_.output_dim;
  j["dense_skip"] = cfg_.dense_skip;
  j["leaky_slope"] = cfg_.leaky_slope;
  j["params"] = std::vector<double>(theta_.data(), theta_.data() + theta_.size());
  return j.dump();
}

Mlp Mlp::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", "") != "mimest-mlp" || j.value("version", 0) != 1)
    throw IoFailure("not a version-1 mlp snapshot");
  MlpConfig cfg;
  cfg.input_dim = j.at("input_dim").get<int>();
  cfg.hidden_layers = j.at("hidden_layers").get<int>();
  cfg.hidden_width = j.at("hidden_width").get<int>();
  cfg.output_dim = j.at("output_dim").get<int>();
  cfg.dense_skip = j.at("dense_skip").get<bool>();
  cfg.leaky_slope = j.at("leaky_slope").get<double>();
  Mlp net = Mlp::zeros(cfg);
  const auto params = j.at("params").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(params.size()) != net.theta_.size())
    throw IoFailure("mlp snapshot parameter count mismatch");
  for (size_t i = 0; i < params.size(); ++i) net.theta_[static_cast<Eigen::Index>(i)] = params[i];
  return net;
}

void Mlp::save(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  os << to_json();
  if (!os) throw IoFailure("write failed: " + path);
}

Mlp Mlp::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return from_json(text);
}

}  // namespace mimest
