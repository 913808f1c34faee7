#include "mimest/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mimest/errors.hpp"

namespace mimest {

namespace {

constexpr int kPairChunk = 16384;  // row budget for all-pairs critic scoring

Matrix pair_matrix(const PairedDataset& ds) {
  Matrix out(ds.n(), ds.dx() + ds.dy());
  out.leftCols(ds.dx()) = ds.x;
  out.rightCols(ds.dy()) = ds.y;
  return out;
}

Matrix block_diagonal(const Matrix& cov, int dx) {
  Matrix out = cov;
  out.topRightCorner(dx, cov.cols() - dx).setZero();
  out.bottomLeftCorner(cov.rows() - dx, dx).setZero();
  return out;
}

MlpConfig network_config(const EstimatorConfig& cfg, int input_dim, int output_dim) {
  MlpConfig mc;
  mc.input_dim = input_dim;
  mc.hidden_layers = cfg.hidden_layers;
  mc.hidden_width = cfg.hidden_width;
  mc.output_dim = output_dim;
  mc.dense_skip = cfg.dense_skip;
  mc.leaky_slope = cfg.leaky_slope;
  return mc;
}

}  // namespace

EstimatorKind estimator_from_string(const std::string& name) {
  if (name == "mime") return EstimatorKind::mime;
  if (name == "mre") return EstimatorKind::mre;
  if (name == "mine") return EstimatorKind::mine;
  if (name == "nwj") return EstimatorKind::nwj;
  if (name == "infonce") return EstimatorKind::infonce;
  if (name == "doe") return EstimatorKind::doe;
  std::string all;
  for (const auto& s : estimator_names()) all += (all.empty() ? "" : ", ") + s;
  throw ConfigInvalid("unknown estimator '" + name + "' (valid: " + all + ")");
}

std::string to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::mime: return "mime";
    case EstimatorKind::mre: return "mre";
    case EstimatorKind::mine: return "mine";
    case EstimatorKind::nwj: return "nwj";
    case EstimatorKind::infonce: return "infonce";
    case EstimatorKind::doe: return "doe";
  }
  return "mime";
}

const std::vector<std::string>& estimator_names() {
  static const std::vector<std::string> names = {"mime", "mre", "mine",
                                                 "nwj", "infonce", "doe"};
  return names;
}

void EstimatorConfig::validate() const {
  if (hidden_layers < 0) throw ConfigInvalid("hidden_layers must be non-negative");
  if (hidden_layers > 0 && hidden_width < 1) throw ConfigInvalid("hidden_width must be positive");
  if (lr <= 0.0) throw ConfigInvalid("learning rate must be positive");
  if (weight_decay < 0.0) throw ConfigInvalid("weight decay must be non-negative");
  if (batch_size < 4) throw ConfigInvalid("batch size must allow one sample per class (>= 4)");
  if (max_epochs < 1) throw ConfigInvalid("max_epochs must be positive");
  if (patience < 0) throw ConfigInvalid("patience must be non-negative");
  if (!(val_fraction > 0.0 && val_fraction <= 0.5))
    throw ConfigInvalid("val_fraction must lie in (0, 0.5]");
  if (!(eval_fraction > 0.0 && eval_fraction <= 0.5))
    throw ConfigInvalid("eval_fraction must lie in (0, 0.5]");
  if (infonce_batch < 0) throw ConfigInvalid("infonce_batch must be non-negative");
}

DataSplit split_dataset(const PairedDataset& ds, double val_fraction, double eval_fraction,
                        Rng& rng) {
  const int n = ds.n();
  const int n_eval = std::max(1, static_cast<int>(std::lround(n * eval_fraction)));
  const int n_val = std::max(2, static_cast<int>(std::lround(n * val_fraction)));
  if (n_eval + n_val >= n) throw TooFewSamples("dataset too small to split");
  const std::vector<int> perm = random_permutation(n, rng);
  std::vector<int> eval_idx(perm.begin(), perm.begin() + n_eval);
  std::vector<int> val_idx(perm.begin() + n_eval, perm.begin() + n_eval + n_val);
  std::vector<int> train_idx(perm.begin() + n_eval + n_val, perm.end());
  std::sort(eval_idx.begin(), eval_idx.end());
  std::sort(val_idx.begin(), val_idx.end());
  std::sort(train_idx.begin(), train_idx.end());
  return {ds.rows(train_idx), ds.rows(val_idx), ds.rows(eval_idx)};
}

Mlp four_class_train(const PairedDataset& train, const PairedDataset& val,
                     const BatchSampler& ref_joint, const BatchSampler& ref_product,
                     const EstimatorConfig& cfg, Rng& rng) {
  cfg.validate();
  if (train.n() < 1) throw DegenerateData("training split is empty");
  if (val.n() < 2) throw DegenerateData("validation split needs at least 2 pairs");
  const int dim = train.dx() + train.dy();
  const int per_class = cfg.batch_size / 4;
  const int steps = std::max(1, train.n() / per_class);
  Mlp net(network_config(cfg, dim, 4), rng);

  // fixed validation batch: balanced across the four classes
  Rng val_rng = rng.split(101);
  const int vn = val.n();
  LabeledBatch validation;
  validation.x.resize(4 * vn, dim);
  validation.x.middleRows(0, vn) = pair_matrix(val);
  validation.x.middleRows(vn, vn) = ref_joint(vn, val_rng);
  validation.x.middleRows(2 * vn, vn) = ref_product(vn, val_rng);
  validation.x.middleRows(3 * vn, vn) = pair_matrix(shuffle_marginals(val, val_rng));
  validation.labels.resize(static_cast<size_t>(4 * vn));
  for (int c = 0; c < 4; ++c)
    std::fill_n(validation.labels.begin() + static_cast<long>(c) * vn, vn, c);

  // per-epoch gathered matrices make the per-step slices contiguous
  const int tn = train.n();
  const int usable = steps * per_class;
  Matrix epoch1(usable, dim), epoch4(usable, dim);
  auto epoch_begin = [&](int, Rng& r) {
    const auto p1 = random_permutation(tn, r);
    const auto p4x = random_permutation(tn, r);
    const auto p4y = random_permutation(tn, r);
    for (int i = 0; i < usable; ++i) {
      const int j1 = p1[static_cast<size_t>(i % tn)];
      epoch1.row(i).head(train.dx()) = train.x.row(j1);
      epoch1.row(i).tail(train.dy()) = train.y.row(j1);
      epoch4.row(i).head(train.dx()) = train.x.row(p4x[static_cast<size_t>(i % tn)]);
      epoch4.row(i).tail(train.dy()) = train.y.row(p4y[static_cast<size_t>(i % tn)]);
    }
  };
  auto next_batch = [&](int step, Rng& r) {
    LabeledBatch batch;
    batch.x.resize(4 * per_class, dim);
    batch.x.topRows(per_class) = epoch1.middleRows(step * per_class, per_class);
    batch.x.middleRows(per_class, per_class) = ref_joint(per_class, r);
    batch.x.middleRows(2 * per_class, per_class) = ref_product(per_class, r);
    batch.x.bottomRows(per_class) = epoch4.middleRows(step * per_class, per_class);
    batch.labels.resize(static_cast<size_t>(4 * per_class));
    for (int c = 0; c < 4; ++c)
      std::fill_n(batch.labels.begin() + static_cast<long>(c) * per_class, per_class, c);
    return batch;
  };

  TrainSchedule schedule{cfg.batch_size, cfg.max_epochs, cfg.patience, cfg.val_fraction};
  TrainResult result = train_classifier(std::move(net), epoch_begin, next_batch, steps,
                                        validation, schedule, cfg.adam(), rng);
  return std::move(result.net);
}

Mlp mime_train(const PairedDataset& train, const PairedDataset& val, const CopulaModel& model,
               const EstimatorConfig& cfg, Rng& rng) {
  if (model.dim() != train.dx() + train.dy())
    throw ShapeMismatch("copula model dimension does not match the dataset");
  BatchSampler joint = [&model](int n, Rng& r) { return sample_joint(model, n, r); };
  BatchSampler product = [&model](int n, Rng& r) { return sample_product(model, n, r); };
  return four_class_train(train, val, joint, product, cfg, rng);
}

double mime_estimate(const Mlp& h, const PairedDataset& eval_pairs) {
  if (eval_pairs.n() < 1) throw EmptyEvaluationSet("evaluation split is empty");
  const Matrix logits = h.forward(pair_matrix(eval_pairs));
  return (logits.col(0) - logits.col(3)).mean();
}

std::pair<double, double> telescoped_ratio(const Mlp& h, const Vector& x, const Vector& y) {
  Matrix input(1, x.size() + y.size());
  input.row(0).head(x.size()) = x.transpose();
  input.row(0).tail(y.size()) = y.transpose();
  const Matrix logits = h.forward(input);
  const double r14 = logits(0, 0) - logits(0, 3);
  const double chained = (logits(0, 0) - logits(0, 1)) + (logits(0, 1) - logits(0, 2)) +
                         (logits(0, 2) - logits(0, 3));
  return {r14, chained};
}

double dv_bound(const Vector& f_joint, const Vector& f_product) {
  if (f_joint.size() < 1 || f_product.size() < 1)
    throw EmptyEvaluationSet("DV bound needs non-empty joint and product values");
  const double lse = logsumexp({f_product.data(), static_cast<size_t>(f_product.size())});
  return f_joint.mean() - (lse - std::log(static_cast<double>(f_product.size())));
}

double nwj_bound(const Vector& f_joint, const Vector& f_product) {
  if (f_joint.size() < 1 || f_product.size() < 1)
    throw EmptyEvaluationSet("NWJ bound needs non-empty joint and product values");
  return f_joint.mean() - (f_product.array() - 1.0).exp().mean();
}

double dv_from_ratio(const Mlp& h, const PairedDataset& joint_eval,
                     const PairedDataset& product_eval) {
  if (joint_eval.n() < 1 || product_eval.n() < 1)
    throw EmptyEvaluationSet("evaluation split is empty");
  const Matrix lj = h.forward(pair_matrix(joint_eval));
  const Matrix lp = h.forward(pair_matrix(product_eval));
  return dv_bound(lj.col(0) - lj.col(3), lp.col(0) - lp.col(3));
}

GaussianMoments fit_gaussian_moments(const PairedDataset& pairs) {
  if (pairs.n() < 2) throw TooFewSamples("moment estimation needs at least 2 samples");
  const Matrix z = pair_matrix(pairs);
  GaussianMoments mo;
  mo.mean = z.colwise().mean();
  Matrix centered = z.rowwise() - mo.mean.transpose();
  mo.cov = (centered.transpose() * centered) / static_cast<double>(pairs.n());
  return mo;
}

Matrix safe_cholesky(const Matrix& cov) {
  try {
    return cholesky(cov);
  } catch (const NotPositiveDefinite&) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (cov + cov.transpose()));
    const double max_eig = eig.eigenvalues().maxCoeff();
    if (!(max_eig > 0.0)) throw SingularCovariance("covariance has no positive eigenvalue");
    const double floor = 1e-10 * max_eig;
    const Vector vals = eig.eigenvalues().cwiseMax(floor);
    const Matrix fixed =
        eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().transpose();
    return cholesky(fixed);
  }
}

double doe_gaussian_mi(const GaussianMoments& moments, int dx) {
  const auto dim = moments.cov.rows();
  const auto dy = dim - dx;
  if (dx < 1 || dy < 1) throw ShapeMismatch("doe_gaussian_mi: invalid block split");
  const Matrix sxx = moments.cov.topLeftCorner(dx, dx);
  const Matrix syy = moments.cov.bottomRightCorner(dy, dy);
  const Matrix sxy = moments.cov.topRightCorner(dx, dy);
  Eigen::LLT<Matrix> llt(sxx);
  if (llt.info() != Eigen::Success) throw SingularCovariance("x-block covariance is singular");
  // conditional covariance of y given x via the Schur complement
  const Matrix cond = syy - sxy.transpose() * llt.solve(sxy);
  double ld_yy, ld_cond;
  try {
    ld_yy = logdet_spd(syy);
    ld_cond = logdet_spd(cond);
  } catch (const NotPositiveDefinite&) {
    throw SingularCovariance("y covariance blocks are singular");
  }
  return 0.5 * (ld_yy - ld_cond);  // H[Y] - H[Y|X]
}

namespace {

// -------- scalar-critic (MINE / NWJ) training --------

struct CriticBatchLoss {
  double loss;
  Vector dlogits;  // stacked joint-then-product order
};

CriticBatchLoss dv_loss(const Vector& fj, const Vector& fn) {
  const auto bj = fj.size();
  const auto bn = fn.size();
  const double lse = logsumexp({fn.data(), static_cast<size_t>(bn)});
  CriticBatchLoss out;
  out.loss = -(fj.mean() - (lse - std::log(static_cast<double>(bn))));
  out.dlogits.resize(bj + bn);
  out.dlogits.head(bj).setConstant(-1.0 / static_cast<double>(bj));
  out.dlogits.tail(bn) = (fn.array() - lse).exp();
  return out;
}

CriticBatchLoss nwj_loss(const Vector& fj, const Vector& fn) {
  const auto bj = fj.size();
  const auto bn = fn.size();
  CriticBatchLoss out;
  out.loss = -(fj.mean() - (fn.array() - 1.0).exp().mean());
  out.dlogits.resize(bj + bn);
  out.dlogits.head(bj).setConstant(-1.0 / static_cast<double>(bj));
  out.dlogits.tail(bn) = (fn.array() - 1.0).exp() / static_cast<double>(bn);
  return out;
}

Mlp critic_train(const PairedDataset& train, const PairedDataset& val, bool use_nwj,
                 const EstimatorConfig& cfg, Rng& rng) {
  cfg.validate();
  if (train.n() < 2 || val.n() < 2)
    throw DegenerateData("critic training needs at least 2 train and 2 validation pairs");
  const int dim = train.dx() + train.dy();
  const int half = std::max(1, cfg.batch_size / 2);
  const int steps = std::max(1, train.n() / half);
  Mlp net(network_config(cfg, dim, 1), rng);
  AdamState adam(net.params().size(), cfg.adam());
  EarlyStopper stopper(cfg.patience);

  Rng val_rng = rng.split(101);
  const Matrix val_joint = pair_matrix(val);
  const Matrix val_product = pair_matrix(shuffle_marginals(val, val_rng));

  const Matrix train_pairs = pair_matrix(train);
  const int tn = train.n();
  const int usable = steps * half;
  Matrix epoch_joint(usable, dim), epoch_neg(usable, dim);
  Mlp::Cache cache;
  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    const auto perm_j = random_permutation(tn, rng);
    const auto perm_nx = random_permutation(tn, rng);
    const auto perm_ny = random_permutation(tn, rng);
    for (int i = 0; i < usable; ++i) {
      epoch_joint.row(i) = train_pairs.row(perm_j[static_cast<size_t>(i % tn)]);
      epoch_neg.row(i).head(train.dx()) = train.x.row(perm_nx[static_cast<size_t>(i % tn)]);
      epoch_neg.row(i).tail(train.dy()) = train.y.row(perm_ny[static_cast<size_t>(i % tn)]);
    }
    for (int step = 0; step < steps; ++step) {
      Matrix batch(2 * half, dim);
      batch.topRows(half) = epoch_joint.middleRows(step * half, half);
      batch.bottomRows(half) = epoch_neg.middleRows(step * half, half);
      const Matrix f = net.forward(batch, cache);
      const CriticBatchLoss cl =
          use_nwj ? nwj_loss(f.col(0).head(half), f.col(0).tail(half))
                  : dv_loss(f.col(0).head(half), f.col(0).tail(half));
      const Vector grads = net.backward(cache, cl.dlogits);
      adam_step(net.params(), grads, adam);
    }
    const Vector fj = net.forward(val_joint).col(0);
    const Vector fn = net.forward(val_product).col(0);
    const double val_loss = use_nwj ? -nwj_bound(fj, fn) : -dv_bound(fj, fn);
    stopper.observe(val_loss, net.params());
    if (stopper.should_stop()) break;
  }
  net.params() = stopper.best_params();
  return net;
}

// -------- InfoNCE --------

// all-pairs critic input rows for anchors [i0, i0+gi): x_i repeated over every y
void fill_pair_rows(const Matrix& xs, const Matrix& ys, Eigen::Index i0, Eigen::Index gi,
                    Matrix& input) {
  const auto b = ys.rows();
  const auto dx = xs.cols();
  const auto dy = ys.cols();
  input.resize(gi * b, dx + dy);
  for (Eigen::Index i = 0; i < gi; ++i) {
    input.middleRows(i * b, b).leftCols(dx) = xs.row(i0 + i).replicate(b, 1);
    input.middleRows(i * b, b).rightCols(dy) = ys;
  }
}

// score matrix S(i, j) = f(x_i, y_j), computed in row chunks
Matrix infonce_scores(const Mlp& net, const Matrix& xs, const Matrix& ys) {
  const auto b = xs.rows();
  Matrix scores(b, b);
  const auto group = std::max<Eigen::Index>(1, kPairChunk / b);
  Matrix input;
  for (Eigen::Index i0 = 0; i0 < b; i0 += group) {
    const auto gi = std::min(group, b - i0);
    fill_pair_rows(xs, ys, i0, gi, input);
    const Matrix f = net.forward(input);
    for (Eigen::Index i = 0; i < gi; ++i)
      scores.row(i0 + i) = f.col(0).segment(i * b, b).transpose();
  }
  return scores;
}

double infonce_loss_from_scores(const Matrix& scores) {
  double loss = 0.0;
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    const Vector row = scores.row(i);
    loss += logsumexp({row.data(), static_cast<size_t>(row.size())}) - scores(i, i);
  }
  return loss / static_cast<double>(scores.rows());
}

// mean InfoNCE loss over circular batches of exactly b rows
double infonce_loss_on(const Mlp& net, const PairedDataset& ds, int b) {
  const int n = ds.n();
  const int batches = (n + b - 1) / b;
  double total = 0.0;
  for (int k = 0; k < batches; ++k) {
    Matrix xs(b, ds.dx()), ys(b, ds.dy());
    for (int j = 0; j < b; ++j) {
      const int idx = (k * b + j) % n;
      xs.row(j) = ds.x.row(idx);
      ys.row(j) = ds.y.row(idx);
    }
    total += infonce_loss_from_scores(infonce_scores(net, xs, ys));
  }
  return total / batches;
}

Mlp infonce_train(const PairedDataset& train, const PairedDataset& val,
                  const EstimatorConfig& cfg, int b, Rng& rng) {
  cfg.validate();
  if (b < 2) throw ConfigInvalid("InfoNCE batch must be at least 2");
  if (train.n() < b) throw DegenerateData("training split smaller than the InfoNCE batch");
  const int dim = train.dx() + train.dy();
  const int tn = train.n();
  const int steps = std::max(1, tn / b);
  Mlp net(network_config(cfg, dim, 1), rng);
  AdamState adam(net.params().size(), cfg.adam());
  EarlyStopper stopper(cfg.patience);
  Mlp::Cache cache;

  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    const std::vector<int> perm = random_permutation(tn, rng);
    for (int step = 0; step < steps; ++step) {
      Matrix xs(b, train.dx()), ys(b, train.dy());
      for (int j = 0; j < b; ++j) {
        const int idx = perm[static_cast<size_t>((step * b + j) % tn)];
        xs.row(j) = train.x.row(idx);
        ys.row(j) = train.y.row(idx);
      }
      const Matrix scores = infonce_scores(net, xs, ys);
      // dLoss/dS: row softmax minus the diagonal, averaged over rows
      Matrix dscores(b, b);
      for (int i = 0; i < b; ++i) {
        const Vector row = scores.row(i);
        const double lse = logsumexp({row.data(), static_cast<size_t>(row.size())});
        dscores.row(i) = (row.array() - lse).exp().transpose() / static_cast<double>(b);
        dscores(i, i) -= 1.0 / static_cast<double>(b);
      }
      // second pass: recompute activations per chunk and accumulate gradients
      Vector grads = Vector::Zero(net.params().size());
      const int group = std::max(1, kPairChunk / b);
      Matrix input, dlogits;
      for (int i0 = 0; i0 < b; i0 += group) {
        const int gi = std::min(group, b - i0);
        fill_pair_rows(xs, ys, i0, gi, input);
        dlogits.resize(gi * b, 1);
        for (int i = 0; i < gi; ++i)
          dlogits.col(0).segment(static_cast<Eigen::Index>(i) * b, b) =
              dscores.row(i0 + i).transpose();
        net.forward(input, cache);
        grads += net.backward(cache, dlogits);
      }
      adam_step(net.params(), grads, adam);
    }
    const double val_loss = infonce_loss_on(net, val, std::min(b, val.n()));
    stopper.observe(val_loss, net.params());
    if (stopper.should_stop()) break;
  }
  net.params() = stopper.best_params();
  return net;
}

}  // namespace

MiEstimate run_estimator(EstimatorKind kind, const PairedDataset& ds,
                         const EstimatorConfig& cfg, uint64_t seed) {
  cfg.validate();
  Rng root(seed);
  Rng split_rng = root.split(1);
  Rng train_rng = root.split(2);
  Rng eval_rng = root.split(4);
  DataSplit split = split_dataset(ds, cfg.val_fraction, cfg.eval_fraction, split_rng);

  MiEstimate est;
  est.estimator = to_string(kind);
  est.seed = seed;
  est.eval_count = split.eval.n();

  switch (kind) {
    case EstimatorKind::mime: {
      const CopulaModel model = fit_copula(split.train);
      const Mlp h = mime_train(split.train, split.val, model, cfg, train_rng);
      if (cfg.mode == EstimateMode::ratio) {
        est.value = mime_estimate(h, split.eval);
        est.mode = "ratio";
      } else {
        const PairedDataset product = shuffle_marginals(split.eval, eval_rng);
        est.value = dv_from_ratio(h, split.eval, product);
        est.mode = "dv";
      }
      break;
    }
    case EstimatorKind::mre: {
      const GaussianMoments mo = fit_gaussian_moments(split.train);
      const Matrix chol_joint = safe_cholesky(mo.cov);
      const Matrix chol_product = safe_cholesky(block_diagonal(mo.cov, split.train.dx()));
      const Vector mean = mo.mean;
      BatchSampler joint = [&mean, &chol_joint](int n, Rng& r) {
        return sample_mvn(r, mean, chol_joint, n);
      };
      BatchSampler product = [&mean, &chol_product](int n, Rng& r) {
        return sample_mvn(r, mean, chol_product, n);
      };
      const Mlp h = four_class_train(split.train, split.val, joint, product, cfg, train_rng);
      if (cfg.mode == EstimateMode::ratio) {
        est.value = mime_estimate(h, split.eval);
        est.mode = "ratio";
      } else {
        const PairedDataset product_eval = shuffle_marginals(split.eval, eval_rng);
        est.value = dv_from_ratio(h, split.eval, product_eval);
        est.mode = "dv";
      }
      break;
    }
    case EstimatorKind::mine:
    case EstimatorKind::nwj: {
      const bool use_nwj = kind == EstimatorKind::nwj;
      const Mlp f = critic_train(split.train, split.val, use_nwj, cfg, train_rng);
      const Vector fj = f.forward(pair_matrix(split.eval)).col(0);
      const PairedDataset product = shuffle_marginals(split.eval, eval_rng);
      const Vector fn = f.forward(pair_matrix(product)).col(0);
      est.value = use_nwj ? nwj_bound(fj, fn) : dv_bound(fj, fn);
      est.mode = use_nwj ? "nwj" : "dv";
      break;
    }
    case EstimatorKind::infonce: {
      const int b = std::min(cfg.infonce_batch > 0 ? cfg.infonce_batch : cfg.batch_size,
                             split.train.n());
      const Mlp f = infonce_train(split.train, split.val, cfg, b, train_rng);
      const int eval_b = std::min(b, split.eval.n());
      est.value = std::log(static_cast<double>(eval_b)) -
                  infonce_loss_on(f, split.eval, eval_b);
      est.mode = "infonce";
      break;
    }
    case EstimatorKind::doe: {
      const int dim = split.train.dx() + split.train.dy();
      if (split.train.n() < dim * dim)
        throw TooFewSamples("DoE-Gaussian needs at least dim^2 training samples");
      const GaussianMoments mo = fit_gaussian_moments(split.train);
      est.value = doe_gaussian_mi(mo, split.train.dx());
      est.mode = "closed-form";
      break;
    }
  }
  return est;
}

}  // namespace mimest
