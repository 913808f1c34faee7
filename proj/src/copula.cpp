#include "mimest/copula.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "mimest/errors.hpp"

namespace mimest {

namespace {

// latent scores for one data column: probit of average-rank / (n+1)
std::vector<double> probit_scores(const std::vector<double>& col) {
  const auto n = col.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return col[a] < col[b]; });
  std::vector<double> scores(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && col[order[j + 1]] == col[order[i]]) ++j;
    const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;  // 1-based
    const double z = normal_quantile(avg_rank / static_cast<double>(n + 1));
    for (size_t k = i; k <= j; ++k) scores[order[k]] = z;
    i = j + 1;
  }
  return scores;
}

Matrix block_diagonal(const Matrix& sigma, int dx) {
  Matrix out = sigma;
  out.topRightCorner(dx, sigma.cols() - dx).setZero();
  out.bottomLeftCorner(sigma.rows() - dx, dx).setZero();
  return out;
}

void rebuild_factors(CopulaModel& model) {
  model.chol_joint = cholesky(model.sigma);
  model.chol_product = cholesky(block_diagonal(model.sigma, model.dx));
}

Matrix map_latents_to_values(const CopulaModel& model, const Matrix& latents) {
  Matrix out(latents.rows(), latents.cols());
  for (Eigen::Index j = 0; j < latents.cols(); ++j) {
    const auto& table = model.tables[static_cast<size_t>(j)];
    for (Eigen::Index i = 0; i < latents.rows(); ++i)
      out(i, j) = rank_map(latents(i, j), table);
  }
  return out;
}

}  // namespace

CopulaModel fit_copula(const PairedDataset& ds) {
  const int n = ds.n();
  if (n < 100) throw TooFewSamples("fit_copula needs at least 100 samples");
  const int dim = ds.dx() + ds.dy();
  CopulaModel model;
  model.dx = ds.dx();
  model.dy = ds.dy();
  model.tables.resize(static_cast<size_t>(dim));
  Matrix scores(n, dim);
  for (int j = 0; j < dim; ++j) {
    std::vector<double> col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      col[static_cast<size_t>(i)] = j < ds.dx() ? ds.x(i, j) : ds.y(i, j - ds.dx());
    const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
    if (*mn == *mx)
      throw DegenerateDimension("coordinate " + std::to_string(j) + " is constant");
    const std::vector<double> z = probit_scores(col);
    for (int i = 0; i < n; ++i) scores(i, j) = z[static_cast<size_t>(i)];
    std::sort(col.begin(), col.end());
    model.tables[static_cast<size_t>(j)] = std::move(col);
  }
  Matrix sigma = (scores.transpose() * scores) / static_cast<double>(n);
  model.sigma = nearest_correlation(sigma);
  rebuild_factors(model);
  return model;
}

double rank_map(double eps, const std::vector<double>& table) {
  const auto n = static_cast<long>(table.size());
  auto r = static_cast<long>(std::ceil(static_cast<double>(n) * normal_cdf(eps)));
  r = std::clamp(r, 1L, n);
  return table[static_cast<size_t>(r - 1)];
}

Matrix sample_joint(const CopulaModel& model, int n, Rng& rng) {
  const Vector zero = Vector::Zero(model.dim());
  return map_latents_to_values(model, sample_mvn(rng, zero, model.chol_joint, n));
}

Matrix sample_product(const CopulaModel& model, int n, Rng& rng) {
  const Vector zero = Vector::Zero(model.dim());
  return map_latents_to_values(model, sample_mvn(rng, zero, model.chol_product, n));
}

double copula_gaussian_mi(const CopulaModel& model) {
  const double ld_joint = logdet_spd(model.sigma);
  const double ld_x = logdet_spd(model.sigma.topLeftCorner(model.dx, model.dx));
  const double ld_y = logdet_spd(model.sigma.bottomRightCorner(model.dy, model.dy));
  return -0.5 * (ld_joint - ld_x - ld_y);
}

std::string CopulaModel::to_json() const {
  nlohmann::json j;
  j["format"] = "mimest-copula";
  j["version"] = 1;
  j["dx"] = dx;
  j["dy"] = dy;
  j["tables"] = tables;
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(sigma.rows()));
  for (Eigen::Index i = 0; i < sigma.rows(); ++i)
    rows.emplace_back(sigma.row(i).begin(), sigma.row(i).end());
  j["sigma"] = rows;
  return j.dump();
}

CopulaModel CopulaModel::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", "") != "mimest-copula" || j.value("version", 0) != 1)
    throw IoFailure("not a version-1 copula model");
  CopulaModel model;
  model.dx = j.at("dx").get<int>();
  model.dy = j.at("dy").get<int>();
  model.tables = j.at("tables").get<std::vector<std::vector<double>>>();
  const auto rows = j.at("sigma").get<std::vector<std::vector<double>>>();
  const auto dim = static_cast<Eigen::Index>(rows.size());
  model.sigma.resize(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k)
      model.sigma(i, k) = rows[static_cast<size_t>(i)][static_cast<size_t>(k)];
  rebuild_factors(model);
  return model;
}

void CopulaModel::save(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  os << to_json();
  if (!os) throw IoFailure("write failed: " + path);
}

CopulaModel CopulaModel::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return from_json(text);
}

}  // namespace mimest
