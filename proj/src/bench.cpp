#include "mimest/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mimest/errors.hpp"
#include "mimest/io.hpp"

namespace mimest {

namespace {

std::pair<Transform, Transform> parse_transform_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const Transform t = transform_from_string(text);
    return {t, t};
  }
  return {transform_from_string(text.substr(0, colon)),
          transform_from_string(text.substr(colon + 1))};
}

}  // namespace

void TaskSpec::validate() const {
  if (family != "gauss" && family != "mog1" && family != "mog2" && family != "swissroll")
    throw ConfigInvalid("unknown task family '" + family +
                        "' (use gauss, mog1, mog2 or swissroll)");
  if (d < 1) throw ConfigInvalid("d must be positive");
  if (family == "gauss" || family == "swissroll") {
    if (!(std::abs(rho) < 1.0)) throw ConfigInvalid("rho must lie in (-1, 1)");
  }
  if (family == "gauss") parse_transform_pair(transform);
}

PairedDataset generate_task(const TaskSpec& spec, int n, Rng& rng) {
  spec.validate();
  if (n < 1) throw ConfigInvalid("n must be positive");
  if (spec.family == "gauss") {
    const auto [fx, gy] = parse_transform_pair(spec.transform);
    return gen_nonlinear_gaussian({spec.d, spec.rho, fx, gy}, n, rng);
  }
  if (spec.family == "mog1") return gen_mog(MogSpec::mog1(spec.d), n, rng);
  if (spec.family == "mog2") return gen_mog(MogSpec::mog2(spec.d), n, rng);
  return gen_swiss_roll({spec.rho}, n, rng);
}

McEstimate task_true_mi(const TaskSpec& spec, int mc_samples, Rng& oracle_rng) {
  spec.validate();
  if (spec.family == "gauss")
    return {true_mi_nonlinear_gaussian({spec.d, spec.rho, Transform::identity,
                                        Transform::identity}),
            0.0};
  if (spec.family == "swissroll") return {true_mi_swiss_roll({spec.rho}), 0.0};
  const MogSpec mog = spec.family == "mog1" ? MogSpec::mog1(spec.d) : MogSpec::mog2(spec.d);
  return mog_true_mi(mog, mc_samples, oracle_rng);
}

MiEstimate run_task_estimator(const TaskSpec& spec, int n, EstimatorKind kind,
                              const EstimatorConfig& cfg, uint64_t seed) {
  Rng data_rng = Rng(seed).split(6);
  const PairedDataset ds = generate_task(spec, n, data_rng);
  return run_estimator(kind, ds, cfg, seed);
}

void SweepConfig::validate() const {
  if (seeds_per_cell < 1) throw ConfigInvalid("seeds_per_cell must be at least 1");
  if (mc_samples < 1000) throw ConfigInvalid("mc_samples must be at least 1000");
  if (threads < 1) throw ConfigInvalid("threads must be at least 1");
  if (estimators.empty()) throw ConfigInvalid("estimator list is empty");
  for (const auto& e : estimators) estimator_from_string(e);
  if (tasks.empty()) throw ConfigInvalid("task list is empty");
  for (const auto& grid : tasks) {
    if (grid.d.empty() || grid.rho.empty() || grid.n.empty() || grid.transforms.empty())
      throw ConfigInvalid("every grid list must be nonempty");
    for (int d : grid.d)
      for (double rho : grid.rho) TaskSpec{grid.family, grid.transforms.front(), d, rho}.validate();
    for (const auto& t : grid.transforms)
      TaskSpec{grid.family, t, grid.d.front(), grid.rho.front()}.validate();
    for (int n : grid.n)
      if (n < 10) throw ConfigInvalid("n must be at least 10");
  }
  estimator_config.validate();
}

namespace {

EstimatorConfig apply_config_overrides(const nlohmann::json& j, EstimatorConfig cfg) {
  for (const auto& [key, value] : j.items()) {
    if (key == "hidden_layers") cfg.hidden_layers = value.get<int>();
    else if (key == "hidden_width") cfg.hidden_width = value.get<int>();
    else if (key == "leaky_slope") cfg.leaky_slope = value.get<double>();
    else if (key == "dense_skip") cfg.dense_skip = value.get<bool>();
    else if (key == "lr") cfg.lr = value.get<double>();
    else if (key == "weight_decay") cfg.weight_decay = value.get<double>();
    else if (key == "batch_size") cfg.batch_size = value.get<int>();
    else if (key == "max_epochs") cfg.max_epochs = value.get<int>();
    else if (key == "patience") cfg.patience = value.get<int>();
    else if (key == "val_fraction") cfg.val_fraction = value.get<double>();
    else if (key == "eval_fraction") cfg.eval_fraction = value.get<double>();
    else if (key == "infonce_batch") cfg.infonce_batch = value.get<int>();
    else if (key == "mode") {
      const auto mode = value.get<std::string>();
      if (mode == "ratio") cfg.mode = EstimateMode::ratio;
      else if (mode == "dv") cfg.mode = EstimateMode::dv;
      else throw ConfigInvalid("mode must be 'ratio' or 'dv'");
    } else {
      throw ConfigInvalid("unknown estimator_config key '" + key + "'");
    }
  }
  return cfg;
}

}  // namespace

EstimatorConfig estimator_config_from_json(const std::string& text, EstimatorConfig base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid(std::string("bad estimator config JSON: ") + e.what());
  }
  return apply_config_overrides(j, base);
}

SweepConfig SweepConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid(std::string("bad sweep config JSON: ") + e.what());
  }
  SweepConfig cfg;
  try {
    cfg.master_seed = j.value("master_seed", uint64_t{0});
    cfg.seeds_per_cell = j.value("seeds_per_cell", 10);
    cfg.mc_samples = j.value("mc_samples", 1000000);
    cfg.threads = j.value("threads", 1);
    cfg.output = j.value("output", std::string("records.csv"));
    cfg.estimators = j.at("estimators").get<std::vector<std::string>>();
    if (j.contains("estimator_config"))
      cfg.estimator_config = apply_config_overrides(j.at("estimator_config"), cfg.estimator_config);
    for (const auto& t : j.at("tasks")) {
      SweepGrid grid;
      grid.family = t.value("family", std::string("gauss"));
      if (t.contains("transforms"))
        grid.transforms = t.at("transforms").get<std::vector<std::string>>();
      else if (t.contains("transform"))
        grid.transforms = {t.at("transform").get<std::string>()};
      else if (grid.family != "gauss")
        grid.transforms = {"identity"};
      if (t.contains("d")) grid.d = t.at("d").get<std::vector<int>>();
      if (t.contains("rho")) grid.rho = t.at("rho").get<std::vector<double>>();
      if (t.contains("n")) grid.n = t.at("n").get<std::vector<int>>();
      cfg.tasks.push_back(std::move(grid));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid(std::string("bad sweep config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

SweepConfig SweepConfig::from_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open config: " + path);
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return from_json(text);
}

namespace {

struct Cell {
  TaskSpec spec;
  int n = 0;
  size_t index = 0;
};

std::vector<Cell> enumerate_cells(const SweepConfig& cfg) {
  std::vector<Cell> cells;
  for (const auto& grid : cfg.tasks) {
    const bool gauss = grid.family == "gauss";
    const std::vector<std::string> transforms =
        gauss ? grid.transforms : std::vector<std::string>{"none"};
    for (const auto& transform : transforms)
      for (int d : grid.d)
        for (double rho : grid.rho)
          for (int n : grid.n) {
            Cell cell;
            cell.spec.family = grid.family;
            cell.spec.transform = gauss ? transform : "none";
            cell.spec.d = d;
            cell.spec.rho = rho;
            cell.n = n;
            cell.index = cells.size();
            cells.push_back(std::move(cell));
          }
  }
  return cells;
}

std::string record_key(const EstimateRecord& r) {
  std::ostringstream os;
  os << r.task << '|' << r.transform << '|' << r.d << '|' << format_double(r.rho) << '|'
     << r.n << '|' << r.seed << '|' << r.estimator;
  return os.str();
}

constexpr char kRecordHeader[] =
    "task,transform,d,rho,n,seed,estimator,mi_true,mi_true_stderr,mi_est,mode,"
    "wall_time_seconds,status";

}  // namespace

std::vector<EstimateRecord> run_sweep(const SweepConfig& cfg, bool resume) {
  cfg.validate();
  const std::vector<Cell> cells = enumerate_cells(cfg);
  const Rng master(cfg.master_seed);

  std::map<std::string, EstimateRecord> previous;
  if (resume && std::filesystem::exists(cfg.output)) {
    for (auto& r : read_records_csv(cfg.output))
      if (r.status == "ok") previous[record_key(r)] = r;
  }

  // ground truth once per cell, from a dedicated oracle stream
  std::vector<McEstimate> truths(cells.size());
  for (const auto& cell : cells) {
    Rng oracle_rng = master.split(500000 + cell.index);
    truths[cell.index] = task_true_mi(cell.spec, cfg.mc_samples, oracle_rng);
  }

  struct Job {
    size_t cell = 0;
    int seed_index = 0;
    size_t estimator = 0;
  };
  std::vector<Job> jobs;
  for (const auto& cell : cells)
    for (int j = 0; j < cfg.seeds_per_cell; ++j)
      for (size_t k = 0; k < cfg.estimators.size(); ++k)
        jobs.push_back({cell.index, j, k});

  std::vector<EstimateRecord> records(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t ji = next.fetch_add(1);
      if (ji >= jobs.size()) return;
      const Job& job = jobs[ji];
      const Cell& cell = cells[job.cell];
      const uint64_t run_seed =
          master.split(1000 + cell.index).split(static_cast<uint64_t>(job.seed_index)).seed();
      EstimateRecord rec;
      rec.task = cell.spec.family;
      rec.transform = cell.spec.transform;
      rec.d = cell.spec.d;
      rec.rho = cell.spec.rho;
      rec.n = cell.n;
      rec.seed = run_seed;
      rec.estimator = cfg.estimators[job.estimator];
      rec.mi_true = truths[job.cell].value;
      rec.mi_true_stderr = truths[job.cell].std_error;
      if (const auto it = previous.find(record_key(rec)); it != previous.end()) {
        records[ji] = it->second;
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const MiEstimate est = run_task_estimator(
            cell.spec, cell.n, estimator_from_string(rec.estimator), cfg.estimator_config,
            run_seed);
        rec.mi_est = est.value;
        rec.mode = est.mode;
        rec.status = "ok";
      } catch (const std::exception& e) {
        rec.mi_est = std::numeric_limits<double>::quiet_NaN();
        rec.mode = "";
        rec.status = std::string("error: ") + e.what();
      }
      const auto t1 = std::chrono::steady_clock::now();
      rec.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
      records[ji] = std::move(rec);
    }
  };

  if (cfg.threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

std::vector<CellAggregate> summarize(const std::vector<EstimateRecord>& records) {
  if (records.empty()) throw EmptyInput("summarize: no records");
  std::vector<CellAggregate> out;
  std::map<std::string, size_t> index;
  std::vector<std::vector<double>> values;
  for (const auto& r : records) {
    if (r.status != "ok") continue;
    std::ostringstream key;
    key << r.task << '|' << r.transform << '|' << r.d << '|' << format_double(r.rho) << '|'
        << r.n << '|' << r.estimator;
    auto [it, fresh] = index.try_emplace(key.str(), out.size());
    if (fresh) {
      CellAggregate agg;
      agg.task = r.task;
      agg.transform = r.transform;
      agg.d = r.d;
      agg.rho = r.rho;
      agg.n = r.n;
      agg.estimator = r.estimator;
      agg.mi_true = r.mi_true;
      out.push_back(std::move(agg));
      values.emplace_back();
    }
    values[it->second].push_back(r.mi_est);
  }
  auto median_of = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };
  for (size_t i = 0; i < out.size(); ++i) {
    auto& agg = out[i];
    const auto& v = values[i];
    agg.runs = static_cast<int>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= static_cast<double>(v.size());
    agg.mi_est_mean = mean;
    agg.mi_est_std = std::sqrt(var);
    agg.mi_est_median = median_of(v);
    agg.abs_err_of_median = std::abs(agg.mi_est_median - agg.mi_true);
    std::vector<double> errs;
    errs.reserve(v.size());
    for (double x : v) errs.push_back(std::abs(x - agg.mi_true));
    agg.median_abs_err = median_of(errs);
  }
  return out;
}

void write_records_csv(const std::vector<EstimateRecord>& records, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  os << kRecordHeader << "\n";
  for (const auto& r : records) {
    os << r.task << ',' << r.transform << ',' << r.d << ',' << format_double(r.rho) << ','
       << r.n << ',' << r.seed << ',' << r.estimator << ',' << format_double(r.mi_true) << ','
       << format_double(r.mi_true_stderr) << ',' << format_double(r.mi_est) << ',' << r.mode
       << ',' << format_double(r.wall_time_seconds) << ',' << r.status << "\n";
  }
  if (!os) throw IoFailure("write failed: " + path);
}

std::vector<EstimateRecord> read_records_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open: " + path);
  std::string line;
  if (!std::getline(is, line)) throw IoFailure("empty records file: " + path);
  if (line != kRecordHeader) throw IoFailure("unexpected records header in " + path);
  std::vector<EstimateRecord> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    size_t start = 0;
    for (int c = 0; c < 12; ++c) {
      const size_t comma = line.find(',', start);
      if (comma == std::string::npos) throw IoFailure("short record row in " + path);
      cols.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    cols.push_back(line.substr(start));  // status may contain commas
    EstimateRecord r;
    r.task = cols[0];
    r.transform = cols[1];
    r.d = static_cast<int>(parse_int(cols[2]));
    r.rho = parse_double(cols[3]);
    r.n = static_cast<int>(parse_int(cols[4]));
    r.seed = parse_u64(cols[5]);
    r.estimator = cols[6];
    r.mi_true = parse_double(cols[7]);
    r.mi_true_stderr = parse_double(cols[8]);
    r.mi_est = parse_double(cols[9]);
    r.mode = cols[10];
    r.wall_time_seconds = parse_double(cols[11]);
    r.status = cols[12];
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

nlohmann::json record_to_json(const EstimateRecord& r) {
  nlohmann::json j;
  j["task"] = r.task;
  j["transform"] = r.transform;
  j["d"] = r.d;
  j["rho"] = r.rho;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["estimator"] = r.estimator;
  j["mi_true"] = r.mi_true;
  j["mi_true_stderr"] = r.mi_true_stderr;
  j["mi_est"] = r.mi_est;
  j["mode"] = r.mode;
  j["wall_time_seconds"] = r.wall_time_seconds;
  j["status"] = r.status;
  return j;
}

}  // namespace

void write_records_json(const std::vector<EstimateRecord>& records, const std::string& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  os << arr.dump(2) << "\n";
  if (!os) throw IoFailure("write failed: " + path);
}

std::vector<EstimateRecord> read_records_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open: " + path);
  nlohmann::json arr = nlohmann::json::parse(is);
  std::vector<EstimateRecord> records;
  for (const auto& j : arr) {
    EstimateRecord r;
    r.task = j.at("task").get<std::string>();
    r.transform = j.at("transform").get<std::string>();
    r.d = j.at("d").get<int>();
    r.rho = j.at("rho").get<double>();
    r.n = j.at("n").get<int>();
    r.seed = j.at("seed").get<uint64_t>();
    r.estimator = j.at("estimator").get<std::string>();
    r.mi_true = j.at("mi_true").get<double>();
    r.mi_true_stderr = j.at("mi_true_stderr").get<double>();
    r.mi_est = j.at("mi_est").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                        : j.at("mi_est").get<double>();
    r.mode = j.at("mode").get<std::string>();
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    r.status = j.at("status").get<std::string>();
    records.push_back(std::move(r));
  }
  return records;
}

void write_aggregates_csv(const std::vector<CellAggregate>& aggs, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  os << "task,transform,d,rho,n,estimator,runs,mi_true,mi_est_mean,mi_est_median,"
        "mi_est_std,abs_err_of_median,median_abs_err\n";
  for (const auto& a : aggs) {
    os << a.task << ',' << a.transform << ',' << a.d << ',' << format_double(a.rho) << ','
       << a.n << ',' << a.estimator << ',' << a.runs << ',' << format_double(a.mi_true) << ','
       << format_double(a.mi_est_mean) << ',' << format_double(a.mi_est_median) << ','
       << format_double(a.mi_est_std) << ',' << format_double(a.abs_err_of_median) << ','
       << format_double(a.median_abs_err) << "\n";
  }
  if (!os) throw IoFailure("write failed: " + path);
}

void write_aggregates_json(const std::vector<CellAggregate>& aggs, const std::string& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : aggs) {
    nlohmann::json j;
    j["task"] = a.task;
    j["transform"] = a.transform;
    j["d"] = a.d;
    j["rho"] = a.rho;
    j["n"] = a.n;
    j["estimator"] = a.estimator;
    j["runs"] = a.runs;
    j["mi_true"] = a.mi_true;
    j["mi_est_mean"] = a.mi_est_mean;
    j["mi_est_median"] = a.mi_est_median;
    j["mi_est_std"] = a.mi_est_std;
    j["abs_err_of_median"] = a.abs_err_of_median;
    j["median_abs_err"] = a.median_abs_err;
    arr.push_back(std::move(j));
  }
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  os << arr.dump(2) << "\n";
  if (!os) throw IoFailure("write failed: " + path);
}

}  // namespace mimest
