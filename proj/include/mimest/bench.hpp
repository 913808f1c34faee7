#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mimest/estimators.hpp"

namespace mimest {

// One benchmark task cell: family plus its parameters. transform applies to
// the gauss family only ("tanh", or "tanh:exp" for distinct f and g kinds);
// mog1/mog2 fix their own dependence lists and swissroll is two-dimensional
// by construction.
struct TaskSpec {
  std::string family = "gauss";  // gauss | mog1 | mog2 | swissroll
  std::string transform = "identity";
  int d = 1;
  double rho = 0.0;
  void validate() const;
};

PairedDataset generate_task(const TaskSpec& spec, int n, Rng& rng);

// Ground truth in nats: exact closed form where available (std_error 0),
// Monte-Carlo integration for the mixtures.
McEstimate task_true_mi(const TaskSpec& spec, int mc_samples, Rng& oracle_rng);

// Generate the task dataset from a dedicated stream of `seed`, then run the
// estimator. A sweep cell performs exactly this call per (seed, estimator),
// so any record can be regenerated in isolation.
MiEstimate run_task_estimator(const TaskSpec& spec, int n, EstimatorKind kind,
                              const EstimatorConfig& cfg, uint64_t seed);

struct EstimateRecord {
  std::string task;
  std::string transform;
  int d = 0;
  double rho = 0.0;
  int n = 0;
  uint64_t seed = 0;
  std::string estimator;
  double mi_true = 0.0;
  double mi_true_stderr = 0.0;
  double mi_est = 0.0;
  std::string mode;
  double wall_time_seconds = 0.0;
  std::string status = "ok";
};

struct SweepGrid {
  std::string family = "gauss";
  std::vector<std::string> transforms = {"identity"};
  std::vector<int> d = {1};
  std::vector<double> rho = {0.0};
  std::vector<int> n = {10000};
};

struct SweepConfig {
  uint64_t master_seed = 0;
  int seeds_per_cell = 10;
  int mc_samples = 1000000;
  int threads = 1;
  std::string output = "records.csv";
  std::vector<std::string> estimators;
  EstimatorConfig estimator_config;
  std::vector<SweepGrid> tasks;

  void validate() const;
  static SweepConfig from_json(const std::string& text);
  static SweepConfig from_json_file(const std::string& path);
};

// Apply partial JSON overrides onto a base estimator configuration.
EstimatorConfig estimator_config_from_json(const std::string& text, EstimatorConfig base);

// Execute the full grid: one record per cell x seed x estimator, in a fixed
// deterministic order regardless of thread count. Per-run failures become
// error-status rows. With resume, ok rows from an existing output file are
// reused instead of recomputed.
std::vector<EstimateRecord> run_sweep(const SweepConfig& cfg, bool resume = false);

struct CellAggregate {
  std::string task;
  std::string transform;
  int d = 0;
  double rho = 0.0;
  int n = 0;
  std::string estimator;
  int runs = 0;
  double mi_true = 0.0;
  double mi_est_mean = 0.0;
  double mi_est_median = 0.0;
  double mi_est_std = 0.0;
  double abs_err_of_median = 0.0;  // |median(est) - truth|
  double median_abs_err = 0.0;     // median over runs of |est - truth|
};

// One aggregate per (task, transform, d, rho, n, estimator); error rows are
// excluded from the statistics.
std::vector<CellAggregate> summarize(const std::vector<EstimateRecord>& records);

void write_records_csv(const std::vector<EstimateRecord>& records, const std::string& path);
std::vector<EstimateRecord> read_records_csv(const std::string& path);
void write_records_json(const std::vector<EstimateRecord>& records, const std::string& path);
std::vector<EstimateRecord> read_records_json(const std::string& path);

void write_aggregates_csv(const std::vector<CellAggregate>& aggs, const std::string& path);
void write_aggregates_json(const std::vector<CellAggregate>& aggs, const std::string& path);

}  // namespace mimest
