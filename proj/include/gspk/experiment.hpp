#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gspk/graph.hpp"
#include "gspk/learn.hpp"
#include "gspk/sp_features.hpp"

namespace gspk {

/// Everything the experiment commands need; flags and the optional JSON
/// config file both land here (flags win on conflict).
struct ExperimentConfig {
  std::vector<int> n_list{200, 400, 600, 800, 1000};
  double c0 = 40.0;
  std::vector<double> p2_factors{1.2, 1.3, 1.4, 1.5};
  int graphs_per_class = 100;
  int folds = 10;
  std::uint64_t bin_width = 1;
  double lambda = 1e-4;
  std::int64_t iterations = 0;  // 0 -> 100 * training-set size
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  int jobs = 0;  // 0 -> hardware concurrency

  int effective_jobs() const;

  /// Throws std::invalid_argument on bad counts, factors <= 1, or any
  /// (n, factor) combination whose derived q2 leaves (0,1).
  void validate() const;

  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
};

struct LabeledGraphs {
  std::vector<Graph> graphs;
  std::vector<GraphLabel> labels;
};

/// One experiment cell: graphs_per_class one-cluster graphs followed by
/// graphs_per_class two-cluster graphs. Per-graph seed =
/// derive_seed(master_seed, cluster_count, index).
LabeledGraphs generate_cell(int n, const ModelParams& params,
                            int graphs_per_class, std::uint64_t master_seed,
                            int jobs);

/// Feature-extraction output for one kernel arm: normalized sparse
/// samples aligned on a dataset-wide index.
struct KernelFeatures {
  FeatureIndex index;
  std::vector<SparseSample> samples;
};

/// Extracts GSPI vectors once per graph (parallel across graphs) and
/// derives the SPI arm by folding away the path-count key.
struct CellFeatures {
  KernelFeatures spi;
  KernelFeatures gspi;
};
CellFeatures extract_cell_features(std::span<const Graph> graphs,
                                   BinningScheme binning, int jobs);

struct ResultRow {
  std::string kernel;  // "SPI" or "GSPI"
  int n = 0;
  double p2_factor = 0;
  double accuracy = 0;
  std::vector<double> per_fold;
  double wall_seconds = 0;
  std::string error;  // nonempty if the cell failed
};

/// Full accuracy grid: for every n and factor, both kernel arms under
/// stratified k-fold CV. Per-cell failures are recorded in the row and do
/// not abort the remaining cells.
std::vector<ResultRow> run_table1(const ExperimentConfig& config);

void write_results_csv(std::span<const ResultRow> rows, std::ostream& os);
std::string results_json(std::span<const ResultRow> rows);

// Figure data ----------------------------------------------------------

/// Averaged per-source distance histograms for both classes:
/// "x,one_cluster,two_cluster".
std::string fig1_csv(int n, double c0, double p2_factor, int graphs_per_class,
                     std::uint64_t seed, int jobs);

/// Averaged per-source path-count histograms at distance 2 for both
/// classes: "x,one_cluster,two_cluster".
std::string fig2_csv(int n, double c0, double p2_factor, int graphs_per_class,
                     std::uint64_t seed, int jobs);

/// Empirical two-cluster distance-2 path-count histogram next to the
/// mixture prediction: "x,empirical,predicted".
std::string fig3_csv(int n, double p1, double p2, int graphs,
                     std::uint64_t seed, int jobs);

// Histogram helpers shared by figures, the theory report and tests -----

/// Moving average over a +-1 window; positions outside the data count as 0.
std::vector<double> smooth3(std::span<const double> h);

/// x in [lo, hi] with h[x] > h[x-1] and h[x] >= h[x+1]
/// (out-of-range neighbors count as 0).
std::vector<int> local_maxima(std::span<const double> h, int lo, int hi);

/// Dense vector [0..x_max] from a sparse path-count histogram.
std::vector<double> dense_histogram(const std::map<std::uint64_t, double>& h,
                                    int x_max);

/// Per-graph averages (over all sources) of the number of nodes at each
/// distance in `ds`; result[di][graph_index].
std::vector<std::vector<double>> mean_nodes_at_distances(
    std::span<const Graph> graphs, std::span<const int> ds, int jobs);

// Theory-versus-empirical validation report ----------------------------

struct TheoryCheckOptions {
  int n = 1000;
  double c0 = 40.0;
  double p2_factor = 1.5;
  int graphs_per_model = 200;
  std::vector<int> distances{2, 3};
  int mixture_n = 400;
  double mixture_p1 = 0.1;
  double mixture_p2 = 0.18;
  int mixture_graphs = 200;
  int lemma_cases = 10000;
  std::uint64_t seed = 1;
  int jobs = 0;
};

/// JSON report with the expectation-ratio Monte-Carlo check, the mixture
/// peak-location check (plus the alpha0 = 0 collapse case) and the
/// union-probability envelope fuzz. The overall "pass" flag gates on
/// those three; the first-order expectation bounds are reported alongside
/// for comparison but do not gate (they are asymptotic and overshoot the
/// node budget at bench scale; see spi_expected_bounds).
std::string theory_check_json(const TheoryCheckOptions& options);

// Dataset persistence ---------------------------------------------------

/// Writes every cell of the grid as edge-list files plus manifest.json.
/// All parameter combinations are validated before the first byte is
/// written. Reruns with the same config produce byte-identical trees.
void generate_datasets(const ExperimentConfig& config,
                       const std::filesystem::path& out);

/// Feature dumps for every *.edgelist under `in` (recursive): writes
/// `<file>.features.json` next to each input.
void extract_feature_files(const std::filesystem::path& in,
                           const std::string& type, BinningScheme binning);

}  // namespace gspk
