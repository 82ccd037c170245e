#include "gspk/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gspk/parallel.hpp"
#include "gspk/random.hpp"
#include "gspk/theory.hpp"

namespace gspk {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string format_factor(double factor) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", factor);
  return buf;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int ExperimentConfig::effective_jobs() const {
  return jobs > 0 ? jobs : default_jobs();
}

void ExperimentConfig::validate() const {
  if (n_list.empty()) throw std::invalid_argument("config: empty n list");
  if (p2_factors.empty()) throw std::invalid_argument("config: empty factor list");
  if (graphs_per_class < 1)
    throw std::invalid_argument("config: graphs per class must be positive");
  if (folds < 2) throw std::invalid_argument("config: folds must be >= 2");
  if (bin_width < 1) throw std::invalid_argument("config: bin width must be >= 1");
  if (!(lambda > 0)) throw std::invalid_argument("config: lambda must be positive");
  if (iterations < 0) throw std::invalid_argument("config: iterations must be >= 0");
  if (!(c0 > 0)) throw std::invalid_argument("config: c0 must be positive");
  for (double f : p2_factors)
    if (!(f > 1)) throw std::invalid_argument("config: p2 factors must be > 1");
  // Fail before any work if some cell has no valid q2.
  for (int n : n_list)
    for (double f : p2_factors) ModelParams::balanced(n, c0, f);
}

std::string ExperimentConfig::to_json() const {
  ordered_json j;
  j["n"] = n_list;
  j["c0"] = c0;
  j["factors"] = p2_factors;
  j["graphs_per_class"] = graphs_per_class;
  j["folds"] = folds;
  j["bin_width"] = bin_width;
  j["lambda"] = lambda;
  j["iterations"] = iterations;
  j["seed"] = seed;
  j["out"] = out_dir;
  j["jobs"] = jobs;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ExperimentConfig c;
  if (j.contains("n")) c.n_list = j.at("n").get<std::vector<int>>();
  if (j.contains("c0")) c.c0 = j.at("c0").get<double>();
  if (j.contains("factors"))
    c.p2_factors = j.at("factors").get<std::vector<double>>();
  if (j.contains("graphs_per_class"))
    c.graphs_per_class = j.at("graphs_per_class").get<int>();
  if (j.contains("folds")) c.folds = j.at("folds").get<int>();
  if (j.contains("bin_width")) c.bin_width = j.at("bin_width").get<std::uint64_t>();
  if (j.contains("lambda")) c.lambda = j.at("lambda").get<double>();
  if (j.contains("iterations")) c.iterations = j.at("iterations").get<std::int64_t>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
  return c;
}

LabeledGraphs generate_cell(int n, const ModelParams& params,
                            int graphs_per_class, std::uint64_t master_seed,
                            int jobs) {
  LabeledGraphs data;
  data.graphs.resize(2 * graphs_per_class);
  data.labels.resize(2 * graphs_per_class);
  parallel_for(jobs, data.graphs.size(), [&](std::size_t i) {
    if (i < static_cast<std::size_t>(graphs_per_class)) {
      data.graphs[i] = erdos_renyi(n, params.p1, derive_seed(master_seed, 1, i));
      data.labels[i] = GraphLabel::kOneCluster;
    } else {
      const std::size_t idx = i - graphs_per_class;
      data.graphs[i] = planted_partition(n, params.p2, params.q2,
                                         derive_seed(master_seed, 2, idx));
      data.labels[i] = GraphLabel::kTwoCluster;
    }
  });
  return data;
}

CellFeatures extract_cell_features(std::span<const Graph> graphs,
                                   BinningScheme binning, int jobs) {
  std::vector<GspiVector> gspi(graphs.size());
  parallel_for(jobs, graphs.size(),
               [&](std::size_t i) { gspi[i] = gspi_vector(graphs[i], binning); });
  std::vector<SpiVector> spi(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) spi[i] = marginalize(gspi[i]);

  CellFeatures out;
  out.gspi.index = FeatureIndex::for_gspi(gspi);
  out.spi.index = FeatureIndex::for_spi(spi);
  out.gspi.samples.resize(graphs.size());
  out.spi.samples.resize(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.gspi.samples[i] = out.gspi.index.to_sample(normalize(gspi[i]));
    out.spi.samples[i] = out.spi.index.to_sample(normalize(spi[i]));
  }
  return out;
}

std::vector<ResultRow> run_table1(const ExperimentConfig& config) {
  config.validate();
  const int jobs = config.effective_jobs();
  std::vector<ResultRow> rows;
  for (int n : config.n_list) {
    for (double factor : config.p2_factors) {
      const auto cell_start = std::chrono::steady_clock::now();
      ResultRow spi_row{"SPI", n, factor, 0, {}, 0, ""};
      ResultRow gspi_row{"GSPI", n, factor, 0, {}, 0, ""};
      try {
        const ModelParams params = ModelParams::balanced(n, config.c0, factor);
        const LabeledGraphs data =
            generate_cell(n, params, config.graphs_per_class, config.seed, jobs);
        const CellFeatures features = extract_cell_features(
            data.graphs, BinningScheme{config.bin_width}, jobs);
        std::vector<int> y(data.labels.size());
        for (std::size_t i = 0; i < data.labels.size(); ++i)
          y[i] = static_cast<int>(data.labels[i]);
        const TrainSettings settings{config.lambda, config.iterations, true};
        const std::uint64_t cell_seed = derive_seed(
            config.seed, static_cast<std::uint64_t>(n),
            static_cast<std::uint64_t>(std::llround(factor * 1000)));
        for (int arm = 0; arm < 2; ++arm) {
          const KernelFeatures& kf = arm == 0 ? features.spi : features.gspi;
          ResultRow& row = arm == 0 ? spi_row : gspi_row;
          const auto arm_start = std::chrono::steady_clock::now();
          const EvalReport report =
              kfold_eval(kf.samples, y, kf.index.size(), config.folds, settings,
                         derive_seed(cell_seed, 0x61726dULL, arm));
          row.accuracy = report.accuracy;
          row.per_fold = report.per_fold;
          row.wall_seconds = elapsed_seconds(arm_start);
        }
      } catch (const std::exception& e) {
        spi_row.error = gspi_row.error = e.what();
        spi_row.wall_seconds = gspi_row.wall_seconds =
            elapsed_seconds(cell_start);
      }
      rows.push_back(std::move(spi_row));
      rows.push_back(std::move(gspi_row));
    }
  }
  return rows;
}

void write_results_csv(std::span<const ResultRow> rows, std::ostream& os) {
  os << "kernel,n,p2_factor,accuracy\n";
  for (const auto& row : rows) {
    if (!row.error.empty()) continue;
    os << row.kernel << ',' << row.n << ',' << format_factor(row.p2_factor)
       << ',' << format_value(row.accuracy) << '\n';
  }
}

std::string results_json(std::span<const ResultRow> rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j;
    j["kernel"] = row.kernel;
    j["n"] = row.n;
    j["p2_factor"] = row.p2_factor;
    if (row.error.empty()) {
      j["accuracy"] = row.accuracy;
      j["per_fold"] = row.per_fold;
    } else {
      j["error"] = row.error;
    }
    j["wall_seconds"] = row.wall_seconds;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

namespace {

struct ClassProfiles {
  SourceProfile one_cluster;
  SourceProfile two_cluster;
};

ClassProfiles figure_profiles(int n, double c0, double p2_factor,
                              int graphs_per_class, std::uint64_t seed,
                              int jobs, int d_focus) {
  const ModelParams params = ModelParams::balanced(n, c0, p2_factor);
  const LabeledGraphs data =
      generate_cell(n, params, graphs_per_class, seed, jobs);
  const std::span<const Graph> all(data.graphs);
  ClassProfiles p;
  p.one_cluster = average_profiles(all.subspan(0, graphs_per_class), d_focus);
  p.two_cluster = average_profiles(all.subspan(graphs_per_class), d_focus);
  return p;
}

}  // namespace

std::string fig1_csv(int n, double c0, double p2_factor, int graphs_per_class,
                     std::uint64_t seed, int jobs) {
  const ClassProfiles p =
      figure_profiles(n, c0, p2_factor, graphs_per_class, seed, jobs, 2);
  int d_max = 0;
  for (const auto& [d, c] : p.one_cluster.spi) d_max = std::max(d_max, d);
  for (const auto& [d, c] : p.two_cluster.spi) d_max = std::max(d_max, d);
  std::ostringstream os;
  os << "x,one_cluster,two_cluster\n";
  for (int d = 1; d <= d_max; ++d) {
    const auto value = [&](const SourceProfile& sp) {
      const auto it = sp.spi.find(d);
      return it == sp.spi.end() ? 0.0 : it->second;
    };
    os << d << ',' << format_value(value(p.one_cluster)) << ','
       << format_value(value(p.two_cluster)) << '\n';
  }
  return os.str();
}

std::string fig2_csv(int n, double c0, double p2_factor, int graphs_per_class,
                     std::uint64_t seed, int jobs) {
  const ClassProfiles p =
      figure_profiles(n, c0, p2_factor, graphs_per_class, seed, jobs, 2);
  std::uint64_t x_max = 1;
  for (const auto& [x, c] : p.one_cluster.gspi_d) x_max = std::max(x_max, x);
  for (const auto& [x, c] : p.two_cluster.gspi_d) x_max = std::max(x_max, x);
  std::ostringstream os;
  os << "x,one_cluster,two_cluster\n";
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    const auto value = [&](const SourceProfile& sp) {
      const auto it = sp.gspi_d.find(x);
      return it == sp.gspi_d.end() ? 0.0 : it->second;
    };
    os << x << ',' << format_value(value(p.one_cluster)) << ','
       << format_value(value(p.two_cluster)) << '\n';
  }
  return os.str();
}

std::string fig3_csv(int n, double p1, double p2, int graphs,
                     std::uint64_t seed, int jobs) {
  const double q2 = derive_q2(n, p1, p2);
  std::vector<Graph> sample(graphs);
  parallel_for(jobs, sample.size(), [&](std::size_t i) {
    sample[i] = planted_partition(n, p2, q2, derive_seed(seed, 2, i));
  });
  const SourceProfile empirical = average_profiles(sample, 2);
  int x_max = 20;
  for (const auto& [x, c] : empirical.gspi_d)
    x_max = std::max(x_max, static_cast<int>(x));
  const ScaledHistogram predicted = two_cluster_d2_prediction(n, p2, q2, x_max);
  // Prediction is a per-source expected node count; the empirical profile
  // is averaged per source, so the columns align without rescaling.
  std::ostringstream os;
  os << "x,empirical,predicted\n";
  for (int x = 0; x <= x_max; ++x) {
    const auto it = empirical.gspi_d.find(static_cast<std::uint64_t>(x));
    const double emp = it == empirical.gspi_d.end() ? 0.0 : it->second;
    os << x << ',' << format_value(emp) << ','
       << format_value(predicted.values[x]) << '\n';
  }
  return os.str();
}

std::vector<double> smooth3(std::span<const double> h) {
  std::vector<double> s(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    double sum = h[i];
    if (i > 0) sum += h[i - 1];
    if (i + 1 < h.size()) sum += h[i + 1];
    s[i] = sum / 3.0;
  }
  return s;
}

std::vector<int> local_maxima(std::span<const double> h, int lo, int hi) {
  const auto at = [&](int x) {
    return (x < 0 || x >= static_cast<int>(h.size())) ? 0.0 : h[x];
  };
  std::vector<int> peaks;
  for (int x = std::max(lo, 0); x <= hi; ++x)
    if (at(x) > at(x - 1) && at(x) >= at(x + 1) && at(x) > 0) peaks.push_back(x);
  return peaks;
}

std::vector<double> dense_histogram(const std::map<std::uint64_t, double>& h,
                                    int x_max) {
  std::vector<double> out(x_max + 1, 0.0);
  for (const auto& [x, c] : h)
    if (x <= static_cast<std::uint64_t>(x_max)) out[x] = c;
  return out;
}

std::vector<std::vector<double>> mean_nodes_at_distances(
    std::span<const Graph> graphs, std::span<const int> ds, int jobs) {
  std::vector<std::vector<double>> result(ds.size(),
                                          std::vector<double>(graphs.size(), 0.0));
  parallel_for(jobs, graphs.size(), [&](std::size_t gi) {
    const Graph& g = graphs[gi];
    std::vector<double> totals(ds.size(), 0.0);
    for (int s = 0; s < g.node_count; ++s) {
      const SsspResult r = sssp_count(g, s);
      std::vector<std::int64_t> counts(ds.size(), 0);
      for (int v = 0; v < g.node_count; ++v)
        for (std::size_t di = 0; di < ds.size(); ++di)
          if (r.dist[v] == ds[di]) ++counts[di];
      for (std::size_t di = 0; di < ds.size(); ++di) totals[di] += counts[di];
    }
    for (std::size_t di = 0; di < ds.size(); ++di)
      result[di][gi] = totals[di] / g.node_count;
  });
  return result;
}

namespace {

struct MeanSe {
  double mean = 0;
  double se = 0;
};

MeanSe mean_and_se(std::span<const double> values) {
  MeanSe m;
  for (double v : values) m.mean += v;
  m.mean /= static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - m.mean) * (v - m.mean);
  if (values.size() > 1)
    m.se = std::sqrt(sq / (static_cast<double>(values.size()) - 1)) /
           std::sqrt(static_cast<double>(values.size()));
  return m;
}

}  // namespace

std::string theory_check_json(const TheoryCheckOptions& options) {
  const int jobs = options.jobs > 0 ? options.jobs : default_jobs();
  ordered_json report;

  // Expected-count comparison between the two models, Monte Carlo.
  {
    const ModelParams params =
        ModelParams::balanced(options.n, options.c0, options.p2_factor);
    std::vector<Graph> one(options.graphs_per_model);
    std::vector<Graph> two(options.graphs_per_model);
    parallel_for(jobs, one.size(), [&](std::size_t i) {
      one[i] = erdos_renyi(options.n, params.p1, derive_seed(options.seed, 1, i));
      two[i] = planted_partition(options.n, params.p2, params.q2,
                                 derive_seed(options.seed, 2, i));
    });
    const auto means_one = mean_nodes_at_distances(one, options.distances, jobs);
    const auto means_two = mean_nodes_at_distances(two, options.distances, jobs);

    ordered_json checks = ordered_json::array();
    bool all_ratios_ok = true;
    for (std::size_t di = 0; di < options.distances.size(); ++di) {
      const int d = options.distances[di];
      const MeanSe m1 = mean_and_se(means_one[di]);
      const MeanSe m2 = mean_and_se(means_two[di]);
      const double ratio = m1.mean / m2.mean;
      const double se_ratio =
          ratio * std::sqrt((m1.se / m1.mean) * (m1.se / m1.mean) +
                            (m2.se / m2.mean) * (m2.se / m2.mean));
      const double band = theorem1_factor(options.c0);
      const bool ratio_ok = std::abs(ratio - 1.0) <= band + 3 * se_ratio;
      all_ratios_ok = all_ratios_ok && ratio_ok;
      const SpiExpectationBounds bounds =
          spi_expected_bounds(options.n, options.c0, d);
      ordered_json c;
      c["d"] = d;
      c["mean_one_cluster"] = m1.mean;
      c["se_one_cluster"] = m1.se;
      c["mean_two_cluster"] = m2.mean;
      c["se_two_cluster"] = m2.se;
      c["ratio"] = ratio;
      c["band"] = band;
      c["allowed_deviation"] = band + 3 * se_ratio;
      c["ratio_ok"] = ratio_ok;
      c["bounds_base"] = bounds.base;
      c["bounds_lower"] = bounds.lower;
      c["bounds_upper"] = bounds.upper;
      c["means_within_bounds"] =
          m1.mean >= bounds.lower - 3 * m1.se && m1.mean <= bounds.upper + 3 * m1.se &&
          m2.mean >= bounds.lower - 3 * m2.se && m2.mean <= bounds.upper + 3 * m2.se;
      // The first-order estimate counts walks; once it exceeds the node
      // budget n-1 the bracket cannot hold at this scale.
      c["estimate_exceeds_node_budget"] = bounds.base > options.n - 1;
      checks.push_back(std::move(c));
    }
    ordered_json theorem;
    theorem["n"] = options.n;
    theorem["c0"] = options.c0;
    theorem["p2_factor"] = options.p2_factor;
    theorem["graphs_per_model"] = options.graphs_per_model;
    theorem["checks"] = std::move(checks);
    theorem["ratio_ok"] = all_ratios_ok;
    report["theorem1"] = std::move(theorem);
  }

  // Mixture peaks against the empirical distance-2 path-count histogram.
  {
    const double q2 = derive_q2(options.mixture_n, options.mixture_p1,
                                options.mixture_p2);
    std::vector<Graph> sample(options.mixture_graphs);
    parallel_for(jobs, sample.size(), [&](std::size_t i) {
      sample[i] = planted_partition(options.mixture_n, options.mixture_p2, q2,
                                    derive_seed(options.seed, 2, i));
    });
    const SourceProfile empirical = average_profiles(sample, 2);
    const MixtureModel mixture =
        two_cluster_mixture(options.mixture_n, options.mixture_p2, q2);
    // Maxima over the +-1 neighborhood of the raw histogram: the valley
    // between the two modes is shallow and a boxcar average fills it in.
    const std::vector<double> hist = dense_histogram(empirical.gspi_d, 24);
    const std::vector<int> peaks = local_maxima(hist, 0, 20);
    const bool peaks_match =
        peaks.size() == 2 &&
        std::abs(peaks[0] - mixture.mean_minus) <= 2.0 &&
        std::abs(peaks[1] - mixture.mean_plus) <= 2.0;

    // alpha0 = 0 collapse: one peak, zero separation.
    const ScaledHistogram collapsed = two_cluster_d2_prediction(
        options.mixture_n, options.mixture_p1, options.mixture_p1, 20);
    const std::vector<int> collapsed_peaks =
        local_maxima(collapsed.values, 0, 20);
    const MixtureModel collapsed_mix = two_cluster_mixture(
        options.mixture_n, options.mixture_p1, options.mixture_p1);

    ordered_json mix;
    mix["n"] = options.mixture_n;
    mix["p2"] = options.mixture_p2;
    mix["q2"] = q2;
    mix["graphs"] = options.mixture_graphs;
    mix["predicted_peaks"] = {mixture.mean_minus, mixture.mean_plus};
    mix["empirical_maxima"] = peaks;
    mix["peaks_match"] = peaks_match;
    mix["alpha0_zero_gap"] = collapsed_mix.mean_plus - collapsed_mix.mean_minus;
    mix["alpha0_zero_unimodal"] = collapsed_peaks.size() == 1;
    report["mixture"] = std::move(mix);
  }

  // Union-probability envelope fuzz.
  {
    SplitMix64 rng(derive_seed(options.seed, 0x6c656d6dULL, 1));
    int violations = 0;
    double worst_margin = 0;
    for (int c = 0; c < options.lemma_cases; ++c) {
      const std::size_t l = 1 + rng.next_below(20);
      std::vector<double> probs(l);
      double exact_miss = 1.0;
      for (auto& p : probs) {
        p = rng.next_double() * 0.3;
        exact_miss *= 1.0 - p;
      }
      const double exact = 1.0 - exact_miss;
      const InclusionExclusionEstimate est = inclusion_exclusion_estimate(probs);
      const double margin = std::abs(exact - est.approx) - est.q_bound;
      worst_margin = std::max(worst_margin, margin);
      if (margin > 0) ++violations;
    }
    ordered_json lemma;
    lemma["cases"] = options.lemma_cases;
    lemma["violations"] = violations;
    lemma["worst_margin"] = worst_margin;
    report["lemma1"] = std::move(lemma);
  }

  report["pass"] = report["theorem1"]["ratio_ok"].get<bool>() &&
                   report["mixture"]["peaks_match"].get<bool>() &&
                   report["mixture"]["alpha0_zero_unimodal"].get<bool>() &&
                   report["lemma1"]["violations"].get<int>() == 0;
  return report.dump(2);
}

void generate_datasets(const ExperimentConfig& config,
                       const std::filesystem::path& out) {
  config.validate();  // no partial writes on bad parameter combinations
  const int jobs = config.effective_jobs();
  fs::create_directories(out);

  ordered_json manifest;
  // Echo only the parameters that determine dataset content, so reruns
  // into different directories stay byte-identical.
  ordered_json echo = ordered_json::parse(config.to_json());
  echo.erase("out");
  echo.erase("jobs");
  manifest["config"] = std::move(echo);
  auto& cells = manifest["cells"] = ordered_json::array();

  for (int n : config.n_list) {
    for (double factor : config.p2_factors) {
      const ModelParams params = ModelParams::balanced(n, config.c0, factor);
      const std::string cell_dir =
          "n" + std::to_string(n) + "_f" + format_factor(factor);
      fs::create_directories(out / cell_dir);
      const LabeledGraphs data =
          generate_cell(n, params, config.graphs_per_class, config.seed, jobs);

      ordered_json one_seeds = ordered_json::array();
      ordered_json two_seeds = ordered_json::array();
      for (int i = 0; i < config.graphs_per_class; ++i) {
        one_seeds.push_back(derive_seed(config.seed, 1, i));
        two_seeds.push_back(derive_seed(config.seed, 2, i));
      }
      ordered_json cell;
      cell["n"] = n;
      cell["p2_factor"] = factor;
      cell["p1"] = params.p1;
      cell["p2"] = params.p2;
      cell["q2"] = params.q2;
      cell["alpha0"] = params.alpha0;
      cell["dir"] = cell_dir;
      cell["one_cluster_seeds"] = std::move(one_seeds);
      cell["two_cluster_seeds"] = std::move(two_seeds);
      for (std::size_t i = 0; i < data.graphs.size(); ++i) {
        const bool one = data.labels[i] == GraphLabel::kOneCluster;
        const int idx =
            one ? static_cast<int>(i)
                : static_cast<int>(i) - config.graphs_per_class;
        char name[48];
        std::snprintf(name, sizeof name, "%s_%03d.edgelist",
                      one ? "one" : "two", idx);
        std::ofstream file(out / cell_dir / name, std::ios::binary);
        if (!file) throw std::runtime_error("generate: cannot write " +
                                            (out / cell_dir / name).string());
        write_edge_list(data.graphs[i], data.labels[i], file);
      }
      cells.push_back(std::move(cell));
    }
  }
  std::ofstream mf(out / "manifest.json", std::ios::binary);
  if (!mf) throw std::runtime_error("generate: cannot write manifest");
  mf << manifest.dump(2) << '\n';
}

void extract_feature_files(const std::filesystem::path& in,
                           const std::string& type, BinningScheme binning) {
  if (type != "spi" && type != "gspi")
    throw std::invalid_argument("features: type must be spi or gspi");
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::recursive_directory_iterator(in))
    if (entry.is_regular_file() && entry.path().extension() == ".edgelist")
      inputs.push_back(entry.path());
  std::sort(inputs.begin(), inputs.end());
  for (const auto& path : inputs) {
    std::ifstream is(path);
    const auto [graph, label] = read_edge_list(is);
    fs::path out_path = path;
    out_path += ".features.json";
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("features: cannot write " + out_path.string());
    if (type == "spi")
      os << feature_json(spi_vector(graph)) << '\n';
    else
      os << feature_json(gspi_vector(graph, binning)) << '\n';
  }
}

}  // namespace gspk
