#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gspk/experiment.hpp"

namespace fs = std::filesystem;

namespace {

// Flags shared by every subcommand. Defaults come from ExperimentConfig;
// an optional JSON config file is applied first and explicit flags win.
struct CommonFlags {
  gspk::ExperimentConfig flags;
  std::string config_file;

  CLI::Option* n = nullptr;
  CLI::Option* c0 = nullptr;
  CLI::Option* factors = nullptr;
  CLI::Option* graphs = nullptr;
  CLI::Option* folds = nullptr;
  CLI::Option* bin_width = nullptr;
  CLI::Option* lambda = nullptr;
  CLI::Option* iterations = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* jobs = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_file, "JSON config file (flags win)");
    n = cmd->add_option("--n", flags.n_list, "node counts");
    c0 = cmd->add_option("--c0", flags.c0, "mean degree scale (p1 = c0/n)");
    factors = cmd->add_option("--factors", flags.p2_factors, "p2/p1 factors");
    graphs = cmd->add_option("--graphs-per-class", flags.graphs_per_class,
                             "graphs per class per cell");
    folds = cmd->add_option("--folds", flags.folds, "cross-validation folds");
    bin_width = cmd->add_option("--bin-width", flags.bin_width,
                                "path-count bin width (1 = raw counts)");
    lambda = cmd->add_option("--lambda", flags.lambda, "SVM regularization");
    iterations = cmd->add_option("--iterations", flags.iterations,
                                 "SVM steps (0 = 100 per training sample)");
    seed = cmd->add_option("--seed", flags.seed, "master seed");
    out = cmd->add_option("--out", flags.out_dir, "output directory");
    jobs = cmd->add_option("--jobs", flags.jobs,
                           "worker threads (0 = hardware)");
  }

  gspk::ExperimentConfig resolve() const {
    gspk::ExperimentConfig cfg;
    if (!config_file.empty()) {
      std::ifstream is(config_file);
      if (!is) throw std::invalid_argument("cannot open config file: " + config_file);
      std::ostringstream buf;
      buf << is.rdbuf();
      cfg = gspk::ExperimentConfig::from_json(buf.str());
    }
    if (n->count()) cfg.n_list = flags.n_list;
    if (c0->count()) cfg.c0 = flags.c0;
    if (factors->count()) cfg.p2_factors = flags.p2_factors;
    if (graphs->count()) cfg.graphs_per_class = flags.graphs_per_class;
    if (folds->count()) cfg.folds = flags.folds;
    if (bin_width->count()) cfg.bin_width = flags.bin_width;
    if (lambda->count()) cfg.lambda = flags.lambda;
    if (iterations->count()) cfg.iterations = flags.iterations;
    if (seed->count()) cfg.seed = flags.seed;
    if (out->count()) cfg.out_dir = flags.out_dir;
    if (jobs->count()) cfg.jobs = flags.jobs;
    return cfg;
  }
};

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << content;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"SPI/GSPI graph kernel toolkit: random-graph classification "
               "experiments and their analytical predictions"};
  app.require_subcommand(1);

  auto* cmd_generate =
      app.add_subcommand("generate", "write edge-list datasets + manifest");
  CommonFlags generate_flags;
  generate_flags.attach(cmd_generate);

  auto* cmd_features =
      app.add_subcommand("features", "dump feature vectors for a dataset");
  CommonFlags features_flags;
  features_flags.attach(cmd_features);
  std::string features_in;
  std::string features_type = "gspi";
  cmd_features->add_option("--in", features_in, "dataset directory")->required();
  cmd_features->add_option("--type", features_type, "spi or gspi");

  auto* cmd_table1 = app.add_subcommand(
      "reproduce-table1", "accuracy grid for both kernels (CSV + JSON)");
  CommonFlags table1_flags;
  table1_flags.attach(cmd_table1);

  auto* cmd_figures =
      app.add_subcommand("emit-figures", "figure histograms as CSV");
  CommonFlags figures_flags;
  figures_flags.attach(cmd_figures);
  std::vector<std::string> which{"fig1", "fig2", "fig3"};
  cmd_figures->add_option("--which", which, "subset of {fig1,fig2,fig3}");

  auto* cmd_theory = app.add_subcommand(
      "theory-check", "theory-vs-empirical validation report (JSON)");
  CommonFlags theory_flags;
  theory_flags.attach(cmd_theory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cmd_generate->parsed()) {
    const auto cfg = generate_flags.resolve();
    Timer timer;
    gspk::generate_datasets(cfg, cfg.out_dir);
    std::cerr << "generate: wrote "
              << cfg.n_list.size() * cfg.p2_factors.size() << " cells to "
              << cfg.out_dir << " in " << timer.seconds() << " s\n";
    return 0;
  }

  if (cmd_features->parsed()) {
    const auto cfg = features_flags.resolve();
    Timer timer;
    gspk::extract_feature_files(features_in, features_type,
                                gspk::BinningScheme{cfg.bin_width});
    std::cerr << "features: done in " << timer.seconds() << " s\n";
    return 0;
  }

  if (cmd_table1->parsed()) {
    const auto cfg = table1_flags.resolve();
    Timer timer;
    const auto rows = gspk::run_table1(cfg);
    std::ostringstream csv;
    gspk::write_results_csv(rows, csv);
    write_file(fs::path(cfg.out_dir) / "results.csv", csv.str());
    write_file(fs::path(cfg.out_dir) / "results.json",
               gspk::results_json(rows) + "\n");
    std::cout << csv.str();
    bool any_error = false;
    for (const auto& row : rows)
      if (!row.error.empty()) {
        std::cerr << "cell (" << row.kernel << ", n=" << row.n
                  << ", factor=" << row.p2_factor << ") failed: " << row.error
                  << "\n";
        any_error = true;
      }
    std::cerr << "reproduce-table1: " << rows.size() << " rows in "
              << timer.seconds() << " s\n";
    return any_error ? 2 : 0;
  }

  if (cmd_figures->parsed()) {
    const auto cfg = figures_flags.resolve();
    const int jobs = cfg.effective_jobs();
    // Figure cells: figs 1-2 use the n=600, factor-1.3 dataset unless the
    // flags narrow them; fig 3 uses n=400, p2=0.18 with 500 graphs.
    const int fig12_n = figures_flags.n->count() ? cfg.n_list.front() : 600;
    const double fig12_factor =
        figures_flags.factors->count() ? cfg.p2_factors.front() : 1.3;
    const int fig12_graphs =
        figures_flags.graphs->count() ? cfg.graphs_per_class : 100;
    const int fig3_graphs =
        figures_flags.graphs->count() ? cfg.graphs_per_class : 500;
    for (const auto& name : which) {
      Timer timer;
      std::string csv;
      if (name == "fig1") {
        csv = gspk::fig1_csv(fig12_n, cfg.c0, fig12_factor, fig12_graphs,
                             cfg.seed, jobs);
      } else if (name == "fig2") {
        csv = gspk::fig2_csv(fig12_n, cfg.c0, fig12_factor, fig12_graphs,
                             cfg.seed, jobs);
      } else if (name == "fig3") {
        csv = gspk::fig3_csv(400, 0.1, 0.18, fig3_graphs, cfg.seed, jobs);
      } else {
        throw std::invalid_argument("unknown figure: " + name);
      }
      write_file(fs::path(cfg.out_dir) / (name + ".csv"), csv);
      std::cerr << "emit-figures: " << name << " in " << timer.seconds()
                << " s\n";
    }
    return 0;
  }

  if (cmd_theory->parsed()) {
    const auto cfg = theory_flags.resolve();
    gspk::TheoryCheckOptions options;
    options.seed = cfg.seed;
    options.jobs = cfg.jobs;
    if (theory_flags.n->count()) options.n = cfg.n_list.front();
    if (theory_flags.c0->count()) options.c0 = cfg.c0;
    if (theory_flags.factors->count()) options.p2_factor = cfg.p2_factors.front();
    if (theory_flags.graphs->count()) {
      options.graphs_per_model = cfg.graphs_per_class;
      options.mixture_graphs = cfg.graphs_per_class;
    }
    Timer timer;
    const std::string report = gspk::theory_check_json(options);
    write_file(fs::path(cfg.out_dir) / "theory_report.json", report + "\n");
    std::cout << report << "\n";
    std::cerr << "theory-check: done in " << timer.seconds() << " s\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
