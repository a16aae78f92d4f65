// Sweep driver: times the softmax / softmax+top-k variants over a grid of
// vector sizes and writes a delimited table of elements-per-second,
// element-access counts and speedup ratios.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/utsname.h>

#include <CLI11.hpp>

#include "osmx/bench.hpp"
#include "osmx/counting.hpp"

namespace {

std::string cpu_model() {
  std::ifstream ifs("/proc/cpuinfo");
  std::string line;
  while (std::getline(ifs, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) return line.substr(colon + 2);
    }
  }
  return "unknown";
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string join_algorithms(const std::vector<osmx::algorithm>& algs) {
  std::string out;
  for (auto a : algs) {
    if (!out.empty()) out += ",";
    out += osmx::column_name(a);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softmax kernel sweep benchmark"};

  std::vector<std::string> algorithm_names;
  std::vector<std::size_t> sizes;
  std::size_t vmin = 40, vmax = 500000, points = 12;
  osmx::sweep_config cfg;
  std::string out_path = "-";
  std::string format = "csv";
  std::string plot_prefix;

  app.add_option("--algorithms", algorithm_names,
                 "comma-separated algorithms (naive, safe, online, safe-unfused-topk, "
                 "safe-fused-topk, online-fused-topk, or the CSV column names); default: all")
      ->delimiter(',');
  auto* sizes_opt = app.add_option("--sizes", sizes, "explicit vector sizes")->delimiter(',');
  auto* vmin_opt = app.add_option("--vmin", vmin, "log sweep: smallest vector size");
  auto* vmax_opt = app.add_option("--vmax", vmax, "log sweep: largest vector size");
  auto* points_opt = app.add_option("--points", points, "log sweep: number of sizes");
  sizes_opt->excludes(vmin_opt)->excludes(vmax_opt)->excludes(points_opt);
  app.add_option("--batch", cfg.batch, "vectors per measurement");
  app.add_option("--k", cfg.k, "top-k width");
  app.add_option("--repeats", cfg.repeats, "timed repetitions per cell (median reported)");
  app.add_option("--warmup", cfg.warmup, "untimed warmup iterations per cell");
  app.add_option("--seed", cfg.seed, "input generator seed");
  app.add_option("--threads", cfg.threads, "worker threads for batch-level parallelism (1 = inline)");
  app.add_option("--out", out_path, "output path, '-' for stdout");
  app.add_option("--format", format, "csv (comma) or tsv (tab)")
      ->check(CLI::IsMember({"csv", "tsv"}));
  app.add_flag("--counts-only", cfg.counts_only, "skip timing, emit the access-count model only");
  app.add_option("--plot", plot_prefix, "also write per-series plot files with this prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!algorithm_names.empty()) {
      cfg.algorithms.clear();
      for (const auto& name : algorithm_names) {
        const auto alg = osmx::parse_algorithm(name);
        if (!alg) throw std::invalid_argument("unknown algorithm: " + name);
        cfg.algorithms.push_back(*alg);
      }
    }
    cfg.vector_sizes = sizes.empty() ? osmx::log_spaced_sizes(vmin, vmax, points) : sizes;

    utsname uts{};
    uname(&uts);
    std::vector<std::string> comments;
    {
      std::ostringstream cmd;
      for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
      comments.push_back("generated: " + timestamp_utc());
      comments.push_back("command: " + cmd.str());
      comments.push_back(std::string("machine: ") + uts.sysname + " " + uts.release + " " +
                         uts.machine + ", cpu: " + cpu_model() +
                         ", hw threads: " + std::to_string(std::thread::hardware_concurrency()));
      comments.push_back("config: algorithms=" + join_algorithms(cfg.algorithms) +
                         " batch=" + std::to_string(cfg.batch) + " k=" + std::to_string(cfg.k) +
                         " repeats=" + std::to_string(cfg.repeats) +
                         " warmup=" + std::to_string(cfg.warmup) + " seed=" + std::to_string(cfg.seed) +
                         " threads=" + std::to_string(cfg.threads) +
                         (cfg.counts_only ? " counts-only" : ""));
      comments.push_back("elements/second = batch*V / median(repeat seconds); "
                         "loads/stores are exact per-run element access counts");
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto rows = osmx::run_sweep(cfg, [&](const osmx::sweep_row& row) {
      std::cerr << "V=" << row.vector_size;
      for (std::size_t a = 0; a < row.cells.size(); ++a) {
        const auto& cell = row.cells[a];
        std::cerr << "  " << osmx::column_name(cfg.algorithms[a]) << "=";
        if (!cell.ok) {
          std::cerr << "error(" << cell.error << ")";
        } else if (cfg.counts_only) {
          std::cerr << cell.counts.total();
        } else {
          std::cerr << std::scientific << cell.elements_per_second << std::defaultfloat;
        }
      }
      std::cerr << '\n';
    });
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);

    const char delimiter = format == "tsv" ? '\t' : ',';
    if (out_path == "-") {
      osmx::emit_csv(cfg, rows, std::cout, delimiter, comments);
    } else {
      osmx::emit_csv(cfg, rows, out_path, delimiter, comments);
      std::cerr << "wrote " << out_path << " (" << rows.size() << " rows, "
                << elapsed.count() << " s)\n";
    }
    if (!plot_prefix.empty()) osmx::emit_plot_data(cfg, rows, plot_prefix);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
