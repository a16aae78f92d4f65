#include "osmx/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "osmx/error.hpp"
#include "osmx/softmax.hpp"
#include "osmx/topk.hpp"

namespace osmx {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline void do_not_optimize(double& v) {
  asm volatile("" : "+r"(v) : : "memory");
}

// One vector through one algorithm; returns a value derived from the result
// so the call cannot be elided.
double consume(algorithm alg, std::span<const float> x, std::size_t k) {
  switch (alg) {
    case algorithm::naive_softmax: {
      auto y = naive_softmax(x);
      return y.front() + y.back();
    }
    case algorithm::safe_softmax: {
      auto y = safe_softmax(x);
      return y.front() + y.back();
    }
    case algorithm::online_softmax: {
      auto y = online_softmax(x);
      return y.front() + y.back();
    }
    case algorithm::safe_softmax_unfused_topk: {
      auto r = safe_softmax_then_topk(x, k);
      return r.values.front();
    }
    case algorithm::safe_softmax_fused_topk: {
      auto r = safe_softmax_fused_topk(x, k);
      return r.values.front();
    }
    case algorithm::online_softmax_fused_topk: {
      auto r = online_softmax_topk(x, k);
      return r.values.front();
    }
  }
  return 0.0;
}

// Whole-batch run, one task per vector. With threads > 1 the vectors are
// striped across workers; data is disjoint so the kernels need no locking.
void run_batch(algorithm alg, const std::vector<std::vector<float>>& inputs, std::size_t k,
               std::size_t threads, double& sink) {
  if (threads <= 1) {
    double acc = 0.0;
    for (const auto& x : inputs) acc += consume(alg, x, k);
    sink += acc;
    do_not_optimize(sink);
    return;
  }
  std::vector<double> partial(threads, 0.0);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        double acc = 0.0;
        for (std::size_t i = t; i < inputs.size(); i += threads) acc += consume(alg, inputs[i], k);
        partial[t] = acc;
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (double p : partial) sink += p;
  do_not_optimize(sink);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void validate(const sweep_config& cfg) {
  if (cfg.vector_sizes.empty()) throw std::invalid_argument("sweep config: vector_sizes is empty");
  if (cfg.algorithms.empty()) throw std::invalid_argument("sweep config: algorithms is empty");
  if (cfg.batch == 0) throw std::invalid_argument("sweep config: batch must be >= 1");
  if (cfg.repeats == 0) throw std::invalid_argument("sweep config: repeats must be >= 1");
  if (cfg.threads == 0) throw std::invalid_argument("sweep config: threads must be >= 1");
  if (cfg.k == 0) throw std::invalid_argument("sweep config: k must be >= 1");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ratio_spec {
  algorithm numerator;
  algorithm denominator;
};

constexpr ratio_spec kRatios[] = {
    {algorithm::online_softmax, algorithm::safe_softmax},
    {algorithm::online_softmax_fused_topk, algorithm::safe_softmax_unfused_topk},
};

std::ptrdiff_t find_algorithm(const sweep_config& cfg, algorithm alg) {
  for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
    if (cfg.algorithms[i] == alg) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::vector<ratio_spec> active_ratios(const sweep_config& cfg) {
  std::vector<ratio_spec> out;
  if (cfg.counts_only) return out;
  for (const auto& r : kRatios) {
    if (find_algorithm(cfg, r.numerator) >= 0 && find_algorithm(cfg, r.denominator) >= 0) {
      out.push_back(r);
    }
  }
  return out;
}

std::string ratio_name(const ratio_spec& r) {
  return std::string(column_name(r.numerator)) + "_over_" + std::string(column_name(r.denominator));
}

double ratio_value(const sweep_config& cfg, const sweep_row& row, const ratio_spec& r) {
  const auto num = find_algorithm(cfg, r.numerator);
  const auto den = find_algorithm(cfg, r.denominator);
  const sweep_cell& a = row.cells[static_cast<std::size_t>(num)];
  const sweep_cell& b = row.cells[static_cast<std::size_t>(den)];
  if (!a.ok || !b.ok) return kNaN;
  return a.elements_per_second / b.elements_per_second;
}

}  // namespace

std::vector<std::vector<float>> generate_inputs(std::uint64_t seed, std::size_t batch, std::size_t v) {
  if (batch == 0 || v == 0) throw std::invalid_argument("generate_inputs: batch and v must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> normal(0.0f, 1.0f);
  std::vector<std::vector<float>> out(batch);
  for (auto& vec : out) {
    vec.resize(v);
    for (auto& e : vec) e = normal(rng);
  }
  return out;
}

std::vector<sweep_row> run_sweep(const sweep_config& cfg,
                                 const std::function<void(const sweep_row&)>& row_done) {
  validate(cfg);
  std::vector<std::size_t> sizes = cfg.vector_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::vector<sweep_row> rows;
  rows.reserve(sizes.size());
  for (std::size_t v : sizes) {
    sweep_row row;
    row.vector_size = v;
    row.cells.resize(cfg.algorithms.size());
    std::vector<std::vector<float>> inputs;
    if (!cfg.counts_only) inputs = generate_inputs(cfg.seed, cfg.batch, v);

    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      const algorithm alg = cfg.algorithms[a];
      sweep_cell& cell = row.cells[a];
      cell.elements_per_second = kNaN;
      try {
        cell.counts = count_accesses(alg, v, uses_topk(alg) ? cfg.k : 0);
        if (!cfg.counts_only) {
          double sink = 0.0;
          for (std::size_t w = 0; w < cfg.warmup; ++w) run_batch(alg, inputs, cfg.k, cfg.threads, sink);
          std::vector<double> seconds;
          seconds.reserve(cfg.repeats);
          for (std::size_t r = 0; r < cfg.repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            run_batch(alg, inputs, cfg.k, cfg.threads, sink);
            const auto t1 = std::chrono::steady_clock::now();
            seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
          }
          cell.elements_per_second =
              static_cast<double>(cfg.batch) * static_cast<double>(v) / median(seconds);
        }
      } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
        cell.counts = {};
        cell.elements_per_second = kNaN;
      }
    }
    rows.push_back(std::move(row));
    if (row_done) row_done(rows.back());
  }
  return rows;
}

void emit_csv(const sweep_config& cfg, const std::vector<sweep_row>& rows, std::ostream& out,
              char delimiter, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';

  const auto ratios = active_ratios(cfg);
  out << 'V';
  if (!cfg.counts_only) {
    for (algorithm alg : cfg.algorithms) out << delimiter << column_name(alg);
  }
  for (algorithm alg : cfg.algorithms) {
    out << delimiter << column_name(alg) << "_loads" << delimiter << column_name(alg) << "_stores";
  }
  for (const auto& r : ratios) out << delimiter << ratio_name(r);
  out << '\n';

  for (const auto& row : rows) {
    out << row.vector_size;
    if (!cfg.counts_only) {
      for (const auto& cell : row.cells) out << delimiter << format_double(cell.elements_per_second);
    }
    for (const auto& cell : row.cells) {
      if (cell.ok) {
        out << delimiter << cell.counts.loads << delimiter << cell.counts.stores;
      } else {
        out << delimiter << "nan" << delimiter << "nan";
      }
    }
    for (const auto& r : ratios) out << delimiter << format_double(ratio_value(cfg, row, r));
    out << '\n';
  }
}

void emit_csv(const sweep_config& cfg, const std::vector<sweep_row>& rows, const std::string& path,
              char delimiter, const std::vector<std::string>& comments) {
  std::ofstream ofs(path);
  if (!ofs) throw std::runtime_error("cannot open for writing: " + path);
  emit_csv(cfg, rows, ofs, delimiter, comments);
  ofs.flush();
  if (!ofs) throw std::runtime_error("write failed: " + path);
}

void emit_plot_data(const sweep_config& cfg, const std::vector<sweep_row>& rows,
                    const std::string& prefix) {
  auto write_series = [&](const std::string& name, auto&& value_of) {
    const std::string path = prefix + "." + name + ".dat";
    std::ofstream ofs(path);
    if (!ofs) throw std::runtime_error("cannot open for writing: " + path);
    ofs << "# series: " << name << '\n';
    ofs << "V " << name << '\n';
    for (const auto& row : rows) ofs << row.vector_size << ' ' << format_double(value_of(row)) << '\n';
    ofs.flush();
    if (!ofs) throw std::runtime_error("write failed: " + path);
  };
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    write_series(std::string(column_name(cfg.algorithms[a])),
                 [&](const sweep_row& row) { return row.cells[a].elements_per_second; });
  }
  for (const auto& r : active_ratios(cfg)) {
    write_series(ratio_name(r), [&](const sweep_row& row) { return ratio_value(cfg, row, r); });
  }
}

std::ptrdiff_t csv_table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  if (delimiter == ' ') {
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
  }
  std::string tok;
  std::istringstream iss(line);
  while (std::getline(iss, tok, delimiter)) out.push_back(tok);
  return out;
}

}  // namespace

csv_table parse_table(std::istream& in) {
  csv_table table;
  std::string line;
  char delimiter = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (delimiter == 0) {
      delimiter = line.find(',') != std::string::npos   ? ','
                  : line.find('\t') != std::string::npos ? '\t'
                                                          : ' ';
      table.header = split_line(line, delimiter);
      continue;
    }
    const auto cells = split_line(line, delimiter);
    if (cells.size() != table.header.size()) {
      throw std::runtime_error("table row has " + std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(table.header.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      std::size_t pos = 0;
      const double v = std::stod(c, &pos);
      if (pos != c.size()) throw std::runtime_error("bad numeric cell: '" + c + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw std::runtime_error("table has no header line");
  return table;
}

csv_table parse_table_file(const std::string& path) {
  std::ifstream ifs(path);
  if (!ifs) throw std::runtime_error("cannot open for reading: " + path);
  return parse_table(ifs);
}

std::vector<std::size_t> log_spaced_sizes(std::size_t vmin, std::size_t vmax, std::size_t points) {
  if (vmin == 0 || vmax < vmin || points == 0) {
    throw std::invalid_argument("log_spaced_sizes: need 1 <= vmin <= vmax and points >= 1");
  }
  std::vector<std::size_t> out;
  if (points == 1) {
    out.push_back(vmin);
    return out;
  }
  const double lmin = std::log(static_cast<double>(vmin));
  const double lmax = std::log(static_cast<double>(vmax));
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    const auto v = static_cast<std::size_t>(std::llround(std::exp(lmin + f * (lmax - lmin))));
    out.push_back(std::clamp<std::size_t>(v, vmin, vmax));
  }
  out.back() = vmax;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace osmx
