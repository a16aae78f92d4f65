#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "osmx/access_stats.hpp"
#include "osmx/counting.hpp"

namespace osmx {

/// One benchmark sweep: (algorithm x vector size) grid at a fixed batch
/// size and top-k width. Timing wraps the whole batch; elements/second is
/// batch*V divided by the median of `repeats` timed runs.
struct sweep_config {
  std::vector<algorithm> algorithms{all_algorithms.begin(), all_algorithms.end()};
  std::vector<std::size_t> vector_sizes;
  std::size_t batch = 100;
  std::size_t k = 5;
  std::size_t repeats = 5;
  std::size_t warmup = 2;
  std::uint64_t seed = 1;
  std::size_t threads = 1;   // workers for batch-level parallelism; 1 = run inline
  bool counts_only = false;  // skip timing, emit the access model only
};

struct sweep_cell {
  bool ok = true;
  std::string error;                 // set when ok == false
  double elements_per_second = 0.0;  // NaN in counts-only mode and on failure
  access_stats counts;
};

/// Results for one vector size, cells aligned with sweep_config::algorithms.
struct sweep_row {
  std::size_t vector_size = 0;
  std::vector<sweep_cell> cells;
};

/// `batch` vectors of length v with standard-normal elements. Same seed,
/// same bits; generation is independent of the sweep machinery.
std::vector<std::vector<float>> generate_inputs(std::uint64_t seed, std::size_t batch, std::size_t v);

/// Run the sweep. Rows come out sorted by vector size. A cell whose
/// algorithm cannot run (e.g. k > V) is reported as failed without
/// aborting the rest. row_done, when set, is called after each row.
std::vector<sweep_row> run_sweep(const sweep_config& cfg,
                                 const std::function<void(const sweep_row&)>& row_done = {});

/// Write rows as a delimited table: optional '#' comment lines, one header
/// line, one line per vector size. Columns: V, then per algorithm the
/// throughput column named after column_name() (skipped in counts-only
/// mode) plus <name>_loads/<name>_stores, then speedup ratio columns
/// (Online/Safe and OnlineFused/SafeUnfused) when both operands were
/// benchmarked. Numbers round-trip exactly through parse_table.
void emit_csv(const sweep_config& cfg, const std::vector<sweep_row>& rows, std::ostream& out,
              char delimiter = ',', const std::vector<std::string>& comments = {});
void emit_csv(const sweep_config& cfg, const std::vector<sweep_row>& rows, const std::string& path,
              char delimiter = ',', const std::vector<std::string>& comments = {});

/// One "<prefix>.<column>.dat" file per throughput series ("V value" lines)
/// plus one per ratio series; plot-tool friendly.
void emit_plot_data(const sweep_config& cfg, const std::vector<sweep_row>& rows,
                    const std::string& prefix);

/// Parsed delimited table; cells are doubles (counts are exact integers in
/// double range). Comment lines are skipped; the delimiter is detected from
/// the header line (comma, tab or space).
struct csv_table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column index for an exact header name; -1 if absent.
  std::ptrdiff_t column(std::string_view name) const;
};

csv_table parse_table(std::istream& in);
csv_table parse_table_file(const std::string& path);

/// `points` geometrically spaced sizes from vmin to vmax inclusive,
/// deduplicated after rounding.
std::vector<std::size_t> log_spaced_sizes(std::size_t vmin, std::size_t vmax, std::size_t points);

}  // namespace osmx
