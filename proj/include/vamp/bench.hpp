#pragma once

#include <string>
#include <vector>

#include "vamp/domains.hpp"
#include "vamp/planner.hpp"

namespace vamp {

struct BenchConfig {
    DomainKind domain_kind = DomainKind::OneHallway;
    std::vector<int> sizes;                    // non-empty, ascending
    int trials = 10;
    std::vector<IndexStrategy> methods = {IndexStrategy::Baseline, IndexStrategy::Fpnnt};
    int lookback_capacity = 32;                // M
    int hallway_width = 11;
    std::string output_dir;
    bool emit_svg = false;
};

struct BenchRow {
    std::string domain;
    int size = 0;
    std::string method;
    int lookback_capacity = 0;
    int trial = 0;
    double total_ms = 0.0;
    double find_vis_viol_ms = 0.0;
    double insert_ms = 0.0;
    std::uint64_t nodes_expanded = 0;
    std::int64_t steps = 0;  // -1 when no path was found
    std::uint64_t violation_cells = 0;
    std::uint64_t logical_memory = 0;
};

inline constexpr const char* kCsvHeader =
    "domain,size,method,M,trial,total_ms,find_vis_viol_ms,insert_ms,"
    "nodes_expanded,steps,violation_cells,logical_memory";

const char* method_name(IndexStrategy s);  // "baseline" / "fpnnt"
IndexStrategy method_from_name(const std::string& name);

// Runs every (size, method, trial) combination and writes
// <output_dir>/results.csv (plus SVG plots when emit_svg is set). Instances
// are regenerated per size; everything but the timing columns is
// deterministic. A NoPath outcome becomes a row with steps = -1.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string csv_string(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_csv(const std::string& text);
void write_csv(const std::vector<BenchRow>& rows, const std::string& path);

// Two charts per domain present in rows: mean total and find_vis_viol time
// vs size per method, and mean logical memory vs size per method. Returns the
// written file paths. Output is deterministic for fixed rows.
std::vector<std::string> emit_plots(const std::vector<BenchRow>& rows,
                                    const std::string& out_dir);

}  // namespace vamp
