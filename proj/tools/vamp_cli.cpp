#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "selftest.hpp"
#include "vamp/bench.hpp"
#include "vamp/domains.hpp"
#include "vamp/planner.hpp"

namespace {

using namespace vamp;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

int cmd_gen(const std::string& kind, int size, int width, const std::string& out_path) {
    DomainSpec spec;
    spec.kind = domain_kind_from_name(kind);
    spec.size = size;
    spec.hallway_width = width;
    const std::string text = save_ascii(generate(spec));
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_solve(const std::string& map_path, const std::string& method, int m,
              const std::string& csv_path) {
    const ProblemInstance instance = load_ascii(read_file(map_path));
    const RobotSpec robot;
    PlannerConfig pc;
    pc.strategy = method_from_name(method);
    pc.lookback_capacity = m;
    const PathResult res = relaxed_vamp_search(instance, robot, pc);

    std::printf("map: %s\n", map_path.c_str());
    std::printf("method: %s\n", method.c_str());
    std::printf("steps: %llu\n", static_cast<unsigned long long>(res.steps));
    std::printf("violation_cells: %llu\n",
                static_cast<unsigned long long>(res.total_violation_cells));
    std::printf("nodes_expanded: %llu\n",
                static_cast<unsigned long long>(res.stats.nodes_expanded));
    std::printf("find_vis_viol_calls: %llu\n",
                static_cast<unsigned long long>(res.stats.find_vis_viol_calls));
    std::printf("total_ms: %.3f\n", res.stats.total_ns / 1e6);
    std::printf("find_vis_viol_ms: %.3f\n", res.stats.find_vis_viol_ns / 1e6);
    std::printf("insert_ms: %.3f\n", res.stats.insert_ns / 1e6);
    std::printf("logical_memory: %llu\n",
                static_cast<unsigned long long>(res.stats.logical_memory));

    if (!csv_path.empty()) {
        BenchRow row;
        row.domain = std::filesystem::path(map_path).stem().string();
        row.size = instance.grid.height();
        row.method = method;
        row.lookback_capacity = m;
        row.trial = 0;
        row.total_ms = res.stats.total_ns / 1e6;
        row.find_vis_viol_ms = res.stats.find_vis_viol_ns / 1e6;
        row.insert_ms = res.stats.insert_ns / 1e6;
        row.nodes_expanded = res.stats.nodes_expanded;
        row.steps = static_cast<std::int64_t>(res.steps);
        row.violation_cells = res.total_violation_cells;
        row.logical_memory = res.stats.logical_memory;
        write_csv({row}, csv_path);
    }
    return 0;
}

int cmd_bench(const std::string& kind, const std::vector<int>& sizes, int trials,
              const std::vector<std::string>& methods, int m, const std::string& out_dir,
              bool svg) {
    BenchConfig config;
    config.domain_kind = domain_kind_from_name(kind);
    config.sizes = sizes;
    config.trials = trials;
    config.methods.clear();
    for (const std::string& name : methods) config.methods.push_back(method_from_name(name));
    config.lookback_capacity = m;
    config.output_dir = out_dir;
    config.emit_svg = svg;
    const auto rows = run_bench(config);
    std::printf("wrote %zu rows to %s/results.csv\n", rows.size(), out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"visibility-aware lattice planner benchmark harness"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a domain and write its ASCII map");
    std::string gen_kind;
    int gen_size = 0, gen_width = 11;
    std::string gen_out;
    gen->add_option("--kind", gen_kind,
                    "one-hallway | horseshoe-hallway | glass-hallway")->required();
    gen->add_option("--size", gen_size, "domain length / side in cells")->required();
    gen->add_option("--width", gen_width, "hallway width in cells");
    gen->add_option("--out", gen_out, "output file (stdout if omitted)");

    auto* solve = app.add_subcommand("solve", "run the relaxed search on a map file");
    std::string solve_map, solve_method = "fpnnt", solve_csv;
    int solve_m = 32;
    solve->add_option("--map", solve_map, "ASCII map file")->required();
    solve->add_option("--method", solve_method, "baseline | fpnnt");
    solve->add_option("--m", solve_m, "lookback capacity M");
    solve->add_option("--csv", solve_csv, "also write a one-row CSV");

    auto* bench = app.add_subcommand("bench", "baseline-vs-fpnnt scaling comparison");
    std::string bench_kind, bench_out;
    std::vector<int> bench_sizes;
    std::vector<std::string> bench_methods = {"baseline", "fpnnt"};
    int bench_trials = 10, bench_m = 32;
    bool bench_svg = false;
    bench->add_option("--kind", bench_kind,
                      "one-hallway | horseshoe-hallway | glass-hallway")->required();
    bench->add_option("--sizes", bench_sizes, "comma-separated domain sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--trials", bench_trials, "iterations per (size, method)");
    bench->add_option("--methods", bench_methods, "subset of baseline,fpnnt")
        ->delimiter(',');
    bench->add_option("--m", bench_m, "lookback capacity M");
    bench->add_option("--out", bench_out, "output directory")->required();
    bench->add_flag("--svg", bench_svg, "also emit SVG plots");

    auto* selftest = app.add_subcommand("selftest", "run the oracle property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_size, gen_width, gen_out);
        if (solve->parsed()) return cmd_solve(solve_map, solve_method, solve_m, solve_csv);
        if (bench->parsed())
            return cmd_bench(bench_kind, bench_sizes, bench_trials, bench_methods,
                             bench_m, bench_out, bench_svg);
        if (selftest->parsed()) return run_selftest();
    } catch (const NoPath& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
