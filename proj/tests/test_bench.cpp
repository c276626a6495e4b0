#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "vamp/bench.hpp"

using namespace vamp;

namespace {

std::vector<BenchRow> fixture_rows() {
    std::vector<BenchRow> rows;
    int trial = 0;
    for (int size : {100, 200, 300}) {
        for (const char* method : {"baseline", "fpnnt"}) {
            BenchRow r;
            r.domain = "one-hallway";
            r.size = size;
            r.method = method;
            r.lookback_capacity = 32;
            r.trial = trial++;
            r.total_ms = size * (method == std::string("baseline") ? 0.5 : 0.25);
            r.find_vis_viol_ms = r.total_ms * 0.8;
            r.insert_ms = r.total_ms * 0.05;
            r.nodes_expanded = static_cast<std::uint64_t>(size) * 7;
            r.steps = size - 2;
            r.violation_cells = 0;
            r.logical_memory = static_cast<std::uint64_t>(size) * 1000;
            rows.push_back(r);
        }
    }
    return rows;
}

// Minimal well-formedness check: every opened tag is closed in order.
bool parses_as_xml(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        const std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        const bool closing = tag[0] == '/';
        const bool self_closing = tag.back() == '/';
        if (closing) tag = tag.substr(1);
        if (self_closing) tag = tag.substr(0, tag.size() - 1);
        const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
        if (name.empty()) return false;
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self_closing) {
            stack.push_back(name);
        }
    }
    return stack.empty();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

std::filesystem::path fresh_out_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("csv header is the exact contract string") {
    CHECK(std::string(kCsvHeader) ==
          "domain,size,method,M,trial,total_ms,find_vis_viol_ms,insert_ms,"
          "nodes_expanded,steps,violation_cells,logical_memory");
    CHECK(csv_string({}).rfind(kCsvHeader, 0) == 0);
}

TEST_CASE("csv round-trips every non-timing column") {
    const auto rows = fixture_rows();
    const auto parsed = parse_csv(csv_string(rows));
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].domain == rows[i].domain);
        CHECK(parsed[i].size == rows[i].size);
        CHECK(parsed[i].method == rows[i].method);
        CHECK(parsed[i].lookback_capacity == rows[i].lookback_capacity);
        CHECK(parsed[i].trial == rows[i].trial);
        CHECK(parsed[i].nodes_expanded == rows[i].nodes_expanded);
        CHECK(parsed[i].steps == rows[i].steps);
        CHECK(parsed[i].violation_cells == rows[i].violation_cells);
        CHECK(parsed[i].logical_memory == rows[i].logical_memory);
    }
    CHECK_THROWS_AS(parse_csv("nonsense\n"), ParseError);
}

TEST_CASE("run_bench produces one row per (size, method, trial)") {
    BenchConfig config;
    config.domain_kind = DomainKind::OneHallway;
    config.sizes = {48};
    config.trials = 3;
    const auto rows = run_bench(config);
    REQUIRE(rows.size() == 6);  // 1 size x 2 methods x 3 trials
    for (const BenchRow& r : rows) {
        CHECK(r.steps >= 0);  // shipped domains always solve
        CHECK(r.find_vis_viol_ms <= r.total_ms);
        CHECK(r.violation_cells == rows[0].violation_cells);
        CHECK(r.steps == rows[0].steps);
        CHECK(r.nodes_expanded == rows[0].nodes_expanded);
    }
    CHECK(rows[0].method == "baseline");
    CHECK(rows[3].method == "fpnnt");
}

TEST_CASE("run_bench validates its configuration") {
    BenchConfig config;
    config.sizes = {};
    CHECK_THROWS_AS(run_bench(config), InvalidSpec);
    config.sizes = {200, 100};
    CHECK_THROWS_AS(run_bench(config), InvalidSpec);
    config.sizes = {100};
    config.trials = 0;
    CHECK_THROWS_AS(run_bench(config), InvalidSpec);
    config.trials = 1;
    config.methods = {};
    CHECK_THROWS_AS(run_bench(config), InvalidSpec);
}

TEST_CASE("run_bench writes results.csv into the output directory") {
    const auto dir = fresh_out_dir("vamp-bench-out");
    BenchConfig config;
    config.domain_kind = DomainKind::OneHallway;
    config.sizes = {48};
    config.trials = 1;
    config.output_dir = dir.string();
    config.emit_svg = true;
    const auto rows = run_bench(config);
    const auto parsed =
        parse_csv(test_helpers::read_file((dir / "results.csv").string()));
    CHECK(parsed.size() == rows.size());
    CHECK(std::filesystem::exists(dir / "one-hallway-runtime.svg"));
    CHECK(std::filesystem::exists(dir / "one-hallway-memory.svg"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("plots: polyline counts and xml shape") {
    const auto dir = fresh_out_dir("vamp-plot-out");
    const auto written = emit_plots(fixture_rows(), dir.string());
    REQUIRE(written.size() == 2);

    const std::string runtime = test_helpers::read_file(written[0]);
    const std::string memory = test_helpers::read_file(written[1]);
    CHECK(parses_as_xml(runtime));
    CHECK(parses_as_xml(memory));
    // two methods, one memory polyline each; runtime has total + find_vis_viol
    CHECK(count_occurrences(memory, "<polyline") == 2);
    CHECK(count_occurrences(runtime, "<polyline") == 4);
    // three sizes -> three vertices per polyline
    const std::size_t first = memory.find("points=\"");
    REQUIRE(first != std::string::npos);
    const std::size_t close = memory.find('"', first + 8);
    const std::string pts = memory.substr(first + 8, close - first - 8);
    CHECK(count_occurrences(pts, ",") == 3);  // one comma per vertex
    std::filesystem::remove_all(dir);
}

TEST_CASE("single-row plot is a valid one-point chart") {
    auto rows = fixture_rows();
    rows.resize(1);
    const auto dir = fresh_out_dir("vamp-plot-single");
    const auto written = emit_plots(rows, dir.string());
    for (const auto& path : written)
        CHECK(parses_as_xml(test_helpers::read_file(path)));
    std::filesystem::remove_all(dir);
}

TEST_CASE("plots are deterministic and match the golden snapshot") {
    const auto dir = fresh_out_dir("vamp-plot-golden");
    const auto written = emit_plots(fixture_rows(), dir.string());
    REQUIRE(written.size() == 2);
    CHECK(test_helpers::read_file(written[0]) ==
          test_helpers::read_file(test_helpers::data_path("fixture-runtime.svg")));
    CHECK(test_helpers::read_file(written[1]) ==
          test_helpers::read_file(test_helpers::data_path("fixture-memory.svg")));
    std::filesystem::remove_all(dir);
}

TEST_CASE("emit_plots rejects empty input") {
    CHECK_THROWS_AS(emit_plots({}, "."), InvalidSpec);
}
