#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "vamp/bench.hpp"

namespace {

std::string cli() {
    if (const char* path = std::getenv("VAMP_CLI")) return path;
    // fallbacks for running the binary by hand from the build tree
    for (const char* guess : {"../tools/vamp_cli", "tools/vamp_cli",
                              "build/tools/vamp_cli"})
        if (std::filesystem::exists(guess)) return guess;
    REQUIRE_MESSAGE(false, "VAMP_CLI must point at the built vamp_cli binary");
    return {};
}

int run(const std::string& args, std::string* output = nullptr) {
    const std::string out_file =
        (std::filesystem::temp_directory_path() / "vamp-cli-out.txt").string();
    const std::string cmd = "\"" + cli() + "\" " + args + " >" + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) *output = test_helpers::read_file(out_file);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string grep_line(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) return line;
    return {};
}

}  // namespace

TEST_CASE("gen writes the golden map") {
    const auto out = std::filesystem::temp_directory_path() / "vamp-cli-oh44.map";
    CHECK(run("gen --kind one-hallway --size 44 --out " + out.string()) == 0);
    CHECK(test_helpers::read_file(out.string()) ==
          test_helpers::read_file(test_helpers::data_path("one_hallway_44.map")));

    std::string stdout_text;
    CHECK(run("gen --kind one-hallway --size 44", &stdout_text) == 0);
    CHECK(stdout_text ==
          test_helpers::read_file(test_helpers::data_path("one_hallway_44.map")));
}

TEST_CASE("solve prints identical results for both methods") {
    const auto map = std::filesystem::temp_directory_path() / "vamp-cli-solve.map";
    REQUIRE(run("gen --kind one-hallway --size 60 --out " + map.string()) == 0);

    std::string base_out, fp_out;
    CHECK(run("solve --map " + map.string() + " --method baseline", &base_out) == 0);
    CHECK(run("solve --map " + map.string() + " --method fpnnt --m 32", &fp_out) == 0);
    const std::string base_steps = grep_line(base_out, "steps:");
    CHECK(!base_steps.empty());
    CHECK(base_steps == grep_line(fp_out, "steps:"));
    CHECK(grep_line(base_out, "violation_cells:") ==
          grep_line(fp_out, "violation_cells:"));
    CHECK(grep_line(base_out, "nodes_expanded:") ==
          grep_line(fp_out, "nodes_expanded:"));
}

TEST_CASE("solve can emit a one-row csv") {
    const auto map = std::filesystem::temp_directory_path() / "vamp-cli-csv.map";
    const auto csv = std::filesystem::temp_directory_path() / "vamp-cli-solve.csv";
    REQUIRE(run("gen --kind one-hallway --size 48 --out " + map.string()) == 0);
    CHECK(run("solve --map " + map.string() + " --method fpnnt --csv " + csv.string()) ==
          0);
    const auto rows = vamp::parse_csv(test_helpers::read_file(csv.string()));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].method == "fpnnt");
    CHECK(rows[0].steps >= 0);
}

TEST_CASE("solve exits 1 when there is no path") {
    const auto map = std::filesystem::temp_directory_path() / "vamp-cli-sealed.map";
    std::ofstream(map) << "vamp-grid v1 8 8 1 1 N\n"
                          "########\n"
                          "#S..####\n"
                          "#...#E.#\n"
                          "#...####\n"
                          "#......#\n"
                          "#......#\n"
                          "#......#\n"
                          "########\n";
    CHECK(run("solve --map " + map.string()) == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("bench --kind one-hallway --trials 1 --out /tmp/vamp-cli-bench") == 2);
    CHECK(run("bench --kind one-hallway --sizes --trials 1 --out /tmp/x") == 2);
    CHECK(run("gen --kind one-hallway --size 44 --bogus-flag 1") == 2);
    CHECK(run("gen --kind mystery-domain --size 44") == 2);
    CHECK(run("") == 2);
}

TEST_CASE("bench writes csv and plots") {
    const auto dir = std::filesystem::temp_directory_path() / "vamp-cli-bench-out";
    std::filesystem::remove_all(dir);
    CHECK(run("bench --kind one-hallway --sizes 48,64 --trials 1 --m 8 --out " +
              dir.string() + " --svg") == 0);
    const auto rows =
        vamp::parse_csv(test_helpers::read_file((dir / "results.csv").string()));
    CHECK(rows.size() == 4);  // 2 sizes x 2 methods x 1 trial
    CHECK(std::filesystem::exists(dir / "one-hallway-runtime.svg"));
    CHECK(std::filesystem::exists(dir / "one-hallway-memory.svg"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("selftest passes") {
    std::string out;
    CHECK(run("selftest", &out) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
}
