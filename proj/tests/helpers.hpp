#pragma once

#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vamp/domains.hpp"
#include "vamp/geometry.hpp"

namespace test_helpers {

inline std::string data_path(const std::string& name) {
    if (const char* dir = std::getenv("VAMP_TEST_DATA"))
        return std::string(dir) + "/" + name;
    // running by hand from the repo root or from build/tests
    for (const char* guess : {"tests/data", "../../tests/data"}) {
        std::ifstream probe(std::string(guess) + "/" + name);
        if (probe) return std::string(guess) + "/" + name;
    }
    return "tests/data/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Plain breadth-first search over translations, ignoring visibility; rotations
// never move the footprint, so (x, y) reachability is all that matters.
inline bool collision_free_path_exists(const vamp::ProblemInstance& inst,
                                       const vamp::RobotSpec& robot) {
    const vamp::WorkspaceGrid& grid = inst.grid;
    const int fs = robot.footprint_side();
    const auto fp_free = [&](int x, int y) {
        if (x < 0 || y < 0 || x + fs > grid.width() || y + fs > grid.height())
            return false;
        for (int r = 0; r < fs; ++r)
            for (int c = 0; c < fs; ++c)
                if (grid.at(x + c, y + r) != vamp::CellState::Free) return false;
        return true;
    };
    const auto hits_goal = [&](int x, int y) {
        for (int r = 0; r < fs; ++r)
            for (int c = 0; c < fs; ++c)
                if (inst.goal_cells.contains({x + c, y + r})) return true;
        return false;
    };
    if (!fp_free(inst.q0.x, inst.q0.y)) return false;
    std::vector<char> visited(static_cast<std::size_t>(grid.width()) * grid.height(), 0);
    const auto id = [&](int x, int y) {
        return static_cast<std::size_t>(y) * grid.width() + x;
    };
    std::deque<std::pair<int, int>> queue{{inst.q0.x, inst.q0.y}};
    visited[id(inst.q0.x, inst.q0.y)] = 1;
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        if (hits_goal(x, y)) return true;
        const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int nx = x + dx[k], ny = y + dy[k];
            if (fp_free(nx, ny) && !visited[id(nx, ny)]) {
                visited[id(nx, ny)] = 1;
                queue.push_back({nx, ny});
            }
        }
    }
    return false;
}

// Minimum number of translation steps to reach the goal, ignoring visibility;
// -1 when unreachable.
inline int min_translation_steps(const vamp::ProblemInstance& inst,
                                 const vamp::RobotSpec& robot) {
    const vamp::WorkspaceGrid& grid = inst.grid;
    const int fs = robot.footprint_side();
    const auto fp_free = [&](int x, int y) {
        if (x < 0 || y < 0 || x + fs > grid.width() || y + fs > grid.height())
            return false;
        for (int r = 0; r < fs; ++r)
            for (int c = 0; c < fs; ++c)
                if (grid.at(x + c, y + r) != vamp::CellState::Free) return false;
        return true;
    };
    const auto hits_goal = [&](int x, int y) {
        for (int r = 0; r < fs; ++r)
            for (int c = 0; c < fs; ++c)
                if (inst.goal_cells.contains({x + c, y + r})) return true;
        return false;
    };
    std::vector<int> dist(static_cast<std::size_t>(grid.width()) * grid.height(), -1);
    const auto id = [&](int x, int y) {
        return static_cast<std::size_t>(y) * grid.width() + x;
    };
    std::deque<std::pair<int, int>> queue{{inst.q0.x, inst.q0.y}};
    dist[id(inst.q0.x, inst.q0.y)] = 0;
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        if (hits_goal(x, y)) return dist[id(x, y)];
        const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int nx = x + dx[k], ny = y + dy[k];
            if (fp_free(nx, ny) && dist[id(nx, ny)] < 0) {
                dist[id(nx, ny)] = dist[id(x, y)] + 1;
                queue.push_back({nx, ny});
            }
        }
    }
    return -1;
}

}  // namespace test_helpers
