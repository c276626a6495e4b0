#include "selftest.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "vamp/bench.hpp"
#include "vamp/fpnnt.hpp"
#include "vamp/kdtree.hpp"
#include "vamp/planner.hpp"

namespace {

using namespace vamp;

bool suite_region_ops(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(0, 40);
    for (int iter = 0; iter < 200; ++iter) {
        std::set<std::pair<int, int>> ref_a, ref_b;
        std::vector<CellCoord> raw_a, raw_b;
        for (int i = 0; i < 300; ++i) {
            CellCoord a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
            raw_a.push_back(a);
            raw_b.push_back(b);
            ref_a.insert({a.col, a.row});
            ref_b.insert({b.col, b.row});
        }
        RegionSet a(raw_a), b(raw_b);
        std::set<std::pair<int, int>> ref_union = ref_a, ref_diff;
        ref_union.insert(ref_b.begin(), ref_b.end());
        for (auto& c : ref_a)
            if (!ref_b.count(c)) ref_diff.insert(c);
        const RegionSet u = region_union(a, b), d = region_difference(a, b);
        if (u.size() != ref_union.size() || d.size() != ref_diff.size()) return false;
        for (CellCoord c : u)
            if (!ref_union.count({c.col, c.row})) return false;
        for (CellCoord c : d)
            if (!ref_diff.count({c.col, c.row})) return false;
    }
    return true;
}

bool suite_kdtree(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    std::uniform_real_distribution<double> radius(0.0, 40.0);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<PointLabel<int>> pts;
        for (int i = 0; i < 500; ++i)
            pts.push_back({Vec2(coord(rng), coord(rng)), i});
        const auto tree = KdTree<int>::build(pts);
        for (int q = 0; q < 50; ++q) {
            const Vec2 center(coord(rng), coord(rng));
            const double r = radius(rng);
            std::set<int> got, want;
            for (const auto& e : tree.ball_query(center, r)) got.insert(e.label);
            for (const auto& p : pts)
                if ((p.point - center).squaredNorm() <= r * r) want.insert(p.label);
            if (got != want) return false;
        }
    }
    return true;
}

bool suite_fpnnt(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-30.0, 30.0);
    std::uniform_real_distribution<double> radius(0.0, 25.0);
    for (int m : {1, 2, 5, 32}) {
        FpnntConfig cfg;
        cfg.lookback_capacity = m;
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<FpnntNodePtr<int>> versions;
            int label = 0;
            versions.push_back(
                new_root<int, double, 2>({Vec2(coord(rng), coord(rng)), label++}, cfg));
            std::uniform_int_distribution<std::size_t> pick;
            for (int step = 0; step < 250; ++step) {
                const std::size_t at =
                    std::uniform_int_distribution<std::size_t>(0, versions.size() - 1)(rng);
                versions.push_back(
                    insert_node(versions[at], {Vec2(coord(rng), coord(rng)), label++}));
            }
            for (int q = 0; q < 10; ++q) {
                const std::size_t at =
                    std::uniform_int_distribution<std::size_t>(0, versions.size() - 1)(rng);
                const Vec2 center(coord(rng), coord(rng));
                const double r = radius(rng);
                std::multiset<int> got, want;
                for (const auto& e : range_query(*versions[at], center, r))
                    got.insert(e.label);
                for (const FpnntNode<int>* n = versions[at].get(); n;
                     n = n->predecessor().get())
                    if ((n->point_label().point - center).squaredNorm() <= r * r)
                        want.insert(n->point_label().label);
                if (got != want) return false;
            }
        }
    }
    return true;
}

bool suite_find_vis_viol(std::mt19937_64& rng) {
    const RobotSpec robot;
    for (int iter = 0; iter < 60; ++iter) {
        WorkspaceGrid grid(24, 24, CellState::Obstacle);
        for (int r = 1; r < 23; ++r)
            for (int c = 1; c < 23; ++c) grid.set(c, r, CellState::Free);
        std::uniform_int_distribution<int> cell(2, 20);
        for (int i = 0; i < 20; ++i)
            grid.set(cell(rng), cell(rng),
                     (rng() & 1) ? CellState::Obstacle : CellState::Glass);

        // random collision-free walk
        std::vector<Configuration> path;
        Configuration q{12, 12, Orientation::N};
        const auto free_fp = [&](const Configuration& c) {
            if (c.x < 1 || c.y < 1 || c.x + 2 > 23 || c.y + 2 > 23) return false;
            for (CellCoord f : footprint(c, robot))
                if (grid.at(f) != CellState::Free) return false;
            return true;
        };
        if (!free_fp(q)) continue;
        path.push_back(q);
        for (int step = 0; step < 12; ++step) {
            const auto succ = successors(path.back());
            const Configuration next = succ[rng() % 6];
            if (!free_fp(next)) continue;
            path.push_back(next);
        }
        if (path.size() < 2) continue;

        const RegionSet v0 =
            region_union(footprint(path[0], robot), visible_cells(grid, path[0], robot));
        CellMask v0_mask(grid);
        v0_mask.set_all(v0);
        for (IndexStrategy strategy : {IndexStrategy::Baseline, IndexStrategy::Fpnnt}) {
            auto index = make_path_index(strategy, 4);
            PathIndex::Handle h = index->insert(
                PathIndex::kNone, view_ball(path[0], robot).center, path[0]);
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                const RegionSet got = find_vis_viol(*index, h, path[i], path[i + 1],
                                                    robot, grid, v0_mask);
                // unfiltered definitional computation
                RegionSet want = swept_cells(path[i], path[i + 1], robot);
                want = region_difference(want, v0);
                for (std::size_t j = 0; j <= i; ++j)
                    want = region_difference(want, visible_cells(grid, path[j], robot));
                if (!(got == want)) return false;
                h = index->insert(h, view_ball(path[i + 1], robot).center, path[i + 1]);
            }
        }
    }
    return true;
}

}  // namespace

int run_selftest() {
    std::mt19937_64 rng(20240817u);
    int failures = 0;
    const auto report = [&](const char* name, bool ok) {
        std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name);
        if (!ok) ++failures;
    };
    report("region ops match reference set algebra", suite_region_ops(rng));
    report("kd-tree ball query matches linear scan", suite_kdtree(rng));
    report("persistent index query matches ancestor-chain scan", suite_fpnnt(rng));
    report("find_vis_viol matches unfiltered definition", suite_find_vis_viol(rng));
    return failures == 0 ? 0 : 1;
}
