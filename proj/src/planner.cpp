#include "vamp/planner.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>

namespace vamp {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
            .count());
}

bool cells_free(const WorkspaceGrid& grid, const RegionSet& cells) {
    for (CellCoord c : cells)
        if (!grid.in_bounds(c) || grid.at(c) != CellState::Free) return false;
    return true;
}

}  // namespace

PathIndex::Handle BruteForceIndex::insert(Handle pred, const Vec2& point,
                                          const Configuration& label) {
    nodes_.push_back({point, label, pred});
    return static_cast<Handle>(nodes_.size() - 1);
}

void BruteForceIndex::range_query(Handle handle, const Vec2& center, double r,
                                  std::vector<PathEntry>& out) const {
    if (r < 0) throw NegativeRadius("range_query: negative radius");
    const double r_sq = r * r;
    for (Handle h = handle; h != kNone; h = nodes_[h].parent) {
        const Node& n = nodes_[h];
        if ((n.point - center).squaredNorm() <= r_sq) out.push_back({n.point, n.label});
    }
}

std::uint64_t BruteForceIndex::logical_memory() const {
    return (kFpnntNodeCost + kPointLabelCost) * nodes_.size();
}

PathIndex::Handle FpnntIndex::insert(Handle pred, const Vec2& point,
                                     const Configuration& label) {
    PathEntry entry{point, label};
    if (pred == kNone) {
        versions_.push_back(new_root<Configuration, double, 2>(std::move(entry), config_));
    } else {
        versions_.push_back(insert_node(versions_[pred], std::move(entry)));
    }
    return static_cast<Handle>(versions_.size() - 1);
}

void FpnntIndex::range_query(Handle handle, const Vec2& center, double r,
                             std::vector<PathEntry>& out) const {
    vamp::range_query(*versions_[handle], center, r, out);
}

std::uint64_t FpnntIndex::logical_memory() const {
    return logical_size(std::span<const FpnntNodePtr<Configuration>>(versions_));
}

std::unique_ptr<PathIndex> make_path_index(IndexStrategy strategy, int lookback_capacity) {
    if (strategy == IndexStrategy::Baseline) return std::make_unique<BruteForceIndex>();
    return std::make_unique<FpnntIndex>(lookback_capacity);
}

RegionSet find_vis_viol(const PathIndex& index, PathIndex::Handle handle,
                        const Configuration& q_i, const Configuration& q_next,
                        const RobotSpec& spec, const WorkspaceGrid& grid,
                        const CellMask& v0) {
    const RegionSet swept = swept_cells(q_i, q_next, spec);  // throws NotAPrimitive
    if (!cells_free(grid, swept))
        throw Collision("find_vis_viol: edge sweeps a blocked cell");

    std::vector<CellCoord> unseen;
    for (CellCoord c : swept)
        if (!v0.test(c)) unseen.push_back(c);
    if (unseen.empty()) return {};

    const Ball ball = swept_ball(q_i, q_next, spec);
    const double r_query = spec.r_vis() + ball.radius;
    std::vector<PathEntry> hits;
    index.range_query(handle, ball.center, r_query, hits);
    for (const PathEntry& hit : hits) {
        const RegionSet seen = visible_cells(grid, hit.label, spec);
        std::erase_if(unseen, [&](CellCoord c) { return seen.contains(c); });
        if (unseen.empty()) break;
    }
    return RegionSet::from_sorted_unique(std::move(unseen));
}

RegionSet find_vis_viol(const PathIndex& index, PathIndex::Handle handle,
                        const Configuration& q_i, const Configuration& q_next,
                        const RobotSpec& spec, const WorkspaceGrid& grid,
                        const RegionSet& v0) {
    CellMask mask(grid);
    mask.set_all(v0);
    return find_vis_viol(index, handle, q_i, q_next, spec, grid, mask);
}

namespace {

struct FrontierEntry {
    double priority;
    std::uint64_t g_viol;
    std::uint32_t g_steps;
    std::uint64_t seq;
    std::uint32_t node;
    double g;
};

struct FrontierOrder {
    bool operator()(const FrontierEntry& a, const FrontierEntry& b) const {
        if (a.priority != b.priority) return a.priority > b.priority;
        if (a.g_viol != b.g_viol) return a.g_viol > b.g_viol;
        if (a.g_steps != b.g_steps) return a.g_steps > b.g_steps;
        return a.seq > b.seq;
    }
};

struct SearchNode {
    Configuration q;
    std::uint32_t parent;
    PathIndex::Handle handle;
    std::uint64_t g_viol;
    std::uint32_t g_steps;
};

constexpr std::uint32_t kNoParent = 0xffffffffu;
constexpr std::uint64_t kSearchNodeCost = 64;

}  // namespace

PathResult relaxed_vamp_search(const ProblemInstance& instance, const RobotSpec& spec,
                               const PlannerConfig& config) {
    const auto t_start = Clock::now();
    if (config.c_step <= 0.0 || config.c_viol < 0.0)
        throw InvalidSpec("relaxed_vamp_search: requires c_step > 0 and c_viol >= 0");
    const WorkspaceGrid& grid = instance.grid;
    const int fs = spec.footprint_side();
    const int width = grid.width();
    const int height = grid.height();

    if (!cells_free(grid, footprint(instance.q0, spec)))
        throw InvalidPath("relaxed_vamp_search: start footprint is not free");

    CellMask v0(grid);
    v0.set_all(instance.v0);
    CellMask goal(grid);
    goal.set_all(instance.goal_cells);
    const std::vector<CellCoord>& goal_cells = instance.goal_cells.cells();

    const auto config_id = [&](const Configuration& q) {
        return (static_cast<std::size_t>(q.y) * width + q.x) * 4 +
               static_cast<int>(q.orient);
    };
    const auto at_goal = [&](const Configuration& q) {
        for (int r = 0; r < fs; ++r)
            for (int c = 0; c < fs; ++c)
                if (goal.test({q.x + c, q.y + r})) return true;
        return false;
    };
    // Admissible: steps needed before the footprint can overlap a goal cell.
    const auto heuristic = [&](const Configuration& q) -> double {
        if (!config.use_heuristic) return 0.0;
        int best = std::numeric_limits<int>::max();
        for (CellCoord gc : goal_cells) {
            const int dx = std::max({0, q.x - gc.col, gc.col - (q.x + fs - 1)});
            const int dy = std::max({0, q.y - gc.row, gc.row - (q.y + fs - 1)});
            best = std::min(best, dx + dy);
        }
        return config.c_step * best;
    };

    std::unique_ptr<PathIndex> index =
        make_path_index(config.strategy, config.lookback_capacity);
    SearchStats stats;

    std::vector<double> g_best(static_cast<std::size_t>(width) * height * 4,
                               std::numeric_limits<double>::infinity());
    std::vector<SearchNode> nodes;
    std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, FrontierOrder> frontier;
    std::uint64_t seq = 0;

    {
        auto t = Clock::now();
        const PathIndex::Handle h0 =
            index->insert(PathIndex::kNone, view_ball(instance.q0, spec).center,
                          instance.q0);
        stats.insert_ns += ns_since(t);
        nodes.push_back({instance.q0, kNoParent, h0, 0, 0});
        g_best[config_id(instance.q0)] = 0.0;
        frontier.push({heuristic(instance.q0), 0, 0, seq++, 0, 0.0});
    }

    std::uint32_t goal_node = kNoParent;
    while (!frontier.empty()) {
        const FrontierEntry entry = frontier.top();
        frontier.pop();
        const SearchNode node = nodes[entry.node];
        if (entry.g != g_best[config_id(node.q)]) continue;  // superseded
        ++stats.nodes_expanded;
        if (at_goal(node.q)) {
            goal_node = entry.node;
            break;
        }
        for (const Configuration& succ : successors(node.q)) {
            if (succ.x < 0 || succ.y < 0 || succ.x + fs > width || succ.y + fs > height)
                continue;
            if (succ.x != node.q.x || succ.y != node.q.y) {
                if (!cells_free(grid, footprint(succ, spec))) continue;
            }
            const std::size_t succ_id = config_id(succ);
            if (entry.g + config.c_step >= g_best[succ_id]) continue;

            auto t = Clock::now();
            const RegionSet viol =
                find_vis_viol(*index, node.handle, node.q, succ, spec, grid, v0);
            stats.find_vis_viol_ns += ns_since(t);
            ++stats.find_vis_viol_calls;

            const double g_succ =
                entry.g + config.c_step + config.c_viol * static_cast<double>(viol.size());
            if (g_succ >= g_best[succ_id]) continue;
            g_best[succ_id] = g_succ;

            t = Clock::now();
            const PathIndex::Handle h =
                index->insert(node.handle, view_ball(succ, spec).center, succ);
            stats.insert_ns += ns_since(t);

            const std::uint32_t id = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back({succ, entry.node, h, node.g_viol + viol.size(),
                             node.g_steps + 1});
            frontier.push({g_succ + heuristic(succ), node.g_viol + viol.size(),
                           node.g_steps + 1, seq++, id, g_succ});
        }
    }
    if (goal_node == kNoParent)
        throw NoPath("relaxed_vamp_search: goal unreachable by collision-free edges");

    PathResult result;
    for (std::uint32_t id = goal_node; id != kNoParent; id = nodes[id].parent)
        result.path.push_back(nodes[id].q);
    std::reverse(result.path.begin(), result.path.end());
    result.total_violation_cells = nodes[goal_node].g_viol;
    result.steps = nodes[goal_node].g_steps;
    stats.logical_memory = index->logical_memory() + kSearchNodeCost * nodes.size();
    stats.total_ns = ns_since(t_start);
    result.stats = stats;
    return result;
}

RegionSet violation_of_path(std::span<const Configuration> path,
                            const ProblemInstance& instance, const RobotSpec& spec) {
    if (path.empty()) return {};
    const WorkspaceGrid& grid = instance.grid;
    if (path[0].x < 0 || path[0].y < 0 ||
        path[0].x + spec.footprint_side() > grid.width() ||
        path[0].y + spec.footprint_side() > grid.height())
        throw InvalidPath("violation_of_path: start footprint outside the grid");
    CellMask seen(grid);
    seen.set_all(instance.v0);
    seen.set_all(visible_cells(grid, path[0], spec));
    std::vector<CellCoord> viol;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!is_primitive(path[i], path[i + 1]))
            throw InvalidPath("violation_of_path: edge is not a primitive motion");
        const RegionSet swept = swept_cells(path[i], path[i + 1], spec);
        if (!cells_free(grid, swept))
            throw InvalidPath("violation_of_path: edge sweeps a blocked cell");
        for (CellCoord c : swept)
            if (!seen.test(c)) viol.push_back(c);
        seen.set_all(visible_cells(grid, path[i + 1], spec));
    }
    return RegionSet(std::move(viol));
}

bool check_feasible(std::span<const Configuration> path, const ProblemInstance& instance,
                    const RobotSpec& spec) {
    if (path.empty()) return true;
    const WorkspaceGrid& grid = instance.grid;
    const int fs = spec.footprint_side();
    if (path[0].x < 0 || path[0].y < 0 || path[0].x + fs > grid.width() ||
        path[0].y + fs > grid.height())
        return false;
    for (CellCoord c : footprint(path[0], spec))
        if (!instance.v0.contains(c)) return false;

    CellMask seen(grid);
    seen.set_all(instance.v0);
    seen.set_all(visible_cells(grid, path[0], spec));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!is_primitive(path[i], path[i + 1])) return false;
        const RegionSet swept = swept_cells(path[i], path[i + 1], spec);
        if (!cells_free(grid, swept)) return false;
        for (CellCoord c : swept)
            if (!seen.test(c)) return false;
        seen.set_all(visible_cells(grid, path[i + 1], spec));
    }
    return true;
}

}  // namespace vamp
