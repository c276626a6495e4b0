#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "vamp/domains.hpp"
#include "vamp/fpnnt.hpp"
#include "vamp/geometry.hpp"

namespace vamp {

using PathEntry = PointLabel<Configuration>;

// Persistent index over the viewcone-ball centers of one search path. Both
// implementations keep every version queryable: inserting under any handle
// yields a new handle and never disturbs existing ones.
class PathIndex {
public:
    using Handle = std::uint32_t;
    static constexpr Handle kNone = 0xffffffffu;

    virtual ~PathIndex() = default;

    // pred == kNone starts a new chain.
    virtual Handle insert(Handle pred, const Vec2& point, const Configuration& label) = 0;

    // Exactly the entries on the handle's chain with dist(point, center) <= r,
    // appended to out in a deterministic per-implementation order.
    virtual void range_query(Handle handle, const Vec2& center, double r,
                             std::vector<PathEntry>& out) const = 0;

    virtual std::uint64_t logical_memory() const = 0;
};

// Stores one point-label pair per node and answers queries by walking the
// parent chain, newest first. O(1) insert, O(path length) query.
class BruteForceIndex final : public PathIndex {
public:
    Handle insert(Handle pred, const Vec2& point, const Configuration& label) override;
    void range_query(Handle handle, const Vec2& center, double r,
                     std::vector<PathEntry>& out) const override;
    std::uint64_t logical_memory() const override;

private:
    struct Node {
        Vec2 point;
        Configuration label;
        Handle parent;
    };
    std::vector<Node> nodes_;
};

class FpnntIndex final : public PathIndex {
public:
    explicit FpnntIndex(int lookback_capacity) {
        config_.lookback_capacity = lookback_capacity;
    }

    Handle insert(Handle pred, const Vec2& point, const Configuration& label) override;
    void range_query(Handle handle, const Vec2& center, double r,
                     std::vector<PathEntry>& out) const override;
    std::uint64_t logical_memory() const override;

    const FpnntNodePtr<Configuration>& version(Handle h) const { return versions_[h]; }

private:
    FpnntConfig config_;
    std::vector<FpnntNodePtr<Configuration>> versions_;
};

enum class IndexStrategy { Baseline, Fpnnt };

std::unique_ptr<PathIndex> make_path_index(IndexStrategy strategy, int lookback_capacity);

struct PlannerConfig {
    double c_step = 1.0;
    double c_viol = 100.0;
    bool use_heuristic = true;  // Manhattan distance to the goal, scaled by c_step
    IndexStrategy strategy = IndexStrategy::Fpnnt;
    int lookback_capacity = 32;  // M, for the Fpnnt strategy
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t find_vis_viol_calls = 0;
    std::uint64_t find_vis_viol_ns = 0;
    std::uint64_t insert_ns = 0;
    std::uint64_t total_ns = 0;
    std::uint64_t logical_memory = 0;
};

struct PathResult {
    std::vector<Configuration> path;  // path.front() == q0
    std::uint64_t total_violation_cells = 0;  // sum of incremental sizes
    std::uint64_t steps = 0;
    SearchStats stats;
};

// The part of S(q_i, q_next) not yet observed along the indexed path: starts
// from the swept cells minus v0, then subtracts V(q_j) for every q_j the index
// returns within r_query = r_vis + r_s of the swept-volume ball center,
// stopping early once empty. Configurations filtered out by the radius cannot
// intersect the swept ball, so the result equals the unfiltered difference
// S \ (v0 | V([q_1..q_i])). Throws NotAPrimitive / Collision on bad edges.
RegionSet find_vis_viol(const PathIndex& index, PathIndex::Handle handle,
                        const Configuration& q_i, const Configuration& q_next,
                        const RobotSpec& spec, const WorkspaceGrid& grid,
                        const CellMask& v0);

RegionSet find_vis_viol(const PathIndex& index, PathIndex::Handle handle,
                        const Configuration& q_i, const Configuration& q_next,
                        const RobotSpec& spec, const WorkspaceGrid& grid,
                        const RegionSet& v0);

// Best-first search over the configuration lattice. Transition cost is
// c_step + c_viol * |incremental unseen swept region|; ties on priority break
// on lower accumulated violation, then fewer steps, then insertion order, so
// runs are fully deterministic. One best-cost path is kept per configuration
// and re-opened on strict improvement. The Baseline and Fpnnt strategies
// return identical results; only the timings differ. Throws NoPath when no
// collision-free path reaches the goal.
PathResult relaxed_vamp_search(const ProblemInstance& instance, const RobotSpec& spec,
                               const PlannerConfig& config);

// Definitional oracle: the exact union-form violation region of a path,
// computed with an explicit running visible-region set and no filtering.
// Throws InvalidPath on non-primitive or colliding edges.
RegionSet violation_of_path(std::span<const Configuration> path,
                            const ProblemInstance& instance, const RobotSpec& spec);

// True iff every edge is collision-free (glass blocks motion) and each swept
// region was observed before being swept; a lone configuration just needs its
// footprint inside v0.
bool check_feasible(std::span<const Configuration> path, const ProblemInstance& instance,
                    const RobotSpec& spec);

}  // namespace vamp
