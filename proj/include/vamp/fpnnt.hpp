#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vamp/errors.hpp"
#include "vamp/kdtree.hpp"

namespace vamp {

// Deterministic unit costs for logical_size; chosen once, platform-free.
inline constexpr std::uint64_t kFpnntNodeCost = 64;   // per version node
inline constexpr std::uint64_t kPointLabelCost = 24;  // label stored in a node
inline constexpr std::uint64_t kSlotRefCost = 8;      // per forest slot
inline constexpr std::uint64_t kKdNodeCost = 40;      // per point in a kd-tree

// Optional instrumentation sink; counts batch builds triggered by insertions.
struct FpnntStats {
    std::uint64_t trees_built = 0;
    std::uint64_t points_built = 0;
};

struct FpnntConfig {
    int lookback_capacity = 32;       // M
    FpnntStats* stats = nullptr;      // not owned; may be null
};

// Fully persistent nearest-neighbor tree.
//
// Every insertion produces a fresh version node; no node, forest, or static
// tree is ever mutated, so any version stays valid and queryable forever and
// new versions may branch off any old one. A version of depth n owns, through
// structural sharing:
//   - a lookback of the ((n-1) mod M) + 1 newest points, encoded across the
//     predecessor chain like a reverse-linked list, and
//   - a forest of static kd-trees where slot i holds exactly 2^i * M points
//     if and only if bit i of floor((n-1)/M) is set.
// Insertion under a predecessor whose depth is a multiple of M merges the
// full lookback with the trees in slots 0..k-1 (k the first empty slot) into
// one freshly built tree at slot k, exactly like a binary-counter carry; when
// every slot is occupied the forest grows by one slot. All other insertions
// share the predecessor's forest as-is.
//
// Concurrent queries on any versions are safe; concurrent insertions under
// the same predecessor simply produce independent sibling versions.
template <class Label, class Scalar = double, int Dim = 2>
class FpnntNode {
public:
    using Tree = KdTree<Label, Scalar, Dim>;
    using Entry = typename Tree::Entry;
    using Point = typename Tree::Point;
    using TreePtr = std::shared_ptr<const Tree>;
    using NodePtr = std::shared_ptr<const FpnntNode>;

    struct Forest {
        std::vector<TreePtr> slots;
    };
    using ForestPtr = std::shared_ptr<const Forest>;

    FpnntNode(Entry point_label, NodePtr predecessor, std::uint64_t depth,
              ForestPtr forest, FpnntConfig config)
        : point_label_(std::move(point_label)),
          predecessor_(std::move(predecessor)),
          depth_(depth),
          forest_(std::move(forest)),
          config_(config) {}

    ~FpnntNode() {
        // Unlink uniquely owned chain prefixes iteratively; version chains can
        // be deep enough to overflow the stack under recursive destruction.
        NodePtr p = std::move(predecessor_);
        while (p && p.use_count() == 1) {
            NodePtr next = std::move(p->predecessor_);
            p = std::move(next);
        }
    }

    FpnntNode(const FpnntNode&) = delete;
    FpnntNode& operator=(const FpnntNode&) = delete;

    const Entry& point_label() const { return point_label_; }
    const NodePtr& predecessor() const { return predecessor_; }
    std::uint64_t depth() const { return depth_; }
    const FpnntConfig& config() const { return config_; }

    const std::vector<TreePtr>& forest_slots() const {
        static const std::vector<TreePtr> kEmpty;
        return forest_ ? forest_->slots : kEmpty;
    }
    const ForestPtr& forest() const { return forest_; }

    std::size_t lookback_length() const {
        return static_cast<std::size_t>((depth_ - 1) % config_.lookback_capacity) + 1;
    }

private:
    Entry point_label_;
    mutable NodePtr predecessor_;  // mutable only for the destructor unlink
    std::uint64_t depth_;
    ForestPtr forest_;
    FpnntConfig config_;
};

template <class Label, class Scalar = double, int Dim = 2>
using FpnntNodePtr = typename FpnntNode<Label, Scalar, Dim>::NodePtr;

template <class Label, class Scalar, int Dim>
FpnntNodePtr<Label, Scalar, Dim> new_root(typename FpnntNode<Label, Scalar, Dim>::Entry p,
                                          FpnntConfig config) {
    if (config.lookback_capacity < 1)
        throw InvalidSpec("fpnnt: lookback capacity must be at least 1");
    return std::make_shared<const FpnntNode<Label, Scalar, Dim>>(
        std::move(p), nullptr, 1, nullptr, config);
}

// The ((depth-1) mod M) + 1 newest point-labels on the chain, newest first.
template <class Label, class Scalar, int Dim>
std::vector<typename FpnntNode<Label, Scalar, Dim>::Entry> lookback(
    const FpnntNode<Label, Scalar, Dim>& node) {
    std::vector<typename FpnntNode<Label, Scalar, Dim>::Entry> out;
    out.reserve(node.lookback_length());
    const FpnntNode<Label, Scalar, Dim>* n = &node;
    for (std::size_t i = 0; i < node.lookback_length(); ++i) {
        out.push_back(n->point_label());
        n = n->predecessor().get();
    }
    return out;
}

template <class L, class S, int D>
std::shared_ptr<const FpnntNode<L, S, D>> insert_node(
    const std::shared_ptr<const FpnntNode<L, S, D>>& pred,
    typename FpnntNode<L, S, D>::Entry p_succ) {
    using Node = FpnntNode<L, S, D>;
    const FpnntConfig& cfg = pred->config();
    typename Node::ForestPtr forest = pred->forest();
    if (pred->depth() % cfg.lookback_capacity == 0) {
        // Carry: merge the full lookback and the leading occupied slots into
        // one static tree; slots past the first empty one are shared as-is.
        auto pts = lookback(*pred);
        std::vector<typename Node::TreePtr> slots =
            forest ? forest->slots : std::vector<typename Node::TreePtr>{};
        std::size_t k = 0;
        for (; k < slots.size() && slots[k]; ++k) {
            const auto& merged = slots[k]->entries();
            pts.insert(pts.end(), merged.begin(), merged.end());
            slots[k] = nullptr;
        }
        if (k == slots.size()) slots.emplace_back();
        if (cfg.stats) {
            ++cfg.stats->trees_built;
            cfg.stats->points_built += pts.size();
        }
        slots[k] = std::make_shared<const typename Node::Tree>(
            Node::Tree::build(std::move(pts)));
        forest = std::make_shared<const typename Node::Forest>(
            typename Node::Forest{std::move(slots)});
    }
    return std::make_shared<const Node>(std::move(p_succ), pred, pred->depth() + 1,
                                        std::move(forest), cfg);
}

// Exactly the point-labels inserted along the root-to-node chain whose points
// lie within distance r of center: the lookback is scanned brute-force
// (newest first), then each occupied forest slot is range-queried in
// ascending slot order.
template <class Label, class Scalar, int Dim>
void range_query(const FpnntNode<Label, Scalar, Dim>& node,
                 const typename FpnntNode<Label, Scalar, Dim>::Point& center, Scalar r,
                 std::vector<typename FpnntNode<Label, Scalar, Dim>::Entry>& out) {
    if (r < Scalar(0)) throw NegativeRadius("range_query: negative radius");
    const Scalar r_sq = r * r;
    const FpnntNode<Label, Scalar, Dim>* n = &node;
    for (std::size_t i = 0; i < node.lookback_length(); ++i) {
        if ((n->point_label().point - center).squaredNorm() <= r_sq)
            out.push_back(n->point_label());
        n = n->predecessor().get();
    }
    for (const auto& tree : node.forest_slots())
        if (tree) tree->ball_query(center, r, out);
}

template <class Label, class Scalar, int Dim>
std::vector<typename FpnntNode<Label, Scalar, Dim>::Entry> range_query(
    const FpnntNode<Label, Scalar, Dim>& node,
    const typename FpnntNode<Label, Scalar, Dim>::Point& center, Scalar r) {
    std::vector<typename FpnntNode<Label, Scalar, Dim>::Entry> out;
    range_query(node, center, r, out);
    return out;
}

// Deterministic memory accounting over every version reachable from the given
// handles: each distinct node costs kFpnntNodeCost + kPointLabelCost, each
// distinct forest kSlotRefCost per slot, and each distinct kd-tree
// kKdNodeCost per stored point. Shared structures are counted once.
template <class Label, class Scalar, int Dim>
std::uint64_t logical_size(
    std::span<const std::shared_ptr<const FpnntNode<Label, Scalar, Dim>>> versions) {
    std::unordered_set<const void*> seen_nodes, seen_forests, seen_trees;
    std::uint64_t total = 0;
    for (const auto& handle : versions) {
        const FpnntNode<Label, Scalar, Dim>* n = handle.get();
        while (n && seen_nodes.insert(n).second) {
            total += kFpnntNodeCost + kPointLabelCost;
            if (n->forest() && seen_forests.insert(n->forest().get()).second) {
                total += kSlotRefCost * n->forest()->slots.size();
                for (const auto& tree : n->forest()->slots)
                    if (tree && seen_trees.insert(tree.get()).second)
                        total += kKdNodeCost * tree->count();
            }
            n = n->predecessor().get();
        }
    }
    return total;
}

template <class Label, class Scalar, int Dim>
std::uint64_t logical_size(const std::shared_ptr<const FpnntNode<Label, Scalar, Dim>>& node) {
    return logical_size(
        std::span<const std::shared_ptr<const FpnntNode<Label, Scalar, Dim>>>(&node, 1));
}

}  // namespace vamp
