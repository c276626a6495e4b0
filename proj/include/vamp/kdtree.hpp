#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "vamp/errors.hpp"

namespace vamp {

template <class Label, class Scalar = double, int Dim = 2>
struct PointLabel {
    using Point = Eigen::Matrix<Scalar, Dim, 1>;
    Point point = Point::Zero();
    Label label{};
};

// Immutable batch-built kd-tree over point-label pairs with an exact ball
// range query. Nodes live in one contiguous array arranged so that the root
// of any subtree [lo, hi) sits at lo + (hi - lo) / 2 and the split axis
// cycles with tree level; no per-node pointers or split values are stored.
//
// The build is deterministic for a fixed input order: the median is selected
// under the total order (coordinate, original index), so coordinate ties
// break toward the lower input index. Duplicate points are preserved.
//
// Immutable after construction; concurrent queries need no synchronization.
template <class Label, class Scalar = double, int Dim = 2>
class KdTree {
public:
    using Point = Eigen::Matrix<Scalar, Dim, 1>;
    using Entry = PointLabel<Label, Scalar, Dim>;

    KdTree() = default;

    static KdTree build(std::vector<Entry> points) {
        KdTree tree;
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        tree.nodes_.resize(points.size());
        tree.build_span(points, order, 0, points.size(), 0);
        return tree;
    }

    std::size_t count() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    // All stored entries with dist(point, center) <= r, boundary inclusive.
    // Appends to out in a fixed traversal order (node, left, right). Subtrees
    // whose split slab lies strictly beyond r are pruned. When visited is
    // non-null it accumulates the number of nodes examined.
    void ball_query(const Point& center, Scalar r, std::vector<Entry>& out,
                    std::size_t* visited = nullptr) const {
        if (r < Scalar(0)) throw NegativeRadius("ball_query: negative radius");
        if (!nodes_.empty()) query_span(center, r * r, 0, nodes_.size(), 0, out, visited);
    }

    std::vector<Entry> ball_query(const Point& center, Scalar r) const {
        std::vector<Entry> out;
        ball_query(center, r, out);
        return out;
    }

    std::size_t depth() const { return depth_span(0, nodes_.size()); }

    // In build order of the balanced layout; used by the persistent index to
    // collect a tree's contents for re-batching.
    const std::vector<Entry>& entries() const { return nodes_; }

private:
    void build_span(std::vector<Entry>& points, std::vector<std::size_t>& order,
                    std::size_t lo, std::size_t hi, int axis) {
        if (lo >= hi) return;
        const std::size_t mid = lo + (hi - lo) / 2;
        std::nth_element(order.begin() + lo, order.begin() + mid, order.begin() + hi,
                         [&](std::size_t a, std::size_t b) {
                             const Scalar ca = points[a].point[axis];
                             const Scalar cb = points[b].point[axis];
                             if (ca != cb) return ca < cb;
                             return a < b;
                         });
        nodes_[mid] = points[order[mid]];
        const int next = (axis + 1) % Dim;
        build_span(points, order, lo, mid, next);
        build_span(points, order, mid + 1, hi, next);
    }

    void query_span(const Point& center, Scalar r_sq, std::size_t lo, std::size_t hi,
                    int axis, std::vector<Entry>& out, std::size_t* visited) const {
        const std::size_t mid = lo + (hi - lo) / 2;
        const Entry& node = nodes_[mid];
        if (visited) ++*visited;
        if ((node.point - center).squaredNorm() <= r_sq) out.push_back(node);
        const Scalar gap = center[axis] - node.point[axis];
        const int next = (axis + 1) % Dim;
        if (mid > lo && (gap < Scalar(0) || gap * gap <= r_sq))
            query_span(center, r_sq, lo, mid, next, out, visited);
        if (mid + 1 < hi && (gap > Scalar(0) || gap * gap <= r_sq))
            query_span(center, r_sq, mid + 1, hi, next, out, visited);
    }

    std::size_t depth_span(std::size_t lo, std::size_t hi) const {
        if (lo >= hi) return 0;
        const std::size_t mid = lo + (hi - lo) / 2;
        return 1 + std::max(depth_span(lo, mid), depth_span(mid + 1, hi));
    }

    std::vector<Entry> nodes_;
};

}  // namespace vamp
