#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "vamp/errors.hpp"

namespace vamp {

// One workspace cell, addressed by (col, row). Cell (c, r) occupies the unit
// square centered on the real-valued point (c, r).
struct CellCoord {
    int col = 0;
    int row = 0;

    friend bool operator==(const CellCoord&, const CellCoord&) = default;
    friend auto operator<=>(const CellCoord& a, const CellCoord& b) {
        if (auto c = a.row <=> b.row; c != 0) return c;
        return a.col <=> b.col;
    }
};

// Obstacle blocks motion and sight; Glass blocks motion only.
enum class CellState : std::uint8_t { Free, Obstacle, Glass };

class WorkspaceGrid {
public:
    WorkspaceGrid() = default;
    WorkspaceGrid(int width, int height, CellState fill = CellState::Free)
        : width_(width), height_(height),
          states_(static_cast<std::size_t>(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(int col, int row) const {
        return col >= 0 && col < width_ && row >= 0 && row < height_;
    }
    bool in_bounds(CellCoord c) const { return in_bounds(c.col, c.row); }

    CellState at(int col, int row) const {
        return states_[static_cast<std::size_t>(row) * width_ + col];
    }
    CellState at(CellCoord c) const { return at(c.col, c.row); }

    void set(int col, int row, CellState s) {
        states_[static_cast<std::size_t>(row) * width_ + col] = s;
    }
    void set(CellCoord c, CellState s) { set(c.col, c.row, s); }

    friend bool operator==(const WorkspaceGrid&, const WorkspaceGrid&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<CellState> states_;  // row-major
};

// A set of workspace cells, stored sorted and duplicate-free. Value semantics;
// immutable for all practical purposes once built (mutating helpers normalize).
class RegionSet {
public:
    RegionSet() = default;
    explicit RegionSet(std::vector<CellCoord> cells) : cells_(std::move(cells)) {
        normalize();
    }

    static RegionSet from_sorted_unique(std::vector<CellCoord> cells) {
        RegionSet r;
        r.cells_ = std::move(cells);
        return r;
    }

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(CellCoord c) const {
        return std::binary_search(cells_.begin(), cells_.end(), c);
    }

    void insert(CellCoord c) {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it == cells_.end() || *it != c) cells_.insert(it, c);
    }

    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    const std::vector<CellCoord>& cells() const { return cells_; }

    friend bool operator==(const RegionSet&, const RegionSet&) = default;

private:
    void normalize() {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    std::vector<CellCoord> cells_;
};

RegionSet region_union(const RegionSet& a, const RegionSet& b);
RegionSet region_difference(const RegionSet& a, const RegionSet& b);
RegionSet region_intersection(const RegionSet& a, const RegionSet& b);

// Constant-time membership mask over a grid's cells; used where RegionSet
// lookups would sit in an inner loop (the initial visible region, oracles).
class CellMask {
public:
    CellMask() = default;
    CellMask(int width, int height)
        : width_(width), bits_(static_cast<std::size_t>(width) * height, 0) {}
    explicit CellMask(const WorkspaceGrid& g) : CellMask(g.width(), g.height()) {}

    bool test(CellCoord c) const {
        return bits_[static_cast<std::size_t>(c.row) * width_ + c.col] != 0;
    }
    void set(CellCoord c) { bits_[static_cast<std::size_t>(c.row) * width_ + c.col] = 1; }
    void set_all(const RegionSet& r) {
        for (CellCoord c : r) set(c);
    }

private:
    int width_ = 0;
    std::vector<std::uint8_t> bits_;
};

}  // namespace vamp
