#pragma once

#include <string>

#include "vamp/geometry.hpp"
#include "vamp/grid.hpp"

namespace vamp {

enum class DomainKind { OneHallway, HorseshoeHallway, GlassHallway };

const char* domain_kind_name(DomainKind kind);   // "one-hallway" etc.
DomainKind domain_kind_from_name(const std::string& name);

// size is the vertical hallway length for the hallway kinds and the room side
// for GlassHallway. Generators are pure functions of the spec; seed is
// reserved for future randomized variants.
struct DomainSpec {
    DomainKind kind = DomainKind::OneHallway;
    int size = 1000;
    int hallway_width = 11;
    std::uint64_t seed = 0;
};

struct ProblemInstance {
    WorkspaceGrid grid;
    Configuration q0;
    RegionSet goal_cells;  // reaching any of these with the footprint wins
    RegionSet v0;          // initial visible region

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

// Deterministic domain construction. The grid boundary is sealed with
// obstacles, q0's footprint is free, every goal cell is free, and
// v0 = footprint(q0) | visible_cells(q0). Throws InvalidSpec when
// size < 4 * hallway_width.
ProblemInstance generate(const DomainSpec& spec, const RobotSpec& robot = RobotSpec());

// "vamp-grid v1" text format: a header line
//   vamp-grid v1 <width> <height> <q0.x> <q0.y> <q0.orient>
// followed by one row per line, one char per cell: '.' free, '#' obstacle,
// 'g' glass, 'S' the q0 reference cell, 'E' a goal cell.
std::string save_ascii(const ProblemInstance& instance);

// Inverse of save_ascii; v0 is reconstructed from the robot spec. Throws
// ParseError with the offending line/column.
ProblemInstance load_ascii(const std::string& text, const RobotSpec& robot = RobotSpec());

}  // namespace vamp
