#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>

#include "vamp/grid.hpp"

namespace vamp {

using Vec2 = Eigen::Vector2d;
using Vec2i = Eigen::Vector2i;

// Compass orientations, encoded 0..3 so that +1 steps clockwise on screen
// coordinates (row 0 is the top of the map, N faces decreasing rows).
enum class Orientation : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline Orientation rotate_cw(Orientation o) {
    return static_cast<Orientation>((static_cast<int>(o) + 1) % 4);
}
inline Orientation rotate_ccw(Orientation o) {
    return static_cast<Orientation>((static_cast<int>(o) + 3) % 4);
}

// Unit facing vector in (col, row) coordinates.
inline Vec2i facing_of(Orientation o) {
    switch (o) {
        case Orientation::N: return {0, -1};
        case Orientation::E: return {1, 0};
        case Orientation::S: return {0, 1};
        default: return {-1, 0};
    }
}

inline char orientation_char(Orientation o) {
    return "NESW"[static_cast<int>(o)];
}

// A lattice pose: (x, y) is the minimum-corner cell of the robot footprint,
// orient the facing direction.
struct Configuration {
    int x = 0;
    int y = 0;
    Orientation orient = Orientation::N;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct Ball {
    Vec2 center = Vec2::Zero();
    double radius = 0.0;

    bool contains(const Vec2& p) const {
        return (p - center).squaredNorm() <= radius * radius;
    }
};

// Robot shape and sensor parameters. The footprint is an axis-aligned
// footprint_side x footprint_side block, orientation-independent. The sensor
// sits on the footprint's center cell (upper-median cell for even sides) and
// covers a cone of half-angle view_halfangle_deg out to view_range cells.
//
// r_vis is the radius of the smallest ball, centered on view_ball(q).center,
// that contains the visible region of any configuration; it is computed by
// enumeration over the four orientations on an empty grid.
class RobotSpec {
public:
    explicit RobotSpec(int footprint_side = 2, int view_range = -1,
                       double view_halfangle_deg = 45.0);

    int footprint_side() const { return footprint_side_; }
    int view_range() const { return view_range_; }
    double view_halfangle_deg() const { return view_halfangle_deg_; }
    double r_vis() const { return r_vis_; }

    CellCoord sensor_cell(const Configuration& q) const {
        return {q.x + footprint_side_ / 2, q.y + footprint_side_ / 2};
    }

    // True when the integer offset v from the sensor cell lies inside the
    // (unobstructed) viewcone. Exact integer arithmetic for the default
    // 45-degree half-angle so that boundary cells are orientation-symmetric.
    bool in_cone(const Vec2i& v, Orientation o) const;

private:
    int footprint_side_;
    int view_range_;
    double view_halfangle_deg_;
    double cos2_halfangle_;  // cos^2 of the half-angle; exactly 0.5 at 45 deg
    double r_vis_;
};

// The six primitive motions in fixed order: x+, x-, y+, y-, theta+, theta-.
std::array<Configuration, 6> successors(const Configuration& q);

// True when q_b == q_a or q_b is one of successors(q_a).
bool is_primitive(const Configuration& q_a, const Configuration& q_b);

// The footprint_side^2 block of cells with minimum corner (q.x, q.y).
RegionSet footprint(const Configuration& q, const RobotSpec& spec);

// Cells the robot passes over moving q_a -> q_b: the union of both footprints
// for a translation, just footprint(q_a) for a rotation or identity.
// Throws NotAPrimitive otherwise.
RegionSet swept_cells(const Configuration& q_a, const Configuration& q_b,
                      const RobotSpec& spec);

// Cells visible from q: inside the viewcone and with a supercover
// line-of-sight from the sensor cell that meets no Obstacle strictly before
// the target. Glass never blocks sight; an Obstacle cell is itself visible
// when the line reaches it first. Throws OutOfBounds if the footprint leaves
// the grid.
RegionSet visible_cells(const WorkspaceGrid& grid, const Configuration& q,
                        const RobotSpec& spec);

// Bounding ball of the visible region: centered half a view range ahead of
// the sensor, radius r_vis. Contains visible_cells(q) for any occlusion
// pattern since occlusion only shrinks the cone.
Ball view_ball(const Configuration& q, const RobotSpec& spec);

// Smallest ball around swept_cells(q_a, q_b), measured to cell corners;
// centered on the midpoint of the two footprint centers.
Ball swept_ball(const Configuration& q_a, const Configuration& q_b,
                const RobotSpec& spec);

}  // namespace vamp
