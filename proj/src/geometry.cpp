#include "vamp/geometry.hpp"

#include <cmath>
#include <cstdlib>

namespace vamp {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Visits every cell the segment from a to b passes through, in order of
// travel. At an exact corner crossing both side cells are visited, so any
// wall touched by the segment is seen (conservative supercover).
template <class Visit>
void supercover_line(Vec2i a, Vec2i b, Visit&& visit) {
    int x = a.x(), y = a.y();
    int dx = b.x() - a.x(), dy = b.y() - a.y();
    const int xstep = dx > 0 ? 1 : -1;
    const int ystep = dy > 0 ? 1 : -1;
    dx = std::abs(dx);
    dy = std::abs(dy);
    if (!visit(x, y)) return;
    const int ddx = 2 * dx, ddy = 2 * dy;
    if (ddx >= ddy) {
        int error = dx, errorprev = dx;
        for (int i = 0; i < dx; ++i) {
            x += xstep;
            error += ddy;
            if (error > ddx) {
                y += ystep;
                error -= ddx;
                if (error + errorprev < ddx) {
                    if (!visit(x, y - ystep)) return;
                } else if (error + errorprev > ddx) {
                    if (!visit(x - xstep, y)) return;
                } else {  // crossed exactly through a corner
                    if (!visit(x, y - ystep)) return;
                    if (!visit(x - xstep, y)) return;
                }
            }
            if (!visit(x, y)) return;
            errorprev = error;
        }
    } else {
        int error = dy, errorprev = dy;
        for (int i = 0; i < dy; ++i) {
            y += ystep;
            error += ddx;
            if (error > ddy) {
                x += xstep;
                error -= ddy;
                if (error + errorprev < ddy) {
                    if (!visit(x - xstep, y)) return;
                } else if (error + errorprev > ddy) {
                    if (!visit(x, y - ystep)) return;
                } else {
                    if (!visit(x - xstep, y)) return;
                    if (!visit(x, y - ystep)) return;
                }
            }
            if (!visit(x, y)) return;
            errorprev = error;
        }
    }
}

// True when no Obstacle lies strictly before the target on the sight line.
bool line_of_sight(const WorkspaceGrid& grid, Vec2i from, Vec2i to) {
    bool clear = true;
    bool first = true;
    supercover_line(from, to, [&](int cx, int cy) {
        if (cx == to.x() && cy == to.y()) return false;  // reached target
        if (!first && grid.at(cx, cy) == CellState::Obstacle) {
            clear = false;
            return false;
        }
        first = false;
        return true;
    });
    return clear;
}

Vec2 footprint_center(const Configuration& q, int footprint_side) {
    const double half = (footprint_side - 1) / 2.0;
    return {q.x + half, q.y + half};
}

}  // namespace

RobotSpec::RobotSpec(int footprint_side, int view_range, double view_halfangle_deg)
    : footprint_side_(footprint_side),
      view_range_(view_range >= 0
                      ? view_range
                      : static_cast<int>(std::ceil(1.5 * footprint_side))),
      view_halfangle_deg_(view_halfangle_deg),
      cos2_halfangle_(view_halfangle_deg == 45.0
                          ? 0.5
                          : [&] {
                                double c = std::cos(view_halfangle_deg * kPi / 180.0);
                                return c * c;
                            }()),
      r_vis_(0.0) {
    // Enumerate the occlusion-free cone once per orientation; occlusion only
    // ever removes cells, so this bounds V(q) for every q.
    const int side = 2 * (view_range_ + footprint_side_) + 3;
    WorkspaceGrid empty(side, side, CellState::Free);
    Configuration q{side / 2 - footprint_side_ / 2, side / 2 - footprint_side_ / 2,
                    Orientation::N};
    double max_sq = 0.0;
    for (int o = 0; o < 4; ++o) {
        q.orient = static_cast<Orientation>(o);
        const CellCoord sensor = sensor_cell(q);
        const Vec2 center = Vec2(sensor.col, sensor.row) +
                            (view_range_ / 2.0) * facing_of(q.orient).cast<double>();
        for (CellCoord c : visible_cells(empty, q, *this)) {
            max_sq = std::max(max_sq, (Vec2(c.col, c.row) - center).squaredNorm());
        }
    }
    r_vis_ = std::sqrt(max_sq);
}

bool RobotSpec::in_cone(const Vec2i& v, Orientation o) const {
    const std::int64_t norm_sq = static_cast<std::int64_t>(v.x()) * v.x() +
                                 static_cast<std::int64_t>(v.y()) * v.y();
    if (norm_sq == 0) return true;  // the sensor cell itself
    if (norm_sq > static_cast<std::int64_t>(view_range_) * view_range_ + view_range_)
        return false;  // |v| > view_range + 0.5
    const Vec2i f = facing_of(o);
    const std::int64_t dot = static_cast<std::int64_t>(v.x()) * f.x() +
                             static_cast<std::int64_t>(v.y()) * f.y();
    if (dot < 0) return false;
    if (view_halfangle_deg_ == 45.0) return 2 * dot * dot >= norm_sq;
    return static_cast<double>(dot) * dot >= cos2_halfangle_ * norm_sq;
}

std::array<Configuration, 6> successors(const Configuration& q) {
    return {Configuration{q.x + 1, q.y, q.orient}, Configuration{q.x - 1, q.y, q.orient},
            Configuration{q.x, q.y + 1, q.orient}, Configuration{q.x, q.y - 1, q.orient},
            Configuration{q.x, q.y, rotate_cw(q.orient)},
            Configuration{q.x, q.y, rotate_ccw(q.orient)}};
}

bool is_primitive(const Configuration& q_a, const Configuration& q_b) {
    if (q_a == q_b) return true;
    for (const Configuration& s : successors(q_a))
        if (s == q_b) return true;
    return false;
}

RegionSet footprint(const Configuration& q, const RobotSpec& spec) {
    std::vector<CellCoord> cells;
    cells.reserve(static_cast<std::size_t>(spec.footprint_side()) * spec.footprint_side());
    for (int r = 0; r < spec.footprint_side(); ++r)
        for (int c = 0; c < spec.footprint_side(); ++c)
            cells.push_back({q.x + c, q.y + r});
    return RegionSet::from_sorted_unique(std::move(cells));
}

RegionSet swept_cells(const Configuration& q_a, const Configuration& q_b,
                      const RobotSpec& spec) {
    if (!is_primitive(q_a, q_b))
        throw NotAPrimitive("swept_cells: configurations are not primitive-adjacent");
    if (q_a.x == q_b.x && q_a.y == q_b.y) return footprint(q_a, spec);
    return region_union(footprint(q_a, spec), footprint(q_b, spec));
}

RegionSet visible_cells(const WorkspaceGrid& grid, const Configuration& q,
                        const RobotSpec& spec) {
    const int fs = spec.footprint_side();
    if (q.x < 0 || q.y < 0 || q.x + fs > grid.width() || q.y + fs > grid.height())
        throw OutOfBounds("visible_cells: footprint outside the grid");

    const CellCoord sensor = spec.sensor_cell(q);
    const Vec2i origin(sensor.col, sensor.row);
    const int range = spec.view_range();
    std::vector<CellCoord> cells;
    for (int dy = -range; dy <= range; ++dy) {
        const int row = sensor.row + dy;
        if (row < 0 || row >= grid.height()) continue;
        for (int dx = -range; dx <= range; ++dx) {
            const int col = sensor.col + dx;
            if (col < 0 || col >= grid.width()) continue;
            if (!spec.in_cone({dx, dy}, q.orient)) continue;
            if (!line_of_sight(grid, origin, {col, row})) continue;
            cells.push_back({col, row});
        }
    }
    return RegionSet::from_sorted_unique(std::move(cells));
}

Ball view_ball(const Configuration& q, const RobotSpec& spec) {
    const CellCoord sensor = spec.sensor_cell(q);
    const Vec2 center = Vec2(sensor.col, sensor.row) +
                        (spec.view_range() / 2.0) * facing_of(q.orient).cast<double>();
    return {center, spec.r_vis()};
}

Ball swept_ball(const Configuration& q_a, const Configuration& q_b,
                const RobotSpec& spec) {
    const RegionSet swept = swept_cells(q_a, q_b, spec);  // validates the primitive
    const Vec2 center = 0.5 * (footprint_center(q_a, spec.footprint_side()) +
                               footprint_center(q_b, spec.footprint_side()));
    double max_sq = 0.0;
    for (CellCoord c : swept) {
        const double dx = std::abs(c.col - center.x()) + 0.5;
        const double dy = std::abs(c.row - center.y()) + 0.5;
        max_sq = std::max(max_sq, dx * dx + dy * dy);
    }
    return {center, std::sqrt(max_sq)};
}

}  // namespace vamp
