#include "vamp/domains.hpp"

#include <algorithm>
#include <sstream>

namespace vamp {
namespace {

void carve(WorkspaceGrid& grid, int col0, int col1, int row0, int row1, CellState s) {
    for (int r = row0; r <= row1; ++r)
        for (int c = col0; c <= col1; ++c) grid.set(c, r, s);
}

RegionSet row_strip(int col0, int col1, int row) {
    std::vector<CellCoord> cells;
    for (int c = col0; c <= col1; ++c) cells.push_back({c, row});
    return RegionSet::from_sorted_unique(std::move(cells));
}

ProblemInstance finish(WorkspaceGrid grid, Configuration q0, RegionSet goal,
                       const RobotSpec& robot) {
    ProblemInstance inst;
    inst.grid = std::move(grid);
    inst.q0 = q0;
    inst.goal_cells = std::move(goal);
    inst.v0 = region_union(footprint(q0, robot), visible_cells(inst.grid, q0, robot));
    return inst;
}

// One vertical hallway; start at the bottom facing the goal strip at the top.
ProblemInstance make_one_hallway(const DomainSpec& spec, const RobotSpec& robot) {
    const int w = spec.hallway_width;
    const int fs = robot.footprint_side();
    WorkspaceGrid grid(w + 2, spec.size + 2, CellState::Obstacle);
    carve(grid, 1, w, 1, spec.size, CellState::Free);
    const Configuration q0{1 + (w - fs) / 2, spec.size + 1 - fs, Orientation::N};
    return finish(std::move(grid), q0, row_strip(1, w, 1), robot);
}

// Two vertical legs joined by a horizontal segment at the top. The start sits
// at the top of the left leg, the goal strip at its bottom.
ProblemInstance make_horseshoe(const DomainSpec& spec, const RobotSpec& robot) {
    const int w = spec.hallway_width;
    const int fs = robot.footprint_side();
    const int sep = w;  // obstacle block between the legs
    const int width = 2 * w + sep + 2;
    const int height = w + spec.size + 2;
    WorkspaceGrid grid(width, height, CellState::Obstacle);
    carve(grid, 1, width - 2, 1, w, CellState::Free);                    // top segment
    carve(grid, 1, w, w + 1, w + spec.size, CellState::Free);            // left leg
    carve(grid, w + sep + 1, 2 * w + sep, w + 1, w + spec.size, CellState::Free);
    const Configuration q0{1 + (w - fs) / 2, w + 1, Orientation::N};
    return finish(std::move(grid), q0, row_strip(1, w, w + spec.size), robot);
}

// A square room crossed by vertical glass-walled corridors, one per 100 cells
// of side length. Each corridor keeps its glass wall on the side facing the
// start corner and opens onto a free band along the bottom of the room; the
// goal sits at the closed top end of the farthest corridor.
ProblemInstance make_glass_hallway(const DomainSpec& spec, const RobotSpec& robot) {
    const int w = spec.hallway_width;
    const int size = spec.size;
    WorkspaceGrid grid(size + 2, size + 2, CellState::Obstacle);
    carve(grid, 1, size, 1, size, CellState::Free);
    const int corridors = std::max(1, size / 100);
    const int wall_bottom = size - w;  // rows below stay open
    int goal_col0 = 0;
    for (int i = 1; i <= corridors; ++i) {
        const int glass_col = i * size / (corridors + 1);
        carve(grid, glass_col, glass_col, 1, wall_bottom, CellState::Glass);
        carve(grid, glass_col + w + 1, glass_col + w + 1, 1, wall_bottom,
              CellState::Obstacle);
        goal_col0 = glass_col + 1;
    }
    const Configuration q0{1, 1, Orientation::S};
    return finish(std::move(grid), q0, row_strip(goal_col0, goal_col0 + w - 1, 1), robot);
}

}  // namespace

const char* domain_kind_name(DomainKind kind) {
    switch (kind) {
        case DomainKind::OneHallway: return "one-hallway";
        case DomainKind::HorseshoeHallway: return "horseshoe-hallway";
        default: return "glass-hallway";
    }
}

DomainKind domain_kind_from_name(const std::string& name) {
    if (name == "one-hallway") return DomainKind::OneHallway;
    if (name == "horseshoe-hallway") return DomainKind::HorseshoeHallway;
    if (name == "glass-hallway") return DomainKind::GlassHallway;
    throw InvalidSpec("unknown domain kind: " + name);
}

ProblemInstance generate(const DomainSpec& spec, const RobotSpec& robot) {
    if (spec.size < 4 * spec.hallway_width)
        throw InvalidSpec("domain size must be at least 4x the hallway width");
    switch (spec.kind) {
        case DomainKind::OneHallway: return make_one_hallway(spec, robot);
        case DomainKind::HorseshoeHallway: return make_horseshoe(spec, robot);
        default: return make_glass_hallway(spec, robot);
    }
}

std::string save_ascii(const ProblemInstance& instance) {
    const WorkspaceGrid& grid = instance.grid;
    std::string out = "vamp-grid v1 " + std::to_string(grid.width()) + " " +
                      std::to_string(grid.height()) + " " +
                      std::to_string(instance.q0.x) + " " +
                      std::to_string(instance.q0.y) + " ";
    out += orientation_char(instance.q0.orient);
    out += '\n';
    for (int r = 0; r < grid.height(); ++r) {
        for (int c = 0; c < grid.width(); ++c) {
            char ch;
            if (c == instance.q0.x && r == instance.q0.y) {
                ch = 'S';
            } else if (instance.goal_cells.contains({c, r})) {
                ch = 'E';
            } else {
                switch (grid.at(c, r)) {
                    case CellState::Free: ch = '.'; break;
                    case CellState::Obstacle: ch = '#'; break;
                    default: ch = 'g'; break;
                }
            }
            out += ch;
        }
        out += '\n';
    }
    return out;
}

ProblemInstance load_ascii(const std::string& text, const RobotSpec& robot) {
    if (text.empty()) throw ParseError("empty input", 1, 1);

    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    if (lines.empty()) throw ParseError("empty input", 1, 1);

    std::istringstream header(lines[0]);
    std::string magic, version;
    int width = 0, height = 0, x = 0, y = 0;
    std::string orient_tok;
    if (!(header >> magic >> version >> width >> height >> x >> y >> orient_tok) ||
        magic != "vamp-grid" || version != "v1")
        throw ParseError("malformed header, expected 'vamp-grid v1 <w> <h> <x> <y> <o>'",
                         1, 1);
    if (width <= 0 || height <= 0) throw ParseError("non-positive grid dimensions", 1, 1);
    if (orient_tok.size() != 1) throw ParseError("bad orientation", 1, 1);
    Orientation orient;
    switch (orient_tok[0]) {
        case 'N': orient = Orientation::N; break;
        case 'E': orient = Orientation::E; break;
        case 'S': orient = Orientation::S; break;
        case 'W': orient = Orientation::W; break;
        default: throw ParseError("bad orientation", 1, 1);
    }

    if (static_cast<int>(lines.size()) != height + 1)
        throw ParseError("expected " + std::to_string(height) + " rows",
                         static_cast<int>(lines.size()) + 1, 1);

    ProblemInstance inst;
    inst.grid = WorkspaceGrid(width, height, CellState::Free);
    inst.q0 = {x, y, orient};
    std::vector<CellCoord> goals;
    bool saw_start = false;
    for (int r = 0; r < height; ++r) {
        const std::string& row = lines[r + 1];
        const int line_no = r + 2;
        if (static_cast<int>(row.size()) != width)
            throw ParseError("row has " + std::to_string(row.size()) +
                                 " cells, expected " + std::to_string(width),
                             line_no, static_cast<int>(row.size()) + 1);
        for (int c = 0; c < width; ++c) {
            switch (row[c]) {
                case '.': break;
                case '#': inst.grid.set(c, r, CellState::Obstacle); break;
                case 'g': inst.grid.set(c, r, CellState::Glass); break;
                case 'E': goals.push_back({c, r}); break;
                case 'S':
                    if (saw_start) throw ParseError("duplicate start cell", line_no, c + 1);
                    if (c != x || r != y)
                        throw ParseError("start cell disagrees with header", line_no, c + 1);
                    saw_start = true;
                    break;
                default: throw ParseError("unknown cell character", line_no, c + 1);
            }
        }
    }
    if (!saw_start) throw ParseError("missing start cell", 2, 1);
    if (goals.empty()) throw ParseError("no goal cells", 2, 1);
    inst.goal_cells = RegionSet(std::move(goals));

    const int fs = robot.footprint_side();
    if (x < 0 || y < 0 || x + fs > width || y + fs > height)
        throw ParseError("start footprint outside the grid", 1, 1);
    for (CellCoord c : footprint(inst.q0, robot))
        if (inst.grid.at(c) != CellState::Free)
            throw ParseError("start footprint not free", c.row + 2, c.col + 1);
    for (CellCoord c : inst.goal_cells)
        if (inst.grid.at(c) != CellState::Free)
            throw ParseError("goal cell not free", c.row + 2, c.col + 1);

    inst.v0 = region_union(footprint(inst.q0, robot),
                           visible_cells(inst.grid, inst.q0, robot));
    return inst;
}

}  // namespace vamp
