#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "vamp/domains.hpp"
#include "vamp/grid.hpp"

using namespace vamp;

TEST_CASE("region difference with itself is empty") {
    RegionSet a({{1, 2}, {3, 4}, {5, 6}});
    CHECK(region_difference(a, a).empty());
}

TEST_CASE("region union with the empty set is the identity") {
    RegionSet a({{0, 0}, {7, 7}, {2, 9}});
    CHECK(region_union(a, RegionSet()).size() == a.size());
    CHECK(region_union(RegionSet(), a) == a);
}

TEST_CASE("region set drops duplicates") {
    RegionSet a({{1, 1}, {1, 1}, {2, 2}});
    CHECK(a.size() == 2);
}

TEST_CASE("region ops match a reference set implementation") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coord(0, 60);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<CellCoord> raw_a, raw_b;
        std::set<std::pair<int, int>> ref_a, ref_b;
        for (int i = 0; i < 1000; ++i) {
            CellCoord ca{coord(rng), coord(rng)}, cb{coord(rng), coord(rng)};
            raw_a.push_back(ca);
            raw_b.push_back(cb);
            ref_a.insert({ca.col, ca.row});
            ref_b.insert({cb.col, cb.row});
        }
        RegionSet a(raw_a), b(raw_b);
        REQUIRE(a.size() == ref_a.size());

        std::set<std::pair<int, int>> ref_u = ref_a, ref_d, ref_i;
        ref_u.insert(ref_b.begin(), ref_b.end());
        for (auto& c : ref_a) {
            if (ref_b.count(c)) ref_i.insert(c);
            else ref_d.insert(c);
        }
        const auto check_equal = [](const RegionSet& got,
                                    const std::set<std::pair<int, int>>& want) {
            REQUIRE(got.size() == want.size());
            for (CellCoord c : got) REQUIRE(want.count({c.col, c.row}) == 1);
        };
        check_equal(region_union(a, b), ref_u);
        check_equal(region_difference(a, b), ref_d);
        check_equal(region_intersection(a, b), ref_i);
    }
}

TEST_CASE("cell mask agrees with region membership") {
    WorkspaceGrid grid(20, 20);
    RegionSet r({{3, 4}, {19, 0}, {0, 19}});
    CellMask mask(grid);
    mask.set_all(r);
    for (int y = 0; y < 20; ++y)
        for (int x = 0; x < 20; ++x)
            CHECK(mask.test({x, y}) == r.contains({x, y}));
}

namespace {

bool boundary_sealed(const WorkspaceGrid& g) {
    for (int x = 0; x < g.width(); ++x)
        if (g.at(x, 0) != CellState::Obstacle ||
            g.at(x, g.height() - 1) != CellState::Obstacle)
            return false;
    for (int y = 0; y < g.height(); ++y)
        if (g.at(0, y) != CellState::Obstacle ||
            g.at(g.width() - 1, y) != CellState::Obstacle)
            return false;
    return true;
}

}  // namespace

TEST_CASE("one hallway generator") {
    DomainSpec spec;
    spec.kind = DomainKind::OneHallway;
    spec.size = 1000;
    const ProblemInstance inst = generate(spec);
    CHECK(inst.grid.height() >= 1000);
    CHECK(boundary_sealed(inst.grid));
    CHECK(test_helpers::collision_free_path_exists(inst, RobotSpec()));
    for (CellCoord c : inst.goal_cells) CHECK(inst.grid.at(c) == CellState::Free);
    for (CellCoord c : footprint(inst.q0, RobotSpec())) {
        CHECK(inst.grid.at(c) == CellState::Free);
        CHECK(inst.v0.contains(c));
    }
}

TEST_CASE("glass hallway corridor count scales with size") {
    const auto glass_columns = [](const WorkspaceGrid& g) {
        std::set<int> cols;
        for (int y = 0; y < g.height(); ++y)
            for (int x = 0; x < g.width(); ++x)
                if (g.at(x, y) == CellState::Glass) cols.insert(x);
        return cols.size();
    };
    DomainSpec spec;
    spec.kind = DomainKind::GlassHallway;
    spec.size = 100;
    CHECK(glass_columns(generate(spec).grid) == 1);
    spec.size = 300;
    CHECK(glass_columns(generate(spec).grid) == 3);
}

TEST_CASE("all generators produce solvable sealed instances") {
    const RobotSpec robot;
    for (DomainKind kind : {DomainKind::OneHallway, DomainKind::HorseshoeHallway,
                            DomainKind::GlassHallway}) {
        DomainSpec spec;
        spec.kind = kind;
        spec.size = 120;
        const ProblemInstance inst = generate(spec);
        CAPTURE(domain_kind_name(kind));
        CHECK(boundary_sealed(inst.grid));
        CHECK(test_helpers::collision_free_path_exists(inst, robot));
    }
}

TEST_CASE("generator rejects undersized domains") {
    DomainSpec spec;
    spec.size = 43;  // below 4 * hallway_width
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
}

TEST_CASE("smallest one hallway matches the golden map") {
    DomainSpec spec;
    spec.kind = DomainKind::OneHallway;
    spec.size = 44;
    const std::string text = save_ascii(generate(spec));
    CHECK(text == test_helpers::read_file(test_helpers::data_path("one_hallway_44.map")));
}

TEST_CASE("glass hallway dump is byte-identical across runs and to the golden") {
    DomainSpec spec;
    spec.kind = DomainKind::GlassHallway;
    spec.size = 100;
    const std::string a = save_ascii(generate(spec));
    const std::string b = save_ascii(generate(spec));
    CHECK(a == b);
    CHECK(a == test_helpers::read_file(test_helpers::data_path("glass_hallway_100.map")));
}

TEST_CASE("ascii round trip is the identity") {
    for (DomainKind kind : {DomainKind::OneHallway, DomainKind::HorseshoeHallway,
                            DomainKind::GlassHallway}) {
        DomainSpec spec;
        spec.kind = kind;
        spec.size = 44;
        const ProblemInstance inst = generate(spec);
        const ProblemInstance back = load_ascii(save_ascii(inst));
        CHECK(back == inst);
    }
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(load_ascii(""), ParseError);

    try {
        load_ascii("not-a-map v1 3 3 0 0 N\n...\n...\n...\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }

    // bad cell character on the second body row
    const std::string bad_char =
        "vamp-grid v1 4 4 1 1 N\n####\n#S?#\n#EE#\n####\n";
    try {
        load_ascii(bad_char);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 3);
    }

    // wrong row length
    CHECK_THROWS_AS(load_ascii("vamp-grid v1 4 2 1 0 N\n####\n###\n"), ParseError);
    // missing rows
    CHECK_THROWS_AS(load_ascii("vamp-grid v1 4 4 1 1 N\n####\n#S.#\n"), ParseError);
    // start cell contradicting the header
    CHECK_THROWS_AS(load_ascii("vamp-grid v1 4 4 1 1 N\n####\n#.S#\n#EE#\n####\n"),
                    ParseError);
}

TEST_CASE("loaded instances validate the start footprint") {
    // the 2x2 start footprint overlaps an obstacle
    const std::string blocked =
        "vamp-grid v1 5 5 1 1 N\n#####\n#S..#\n##E.#\n#...#\n#####\n";
    CHECK_THROWS_AS(load_ascii(blocked), ParseError);
}
