#include <doctest.h>

#include "builders.hpp"
#include "rainbow/witness.hpp"

using namespace rainbow;

TEST_CASE("degree and min_degree basics") {
    CHECK(degree(builders::empty(3), vx(1)) == 0);
    CHECK(degree(builders::empty(3), vy(2)) == 0);
    CHECK(degree(builders::complete(3), vx(0)) == 3);
    CHECK(degree(builders::complete(3), vy(2)) == 3);

    // F's apex x* is joined to all of Y1 u Y2, so its degree is n-1
    auto f3 = extremal::make_F(extremal::FFrame::canonical(3));
    CHECK(degree(f3, vx(0)) == 2);
    CHECK(min_degree(f3) == 2);

    CHECK(min_degree(builders::matching(2)) == 1);
    CHECK(min_degree(builders::complete(4)) == 4);
    CHECK_THROWS_AS(degree(builders::empty(3), vx(3)), std::invalid_argument);
}

TEST_CASE("collection_min_degree") {
    CHECK(collection_min_degree(builders::copies(builders::matching(2), 3)) == 1);
    CHECK(collection_min_degree(builders::copies(builders::complete(3), 5)) == 3);

    std::vector<BipartiteGraph> mixed{builders::complete(3), builders::empty(3), builders::complete(3)};
    CHECK(collection_min_degree(GraphCollection(std::move(mixed))) == 0);
}

TEST_CASE("degree sums match the edge count on both sides") {
    // property over a few structured graphs
    for (const auto &g : {builders::complete(5), builders::matching(5),
                          extremal::make_F(extremal::FFrame::canonical(5)),
                          extremal::make_double_complete(4, {0, 2}, {1, 3})}) {
        long long from_x = 0, from_y = 0;
        for (int i = 0; i < g.n(); ++i) {
            from_x += g.degree(vx(i));
            from_y += g.degree(vy(i));
        }
        CHECK(from_x == g.edge_count());
        CHECK(from_y == g.edge_count());
    }
}

TEST_CASE("validate_witness accepts a hand-built transversal path") {
    auto c = builders::copies(builders::complete(2), 3);
    auto w = make_path_witness({vx(0), vy(0), vx(1)}, {0, 2});
    CHECK(validate_witness(c, w).ok());
}

TEST_CASE("validate_witness rejects repeated colors") {
    auto c = builders::copies(builders::complete(2), 3);
    auto w = make_path_witness({vx(0), vy(0), vx(1)}, {0, 0});
    auto report = validate_witness(c, w);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::DuplicateColor);
    CHECK(report.violations[0].position == 1);
}

TEST_CASE("validate_witness rejects edges missing from the assigned graph") {
    std::vector<BipartiteGraph> gs{builders::matching(2), builders::matching(2), builders::complete(2)};
    GraphCollection c(std::move(gs));
    // x0-y1 exists only in graph 2
    auto w = make_path_witness({vx(0), vy(1)}, {0});
    auto report = validate_witness(c, w);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].kind == ViolationKind::MissingEdge);
    CHECK(report.violations[0].position == 0);
}

TEST_CASE("validate_witness reports every violation, not just the first") {
    auto c = builders::copies(builders::matching(2), 3);
    TransversalWitness w;
    w.kind = WitnessKind::Path;
    w.vertices = {vx(0), vx(1), vy(0), vy(0)};
    w.assignment = {0, 0, 7};
    auto report = validate_witness(c, w);
    REQUIRE_FALSE(report.ok());
    bool alternation = false, dup_vertex = false, dup_color = false, out_of_range = false;
    for (const auto &v : report.violations) {
        alternation |= v.kind == ViolationKind::AlternationBroken;
        dup_vertex |= v.kind == ViolationKind::DuplicateVertex;
        dup_color |= v.kind == ViolationKind::DuplicateColor;
        out_of_range |= v.kind == ViolationKind::ColorOutOfRange;
    }
    CHECK(alternation);
    CHECK(dup_vertex);
    CHECK(dup_color);
    CHECK(out_of_range);
}

TEST_CASE("cycle witnesses require even order at least 4") {
    auto c = builders::copies(builders::complete(3), 6);
    auto ok = make_cycle_witness({vx(0), vy(0), vx(1), vy(1)}, {0, 1, 2, 3});
    CHECK(validate_witness(c, ok).ok());

    auto short_cycle = make_cycle_witness({vx(0), vy(0)}, {0, 1});
    CHECK_FALSE(validate_witness(c, short_cycle).ok());

    // closing edge must alternate as well
    TransversalWitness bad;
    bad.kind = WitnessKind::Cycle;
    bad.vertices = {vx(0), vy(0), vx(1), vy(1), vx(2)};
    bad.assignment = {0, 1, 2, 3, 4};
    CHECK_FALSE(validate_witness(c, bad).ok());
}

TEST_CASE("witness reversal preserves validity") {
    auto c = builders::copies(builders::complete(3), 6);
    auto path = make_path_witness({vx(0), vy(1), vx(2), vy(0)}, {3, 1, 4});
    CHECK(validate_witness(c, path.reversed()).ok());
    auto cyc = make_cycle_witness({vx(0), vy(0), vx(1), vy(1)}, {0, 1, 2, 3});
    CHECK(validate_witness(c, cyc.reversed()).ok());
}
