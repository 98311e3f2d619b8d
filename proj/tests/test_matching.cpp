#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <vector>

#include "helpers.hpp"
#include "nsg/fixtures.hpp"
#include "nsg/matching.hpp"

using namespace nsg;

namespace {

NormalCoordinates reorder_quads(const NormalCoordinates& c, const std::array<int, 3>& to_ours) {
    NormalCoordinates r = c;
    for (int t = 0; t < c.tets; ++t)
        for (int j = 0; j < 3; ++j)
            r.quad(t, to_ours[static_cast<std::size_t>(j)]) = c.quad(t, j);
    return r;
}

const std::array<std::array<int, 3>, 6> kColumnOrders = {{
    {0, 1, 2},
    {0, 2, 1},
    {1, 0, 2},
    {1, 2, 0},
    {2, 0, 1},
    {2, 1, 0},
}};

}  // namespace

TEST_CASE("standard matching rows are balanced") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Triangulation tri = fixture_triangulation(name);
        LinearSystem sys = standard_matching_system(tri);
        CHECK(sys.dim == 7 * tri.size());
        REQUIRE(sys.rows.size() == sys.labels.size());
        for (std::size_t i = 0; i < sys.rows.size(); ++i) {
            const auto& row = sys.rows[i];
            Int sum = 0;
            int positive = 0, negative = 0;
            for (const Int& x : row) {
                sum += x;
                CHECK((x == -1 || x == 0 || x == 1));
                if (x == 1) ++positive;
                if (x == -1) ++negative;
            }
            CHECK(sum == 0);
            CHECK(positive == negative);
            CHECK(positive <= 2);
            int t = -1, f = -1, v = -1;
            REQUIRE(std::sscanf(sys.labels[i].c_str(), "face %d:%d arc at %d", &t, &f, &v) == 3);
            const auto& g = tri.gluing(t, f);
            REQUIRE(g.has_value());
            if (g->tet != t) {
                // Between distinct tetrahedra nothing cancels.
                CHECK(positive == 2);
            }
        }
    }
}

TEST_CASE("vertex links satisfy the standard equations") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Triangulation tri = fixture_triangulation(name);
        Skeleton sk = compute_skeleton(tri);
        for (int v = 0; v < sk.vertex_count(); ++v) {
            auto link = vertex_link_coordinates(sk, v);
            CHECK(check_matching(tri, link).satisfied);
        }
        CHECK(check_matching(tri, all_vertex_links(sk)).satisfied);
        CHECK(check_matching(tri, scale(all_vertex_links(sk), 3)).satisfied);
    }
}

TEST_CASE("the one-tetrahedron torus is a normal surface") {
    Triangulation tri = fixture_triangulation("ex6.1");
    auto c = NormalCoordinates::standard(1);
    c.tri(0, 2) = 1;
    c.tri(0, 3) = 1;
    c.quad(0, 0) = 1;
    CHECK(check_matching(tri, c).satisfied);
    CHECK(check_matching(tri, quad_projection(c)).satisfied);

    // Perturbing any single coordinate breaks some equation.
    for (int i = 0; i < 7; ++i) {
        auto bad = c;
        bad.v[static_cast<std::size_t>(i)] += 1;
        auto r = check_matching(tri, bad);
        if (!r.satisfied) CHECK_FALSE(r.failure.empty());
    }
    auto bad = c;
    bad.quad(0, 1) += 1;
    CHECK_FALSE(check_matching(tri, bad).satisfied);
}

TEST_CASE("quad equations of the one-tetrahedron solid torus") {
    Triangulation tri = fixture_triangulation("ex6.1");
    LinearSystem sys = quad_matching_system(tri);
    CHECK(sys.dim == 3);
    REQUIRE(sys.rows.size() == 2);
    for (const auto& row : sys.rows) {
        CHECK(row[0] == 0);
        CHECK(row[1] == -row[2]);
    }
}

TEST_CASE("quad equations require orientability") {
    CHECK_THROWS_AS(quad_matching_system(nsgtest::twisted_pair()), PreconditionError);
}

TEST_CASE("the bundled ex6.8 surfaces satisfy the matching equations") {
    const auto& data = fixture_data("ex6.8");
    Triangulation tri = parse_triangulation(data.tri_text);
    NormalCoordinates s1 = parse_surface(data.surfaces.at("s1"));
    NormalCoordinates s2 = parse_surface(data.surfaces.at("s2"));

    std::vector<int> valid;
    for (int i = 0; i < 6; ++i) {
        const auto& order = kColumnOrders[static_cast<std::size_t>(i)];
        if (check_matching(tri, reorder_quads(s1, order)).satisfied &&
            check_matching(tri, reorder_quads(s2, order)).satisfied)
            valid.push_back(i);
    }
    CAPTURE(valid);
    REQUIRE_FALSE(valid.empty());
    // The file column order is the in-memory order.
    CHECK(check_matching(tri, s1).satisfied);
    CHECK(check_matching(tri, s2).satisfied);

    // Their quad parts solve the quad equations.
    CHECK(check_matching(tri, quad_projection(s1)).satisfied);
    CHECK(check_matching(tri, quad_projection(s2)).satisfied);

    // The sum of compatible solutions is again a solution.
    CHECK(check_matching(tri, haken_sum({{2, s1}, {1, s2}})).satisfied);
}

TEST_CASE("vertex linking part") {
    const auto& data = fixture_data("ex6.8");
    Triangulation tri = parse_triangulation(data.tri_text);
    Skeleton sk = compute_skeleton(tri);
    NormalCoordinates s1 = parse_surface(data.surfaces.at("s1"));

    CHECK(vertex_linking_part(sk, s1).zero());

    auto bumped = add(s1, vertex_link_coordinates(sk, 0));
    CHECK(vertex_linking_part(sk, bumped) == vertex_link_coordinates(sk, 0));

    CHECK(vertex_linking_part(sk, all_vertex_links(sk)) == all_vertex_links(sk));
}

TEST_CASE("lifting quad coordinates to standard ones") {
    {
        Triangulation tri = fixture_triangulation("ex6.1");
        Skeleton sk = compute_skeleton(tri);
        auto q = NormalCoordinates::quads(1);
        q.quad(0, 0) = 1;
        NormalCoordinates lifted = lift_to_standard(tri, sk, q);
        auto expected = NormalCoordinates::standard(1);
        expected.tri(0, 2) = 1;
        expected.tri(0, 3) = 1;
        expected.quad(0, 0) = 1;
        CHECK(lifted == expected);

        CHECK(lift_to_standard(tri, sk, NormalCoordinates::quads(1)).zero());
    }
    {
        const auto& data = fixture_data("ex6.8");
        Triangulation tri = parse_triangulation(data.tri_text);
        Skeleton sk = compute_skeleton(tri);
        for (const auto& sname : {"s1", "s2"}) {
            CAPTURE(sname);
            NormalCoordinates s = parse_surface(data.surfaces.at(sname));
            NormalCoordinates lifted = lift_to_standard(tri, sk, quad_projection(s));
            CHECK(lifted == s);  // no vertex-linking part to lose

            // Adding a vertex link changes the surface but not its lift.
            auto shifted = add(s, vertex_link_coordinates(sk, 0));
            CHECK(lift_to_standard(tri, sk, quad_projection(shifted)) == s);
        }
    }
}

TEST_CASE("shape mismatches are rejected") {
    Triangulation tri = fixture_triangulation("ex6.1");
    auto wrong = NormalCoordinates::standard(2);
    auto r = check_matching(tri, wrong);
    CHECK_FALSE(r.satisfied);
    CHECK_FALSE(r.failure.empty());
    CHECK_THROWS_AS(evaluate(standard_matching_system(tri), wrong), PreconditionError);
}
