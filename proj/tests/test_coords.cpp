#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nsg/coordinates.hpp"
#include "nsg/fixtures.hpp"

using namespace nsg;

TEST_CASE("quad pairings") {
    CHECK(quad_pairing(0, 1) == 0);
    CHECK(quad_pairing(2, 3) == 0);
    CHECK(quad_pairing(0, 2) == 1);
    CHECK(quad_pairing(1, 3) == 1);
    CHECK(quad_pairing(0, 3) == 2);
    CHECK(quad_pairing(1, 2) == 2);
    CHECK(quad_pairing(3, 0) == 2);
    // Each type's two pairs partition the four vertices.
    for (int q = 0; q < 3; ++q) {
        int mask = 0;
        for (const auto& pair : kQuadPairs[static_cast<std::size_t>(q)])
            for (int v : pair) mask |= 1 << v;
        CHECK(mask == 0b1111);
        CHECK(quad_pairing(kQuadPairs[static_cast<std::size_t>(q)][0][0],
                           kQuadPairs[static_cast<std::size_t>(q)][0][1]) == q);
    }
}

TEST_CASE("coordinate accessors and shapes") {
    auto s = NormalCoordinates::standard(2);
    CHECK(s.dim() == 14);
    CHECK(s.zero());
    s.tri(1, 3) = 5;
    s.quad(1, 2) = 7;
    CHECK(s.v[static_cast<std::size_t>(7 + 3)] == 5);
    CHECK(s.v[static_cast<std::size_t>(7 + 4 + 2)] == 7);
    CHECK(s.nonnegative());

    auto q = NormalCoordinates::quads(2);
    CHECK(q.dim() == 6);
    q.quad(0, 1) = 2;
    CHECK(q.v[1] == 2);
}

TEST_CASE("surface files round-trip exactly") {
    const auto& data = fixture_data("ex6.8");
    for (const auto& [name, text] : data.surfaces) {
        CAPTURE(name);
        NormalCoordinates c = parse_surface(text);
        CHECK_FALSE(c.quad_only);
        CHECK(c.tets == 8);
        CHECK(serialize_surface(c) == text);
    }
    std::string quad_text = "surface quad 2\n0: 1 0 0\n1: 0 0 3\n";
    NormalCoordinates q = parse_surface(quad_text);
    CHECK(q.quad_only);
    CHECK(q.quad(1, 2) == 3);
    CHECK(serialize_surface(q) == quad_text);
}

TEST_CASE("surface parse rejections") {
    CHECK_THROWS_AS(parse_surface(""), ParseError);
    CHECK_THROWS_AS(parse_surface("surface std x\n"), ParseError);
    CHECK_THROWS_AS(parse_surface("surface tri 1\n0: 0 0 0 0 ; 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_surface("surface std 1\n0: 0 0 0 0 0 0 0\n"), ParseError);   // missing ';'
    CHECK_THROWS_AS(parse_surface("surface std 1\n0: 0 0 0 -1 ; 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_surface("surface quad 1\n0: 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_surface("surface quad 2\n0: 1 0 0\n0: 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_surface("surface quad 1\n0: 1 0 0\n1: 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_surface("surface quad 1\n"), ParseError);
}

TEST_CASE("admissibility allows at most one quad type per tetrahedron") {
    auto c = NormalCoordinates::standard(2);
    CHECK(is_admissible(c));
    c.quad(0, 0) = 2;
    c.quad(1, 2) = 1;
    CHECK(is_admissible(c));
    c.quad(1, 1) = 1;
    CHECK_FALSE(is_admissible(c));
}

TEST_CASE("quad projection drops triangles") {
    NormalCoordinates s = parse_surface(fixture_data("ex6.8").surfaces.at("s1"));
    NormalCoordinates q = quad_projection(s);
    CHECK(q.quad_only);
    CHECK(q.tets == s.tets);
    for (int t = 0; t < s.tets; ++t)
        for (int k = 0; k < 3; ++k) CHECK(q.quad(t, k) == s.quad(t, k));
}

TEST_CASE("vertex link coordinates cover each corner once") {
    Triangulation tri = fixture_triangulation("ex6.4");
    Skeleton sk = compute_skeleton(tri);
    auto total = NormalCoordinates::standard(tri.size());
    for (int v = 0; v < sk.vertex_count(); ++v)
        total = add(total, vertex_link_coordinates(sk, v));
    CHECK(total == all_vertex_links(sk));
    for (int t = 0; t < tri.size(); ++t) {
        for (int vtx = 0; vtx < 4; ++vtx) CHECK(total.tri(t, vtx) == 1);
        for (int k = 0; k < 3; ++k) CHECK(total.quad(t, k) == 0);
    }
}

TEST_CASE("edge weights of the one-tetrahedron torus") {
    Triangulation tri = fixture_triangulation("ex6.1");
    Skeleton sk = compute_skeleton(tri);
    auto c = NormalCoordinates::standard(1);
    c.tri(0, 2) = 1;
    c.tri(0, 3) = 1;
    c.quad(0, 0) = 1;
    // Edge 01 is the degree-1 edge; the surface is its link and misses it.
    CHECK(edge_weights(tri, sk, c) == std::vector<Int>{0, 2});
}

TEST_CASE("vertex links meet each edge once per end") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Triangulation tri = fixture_triangulation(name);
        Skeleton sk = compute_skeleton(tri);
        for (int vc = 0; vc < sk.vertex_count(); ++vc) {
            auto link = vertex_link_coordinates(sk, vc);
            auto w = edge_weights(tri, sk, link);
            for (int ec = 0; ec < sk.edge_count(); ++ec) {
                auto [t, e] = sk.edge_rep[static_cast<std::size_t>(ec)];
                auto [a, b] = kEdgeVertices[static_cast<std::size_t>(e)];
                Int ends = 0;
                if (sk.corner(t, a) == vc) ++ends;
                if (sk.corner(t, b) == vc) ++ends;
                CHECK(w[static_cast<std::size_t>(ec)] == ends);
            }
        }
    }
}

TEST_CASE("weighted sums respect quad compatibility") {
    const auto& data = fixture_data("ex6.8");
    NormalCoordinates s1 = parse_surface(data.surfaces.at("s1"));
    NormalCoordinates s2 = parse_surface(data.surfaces.at("s2"));

    NormalCoordinates twice = haken_sum({{2, s1}});
    CHECK(twice == scale(s1, 2));
    CHECK(haken_sum({{1, s1}, {0, s2}}) == s1);

    auto a = NormalCoordinates::standard(1);
    auto b = NormalCoordinates::standard(1);
    a.quad(0, 0) = 1;
    b.quad(0, 1) = 1;
    CHECK_THROWS_AS(haken_sum({{1, a}, {1, b}}), PreconditionError);
    CHECK_THROWS_AS(haken_sum({{Int(-1), a}}), PreconditionError);
    CHECK_THROWS_AS(haken_sum({}), PreconditionError);
}
