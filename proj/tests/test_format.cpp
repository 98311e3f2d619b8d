#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nsg/fixtures.hpp"
#include "nsg/permutation.hpp"
#include "nsg/triangulation.hpp"

using namespace nsg;

TEST_CASE("permutation composition and inverse") {
    Perm4 a{1, 2, 3, 0};
    Perm4 b{0, 1, 3, 2};
    CHECK((a * b) == Perm4{1, 2, 0, 3});
    CHECK((b * a) == Perm4{1, 3, 2, 0});
    CHECK(a.inverse() * a == Perm4{});
    CHECK(a * a.inverse() == Perm4{});
    CHECK(Perm4{}.parity() == 0);
    CHECK(Perm4{1, 0, 2, 3}.parity() == 1);
    CHECK(a.parity() == 1);
    CHECK(Perm4{1, 0, 3, 2}.parity() == 0);
}

TEST_CASE("fixture files round-trip exactly") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto& data = fixture_data(name);
        Triangulation tri = parse_triangulation(data.tri_text);
        CHECK(serialize_triangulation(tri) == data.tri_text);
        CHECK(tri.closed() == data.closed);
        CHECK(tri.boundary_face_count() == data.boundary_faces);
    }
}

TEST_CASE("gluing entries give the full vertex map") {
    Triangulation tri = fixture_triangulation("ex6.4");
    // Row 0, column (012): 0(301).  Face (012) is face 3, its image triple
    // (301) spans face 2, and the omitted vertices map to each other.
    const auto& g = tri.gluing(0, 3);
    REQUIRE(g.has_value());
    CHECK(g->tet == 0);
    CHECK(g->perm == Perm4{3, 0, 1, 2});
    // The partner slot holds the inverse map.
    const auto& back = tri.gluing(0, 2);
    REQUIRE(back.has_value());
    CHECK(back->tet == 0);
    CHECK(back->perm == g->perm.inverse());
    // Row 0, column (123): 1(123) glues face 0 to tetrahedron 1 identically.
    const auto& h = tri.gluing(0, 0);
    REQUIRE(h.has_value());
    CHECK(h->tet == 1);
    CHECK(h->perm == Perm4{});
    REQUIRE(tri.gluing(1, 0).has_value());
    CHECK(tri.gluing(1, 0)->tet == 0);
}

TEST_CASE("boundary entries parse to unglued faces") {
    Triangulation tri = fixture_triangulation("ex6.7");
    CHECK_FALSE(tri.closed());
    CHECK(tri.boundary_face_count() == 2);
    CHECK(tri.is_boundary(0, 1));
    CHECK(tri.is_boundary(2, 0));
    CHECK_FALSE(tri.is_boundary(0, 0));
}

TEST_CASE("comments and spacing are ignored") {
    std::string clean = fixture_data("ex6.5").tri_text;
    std::string messy = "# leading comment\n\ntri 4   # trailing\n";
    Triangulation tri = parse_triangulation(clean);
    for (int t = 0; t < 4; ++t) {
        std::string row;
        {
            std::string serial = serialize_triangulation(tri);
            std::size_t pos = 0;
            for (int skip = 0; skip <= t; ++skip) pos = serial.find('\n', pos) + 1;
            row = serial.substr(pos, serial.find('\n', pos) - pos);
        }
        messy += "  " + row + "   # note\n\n";
    }
    CHECK(serialize_triangulation(parse_triangulation(messy)) == clean);
}

TEST_CASE("a triangulation built by hand serializes to its file form") {
    Triangulation tri(1);
    tri.glue(0, 3, 0, Perm4{0, 1, 3, 2});
    tri.glue(0, 0, 0, Perm4{1, 2, 3, 0});
    CHECK(serialize_triangulation(tri) == fixture_data("ex6.1").tri_text);
}

TEST_CASE("parse errors carry positions") {
    auto expect_parse_error = [](const std::string& text, int line) {
        try {
            parse_triangulation(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_parse_error("triangulation 3\n", 1);
    expect_parse_error("tri -1\n", 1);
    expect_parse_error("tri 1\n0: bdy bdy bdy\n", 2);
    expect_parse_error("tri 1\n0: 1(012) bdy bdy bdy\n", 2);
    expect_parse_error("tri 1\n0: 0(011) bdy bdy bdy\n", 2);
    expect_parse_error("tri 1\n0: 0(014) bdy bdy bdy\n", 2);
    expect_parse_error("tri 1\n0: 0[012] bdy bdy bdy\n", 2);
    expect_parse_error("tri 1\n0: bdy bdy bdy bdy\n0: bdy bdy bdy bdy\n", 3);  // duplicate
    expect_parse_error("tri 1\n1: bdy bdy bdy bdy\n", 2);          // index out of range
    expect_parse_error("tri 1\n0: bdy bdy bdy bdy extra\n", 2);
    CHECK_THROWS_AS(parse_triangulation("tri 2\n0: bdy bdy bdy bdy\n"), ParseError);
    CHECK_THROWS_AS(parse_triangulation(""), ParseError);
}

TEST_CASE("inconsistent gluings are rejected") {
    // The two rows disagree about the same face pair.
    CHECK_THROWS_AS(parse_triangulation("tri 2\n"
                                        "0: 1(012) bdy bdy bdy\n"
                                        "1: 0(013) bdy bdy bdy\n"),
                    InvalidTriangulation);
    // A face glued to itself.
    CHECK_THROWS_AS(parse_triangulation("tri 1\n0: 0(021) bdy bdy bdy\n"),
                    InvalidTriangulation);
}
