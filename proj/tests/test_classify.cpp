#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nsg/classify.hpp"
#include "nsg/fixtures.hpp"
#include "nsg/surface2d.hpp"

using namespace nsg;

TEST_CASE("all bundled fixtures are connected orientable manifolds") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Triangulation tri = fixture_triangulation(name);
        Skeleton sk = compute_skeleton(tri);
        Classification cl = classify(tri, sk);
        CHECK(cl.connected);
        CHECK(cl.components == 1);
        CHECK(cl.orientable);
        CHECK(cl.manifold);
        CHECK(cl.closed == tri.closed());
    }
}

TEST_CASE("orientation signs flip across even gluings") {
    Triangulation tri = fixture_triangulation("ex6.4");
    auto signs = compute_orientation(tri);
    REQUIRE(signs.has_value());
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            int expected = (g->perm.parity() == 1) ? (*signs)[static_cast<std::size_t>(t)]
                                                   : -(*signs)[static_cast<std::size_t>(t)];
            CHECK((*signs)[static_cast<std::size_t>(g->tet)] == expected);
        }
}

TEST_CASE("a parity-inconsistent gluing is detected") {
    Triangulation tri = nsgtest::twisted_pair();
    CHECK_FALSE(compute_orientation(tri).has_value());
    Skeleton sk = compute_skeleton(tri);
    Classification cl = classify(tri, sk);
    CHECK_FALSE(cl.orientable);
}

TEST_CASE("vertex links of closed fixtures are spheres") {
    for (const auto& name : {"ex6.1", "ex6.4", "ex6.9"}) {
        CAPTURE(name);
        Triangulation tri = fixture_triangulation(name);
        Skeleton sk = compute_skeleton(tri);
        for (int v = 0; v < sk.vertex_count(); ++v) {
            Surface2D link = vertex_link(tri, sk, v);
            Skeleton2D lsk = compute_skeleton2d(link);
            CHECK(lsk.component_count == 1);
            CHECK(lsk.total_euler() == 2);
            CHECK(lsk.boundary_edges == 0);
            CHECK(lsk.orientable);
        }
    }
}

TEST_CASE("boundary vertices of the ball have disc links") {
    Triangulation tri = fixture_triangulation("ex6.7");
    Skeleton sk = compute_skeleton(tri);
    int discs = 0;
    for (int v = 0; v < sk.vertex_count(); ++v) {
        Surface2D link = vertex_link(tri, sk, v);
        Skeleton2D lsk = compute_skeleton2d(link);
        CHECK(lsk.component_count == 1);
        if (sk.vertex_on_boundary[static_cast<std::size_t>(v)]) {
            CHECK(lsk.total_euler() == 1);
            CHECK(lsk.boundary_curves == std::vector<int>{1});
            ++discs;
        } else {
            CHECK(lsk.total_euler() == 2);
        }
    }
    CHECK(discs > 0);
}

TEST_CASE("the ball's boundary is a single sphere") {
    Triangulation tri = fixture_triangulation("ex6.7");
    Skeleton sk = compute_skeleton(tri);
    Classification cl = classify(tri, sk);
    REQUIRE(cl.boundary.size() == 1);
    CHECK(cl.boundary[0].euler == 2);
    CHECK(cl.boundary[0].genus == 0);
    CHECK(cl.boundary[0].orientable);

    BoundaryComplex bc = boundary_complex(tri);
    CHECK(bc.surface.size() == 2);
    Skeleton2D bsk = compute_skeleton2d(bc.surface);
    CHECK(bsk.component_count == 1);
    CHECK(bsk.boundary_edges == 0);
}

TEST_CASE("only the 4-simplex boundary is simplicial here") {
    {
        Triangulation tri = nsgtest::boundary_4simplex();
        Skeleton sk = compute_skeleton(tri);
        Classification cl = classify(tri, sk);
        CHECK(cl.simplicial);
        CHECK(cl.manifold);
        CHECK(cl.orientable);
        CHECK(cl.closed);
    }
    {
        Triangulation tri = fixture_triangulation("ex6.1");
        Skeleton sk = compute_skeleton(tri);
        CHECK_FALSE(classify(tri, sk).simplicial);
    }
}

TEST_CASE("a disjoint union reports two components") {
    Triangulation tri(2);
    for (int t = 0; t < 2; ++t) {
        tri.glue(t, 3, t, Perm4{0, 1, 3, 2});
        tri.glue(t, 0, t, Perm4{1, 2, 3, 0});
    }
    Skeleton sk = compute_skeleton(tri);
    Classification cl = classify(tri, sk);
    CHECK(cl.components == 2);
    CHECK_FALSE(cl.connected);
    CHECK(cl.tet_component[0] != cl.tet_component[1]);
}

TEST_CASE("classification is stable under reindexing") {
    Triangulation tri = fixture_triangulation("ex6.5");
    Triangulation shuffled = nsgtest::relabel(tri, {2, 0, 3, 1});
    Skeleton sk1 = compute_skeleton(tri);
    Skeleton sk2 = compute_skeleton(shuffled);
    Classification a = classify(tri, sk1);
    Classification b = classify(shuffled, sk2);
    CHECK(a.orientable == b.orientable);
    CHECK(a.manifold == b.manifold);
    CHECK(a.closed == b.closed);
    CHECK(sk1.vertex_count() == sk2.vertex_count());
    CHECK(sk1.edge_count() == sk2.edge_count());
}
