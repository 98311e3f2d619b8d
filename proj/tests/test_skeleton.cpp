#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "helpers.hpp"
#include "nsg/fixtures.hpp"
#include "nsg/skeleton.hpp"

using namespace nsg;

namespace {

// Second route to the face identifications: one global union-find pass
// instead of per-class searches.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
    std::vector<int> sizes() {
        std::vector<int> count(parent.size(), 0);
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            ++count[static_cast<std::size_t>(find(i))];
        std::vector<int> out;
        for (int c : count)
            if (c > 0) out.push_back(c);
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct Counts {
    int vertices, edges, faces;
    std::vector<int> edge_sizes;
};

Counts quotient_counts(const Triangulation& tri) {
    int n = tri.size();
    UnionFind vert(4 * n), edge(6 * n), face(4 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            face.unite(4 * t + f, 4 * g->tet + g->perm[f]);
            for (int v : kFaceVertices[static_cast<std::size_t>(f)])
                vert.unite(4 * t + v, 4 * g->tet + g->perm[v]);
            const auto& fv = kFaceVertices[static_cast<std::size_t>(f)];
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    edge.unite(6 * t + edge_index(fv[static_cast<std::size_t>(i)], fv[static_cast<std::size_t>(j)]),
                               6 * g->tet + edge_index(g->perm[fv[static_cast<std::size_t>(i)]],
                                                       g->perm[fv[static_cast<std::size_t>(j)]]));
        }
    Counts c{};
    c.vertices = vert.classes();
    c.edges = edge.classes();
    // Unglued faces count once; glued pairs merge.
    c.faces = face.classes();
    c.edge_sizes = edge.sizes();
    return c;
}

void check_against_oracle(const Triangulation& tri) {
    Skeleton sk = compute_skeleton(tri);
    Counts c = quotient_counts(tri);
    CHECK(sk.vertex_count() == c.vertices);
    CHECK(sk.edge_count() == c.edges);
    CHECK(sk.face_count() == c.faces);
    CHECK(edge_degree_census(sk) == c.edge_sizes);
}

}  // namespace

TEST_CASE("quotient counts match a union-find oracle") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        check_against_oracle(fixture_triangulation(name));
    }
    check_against_oracle(nsgtest::boundary_4simplex());
    check_against_oracle(nsgtest::twisted_pair());
}

TEST_CASE("one-tetrahedron solid torus skeleton") {
    Triangulation tri = fixture_triangulation("ex6.1");
    Skeleton sk = compute_skeleton(tri);
    CHECK(sk.vertex_count() == 1);
    CHECK(sk.edge_count() == 2);
    CHECK(sk.face_count() == 2);
    CHECK(edge_degree_census(sk) == std::vector<int>{1, 5});
}

TEST_CASE("boundary of the 4-simplex skeleton") {
    Skeleton sk = compute_skeleton(nsgtest::boundary_4simplex());
    CHECK(sk.vertex_count() == 5);
    CHECK(sk.edge_count() == 10);
    CHECK(sk.face_count() == 10);
    CHECK(edge_degree_census(sk) == std::vector<int>(10, 3));
}

TEST_CASE("global count identities") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Triangulation tri = fixture_triangulation(name);
        Skeleton sk = compute_skeleton(tri);
        int n = tri.size();

        int degree_sum = 0;
        for (int d : sk.edge_degree) degree_sum += d;
        CHECK(degree_sum == 6 * n);

        int chi = sk.vertex_count() - sk.edge_count() + sk.face_count() - n;
        if (tri.closed()) {
            CHECK(sk.face_count() == 2 * n);
            CHECK(chi == 0);
        } else {
            // Compact with boundary: euler characteristic is half that of
            // the boundary surface.  The one bounded fixture is a ball.
            CHECK(chi == 1);
        }
    }
}

TEST_CASE("boundary flags are closed under incidence") {
    Triangulation tri = fixture_triangulation("ex6.7");
    Skeleton sk = compute_skeleton(tri);
    int flagged_faces = 0;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            if (!tri.is_boundary(t, f)) {
                CHECK_FALSE(sk.face_on_boundary[static_cast<std::size_t>(sk.face_of(t, f))]);
                continue;
            }
            ++flagged_faces;
            CHECK(sk.face_on_boundary[static_cast<std::size_t>(sk.face_of(t, f))]);
            for (int v : kFaceVertices[static_cast<std::size_t>(f)])
                CHECK(sk.vertex_on_boundary[static_cast<std::size_t>(sk.corner(t, v))]);
            const auto& fv = kFaceVertices[static_cast<std::size_t>(f)];
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    CHECK(sk.edge_on_boundary[static_cast<std::size_t>(sk.edge_of(
                        t, edge_index(fv[static_cast<std::size_t>(i)], fv[static_cast<std::size_t>(j)])))]);
        }
    CHECK(flagged_faces == 2);
}

TEST_CASE("an edge identified with itself reversed is rejected") {
    Triangulation tri = parse_triangulation("tri 1\n0: 0(103) 0(102) bdy bdy\n");
    CHECK_THROWS_AS(compute_skeleton(tri), InvalidTriangulation);
}

TEST_CASE("edge class representatives carry positive sign") {
    Skeleton sk = compute_skeleton(fixture_triangulation("ex6.4"));
    for (int c = 0; c < sk.edge_count(); ++c) {
        auto [t, e] = sk.edge_rep[static_cast<std::size_t>(c)];
        CHECK(sk.edge_sign[static_cast<std::size_t>(6 * t + e)] == 1);
    }
}
