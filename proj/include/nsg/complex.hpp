#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <vector>

#include "nsg/coordinates.hpp"
#include "nsg/matching.hpp"
#include "nsg/skeleton.hpp"
#include "nsg/triangulation.hpp"

namespace nsg {

// One normal disc: type 0..3 is the triangle at that corner, 4..6 the quad of
// type-4.  Sheets number parallel copies: triangles outward from their
// vertex, quads along their axis starting at the pair containing vertex 0.
struct DiscRef {
    int tet = 0;
    int type = 0;
    long long sheet = 0;

    bool is_quad() const { return type >= 4; }
    int quad_type() const { return type - 4; }
};

namespace disc {

inline int side_count(int type) { return type < 4 ? 3 : 4; }

// The three vertices of the tetrahedron other than v, ascending.
inline std::array<int, 3> others_of(int v) {
    std::array<int, 3> o{};
    int k = 0;
    for (int x = 0; x < 4; ++x)
        if (x != v) o[static_cast<std::size_t>(k++)] = x;
    return o;
}

// Triangle at v: corners c = 0,1,2 sit on the edges {v, x_c} with x_0<x_1<x_2;
// side j joins corners j and j+1 and lies in the face omitting the third x.
inline int tri_side_face(int v, int j) {
    auto o = others_of(v);
    static constexpr int third[3] = {2, 0, 1};
    return o[static_cast<std::size_t>(third[j])];
}

inline std::array<int, 2> tri_corner_edge(int v, int c) {
    auto o = others_of(v);
    int x = o[static_cast<std::size_t>(c)];
    return {std::min(v, x), std::max(v, x)};
}

// Quad of type q: vertex 0 is paired with e; the other pair is {r1, r2}.
// Corners in cyclic order sit on edges {0,r1}, {0,r2}, {e,r2}, {e,r1};
// side j joins corners j and j+1.
inline int quad_partner_of_zero(int q) { return kQuadPairs[static_cast<std::size_t>(q)][0][1]; }

inline std::array<int, 2> quad_corner_edge(int q, int c) {
    int e = quad_partner_of_zero(q);
    int r1 = kQuadPairs[static_cast<std::size_t>(q)][1][0];
    int r2 = kQuadPairs[static_cast<std::size_t>(q)][1][1];
    switch (c) {
        case 0: return {0, r1};
        case 1: return {0, r2};
        case 2: return {std::min(e, r2), std::max(e, r2)};
        default: return {std::min(e, r1), std::max(e, r1)};
    }
}

inline int quad_side_face(int q, int j) {
    int e = quad_partner_of_zero(q);
    int r1 = kQuadPairs[static_cast<std::size_t>(q)][1][0];
    int r2 = kQuadPairs[static_cast<std::size_t>(q)][1][1];
    const std::array<int, 4> faces = {e, r1, 0, r2};
    return faces[static_cast<std::size_t>(j)];
}

inline int side_face(const DiscRef& d, int j) {
    return d.is_quad() ? quad_side_face(d.quad_type(), j) : tri_side_face(d.type, j);
}

// The vertex the side's normal arc cuts off within its face.
inline int side_cutoff(const DiscRef& d, int j) {
    if (!d.is_quad()) return d.type;
    int f = quad_side_face(d.quad_type(), j);
    // partner of f within its pair
    for (const auto& pair : kQuadPairs[static_cast<std::size_t>(d.quad_type())])
        if (pair[0] == f || pair[1] == f) return pair[0] == f ? pair[1] : pair[0];
    return -1;
}

inline std::array<int, 2> corner_edge(const DiscRef& d, int c) {
    return d.is_quad() ? quad_corner_edge(d.quad_type(), c) : tri_corner_edge(d.type, c);
}

inline int side_at_face(const DiscRef& d, int face) {
    for (int j = 0; j < side_count(d.type); ++j)
        if (side_face(d, j) == face) return j;
    return -1;
}

}  // namespace disc

// The embedded surface as a cell complex: discs, their glued sides (arcs),
// and the vertex classes of corner identifications.  Side ids double as
// corner ids (corner j is the tail of side j in the disc's cyclic order).
struct NormalSurfaceComplex {
    int tets = 0;
    std::vector<DiscRef> discs;
    std::vector<int> side_base;  // disc -> first side id, with a sentinel at the end
    std::vector<int> side_disc;
    std::vector<int> side_partner;        // -1 when the arc lies in a boundary face
    std::vector<bool> side_parallel;      // glued sides: canonical directions agree
    std::vector<int> corner_class;
    int vertex_classes = 0;
    long long arc_count = 0;

    std::vector<int> disc_component;
    int components = 0;
    std::vector<int> disc_sign;  // +-1 from orientation propagation (per component attempt)
    std::vector<bool> component_orientable;

    int size() const { return static_cast<int>(discs.size()); }
    int sides(int d) const {
        return side_base[static_cast<std::size_t>(d) + 1] - side_base[static_cast<std::size_t>(d)];
    }
    int side_id(int d, int j) const { return side_base[static_cast<std::size_t>(d)] + j; }
    int side_index(int s) const {
        return s - side_base[static_cast<std::size_t>(side_disc[static_cast<std::size_t>(s)])];
    }

    long long triangle_count() const {
        long long c = 0;
        for (const auto& d : discs)
            if (!d.is_quad()) ++c;
        return c;
    }
    long long quad_count() const { return static_cast<long long>(discs.size()) - triangle_count(); }
};

namespace detail {

struct CornerFind {
    std::vector<int> parent;
    explicit CornerFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

}  // namespace detail

inline NormalSurfaceComplex build_surface(const Triangulation& tri, const NormalCoordinates& x) {
    if (x.quad_only) throw PreconditionError("surface reconstruction needs standard coordinates");
    if (x.tets != tri.size()) throw PreconditionError("coordinate count does not match the triangulation");
    if (!is_admissible(x)) throw CheckFailure("coordinates are not admissible");
    {
        MatchingCheck chk = check_matching(tri, x);
        if (!chk.satisfied) throw CheckFailure("matching equations violated: " + chk.failure);
    }

    constexpr long long kMaxDiscs = 2'000'000;
    long long total = 0;
    for (const Int& c : x.v) {
        if (c > kMaxDiscs) throw PreconditionError("coordinates too large to realise explicitly");
        total += static_cast<long long>(c);
        if (total > kMaxDiscs) throw PreconditionError("coordinates too large to realise explicitly");
    }

    NormalSurfaceComplex S;
    S.tets = tri.size();

    // Disc table, indexed contiguously per (tet, type).
    std::vector<std::array<int, 7>> first(static_cast<std::size_t>(tri.size()));
    std::vector<std::array<int, 7>> count(static_cast<std::size_t>(tri.size()));
    for (int t = 0; t < tri.size(); ++t)
        for (int ty = 0; ty < 7; ++ty) {
            long long c = static_cast<long long>(x.v[static_cast<std::size_t>(7 * t + ty)]);
            first[static_cast<std::size_t>(t)][static_cast<std::size_t>(ty)] = S.size();
            count[static_cast<std::size_t>(t)][static_cast<std::size_t>(ty)] = static_cast<int>(c);
            for (long long k = 0; k < c; ++k) S.discs.push_back({t, ty, k});
        }

    S.side_base.resize(S.discs.size() + 1);
    int acc = 0;
    for (int d = 0; d < S.size(); ++d) {
        S.side_base[static_cast<std::size_t>(d)] = acc;
        acc += disc::side_count(S.discs[static_cast<std::size_t>(d)].type);
    }
    S.side_base.back() = acc;
    S.side_disc.resize(static_cast<std::size_t>(acc));
    for (int d = 0; d < S.size(); ++d)
        for (int j = 0; j < S.sides(d); ++j) S.side_disc[static_cast<std::size_t>(S.side_id(d, j))] = d;
    S.side_partner.assign(static_cast<std::size_t>(acc), -1);
    S.side_parallel.assign(static_cast<std::size_t>(acc), false);

    // Sides meeting face f of tetrahedron t in the arc type cutting off v,
    // ordered outward from v.
    auto arc_sides = [&](int t, int f, int v) {
        std::vector<int> out;
        int nt = count[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
        for (int k = 0; k < nt; ++k) {
            int d = first[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] + k;
            out.push_back(S.side_id(d, disc::side_at_face(S.discs[static_cast<std::size_t>(d)], f)));
        }
        int p = quad_pairing(v, f);
        int nq = count[static_cast<std::size_t>(t)][static_cast<std::size_t>(4 + p)];
        bool ascending = (v == 0 || f == 0);  // sheet 0 hugs the pair containing vertex 0
        for (int k = 0; k < nq; ++k) {
            int sheet = ascending ? k : nq - 1 - k;
            int d = first[static_cast<std::size_t>(t)][static_cast<std::size_t>(4 + p)] + sheet;
            out.push_back(S.side_id(d, disc::side_at_face(S.discs[static_cast<std::size_t>(d)], f)));
        }
        return out;
    };

    detail::CornerFind corners(acc);

    auto glue_sides = [&](int sa, int sb, const Perm4& perm) {
        S.side_partner[static_cast<std::size_t>(sa)] = sb;
        S.side_partner[static_cast<std::size_t>(sb)] = sa;
        const DiscRef& A = S.discs[static_cast<std::size_t>(S.side_disc[static_cast<std::size_t>(sa)])];
        const DiscRef& B = S.discs[static_cast<std::size_t>(S.side_disc[static_cast<std::size_t>(sb)])];
        int ja = S.side_index(sa), jb = S.side_index(sb);
        int ma = disc::side_count(A.type), mb = disc::side_count(B.type);
        int ca0 = sa, ca1 = S.side_id(S.side_disc[static_cast<std::size_t>(sa)], (ja + 1) % ma);
        int cb0 = sb, cb1 = S.side_id(S.side_disc[static_cast<std::size_t>(sb)], (jb + 1) % mb);
        auto ea0 = disc::corner_edge(A, ja), ea1 = disc::corner_edge(A, (ja + 1) % ma);
        auto eb0 = disc::corner_edge(B, jb), eb1 = disc::corner_edge(B, (jb + 1) % mb);
        std::array<int, 2> im0 = {perm[ea0[0]], perm[ea0[1]]};
        std::array<int, 2> im1 = {perm[ea1[0]], perm[ea1[1]]};
        if (im0[0] > im0[1]) std::swap(im0[0], im0[1]);
        if (im1[0] > im1[1]) std::swap(im1[0], im1[1]);
        bool parallel;
        if (im0 == eb0 && im1 == eb1) {
            corners.unite(ca0, cb0);
            corners.unite(ca1, cb1);
            parallel = true;
        } else if (im0 == eb1 && im1 == eb0) {
            corners.unite(ca0, cb1);
            corners.unite(ca1, cb0);
            parallel = false;
        } else {
            throw CheckFailure("internal: arc endpoints fail to correspond across a face");
        }
        S.side_parallel[static_cast<std::size_t>(sa)] = parallel;
        S.side_parallel[static_cast<std::size_t>(sb)] = parallel;
    };

    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            int t2 = g->tet, f2 = g->perm[f];
            if (t2 < t || (t2 == t && f2 <= f)) continue;  // one pass per face pair
            for (int v : kFaceVertices[static_cast<std::size_t>(f)]) {
                auto here = arc_sides(t, f, v);
                auto there = arc_sides(t2, f2, g->perm[v]);
                if (here.size() != there.size())
                    throw CheckFailure("internal: arc counts disagree across a matched face");
                for (std::size_t k = 0; k < here.size(); ++k) glue_sides(here[k], there[k], g->perm);
            }
        }

    // Vertex classes, arcs.
    S.corner_class.assign(static_cast<std::size_t>(acc), -1);
    for (int c = 0; c < acc; ++c) {
        int root = corners.find(c);
        if (S.corner_class[static_cast<std::size_t>(root)] == -1)
            S.corner_class[static_cast<std::size_t>(root)] = S.vertex_classes++;
        S.corner_class[static_cast<std::size_t>(c)] = S.corner_class[static_cast<std::size_t>(root)];
    }
    for (int s = 0; s < acc; ++s)
        if (S.side_partner[static_cast<std::size_t>(s)] < 0 || S.side_partner[static_cast<std::size_t>(s)] > s)
            ++S.arc_count;

    // Components and orientation signs.  Adjacent discs induce opposite
    // directions on a shared arc, so parallel canonical directions force
    // opposite signs.
    S.disc_component.assign(S.discs.size(), -1);
    S.disc_sign.assign(S.discs.size(), 0);
    for (int d = 0; d < S.size(); ++d) {
        if (S.disc_component[static_cast<std::size_t>(d)] != -1) continue;
        int comp = S.components++;
        bool orientable = true;
        std::queue<int> q;
        S.disc_component[static_cast<std::size_t>(d)] = comp;
        S.disc_sign[static_cast<std::size_t>(d)] = 1;
        q.push(d);
        while (!q.empty()) {
            int cur = q.front();
            q.pop();
            for (int j = 0; j < S.sides(cur); ++j) {
                int s = S.side_id(cur, j);
                int p = S.side_partner[static_cast<std::size_t>(s)];
                if (p < 0) continue;
                int nd = S.side_disc[static_cast<std::size_t>(p)];
                int want = S.side_parallel[static_cast<std::size_t>(s)]
                               ? -S.disc_sign[static_cast<std::size_t>(cur)]
                               : S.disc_sign[static_cast<std::size_t>(cur)];
                if (S.disc_component[static_cast<std::size_t>(nd)] == -1) {
                    S.disc_component[static_cast<std::size_t>(nd)] = comp;
                    S.disc_sign[static_cast<std::size_t>(nd)] = want;
                    q.push(nd);
                } else if (S.disc_sign[static_cast<std::size_t>(nd)] != want) {
                    orientable = false;
                }
            }
        }
        S.component_orientable.push_back(orientable);
    }
    return S;
}

struct SurfaceComponent {
    long long triangles = 0;
    long long quads = 0;
    int vertices = 0;
    long long chi = 0;
    bool orientable = false;
    int boundary_curves = 0;
    long long genus = 0;  // cross-cap count when non-orientable

    bool closed() const { return boundary_curves == 0; }
};

struct TopologySummary {
    std::vector<SurfaceComponent> components;
    std::array<long long, 3> f_vector{0, 0, 0};

    bool connected() const { return components.size() == 1; }
    bool closed() const {
        for (const auto& c : components)
            if (!c.closed()) return false;
        return true;
    }
    bool orientable() const {
        for (const auto& c : components)
            if (!c.orientable) return false;
        return true;
    }
    long long quad_count() const {
        long long q = 0;
        for (const auto& c : components) q += c.quads;
        return q;
    }
    int vertex_count() const { return static_cast<int>(f_vector[0]); }
    const SurfaceComponent& only() const {
        if (components.size() != 1) throw PreconditionError("surface is not connected");
        return components.front();
    }
};

inline TopologySummary topology_summary(const NormalSurfaceComplex& S) {
    TopologySummary out;
    out.components.resize(static_cast<std::size_t>(S.components));
    for (std::size_t c = 0; c < out.components.size(); ++c)
        out.components[c].orientable = S.component_orientable[c];

    int total_sides = S.side_base.back();
    std::vector<int> vertex_component(static_cast<std::size_t>(S.vertex_classes), -1);
    for (int s = 0; s < total_sides; ++s)
        vertex_component[static_cast<std::size_t>(S.corner_class[static_cast<std::size_t>(s)])] =
            S.disc_component[static_cast<std::size_t>(S.side_disc[static_cast<std::size_t>(s)])];

    for (int d = 0; d < S.size(); ++d) {
        auto& comp = out.components[static_cast<std::size_t>(S.disc_component[static_cast<std::size_t>(d)])];
        if (S.discs[static_cast<std::size_t>(d)].is_quad())
            ++comp.quads;
        else
            ++comp.triangles;
    }
    for (int v = 0; v < S.vertex_classes; ++v)
        ++out.components[static_cast<std::size_t>(vertex_component[static_cast<std::size_t>(v)])].vertices;

    std::vector<long long> edges(out.components.size(), 0);
    for (int s = 0; s < total_sides; ++s) {
        int p = S.side_partner[static_cast<std::size_t>(s)];
        if (p < 0 || p > s)
            ++edges[static_cast<std::size_t>(
                S.disc_component[static_cast<std::size_t>(S.side_disc[static_cast<std::size_t>(s)])])];
    }

    // Boundary curves: boundary corner classes must pair up boundary sides.
    {
        std::vector<std::vector<int>> ends(static_cast<std::size_t>(S.vertex_classes));
        for (int s = 0; s < total_sides; ++s) {
            if (S.side_partner[static_cast<std::size_t>(s)] >= 0) continue;
            int d = S.side_disc[static_cast<std::size_t>(s)];
            int j = S.side_index(s);
            int m = S.sides(d);
            int head = S.side_id(d, (j + 1) % m);
            ends[static_cast<std::size_t>(S.corner_class[static_cast<std::size_t>(s)])].push_back(s);
            ends[static_cast<std::size_t>(S.corner_class[static_cast<std::size_t>(head)])].push_back(s);
        }
        detail::CornerFind uf(total_sides);
        for (int v = 0; v < S.vertex_classes; ++v) {
            const auto& e = ends[static_cast<std::size_t>(v)];
            if (e.empty()) continue;
            if (e.size() != 2) throw CheckFailure("internal: surface boundary is not a 1-manifold");
            uf.unite(e[0], e[1]);
        }
        std::vector<bool> seen(static_cast<std::size_t>(total_sides), false);
        for (int s = 0; s < total_sides; ++s) {
            if (S.side_partner[static_cast<std::size_t>(s)] >= 0) continue;
            int root = uf.find(s);
            if (seen[static_cast<std::size_t>(root)]) continue;
            seen[static_cast<std::size_t>(root)] = true;
            ++out.components[static_cast<std::size_t>(
                                 S.disc_component[static_cast<std::size_t>(
                                     S.side_disc[static_cast<std::size_t>(s)])])]
                  .boundary_curves;
        }
    }

    for (std::size_t c = 0; c < out.components.size(); ++c) {
        auto& comp = out.components[c];
        long long faces = comp.triangles + comp.quads;
        comp.chi = comp.vertices - edges[c] + faces;
        long long b = comp.boundary_curves;
        if (comp.orientable) {
            long long twice = 2 - comp.chi - b;
            if (twice < 0 || twice % 2 != 0)
                throw CheckFailure("internal: inconsistent Euler characteristic");
            comp.genus = twice / 2;
        } else {
            comp.genus = 2 - comp.chi - b;
            if (comp.genus <= 0) throw CheckFailure("internal: inconsistent Euler characteristic");
        }
        out.f_vector[0] += comp.vertices;
        out.f_vector[1] += edges[c];
        out.f_vector[2] += faces;
    }
    return out;
}

}  // namespace nsg
