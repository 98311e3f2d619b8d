#pragma once

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/coordinates.hpp"
#include "nsg/skeleton.hpp"
#include "nsg/smith.hpp"
#include "nsg/triangulation.hpp"

namespace nsg {

struct LinearSystem {
    int dim = 0;
    Matrix rows;
    std::vector<std::string> labels;  // one per row, for diagnostics
};

inline std::vector<Int> evaluate(const LinearSystem& sys, const NormalCoordinates& c) {
    if (c.dim() != sys.dim) throw PreconditionError("coordinate dimension does not match system");
    std::vector<Int> out;
    out.reserve(sys.rows.size());
    for (const auto& row : sys.rows) out.push_back(dot(row, c.v));
    return out;
}

inline bool satisfies(const LinearSystem& sys, const NormalCoordinates& c) {
    for (const Int& x : evaluate(sys, c))
        if (x != 0) return false;
    return true;
}

// One equation per arc type of each internal face class: the arc counts on
// the two sides of the gluing agree.  Arc (f,v) counts t_v plus the quad
// pairing v with the face's omitted vertex.
inline LinearSystem standard_matching_system(const Triangulation& tri) {
    LinearSystem sys;
    sys.dim = 7 * tri.size();
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            if (std::make_pair(g->tet, g->perm[f]) < std::make_pair(t, f)) continue;  // count each face once
            for (int v : kFaceVertices[static_cast<std::size_t>(f)]) {
                std::vector<Int> row(static_cast<std::size_t>(sys.dim), 0);
                int t2 = g->tet, v2 = g->perm[v], f2 = g->perm[f];
                row[static_cast<std::size_t>(7 * t + v)] += 1;
                row[static_cast<std::size_t>(7 * t + 4 + quad_pairing(v, f))] += 1;
                row[static_cast<std::size_t>(7 * t2 + v2)] -= 1;
                row[static_cast<std::size_t>(7 * t2 + 4 + quad_pairing(v2, f2))] -= 1;
                sys.rows.push_back(std::move(row));
                sys.labels.push_back("face " + std::to_string(t) + ":" + std::to_string(f) + " arc at " +
                                     std::to_string(v));
            }
        }
    return sys;
}

// Shearing slope of quad type q along edge e of a positively oriented
// tetrahedron; the two types crossing the edge tilt opposite ways.
constexpr std::array<std::array<int, 3>, 6> kQuadSlopes = {{
    {0, 1, -1},   // edge 01
    {-1, 0, 1},   // edge 02
    {1, -1, 0},   // edge 03
    {1, -1, 0},   // edge 12
    {-1, 0, 1},   // edge 13
    {0, 1, -1},   // edge 23
}};

// One equation per internal edge class: total shearing of the quads winding
// around the edge vanishes.  Requires an orientation.
inline LinearSystem quad_matching_system(const Triangulation& tri) {
    auto signs = compute_orientation(tri);
    if (!signs) throw PreconditionError("quad matching equations need an orientable triangulation");
    Skeleton sk = compute_skeleton(tri);

    LinearSystem sys;
    sys.dim = 3 * tri.size();
    sys.rows.assign(static_cast<std::size_t>(sk.edge_count()), std::vector<Int>(static_cast<std::size_t>(sys.dim), 0));
    std::vector<bool> keep(static_cast<std::size_t>(sk.edge_count()), false);
    for (int t = 0; t < tri.size(); ++t)
        for (int e = 0; e < 6; ++e) {
            int cls = sk.edge_of(t, e);
            if (sk.edge_on_boundary[static_cast<std::size_t>(cls)]) continue;
            keep[static_cast<std::size_t>(cls)] = true;
            for (int q = 0; q < 3; ++q)
                sys.rows[static_cast<std::size_t>(cls)][static_cast<std::size_t>(3 * t + q)] +=
                    (*signs)[static_cast<std::size_t>(t)] * kQuadSlopes[static_cast<std::size_t>(e)][static_cast<std::size_t>(q)];
        }
    Matrix rows;
    for (int cls = 0; cls < sk.edge_count(); ++cls)
        if (keep[static_cast<std::size_t>(cls)]) {
            rows.push_back(std::move(sys.rows[static_cast<std::size_t>(cls)]));
            sys.labels.push_back("edge class " + std::to_string(cls));
        }
    sys.rows = std::move(rows);
    return sys;
}

inline LinearSystem matching_system(const Triangulation& tri, bool quad_only) {
    return quad_only ? quad_matching_system(tri) : standard_matching_system(tri);
}

struct MatchingCheck {
    bool satisfied = true;
    std::string failure;
};

inline MatchingCheck check_matching(const Triangulation& tri, const NormalCoordinates& c) {
    MatchingCheck r;
    if (c.tets != tri.size()) {
        r.satisfied = false;
        r.failure = "coordinate count does not match the triangulation";
        return r;
    }
    if (!c.nonnegative()) {
        r.satisfied = false;
        r.failure = "negative coordinate";
        return r;
    }
    LinearSystem sys = matching_system(tri, c.quad_only);
    auto vals = evaluate(sys, c);
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] != 0) {
            r.satisfied = false;
            r.failure = "unbalanced at " + sys.labels[i];
            return r;
        }
    return r;
}

// Largest multiple of each vertex link contained in the triangle part.
inline NormalCoordinates vertex_linking_part(const Skeleton& sk, const NormalCoordinates& c) {
    if (c.quad_only) throw PreconditionError("vertex linking part needs standard coordinates");
    NormalCoordinates part = NormalCoordinates::standard(c.tets);
    for (int cls = 0; cls < sk.vertex_count(); ++cls) {
        std::optional<Int> m;
        for (int t = 0; t < c.tets; ++t)
            for (int v = 0; v < 4; ++v)
                if (sk.corner(t, v) == cls) {
                    const Int& x = c.tri(t, v);
                    if (!m || x < *m) m = x;
                }
        if (!m) continue;
        for (int t = 0; t < c.tets; ++t)
            for (int v = 0; v < 4; ++v)
                if (sk.corner(t, v) == cls) part.tri(t, v) = *m;
    }
    return part;
}

// Standard solution with the given quads and no vertex-linking part.  The
// face equations chain triangle values across corners of a vertex class;
// any cycle inconsistency means no lift exists.
inline NormalCoordinates lift_to_standard(const Triangulation& tri, const Skeleton& sk, const NormalCoordinates& quads) {
    if (!quads.quad_only) throw PreconditionError("lift expects quad coordinates");
    if (quads.tets != tri.size()) throw PreconditionError("coordinate count does not match the triangulation");

    int n = tri.size();
    std::vector<std::optional<Int>> pot(static_cast<std::size_t>(4 * n));
    for (int cls = 0; cls < sk.vertex_count(); ++cls) {
        int st = -1, sv = -1;
        for (int t = 0; t < n && st < 0; ++t)
            for (int v = 0; v < 4 && st < 0; ++v)
                if (sk.corner(t, v) == cls) {
                    st = t;
                    sv = v;
                }
        pot[static_cast<std::size_t>(4 * st + sv)] = 0;
        std::queue<std::pair<int, int>> bfs;
        bfs.emplace(st, sv);
        while (!bfs.empty()) {
            auto [t, v] = bfs.front();
            bfs.pop();
            Int base = *pot[static_cast<std::size_t>(4 * t + v)];
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const auto& g = tri.gluing(t, f);
                if (!g) continue;
                int t2 = g->tet, v2 = g->perm[v], f2 = g->perm[f];
                Int want = base + quads.quad(t, quad_pairing(v, f)) - quads.quad(t2, quad_pairing(v2, f2));
                auto& slot = pot[static_cast<std::size_t>(4 * t2 + v2)];
                if (!slot) {
                    slot = want;
                    bfs.emplace(t2, v2);
                } else if (*slot != want) {
                    throw CheckFailure("quad coordinates admit no standard lift");
                }
            }
        }
        // Shift the class so its minimum is zero.
        Int lo = *pot[static_cast<std::size_t>(4 * st + sv)];
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v)
                if (sk.corner(t, v) == cls && *pot[static_cast<std::size_t>(4 * t + v)] < lo)
                    lo = *pot[static_cast<std::size_t>(4 * t + v)];
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v)
                if (sk.corner(t, v) == cls) *pot[static_cast<std::size_t>(4 * t + v)] -= lo;
    }

    NormalCoordinates out = NormalCoordinates::standard(n);
    for (int t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) out.tri(t, v) = *pot[static_cast<std::size_t>(4 * t + v)];
        for (int q = 0; q < 3; ++q) out.quad(t, q) = quads.quad(t, q);
    }
    MatchingCheck chk = check_matching(tri, out);
    if (!chk.satisfied) throw CheckFailure("lift failed: " + chk.failure);
    return out;
}

}  // namespace nsg
