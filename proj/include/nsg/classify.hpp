#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "nsg/skeleton.hpp"
#include "nsg/surface2d.hpp"
#include "nsg/triangulation.hpp"

namespace nsg {

// Tetrahedron signs (+1/-1) if the triangulation is orientable.  A face
// gluing with odd vertex permutation preserves the sign; even flips it.
inline std::optional<std::vector<int>> compute_orientation(const Triangulation& tri) {
    std::vector<int> sign(static_cast<std::size_t>(tri.size()), 0);
    for (int start = 0; start < tri.size(); ++start) {
        if (sign[static_cast<std::size_t>(start)] != 0) continue;
        sign[static_cast<std::size_t>(start)] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (!g) continue;
                int want = g->perm.parity() ? sign[static_cast<std::size_t>(t)] : -sign[static_cast<std::size_t>(t)];
                int& slot = sign[static_cast<std::size_t>(g->tet)];
                if (slot == 0) {
                    slot = want;
                    q.push(g->tet);
                } else if (slot != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
}

// The link of one vertex class: a triangle per corner, sides glued through
// the face pairings.  2D vertex slots of corner (t,v) are the other three
// tetrahedron vertices in increasing order; the side in face f omits slot f.
inline Surface2D vertex_link(const Triangulation& tri, const Skeleton& sk, int vclass) {
    std::vector<std::pair<int, int>> corners;
    std::vector<int> index(static_cast<std::size_t>(4 * tri.size()), -1);
    for (int t = 0; t < tri.size(); ++t)
        for (int v = 0; v < 4; ++v)
            if (sk.corner(t, v) == vclass) {
                index[static_cast<std::size_t>(4 * t + v)] = static_cast<int>(corners.size());
                corners.emplace_back(t, v);
            }

    auto slot = [](int v, int x) {  // position of x among {0..3} minus v
        int s = 0;
        for (int y = 0; y < 4; ++y) {
            if (y == v) continue;
            if (y == x) return s;
            ++s;
        }
        throw std::logic_error("slot of missing vertex");
    };

    Surface2D link(static_cast<int>(corners.size()));
    for (std::size_t i = 0; i < corners.size(); ++i) {
        auto [t, v] = corners[i];
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            int nt = g->tet, nv = g->perm[v];
            int j = index[static_cast<std::size_t>(4 * nt + nv)];
            Perm3 p;
            for (int x = 0; x < 4; ++x) {
                if (x == v) continue;
                p.img[static_cast<std::size_t>(slot(v, x))] = static_cast<std::uint8_t>(slot(nv, g->perm[x]));
            }
            link.set_half(static_cast<int>(i), slot(v, f), j, p);
        }
    }
    link.validate();
    return link;
}

struct BoundarySummary {
    int euler = 0;
    int genus = 0;
    bool orientable = true;
    int vertices = 0;
};

struct Classification {
    int components = 0;
    std::vector<int> tet_component;
    bool connected = false;
    bool orientable = false;
    std::vector<int> tet_sign;  // empty when non-orientable
    bool closed = false;
    bool manifold = false;  // every vertex link a sphere or disc
    bool simplicial = false;
    std::vector<BoundarySummary> boundary;  // one entry per boundary component
};

inline Classification classify(const Triangulation& tri, const Skeleton& sk) {
    Classification c;

    c.tet_component.assign(static_cast<std::size_t>(tri.size()), -1);
    for (int t = 0; t < tri.size(); ++t) {
        if (c.tet_component[static_cast<std::size_t>(t)] != -1) continue;
        int comp = c.components++;
        std::queue<int> q;
        q.push(t);
        c.tet_component[static_cast<std::size_t>(t)] = comp;
        while (!q.empty()) {
            int ct = q.front();
            q.pop();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(ct, f);
                if (!g) continue;
                int& slot = c.tet_component[static_cast<std::size_t>(g->tet)];
                if (slot == -1) {
                    slot = comp;
                    q.push(g->tet);
                }
            }
        }
    }
    c.connected = (c.components <= 1);

    auto signs = compute_orientation(tri);
    c.orientable = signs.has_value();
    if (signs) c.tet_sign = *signs;

    c.closed = tri.closed();

    c.manifold = true;
    for (int v = 0; v < sk.vertex_count(); ++v) {
        Surface2D link = vertex_link(tri, sk, v);
        Skeleton2D lsk = compute_skeleton2d(link);
        if (lsk.component_count != 1) {
            c.manifold = false;
            continue;
        }
        bool sphere = lsk.boundary_curves[0] == 0 && lsk.euler[0] == 2;
        bool disc = lsk.boundary_curves[0] == 1 && lsk.euler[0] == 1 && lsk.orientable;
        if (!sphere && !disc) c.manifold = false;
    }

    // Simplicial: every simplex embeds and is determined by its vertex classes.
    c.simplicial = true;
    {
        std::set<std::array<int, 4>> tets;
        for (int t = 0; t < tri.size() && c.simplicial; ++t) {
            std::array<int, 4> vs;
            for (int v = 0; v < 4; ++v) vs[static_cast<std::size_t>(v)] = sk.corner(t, v);
            std::sort(vs.begin(), vs.end());
            if (vs[0] == vs[1] || vs[1] == vs[2] || vs[2] == vs[3]) c.simplicial = false;
            if (!tets.insert(vs).second) c.simplicial = false;
        }
        std::map<std::pair<int, int>, int> epairs;
        for (int t = 0; t < tri.size() && c.simplicial; ++t)
            for (int e = 0; e < 6; ++e) {
                auto [a, b] = kEdgeVertices[static_cast<std::size_t>(e)];
                int u = sk.corner(t, a), w = sk.corner(t, b);
                auto key = std::minmax(u, w);
                auto [it, fresh] = epairs.emplace(key, sk.edge_of(t, e));
                if (!fresh && it->second != sk.edge_of(t, e)) c.simplicial = false;
            }
        std::map<std::array<int, 3>, int> ftriples;
        for (int t = 0; t < tri.size() && c.simplicial; ++t)
            for (int f = 0; f < 4; ++f) {
                std::array<int, 3> key;
                for (int k = 0; k < 3; ++k)
                    key[static_cast<std::size_t>(k)] = sk.corner(t, kFaceVertices[static_cast<std::size_t>(f)][static_cast<std::size_t>(k)]);
                std::sort(key.begin(), key.end());
                auto [it, fresh] = ftriples.emplace(key, sk.face_of(t, f));
                if (!fresh && it->second != sk.face_of(t, f)) c.simplicial = false;
            }
    }

    if (!c.closed) {
        BoundaryComplex bc = boundary_complex(tri);
        Skeleton2D bsk = compute_skeleton2d(bc.surface);
        for (int comp = 0; comp < bsk.component_count; ++comp) {
            BoundarySummary s;
            s.euler = bsk.euler[static_cast<std::size_t>(comp)];
            s.genus = bsk.genus[static_cast<std::size_t>(comp)];
            s.orientable = bsk.orientable_component[static_cast<std::size_t>(comp)];
            s.vertices = bsk.vertices_per_component[static_cast<std::size_t>(comp)];
            c.boundary.push_back(s);
        }
    }
    return c;
}

}  // namespace nsg
