#pragma once

#include <algorithm>
#include <array>
#include <queue>
#include <utility>
#include <vector>

#include "nsg/triangulation.hpp"

namespace nsg {

// Quotient 0-, 1- and 2-skeleton of a triangulation.  Every class carries a
// representative simplex; edge and face instances record how they sit over
// their representative (a sign), which is what the homology boundary maps
// need.  An edge identified with itself reversed makes the quotient map
// non-injective on the edge interior, so it is rejected.
struct Skeleton {
    int n = 0;

    std::vector<int> vertex_class;  // corner 4t+v -> class
    std::vector<std::vector<std::pair<int, int>>> vertex_members;
    std::vector<bool> vertex_on_boundary;

    std::vector<int> edge_class;  // instance 6t+e -> class
    std::vector<int> edge_sign;   // ascending orientation of instance vs class rep
    std::vector<std::pair<int, int>> edge_rep;  // class -> (tet, edge idx)
    std::vector<int> edge_degree;
    std::vector<bool> edge_on_boundary;

    std::vector<int> face_class;  // instance 4t+f -> class
    std::vector<int> face_sign;   // parity of instance over rep
    std::vector<std::pair<int, int>> face_rep;  // class -> (tet, face)
    std::vector<bool> face_on_boundary;

    int vertex_count() const { return static_cast<int>(vertex_members.size()); }
    int edge_count() const { return static_cast<int>(edge_rep.size()); }
    int face_count() const { return static_cast<int>(face_rep.size()); }

    int corner(int t, int v) const { return vertex_class[static_cast<std::size_t>(4 * t + v)]; }
    int edge_of(int t, int e) const { return edge_class[static_cast<std::size_t>(6 * t + e)]; }
    int face_of(int t, int f) const { return face_class[static_cast<std::size_t>(4 * t + f)]; }
};

inline Skeleton compute_skeleton(const Triangulation& tri) {
    tri.validate();
    Skeleton sk;
    int n = sk.n = tri.size();

    // Vertices.
    sk.vertex_class.assign(static_cast<std::size_t>(4 * n), -1);
    for (int t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) {
            if (sk.vertex_class[static_cast<std::size_t>(4 * t + v)] != -1) continue;
            int cls = static_cast<int>(sk.vertex_members.size());
            sk.vertex_members.emplace_back();
            std::queue<std::pair<int, int>> q;
            q.emplace(t, v);
            sk.vertex_class[static_cast<std::size_t>(4 * t + v)] = cls;
            while (!q.empty()) {
                auto [ct, cv] = q.front();
                q.pop();
                sk.vertex_members.back().emplace_back(ct, cv);
                for (int f = 0; f < 4; ++f) {
                    if (f == cv) continue;  // face must contain the vertex
                    const auto& g = tri.gluing(ct, f);
                    if (!g) continue;
                    int nt = g->tet, nv = g->perm[cv];
                    auto& slot = sk.vertex_class[static_cast<std::size_t>(4 * nt + nv)];
                    if (slot == -1) {
                        slot = cls;
                        q.emplace(nt, nv);
                    }
                }
            }
        }
    }
    sk.vertex_on_boundary.assign(sk.vertex_members.size(), false);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.is_boundary(t, f))
                for (int v : kFaceVertices[static_cast<std::size_t>(f)])
                    sk.vertex_on_boundary[static_cast<std::size_t>(sk.corner(t, v))] = true;

    // Edges, with orientation tracking.
    sk.edge_class.assign(static_cast<std::size_t>(6 * n), -1);
    sk.edge_sign.assign(static_cast<std::size_t>(6 * n), 0);
    for (int t = 0; t < n; ++t) {
        for (int e = 0; e < 6; ++e) {
            if (sk.edge_class[static_cast<std::size_t>(6 * t + e)] != -1) continue;
            int cls = static_cast<int>(sk.edge_rep.size());
            sk.edge_rep.emplace_back(t, e);
            sk.edge_degree.push_back(0);
            std::queue<int> q;
            sk.edge_class[static_cast<std::size_t>(6 * t + e)] = cls;
            sk.edge_sign[static_cast<std::size_t>(6 * t + e)] = 1;
            q.push(6 * t + e);
            while (!q.empty()) {
                int inst = q.front();
                q.pop();
                ++sk.edge_degree[static_cast<std::size_t>(cls)];
                int ct = inst / 6, ce = inst % 6;
                int a = kEdgeVertices[static_cast<std::size_t>(ce)][0];
                int b = kEdgeVertices[static_cast<std::size_t>(ce)][1];
                int csign = sk.edge_sign[static_cast<std::size_t>(inst)];
                for (int f = 0; f < 4; ++f) {
                    if (f == a || f == b) continue;  // face must contain the edge
                    const auto& g = tri.gluing(ct, f);
                    if (!g) continue;
                    int na = g->perm[a], nb = g->perm[b];
                    int ninst = 6 * g->tet + edge_index(na, nb);
                    int nsign = csign * ((na < nb) ? 1 : -1);
                    auto& slot = sk.edge_class[static_cast<std::size_t>(ninst)];
                    if (slot == -1) {
                        slot = cls;
                        sk.edge_sign[static_cast<std::size_t>(ninst)] = nsign;
                        q.push(ninst);
                    } else if (sk.edge_sign[static_cast<std::size_t>(ninst)] != nsign) {
                        throw InvalidTriangulation(
                            "edge " + std::to_string(a) + std::to_string(b) + " of tetrahedron " +
                            std::to_string(ct) + " is identified with itself reversed");
                    }
                }
            }
        }
    }
    sk.edge_on_boundary.assign(sk.edge_rep.size(), false);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.is_boundary(t, f)) {
                const auto& fv = kFaceVertices[static_cast<std::size_t>(f)];
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        sk.edge_on_boundary[static_cast<std::size_t>(
                            sk.edge_of(t, edge_index(fv[static_cast<std::size_t>(i)], fv[static_cast<std::size_t>(j)])))] = true;
            }

    // Faces.
    sk.face_class.assign(static_cast<std::size_t>(4 * n), -1);
    sk.face_sign.assign(static_cast<std::size_t>(4 * n), 0);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            int inst = 4 * t + f;
            if (sk.face_class[static_cast<std::size_t>(inst)] != -1) continue;
            int cls = static_cast<int>(sk.face_rep.size());
            sk.face_rep.emplace_back(t, f);
            sk.face_class[static_cast<std::size_t>(inst)] = cls;
            sk.face_sign[static_cast<std::size_t>(inst)] = 1;
            sk.face_on_boundary.push_back(tri.is_boundary(t, f));
            const auto& g = tri.gluing(t, f);
            if (g) {
                int pf = g->perm[f];
                int pinst = 4 * g->tet + pf;
                const auto& src = kFaceVertices[static_cast<std::size_t>(f)];
                std::array<int, 3> image{g->perm[src[0]], g->perm[src[1]], g->perm[src[2]]};
                sk.face_class[static_cast<std::size_t>(pinst)] = cls;
                sk.face_sign[static_cast<std::size_t>(pinst)] = parity3(image) ? -1 : 1;
            }
        }
    }
    return sk;
}

// Census helpers used by reports and tests.
inline std::vector<int> edge_degree_census(const Skeleton& sk) {
    std::vector<int> d = sk.edge_degree;
    std::sort(d.begin(), d.end());
    return d;
}

inline std::vector<int> boundary_faces_per_tet(const Triangulation& tri) {
    std::vector<int> c(static_cast<std::size_t>(tri.size()), 0);
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.is_boundary(t, f)) ++c[static_cast<std::size_t>(t)];
    return c;
}

}  // namespace nsg
