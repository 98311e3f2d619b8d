#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nsg/triangulation.hpp"

namespace nsg {

struct Perm3 {
    std::array<std::uint8_t, 3> img{0, 1, 2};

    constexpr Perm3() = default;
    constexpr Perm3(int a, int b, int c)
        : img{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)} {}

    constexpr int operator[](int i) const { return img[static_cast<std::size_t>(i)]; }

    constexpr Perm3 inverse() const {
        Perm3 r;
        for (int i = 0; i < 3; ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    friend constexpr Perm3 operator*(const Perm3& a, const Perm3& b) {
        Perm3 r;
        for (int i = 0; i < 3; ++i) r.img[i] = a.img[b.img[i]];
        return r;
    }

    friend constexpr bool operator==(const Perm3& a, const Perm3& b) { return a.img == b.img; }

    constexpr bool is_identity() const { return img[0] == 0 && img[1] == 1 && img[2] == 2; }

    constexpr int parity() const {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (img[i] > img[j]) ++inv;
        return inv & 1;
    }
};

// Edge i of a 2-simplex is the edge opposite vertex i.
constexpr std::array<std::array<int, 2>, 3> kEdgeVertices2 = {{{1, 2}, {0, 2}, {0, 1}}};

struct Gluing2 {
    int tri = -1;
    Perm3 perm;  // full vertex bijection; maps the edge onto edge perm[e]
};

// A triangulated surface given by triangle edge pairings, same conventions as
// the 3-dimensional case one dimension down.
class Surface2D {
public:
    explicit Surface2D(int n = 0) : gluings_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(gluings_.size()); }

    const std::optional<Gluing2>& gluing(int t, int e) const {
        return gluings_[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)];
    }

    void glue(int t, int e, int other, const Perm3& perm) {
        set_half(t, e, other, perm);
        set_half(other, perm[e], t, perm.inverse());
    }

    void set_half(int t, int e, int other, const Perm3& perm) {
        gluings_[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] = Gluing2{other, perm};
    }

    void validate() const {
        for (int t = 0; t < size(); ++t)
            for (int e = 0; e < 3; ++e) {
                const auto& g = gluing(t, e);
                if (!g) continue;
                if (g->tri < 0 || g->tri >= size())
                    throw InvalidTriangulation("surface gluing target out of range");
                int pe = g->perm[e];
                if (g->tri == t && pe == e)
                    throw InvalidTriangulation("surface edge glued to itself");
                const auto& back = gluing(g->tri, pe);
                if (!back || back->tri != t || !(back->perm * g->perm).is_identity())
                    throw InvalidTriangulation("surface gluings not mutually inverse");
            }
    }

private:
    std::vector<std::array<std::optional<Gluing2>, 3>> gluings_;
};

struct Skeleton2D {
    int vertex_count = 0;
    int edge_count = 0;
    int boundary_edges = 0;
    std::vector<int> vertex_class;  // corner 3t+v -> class
    std::vector<int> component;     // triangle -> component
    int component_count = 0;
    bool orientable = true;  // all components
    std::vector<bool> orientable_component;
    std::vector<int> euler;            // per component
    std::vector<int> boundary_curves;  // per component
    std::vector<int> genus;            // per component; crosscap count if non-orientable
    std::vector<int> vertices_per_component;

    int total_euler() const {
        int s = 0;
        for (int e : euler) s += e;
        return s;
    }
};

inline Skeleton2D compute_skeleton2d(const Surface2D& s) {
    Skeleton2D sk;
    int n = s.size();

    sk.vertex_class.assign(static_cast<std::size_t>(3 * n), -1);
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 3; ++v) {
            if (sk.vertex_class[static_cast<std::size_t>(3 * t + v)] != -1) continue;
            int cls = sk.vertex_count++;
            std::queue<std::pair<int, int>> q;
            q.emplace(t, v);
            sk.vertex_class[static_cast<std::size_t>(3 * t + v)] = cls;
            while (!q.empty()) {
                auto [ct, cv] = q.front();
                q.pop();
                for (int e = 0; e < 3; ++e) {
                    if (e == cv) continue;
                    const auto& g = s.gluing(ct, e);
                    if (!g) continue;
                    int nt = g->tri, nv = g->perm[cv];
                    auto& slot = sk.vertex_class[static_cast<std::size_t>(3 * nt + nv)];
                    if (slot == -1) {
                        slot = cls;
                        q.emplace(nt, nv);
                    }
                }
            }
        }

    // Edge classes: glued pairs count once.
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 3; ++e) {
            const auto& g = s.gluing(t, e);
            if (!g) {
                ++sk.edge_count;
                ++sk.boundary_edges;
            } else if (std::make_pair(g->tri, g->perm[e]) >= std::make_pair(t, e)) {
                ++sk.edge_count;
            }
        }

    // Components and orientability (odd gluing parity keeps the sign).
    sk.component.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> sign(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < n; ++t) {
        if (sk.component[static_cast<std::size_t>(t)] != -1) continue;
        int comp = sk.component_count++;
        sk.orientable_component.push_back(true);
        std::queue<int> q;
        q.push(t);
        sk.component[static_cast<std::size_t>(t)] = comp;
        sign[static_cast<std::size_t>(t)] = 1;
        while (!q.empty()) {
            int ct = q.front();
            q.pop();
            for (int e = 0; e < 3; ++e) {
                const auto& g = s.gluing(ct, e);
                if (!g) continue;
                int want = sign[static_cast<std::size_t>(ct)] * (g->perm.parity() ? 1 : -1);
                auto& cslot = sk.component[static_cast<std::size_t>(g->tri)];
                if (cslot == -1) {
                    cslot = comp;
                    sign[static_cast<std::size_t>(g->tri)] = want;
                    q.push(g->tri);
                } else if (sign[static_cast<std::size_t>(g->tri)] != want) {
                    sk.orientable = false;
                    sk.orientable_component[static_cast<std::size_t>(comp)] = false;
                }
            }
        }
    }

    // Per-component counts.
    std::vector<int> fc(static_cast<std::size_t>(sk.component_count), 0);
    std::vector<int> ec(static_cast<std::size_t>(sk.component_count), 0);
    std::vector<int> bc(static_cast<std::size_t>(sk.component_count), 0);
    std::vector<int> vc(static_cast<std::size_t>(sk.component_count), 0);
    for (int t = 0; t < n; ++t) ++fc[static_cast<std::size_t>(sk.component[static_cast<std::size_t>(t)])];
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 3; ++e) {
            const auto& g = s.gluing(t, e);
            int comp = sk.component[static_cast<std::size_t>(t)];
            if (!g) {
                ++ec[static_cast<std::size_t>(comp)];
            } else if (std::make_pair(g->tri, g->perm[e]) >= std::make_pair(t, e)) {
                ++ec[static_cast<std::size_t>(comp)];
            }
        }
    {
        std::vector<int> vcomp(static_cast<std::size_t>(sk.vertex_count), -1);
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 3; ++v)
                vcomp[static_cast<std::size_t>(sk.vertex_class[static_cast<std::size_t>(3 * t + v)])] =
                    sk.component[static_cast<std::size_t>(t)];
        for (int c : vcomp)
            if (c >= 0) ++vc[static_cast<std::size_t>(c)];
    }

    // Boundary curves: boundary edges chained through boundary corner classes.
    {
        // Each boundary vertex class meets exactly two boundary edge ends.
        std::vector<std::vector<int>> ends(static_cast<std::size_t>(sk.vertex_count));
        std::vector<std::pair<int, int>> bedges;
        for (int t = 0; t < n; ++t)
            for (int e = 0; e < 3; ++e)
                if (!s.gluing(t, e)) {
                    int id = static_cast<int>(bedges.size());
                    bedges.emplace_back(t, e);
                    for (int v : kEdgeVertices2[static_cast<std::size_t>(e)])
                        ends[static_cast<std::size_t>(sk.vertex_class[static_cast<std::size_t>(3 * t + v)])].push_back(id);
                }
        for (const auto& lst : ends)
            if (!lst.empty() && lst.size() != 2)
                throw InvalidTriangulation("surface boundary is not a 1-manifold");
        // Union-find over boundary edges sharing a vertex class.
        std::vector<int> parent(bedges.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& lst : ends)
            if (lst.size() == 2) parent[static_cast<std::size_t>(find(lst[1]))] = find(lst[0]);
        for (std::size_t i = 0; i < bedges.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i))
                ++bc[static_cast<std::size_t>(sk.component[static_cast<std::size_t>(bedges[i].first)])];
    }

    sk.euler.resize(static_cast<std::size_t>(sk.component_count));
    sk.boundary_curves = bc;
    sk.vertices_per_component = vc;
    sk.genus.resize(static_cast<std::size_t>(sk.component_count));
    for (int c = 0; c < sk.component_count; ++c) {
        int chi = vc[static_cast<std::size_t>(c)] - ec[static_cast<std::size_t>(c)] + fc[static_cast<std::size_t>(c)];
        sk.euler[static_cast<std::size_t>(c)] = chi;
        int b = bc[static_cast<std::size_t>(c)];
        if (sk.orientable_component[static_cast<std::size_t>(c)]) {
            int twice = 2 - chi - b;
            if (twice < 0 || twice % 2 != 0) throw InvalidTriangulation("inconsistent surface Euler characteristic");
            sk.genus[static_cast<std::size_t>(c)] = twice / 2;
        } else {
            sk.genus[static_cast<std::size_t>(c)] = 2 - chi - b;
        }
    }
    return sk;
}

// The boundary surface of a triangulation, one 2-simplex per boundary face,
// glued by walking the fans around boundary edges.  triangle_source[i] gives
// the originating (tetrahedron, face); 2D vertex k of triangle i corresponds
// to vertex kFaceVertices[face][k] of that tetrahedron.
struct BoundaryComplex {
    Surface2D surface{0};
    std::vector<std::pair<int, int>> triangle_source;
};

inline BoundaryComplex boundary_complex(const Triangulation& tri) {
    BoundaryComplex bc;
    std::vector<int> index(static_cast<std::size_t>(4 * tri.size()), -1);
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.is_boundary(t, f)) {
                index[static_cast<std::size_t>(4 * t + f)] = static_cast<int>(bc.triangle_source.size());
                bc.triangle_source.emplace_back(t, f);
            }
    bc.surface = Surface2D(static_cast<int>(bc.triangle_source.size()));

    auto pos_in_face = [](int face, int v) {
        const auto& fv = kFaceVertices[static_cast<std::size_t>(face)];
        for (int k = 0; k < 3; ++k)
            if (fv[static_cast<std::size_t>(k)] == v) return k;
        throw std::logic_error("vertex not in face");
    };

    for (std::size_t i = 0; i < bc.triangle_source.size(); ++i) {
        auto [t, f] = bc.triangle_source[i];
        for (int k = 0; k < 3; ++k) {  // 2D edge opposite 2D vertex k
            const auto& fv = kFaceVertices[static_cast<std::size_t>(f)];
            int x = fv[static_cast<std::size_t>((k + 1) % 3)];
            int y = fv[static_cast<std::size_t>((k + 2) % 3)];
            // Walk around the edge {x,y} from face f through the interior.
            int ct = t, cx = x, cy = y;
            int cf = 6 - f - x - y;  // the other face of ct containing {cx,cy}
            while (true) {
                const auto& g = tri.gluing(ct, cf);
                if (!g) break;
                int nt = g->tet, nx = g->perm[cx], ny = g->perm[cy], entered = g->perm[cf];
                ct = nt;
                cx = nx;
                cy = ny;
                cf = 6 - entered - nx - ny;
            }
            int j = index[static_cast<std::size_t>(4 * ct + cf)];
            // 2D bijection: x -> cx, y -> cy, remaining vertex to remaining.
            Perm3 p;
            p.img[static_cast<std::size_t>(pos_in_face(f, x))] = static_cast<std::uint8_t>(pos_in_face(cf, cx));
            p.img[static_cast<std::size_t>(pos_in_face(f, y))] = static_cast<std::uint8_t>(pos_in_face(cf, cy));
            int rem = 6 - f - x - y;  // third vertex of face f
            int crem = 6 - cf - cx - cy;
            p.img[static_cast<std::size_t>(pos_in_face(f, rem))] = static_cast<std::uint8_t>(pos_in_face(cf, crem));
            if (static_cast<std::size_t>(j) == i && p[k] == k)
                throw InvalidTriangulation("boundary edge identified with itself");
            bc.surface.set_half(static_cast<int>(i), k, j, p);
        }
    }
    bc.surface.validate();
    return bc;
}

}  // namespace nsg
