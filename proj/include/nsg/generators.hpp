#pragma once

// Families of triangulations with distinguished normal surfaces: cyclic
// one-tetrahedron chains, doubled chains of genus g, cyclic polytope
// boundaries, thickened one-vertex surfaces, and the shipped worked
// examples.  Every package is re-measured after assembly and the recorded
// manifest is checked against the recomputed values; a mismatch raises
// CheckFailure instead of returning questionable data.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/complex.hpp"
#include "nsg/coordinates.hpp"
#include "nsg/fixtures.hpp"
#include "nsg/homology.hpp"
#include "nsg/matching.hpp"
#include "nsg/regions.hpp"
#include "nsg/skeleton.hpp"
#include "nsg/surface2d.hpp"
#include "nsg/triangulation.hpp"

namespace nsg {

// A generated triangulation together with any distinguished surfaces on it
// and the invariants that were machine-checked during assembly.
struct GeneratedPackage {
    std::string name;
    Triangulation tri{0};
    std::vector<std::pair<std::string, NormalCoordinates>> surfaces;
    std::map<std::string, long long> manifest;
};

// Cut system used when thickening a one-vertex genus g surface: the 2g
// word loops all pass through the single vertex, so the cut graph has 2g
// edges meeting the vertex with degree 4g.  Inflating it costs one
// tetrahedron per loop plus a fan of 4g-2 around the vertex.
struct Frame {
    int edges = 0;
    int branch_degree = 0;
    int added_tetrahedra = 0;
};

inline Frame canonical_frame(int genus) {
    if (genus < 1) throw PreconditionError("canonical_frame: genus must be at least 1");
    return Frame{2 * genus, 4 * genus, 6 * genus - 2};
}

// ---------------------------------------------------------------------------
// colour-based splitting surfaces

// Coordinates of the two-sided surface separating colour-0 vertices from
// colour-1 vertices: a quad where a tetrahedron sees both colours twice, a
// triangle where a single corner is cut off.
inline NormalCoordinates splitting_coordinates(const Triangulation& tri, const Skeleton& sk,
                                               const std::vector<int>& colour) {
    auto c = NormalCoordinates::standard(tri.size());
    for (int t = 0; t < tri.size(); ++t) {
        std::vector<int> ones;
        for (int v = 0; v < 4; ++v)
            if (colour[static_cast<std::size_t>(sk.corner(t, v))]) ones.push_back(v);
        if (ones.size() == 2) {
            c.quad(t, quad_pairing(ones[0], ones[1])) += 1;
        } else if (ones.size() == 1) {
            c.tri(t, ones[0]) += 1;
        } else if (ones.size() == 3) {
            for (int v = 0; v < 4; ++v)
                if (std::find(ones.begin(), ones.end(), v) == ones.end()) c.tri(t, v) += 1;
        }
    }
    return c;
}

// Tetrahedron tally by number of colour-1 corners, indices 0..4.
inline std::array<int, 5> colour_histogram(const Triangulation& tri, const Skeleton& sk,
                                           const std::vector<int>& colour) {
    std::array<int, 5> h{0, 0, 0, 0, 0};
    for (int t = 0; t < tri.size(); ++t) {
        int ones = 0;
        for (int v = 0; v < 4; ++v) ones += colour[static_cast<std::size_t>(sk.corner(t, v))];
        ++h[static_cast<std::size_t>(ones)];
    }
    return h;
}

// Colour every vertex class by the boundary component carrying it.
// Requires every vertex to lie on the boundary and no vertex to touch two
// components.
inline std::vector<int> boundary_colour(const Triangulation& tri, const Skeleton& sk) {
    auto bc = boundary_complex(tri);
    auto bsk = compute_skeleton2d(bc.surface);
    std::vector<int> colour(static_cast<std::size_t>(sk.vertex_count()), -1);
    for (std::size_t i = 0; i < bc.triangle_source.size(); ++i) {
        auto [t, f] = bc.triangle_source[i];
        int comp = bsk.component[i];
        for (int v : kFaceVertices[static_cast<std::size_t>(f)]) {
            int cl = sk.corner(t, v);
            if (colour[static_cast<std::size_t>(cl)] == -1) {
                colour[static_cast<std::size_t>(cl)] = comp;
            } else if (colour[static_cast<std::size_t>(cl)] != comp) {
                throw CheckFailure("boundary_colour: vertex meets two boundary components");
            }
        }
    }
    for (int c : colour)
        if (c == -1) throw CheckFailure("boundary_colour: interior vertex");
    return colour;
}

// ---------------------------------------------------------------------------
// measurement

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure("generator check failed: " + what);
}

inline void measure_surface(const Triangulation& tri, const std::string& label,
                            const NormalCoordinates& c, std::map<std::string, long long>& out) {
    require(is_admissible(c), label + ": admissible");
    auto mc = check_matching(tri, c);
    require(mc.satisfied, label + ": matching (" + mc.failure + ")");
    auto ts = topology_summary(build_surface(tri, c));
    const std::string p = "surface." + label + ".";
    out[p + "components"] = static_cast<long long>(ts.components.size());
    require(ts.components.size() == 1, label + ": connected");
    const auto& comp = ts.components[0];
    out[p + "closed"] = comp.closed() ? 1 : 0;
    out[p + "orientable"] = comp.orientable ? 1 : 0;
    out[p + "genus"] = comp.genus;
    out[p + "euler"] = comp.chi;
    out[p + "quads"] = comp.quads;
    out[p + "triangles"] = comp.triangles;
    out[p + "vertices"] = comp.vertices;
}

// Recompute every invariant the manifests talk about.
inline std::map<std::string, long long> measure(const GeneratedPackage& pkg) {
    pkg.tri.validate();
    std::map<std::string, long long> m;
    Skeleton sk = compute_skeleton(pkg.tri);
    auto cls = classify(pkg.tri, sk);
    auto h = compute_homology(pkg.tri, sk);
    m["tetrahedra"] = pkg.tri.size();
    m["closed"] = cls.closed ? 1 : 0;
    m["orientable"] = cls.orientable ? 1 : 0;
    m["connected"] = cls.connected ? 1 : 0;
    m["manifold"] = cls.manifold ? 1 : 0;
    m["simplicial"] = cls.simplicial ? 1 : 0;
    m["vertices"] = sk.vertex_count();
    m["edges"] = static_cast<long long>(sk.edge_degree.size());
    m["boundary_faces"] = pkg.tri.boundary_face_count();
    m["boundary_components"] = static_cast<long long>(cls.boundary.size());
    m["h1_rank"] = h.betti[1];
    m["h1_torsion"] = static_cast<long long>(h.h1_torsion.size());
    m["h2_rank"] = h.betti[2];
    m["h3_rank"] = h.betti[3];
    int maxb = 0;
    for (int t = 0; t < pkg.tri.size(); ++t) {
        int bf = 0;
        for (int f = 0; f < 4; ++f) bf += pkg.tri.is_boundary(t, f) ? 1 : 0;
        maxb = std::max(maxb, bf);
    }
    m["max_boundary_faces_per_tet"] = maxb;
    for (std::size_t i = 0; i < cls.boundary.size(); ++i) {
        const auto& b = cls.boundary[i];
        const std::string p = "boundary." + std::to_string(i) + ".";
        m[p + "euler"] = b.euler;
        m[p + "genus"] = b.genus;
        m[p + "orientable"] = b.orientable ? 1 : 0;
        m[p + "vertices"] = b.vertices;
    }
    for (const auto& [label, c] : pkg.surfaces) measure_surface(pkg.tri, label, c, m);
    return m;
}

inline void add_census(GeneratedPackage& pkg, const Skeleton& sk, const std::vector<int>& colour) {
    auto h = colour_histogram(pkg.tri, sk, colour);
    pkg.manifest["census.away"] = h[0] + h[4];
    pkg.manifest["census.one"] = h[1];
    pkg.manifest["census.two"] = h[2];
    pkg.manifest["census.three"] = h[3];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// one-vertex surfaces and cones

// Closed orientable genus g surface with a single vertex: a fan of 4g-2
// triangles over a 4g-gon whose sides are glued in the pattern
// aba'b' repeated g times.
inline Surface2D one_vertex_surface(int genus) {
    if (genus < 1) throw PreconditionError("one_vertex_surface: genus must be at least 1");
    int nt = 4 * genus - 2;
    Surface2D s(nt);
    for (int t = 0; t + 1 < nt; ++t) s.glue(t, 1, t + 1, Perm3(0, 2, 1));
    // polygon side p lives on triangle pos[p].tri opposite vertex pos[p].edge,
    // running from corner stail to corner shead
    struct Side {
        int tri, edge, stail, shead;
    };
    std::vector<Side> pos(static_cast<std::size_t>(4 * genus));
    pos[0] = {0, 2, 0, 1};
    for (int p = 1; p <= 4 * genus - 2; ++p) pos[static_cast<std::size_t>(p)] = {p - 1, 0, 1, 2};
    pos[static_cast<std::size_t>(4 * genus - 1)] = {nt - 1, 1, 2, 0};
    for (int k = 0; k < genus; ++k)
        for (int d = 0; d < 2; ++d) {
            auto P = pos[static_cast<std::size_t>(4 * k + d)];
            auto Q = pos[static_cast<std::size_t>(4 * k + d + 2)];
            Perm3 perm;
            perm.img[static_cast<std::size_t>(P.stail)] = static_cast<std::uint8_t>(Q.shead);
            perm.img[static_cast<std::size_t>(P.shead)] = static_cast<std::uint8_t>(Q.stail);
            perm.img[static_cast<std::size_t>(P.edge)] = static_cast<std::uint8_t>(Q.edge);
            s.glue(P.tri, P.edge, Q.tri, perm);
        }
    s.validate();
    return s;
}

// Cone over a closed surface: one tetrahedron per triangle, apex at vertex 3,
// vertical faces glued like the surface, base faces left free.
inline Triangulation cone_over(const Surface2D& base) {
    Triangulation tri(base.size());
    for (int t = 0; t < base.size(); ++t)
        for (int e = 0; e < 3; ++e) {
            const auto& gl = base.gluing(t, e);
            if (!gl) continue;
            Perm4 p;
            for (int x = 0; x < 3; ++x) p.img[static_cast<std::size_t>(x)] = gl->perm.img[static_cast<std::size_t>(x)];
            p.img[3] = 3;
            tri.set_half(t, e, gl->tri, p);
        }
    return tri;
}

// ---------------------------------------------------------------------------
// cyclic chain with degree-one edges

// Quads dual to the degree-one edge (vertices 0,1) of each listed
// tetrahedron, lifted to standard coordinates.
inline NormalCoordinates an_dual_surface(const Triangulation& tri, const Skeleton& sk,
                                         const std::vector<int>& tets) {
    auto qc = NormalCoordinates::quads(tri.size());
    for (int t : tets) qc.quad(t, 0) = 1;
    return lift_to_standard(tri, sk, qc);
}

// Cycle of n one-tetrahedron blocks.  Each block keeps one edge of degree
// one; the quads dual to any k of those edges assemble into a closed
// orientable genus k surface.
inline GeneratedPackage family_an(int n) {
    if (n < 1) throw PreconditionError("family_an: n must be at least 1");
    Triangulation tri(n);
    for (int i = 0; i < n; ++i) {
        tri.glue(i, 3, i, Perm4{0, 1, 3, 2});
        tri.glue(i, 1, (i + 1) % n, Perm4{3, 0, 1, 2});
    }
    GeneratedPackage pkg{"an-" + std::to_string(n), std::move(tri), {}, {}};
    Skeleton sk = compute_skeleton(pkg.tri);

    std::set<int> classes;
    for (int t = 0; t < n; ++t) classes.insert(sk.edge_class[static_cast<std::size_t>(6 * t)]);
    detail::require(static_cast<int>(classes.size()) == n, "an: distinguished edges distinct");
    for (int c : classes)
        detail::require(sk.edge_degree[static_cast<std::size_t>(c)] == 1, "an: distinguished edge degree");
    int deg1 = 0;
    for (int d : sk.edge_degree) deg1 += (d == 1) ? 1 : 0;
    detail::require(deg1 == n, "an: degree-one edge count");

    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    pkg.surfaces.emplace_back("dual", an_dual_surface(pkg.tri, sk, all));
    pkg.manifest = detail::measure(pkg);
    pkg.manifest["degree_one_edges"] = deg1;

    const auto& m = pkg.manifest;
    detail::require(m.at("tetrahedra") == n && m.at("closed") == 1 && m.at("orientable") == 1 &&
                        m.at("connected") == 1 && m.at("manifold") == 1,
                    "an: shape");
    detail::require(m.at("vertices") == 1 && m.at("h1_rank") == 0 && m.at("h1_torsion") == 0 &&
                        m.at("h3_rank") == 1,
                    "an: homology");
    detail::require(m.at("surface.dual.closed") == 1 && m.at("surface.dual.orientable") == 1 &&
                        m.at("surface.dual.genus") == n && m.at("surface.dual.quads") == n,
                    "an: dual surface");

    // exhaustive dual-surface check where affordable, singletons otherwise
    std::vector<std::vector<int>> subsets;
    if (n <= 6) {
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) sub.push_back(i);
            subsets.push_back(std::move(sub));
        }
    } else {
        for (int i = 0; i < n; ++i) subsets.push_back({i});
    }
    for (const auto& sub : subsets) {
        int k = static_cast<int>(sub.size());
        auto ts = topology_summary(build_surface(pkg.tri, an_dual_surface(pkg.tri, sk, sub)));
        detail::require(ts.components.size() == 1, "an: subset dual connected");
        const auto& comp = ts.components[0];
        detail::require(comp.closed() && comp.orientable && comp.genus == k && comp.quads == k,
                        "an: subset dual genus");
    }
    return pkg;
}

// ---------------------------------------------------------------------------
// doubled chain of genus g

// Doubled chain of g two-tetrahedron blocks.  Vertices 0,2 and 1,3 of every
// tetrahedron land on opposite sides of a one-quad-per-tetrahedron
// splitting surface of genus g.
inline GeneratedPackage family_bg(int genus) {
    if (genus < 2) throw PreconditionError("family_bg: genus must be at least 2");
    std::string text = "tri " + std::to_string(2 * genus) + "\n";
    auto row = [&](int i, int a, const char* fa, int b, const char* fb, int c, const char* fc,
                   int d, const char* fd) {
        text += std::to_string(i) + ": " + std::to_string(a) + "(" + fa + ") " + std::to_string(b) +
                "(" + fb + ") " + std::to_string(c) + "(" + fc + ") " + std::to_string(d) + "(" +
                fd + ")\n";
    };
    row(0, 0, "032", 1, "013", 0, "021", 1, "123");
    for (int k = 1; k <= genus - 1; ++k) {
        row(2 * k - 1, 2 * k, "012", 2 * k - 2, "013", 2 * k, "023", 2 * k - 2, "123");
        row(2 * k, 2 * k - 1, "012", 2 * k + 1, "013", 2 * k - 1, "023", 2 * k + 1, "123");
    }
    row(2 * genus - 1, 2 * genus - 1, "032", 2 * genus - 2, "013", 2 * genus - 1, "021",
        2 * genus - 2, "123");

    GeneratedPackage pkg{"bg-" + std::to_string(genus), parse_triangulation(text), {}, {}};
    auto coords = NormalCoordinates::standard(pkg.tri.size());
    for (int t = 0; t < pkg.tri.size(); ++t) coords.quad(t, 1) = 1;
    pkg.surfaces.emplace_back("splitting", std::move(coords));
    pkg.manifest = detail::measure(pkg);

    const auto& m = pkg.manifest;
    detail::require(m.at("tetrahedra") == 2 * genus && m.at("closed") == 1 &&
                        m.at("orientable") == 1 && m.at("connected") == 1 && m.at("manifold") == 1,
                    "bg: shape");
    detail::require(m.at("vertices") == 3 && m.at("h1_rank") == 0 && m.at("h1_torsion") == 0 &&
                        m.at("h3_rank") == 1,
                    "bg: homology");
    detail::require(m.at("surface.splitting.closed") == 1 &&
                        m.at("surface.splitting.orientable") == 1 &&
                        m.at("surface.splitting.genus") == genus &&
                        m.at("surface.splitting.quads") == 2 * genus &&
                        m.at("surface.splitting.triangles") == 0 &&
                        m.at("surface.splitting.vertices") == 2,
                    "bg: splitting surface");
    // all-quad identity: quads = 2 genus + vertices - 2
    detail::require(m.at("surface.splitting.quads") ==
                        2 * m.at("surface.splitting.genus") + m.at("surface.splitting.vertices") - 2,
                    "bg: quad count identity");
    return pkg;
}

// ---------------------------------------------------------------------------
// cyclic polytope boundaries

namespace detail {

// Facets of the cyclic 4-polytope on n vertices: the 4-subsets satisfying
// the evenness condition (between any two outside vertices an even number
// of subset members).
inline std::vector<std::array<int, 4>> gale_facets(int n) {
    std::vector<std::array<int, 4>> out;
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == 4) {
            for (int u = 0; u < n; ++u) {
                if (in[static_cast<std::size_t>(u)]) continue;
                for (int w = u + 1; w < n; ++w) {
                    if (in[static_cast<std::size_t>(w)]) continue;
                    int between = 0;
                    for (int x = u + 1; x < w; ++x) between += in[static_cast<std::size_t>(x)] ? 1 : 0;
                    if (between & 1) return;
                }
            }
            std::array<int, 4> f{};
            int k = 0;
            for (int v = 0; v < n; ++v)
                if (in[static_cast<std::size_t>(v)]) f[static_cast<std::size_t>(k++)] = v;
            out.push_back(f);
            return;
        }
        for (int v = start; v < n; ++v) {
            in[static_cast<std::size_t>(v)] = true;
            rec(v + 1, depth + 1);
            in[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace detail

// Boundary of the cyclic 4-polytope on n vertices (n even, at least 8),
// glued along shared triangles.  The parity colouring of the vertices
// yields an all-quad splitting surface of genus n^2/8 - 3n/4 + 1.
inline GeneratedPackage gale(int n) {
    if (n < 8 || n % 2 != 0) throw PreconditionError("gale: n must be even and at least 8");
    auto facets = detail::gale_facets(n);
    std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> by_triple;
    for (int t = 0; t < static_cast<int>(facets.size()); ++t)
        for (int f = 0; f < 4; ++f) {
            std::array<int, 3> tr{};
            int k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != f) tr[static_cast<std::size_t>(k++)] = facets[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
            by_triple[tr].push_back({t, f});
        }
    Triangulation tri(static_cast<int>(facets.size()));
    for (const auto& [tr, inc] : by_triple) {
        detail::require(inc.size() == 2, "gale: triangle in two facets");
        auto [t1, f1] = inc[0];
        auto [t2, f2] = inc[1];
        auto local = [&](int t, int gv) {
            for (int v = 0; v < 4; ++v)
                if (facets[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] == gv) return v;
            return -1;
        };
        Perm4 p;
        for (int v = 0; v < 4; ++v) {
            int gv = facets[static_cast<std::size_t>(t1)][static_cast<std::size_t>(v)];
            p.img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v == f1 ? f2 : local(t2, gv));
        }
        tri.set_half(t1, f1, t2, p);
        tri.set_half(t2, f2, t1, p.inverse());
    }

    GeneratedPackage pkg{"gale-" + std::to_string(n), std::move(tri), {}, {}};
    Skeleton sk = compute_skeleton(pkg.tri);
    std::vector<int> colour(static_cast<std::size_t>(sk.vertex_count()), -1);
    for (int t = 0; t < pkg.tri.size(); ++t)
        for (int v = 0; v < 4; ++v) {
            int cl = sk.corner(t, v);
            int want = facets[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] % 2;
            if (colour[static_cast<std::size_t>(cl)] == -1) colour[static_cast<std::size_t>(cl)] = want;
            detail::require(colour[static_cast<std::size_t>(cl)] == want, "gale: parity colouring");
        }
    pkg.surfaces.emplace_back("splitting", splitting_coordinates(pkg.tri, sk, colour));
    pkg.manifest = detail::measure(pkg);
    detail::add_census(pkg, sk, colour);

    long long tets = static_cast<long long>(n) * (n - 3) / 2;
    long long g = static_cast<long long>(n) * n / 8 - 3 * n / 4 + 1;
    const auto& m = pkg.manifest;
    detail::require(m.at("tetrahedra") == tets && m.at("closed") == 1 && m.at("orientable") == 1 &&
                        m.at("connected") == 1 && m.at("manifold") == 1 && m.at("simplicial") == 1,
                    "gale: shape");
    detail::require(m.at("vertices") == n, "gale: vertex count");
    detail::require(m.at("census.away") == 0 && m.at("census.one") == 0 &&
                        m.at("census.three") == 0 && m.at("census.two") == tets,
                    "gale: every tetrahedron carries one quad");
    detail::require(m.at("surface.splitting.closed") == 1 &&
                        m.at("surface.splitting.orientable") == 1 &&
                        m.at("surface.splitting.genus") == g &&
                        m.at("surface.splitting.quads") == tets &&
                        m.at("surface.splitting.triangles") == 0 &&
                        m.at("surface.splitting.vertices") == n * n / 4,
                    "gale: splitting surface");
    detail::require(m.at("surface.splitting.quads") ==
                        2 * m.at("surface.splitting.genus") + m.at("surface.splitting.vertices") - 2,
                    "gale: quad count identity");
    return pkg;
}

// ---------------------------------------------------------------------------
// thickened one-vertex surfaces

// Thickened closed orientable genus g surface, built by coning the
// one-vertex surface and inflating the cut system from canonical_frame:
// each word loop gets an edge tetrahedron spliced into its base gluing, and
// a second fan of 4g-2 tetrahedra is coned over the 4g-gon of loop ends
// around the vertex.  Result: 10g-4 tetrahedra, two genus g boundary
// surfaces with one vertex each, and a genus g splitting surface with 2g
// quads between them.
inline GeneratedPackage inflate_fxi(int genus) {
    if (genus < 1) throw PreconditionError("inflate_fxi: genus must be at least 1");
    int g = genus;
    int nb = 4 * g - 2;
    Triangulation tri(10 * g - 4);
    Surface2D F = one_vertex_surface(g);
    {
        Triangulation base = cone_over(F);
        for (int t = 0; t < base.size(); ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& gl = base.gluing(t, f);
                if (gl) tri.set_half(t, f, gl->tet, gl->perm);
            }
    }
    struct Side {
        int tri, edge, stail, shead;
    };
    std::vector<Side> pos(static_cast<std::size_t>(4 * g));
    pos[0] = {0, 2, 0, 1};
    for (int p = 1; p <= 4 * g - 2; ++p) pos[static_cast<std::size_t>(p)] = {p - 1, 0, 1, 2};
    pos[static_cast<std::size_t>(4 * g - 1)] = {nb - 1, 1, 2, 0};

    // second fan, coned over the polygon of loop ends around the vertex
    int K0 = nb + 2 * g;
    std::vector<Side> lat(static_cast<std::size_t>(4 * g));
    lat[0] = {K0, 2, 0, 1};
    for (int q = 1; q <= 4 * g - 2; ++q) lat[static_cast<std::size_t>(q)] = {K0 + q - 1, 0, 1, 2};
    lat[static_cast<std::size_t>(4 * g - 1)] = {K0 + nb - 1, 1, 2, 0};
    for (int t = 0; t + 1 < nb; ++t) tri.glue(K0 + t, 1, K0 + t + 1, Perm4{0, 2, 1, 3});

    // cyclic order of loop ends around the vertex: crossing the tail end at
    // polygon corner q lands at corner partner(q)+1
    auto partner = [](int p) { return (p % 4 < 2) ? p + 2 : p - 2; };
    std::vector<int> slot_of(static_cast<std::size_t>(4 * g));
    {
        int q = 0;
        for (int mslot = 0; mslot < 4 * g; ++mslot) {
            slot_of[static_cast<std::size_t>(q)] = mslot;
            q = (partner(q) + 1) % (4 * g);
        }
    }

    // splice one edge tetrahedron into the base gluing of each word loop
    int j = 0;
    for (int k = 0; k < g; ++k)
        for (int d = 0; d < 2; ++d, ++j) {
            int P = 4 * k + d, Q = 4 * k + d + 2;
            auto pd = pos[static_cast<std::size_t>(P)];
            auto qd = pos[static_cast<std::size_t>(Q)];
            auto G = *tri.gluing(pd.tri, pd.edge);
            int b = pd.stail, c = pd.shead;
            int b2 = G.perm[b], c2 = G.perm[c];
            tri.clear_gluing(pd.tri, pd.edge);
            int E = nb + j;
            {
                Perm4 pa;
                pa.img[3] = 0;
                pa.img[static_cast<std::size_t>(b)] = 3;
                pa.img[static_cast<std::size_t>(c)] = 2;
                pa.img[static_cast<std::size_t>(pd.edge)] = 1;
                tri.glue(pd.tri, pd.edge, E, pa);
            }
            {
                Perm4 pb;
                pb.img[1] = 3;
                pb.img[3] = static_cast<std::uint8_t>(b2);
                pb.img[2] = static_cast<std::uint8_t>(c2);
                pb.img[0] = static_cast<std::uint8_t>(qd.edge);
                tri.glue(E, 0, qd.tri, pb);
            }
            auto Lc = lat[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(Q)])];
            auto Lb = lat[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(P)])];
            {
                Perm4 p;
                p.img[2] = 3;
                p.img[0] = static_cast<std::uint8_t>(Lc.shead);
                p.img[1] = static_cast<std::uint8_t>(Lc.stail);
                p.img[3] = static_cast<std::uint8_t>(Lc.edge);
                tri.glue(E, 3, Lc.tri, p);
            }
            {
                Perm4 p;
                p.img[3] = 3;
                p.img[0] = static_cast<std::uint8_t>(Lb.stail);
                p.img[1] = static_cast<std::uint8_t>(Lb.shead);
                p.img[2] = static_cast<std::uint8_t>(Lb.edge);
                tri.glue(E, 2, Lb.tri, p);
            }
        }

    GeneratedPackage pkg{"fxi-" + std::to_string(g), std::move(tri), {}, {}};
    Skeleton sk = compute_skeleton(pkg.tri);
    auto colour = boundary_colour(pkg.tri, sk);
    pkg.surfaces.emplace_back("splitting", splitting_coordinates(pkg.tri, sk, colour));
    pkg.manifest = detail::measure(pkg);
    detail::add_census(pkg, sk, colour);
    Frame fr = canonical_frame(g);
    pkg.manifest["frame.edges"] = fr.edges;
    pkg.manifest["frame.branch_degree"] = fr.branch_degree;
    pkg.manifest["frame.added_tetrahedra"] = fr.added_tetrahedra;
    pkg.manifest["base.tetrahedra"] = nb;

    const auto& m = pkg.manifest;
    detail::require(m.at("tetrahedra") == 10 * g - 4 &&
                        m.at("tetrahedra") == nb + fr.added_tetrahedra,
                    "fxi: size");
    detail::require(m.at("closed") == 0 && m.at("orientable") == 1 && m.at("connected") == 1 &&
                        m.at("manifold") == 1,
                    "fxi: shape");
    detail::require(m.at("vertices") == 2 && m.at("boundary_components") == 2, "fxi: vertices");
    for (int i = 0; i < 2; ++i) {
        const std::string p = "boundary." + std::to_string(i) + ".";
        detail::require(m.at(p + "genus") == g && m.at(p + "orientable") == 1 &&
                            m.at(p + "vertices") == 1,
                        "fxi: boundary surface");
    }
    detail::require(m.at("h1_rank") == 2 * g && m.at("h1_torsion") == 0 && m.at("h2_rank") == 1,
                    "fxi: homology");
    detail::require(m.at("max_boundary_faces_per_tet") == 1, "fxi: boundary faces spread out");
    detail::require(m.at("census.away") == 0 && m.at("census.two") == 2 * g &&
                        m.at("census.one") == 4 * g - 2 && m.at("census.three") == 4 * g - 2,
                    "fxi: census");
    detail::require(m.at("surface.splitting.closed") == 1 &&
                        m.at("surface.splitting.orientable") == 1 &&
                        m.at("surface.splitting.genus") == g &&
                        m.at("surface.splitting.quads") == 2 * g &&
                        m.at("surface.splitting.triangles") == 8 * g - 4,
                    "fxi: splitting surface");
    {
        auto rd = region_decomposition(build_surface(pkg.tri, pkg.surfaces[0].second));
        detail::require(rd.triangle_regions.size() == 2, "fxi: two triangle regions");
        for (const auto& r : rd.triangle_regions)
            detail::require(r.simply_connected && r.chains.size() == 1 && r.chains[0] == 4 * g,
                            "fxi: region chain length");
        pkg.manifest["surface.splitting.disc_regions"] = 2;
        pkg.manifest["surface.splitting.chain_length"] = 4 * g;
    }
    return pkg;
}

// ---------------------------------------------------------------------------
// thickened spheres

namespace detail {

// The three five-tetrahedron thickened spheres, told apart by their edge
// degree sequences.
inline const char* kSphereBlockA =
    "tri 5\n"
    "0: bdy 2(320) 1(023) 1(123)\n"
    "1: bdy 2(321) 0(023) 0(123)\n"
    "2: 3(123) 4(123) 0(310) 1(310)\n"
    "3: bdy 3(023) 3(013) 2(012)\n"
    "4: bdy 4(023) 4(013) 2(013)\n";

inline const char* kSphereBlockB =
    "tri 5\n"
    "0: bdy 2(012) 0(123) 0(023)\n"
    "1: bdy 2(013) 1(123) 1(023)\n"
    "2: 0(013) 1(013) 4(301) 3(301)\n"
    "3: bdy 2(231) 3(123) 3(023)\n"
    "4: bdy 2(230) 4(123) 4(023)\n";

inline const char* kSphereBlockC =
    "tri 5\n"
    "0: bdy 1(123) 0(123) 0(023)\n"
    "1: bdy 2(013) 2(012) 0(013)\n"
    "2: 1(023) 1(013) 4(301) 3(301)\n"
    "3: bdy 2(231) 3(123) 3(023)\n"
    "4: bdy 2(230) 4(123) 4(023)\n";

// Assemble the first variant the same way as inflate_fxi, with a
// single-edge cut system on the two-triangle sphere: cone the doubled
// triangle (tets 0,1), splice the edge tetrahedron 2 into the face pair
// (0,2)-(1,2), then cone tetrahedra 3,4 over the two loop-end triangles.
inline Triangulation sphere_block_assembled() {
    Triangulation tri(5);
    tri.glue(0, 0, 1, Perm4{});
    tri.glue(0, 1, 1, Perm4{});
    {
        Perm4 pa;
        pa.img[3] = 0;
        pa.img[0] = 3;
        pa.img[1] = 2;
        pa.img[2] = 1;
        tri.glue(0, 2, 2, pa);
    }
    {
        Perm4 pb;
        pb.img[1] = 3;
        pb.img[3] = 0;
        pb.img[2] = 1;
        pb.img[0] = 2;
        tri.glue(2, 0, 1, pb);
    }
    tri.glue(3, 0, 2, Perm4{3, 0, 1, 2});
    tri.glue(3, 1, 3, Perm4{0, 2, 1, 3});
    tri.glue(4, 0, 2, Perm4{2, 0, 1, 3});
    tri.glue(4, 1, 4, Perm4{0, 2, 1, 3});
    return tri;
}

inline GeneratedPackage sphere_block_package(std::string name, Triangulation tri,
                                             const std::vector<int>& degrees) {
    GeneratedPackage pkg{std::move(name), std::move(tri), {}, {}};
    Skeleton sk = compute_skeleton(pkg.tri);
    auto colour = boundary_colour(pkg.tri, sk);
    pkg.surfaces.emplace_back("splitting", splitting_coordinates(pkg.tri, sk, colour));
    pkg.manifest = detail::measure(pkg);
    detail::add_census(pkg, sk, colour);

    std::vector<int> degs = sk.edge_degree;
    std::sort(degs.begin(), degs.end());
    require(degs == degrees, pkg.name + ": edge degree sequence");

    const auto& m = pkg.manifest;
    require(m.at("tetrahedra") == 5 && m.at("closed") == 0 && m.at("orientable") == 1 &&
                m.at("connected") == 1 && m.at("manifold") == 1,
            pkg.name + ": shape");
    require(m.at("boundary_components") == 2, pkg.name + ": boundary count");
    for (int i = 0; i < 2; ++i) {
        const std::string p = "boundary." + std::to_string(i) + ".";
        require(m.at(p + "euler") == 2 && m.at(p + "genus") == 0, pkg.name + ": sphere boundary");
    }
    require(m.at("h1_rank") == 0 && m.at("h1_torsion") == 0 && m.at("h2_rank") == 1 &&
                m.at("h3_rank") == 0,
            pkg.name + ": homology");
    require(m.at("max_boundary_faces_per_tet") == 1, pkg.name + ": boundary faces spread out");
    require(m.at("census.away") == 0 && m.at("census.two") == 1 && m.at("census.one") == 2 &&
                m.at("census.three") == 2,
            pkg.name + ": census");
    require(m.at("surface.splitting.closed") == 1 && m.at("surface.splitting.orientable") == 1 &&
                m.at("surface.splitting.genus") == 0 && m.at("surface.splitting.quads") == 1 &&
                m.at("surface.splitting.triangles") == 4,
            pkg.name + ": splitting sphere");
    return pkg;
}

}  // namespace detail

// Thickened spheres on five tetrahedra with two sphere boundary components
// and a one-quad splitting sphere.  The first package is assembled by the
// same inflation as inflate_fxi and must reproduce its shipped table; with
// all_variants the other two shipped variants are included as well.
inline std::vector<GeneratedPackage> s2xi(bool all_variants = false) {
    std::vector<GeneratedPackage> out;
    Triangulation built = detail::sphere_block_assembled();
    detail::require(serialize_triangulation(built) == detail::kSphereBlockA,
                    "s2xi: assembled table matches the shipped one");
    out.push_back(detail::sphere_block_package("s2xi", std::move(built),
                                               {1, 1, 2, 2, 2, 2, 2, 3, 3, 6, 6}));
    if (all_variants) {
        out.push_back(detail::sphere_block_package("s2xi-b",
                                                   parse_triangulation(detail::kSphereBlockB),
                                                   {1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 12}));
        out.push_back(detail::sphere_block_package("s2xi-c",
                                                   parse_triangulation(detail::kSphereBlockC),
                                                   {1, 1, 1, 2, 2, 2, 2, 3, 3, 5, 8}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// shipped worked examples

namespace detail {

// Torus with two quads on ex6.9, the least such vertex surface in
// coordinate order.
inline const char* kTwoQuadTorus =
    "surface std 6\n"
    "0: 0 0 0 0 ; 0 0 1\n"
    "1: 0 0 0 1 ; 0 0 0\n"
    "2: 0 0 1 0 ; 0 0 0\n"
    "3: 0 1 0 0 ; 0 0 0\n"
    "4: 1 0 0 0 ; 0 0 0\n"
    "5: 0 0 0 0 ; 0 1 0\n";

inline const std::map<std::string, std::map<std::string, long long>>& fixture_manifests() {
    auto closed_common = [](long long tets, long long edges, long long h1, long long h2,
                            long long simplicial) {
        return std::map<std::string, long long>{
            {"tetrahedra", tets},     {"closed", 1},
            {"orientable", 1},        {"connected", 1},
            {"manifold", 1},          {"simplicial", simplicial},
            {"vertices", 1},          {"edges", edges},
            {"boundary_faces", 0},    {"boundary_components", 0},
            {"h1_rank", h1},          {"h1_torsion", 0},
            {"h2_rank", h2},          {"h3_rank", 1},
            {"max_boundary_faces_per_tet", 0},
        };
    };
    static const std::map<std::string, std::map<std::string, long long>> table = [&] {
        std::map<std::string, std::map<std::string, long long>> t;
        t["ex6.1"] = closed_common(1, 2, 0, 0, 0);
        t["ex6.4"] = closed_common(6, 7, 0, 0, 0);
        t["ex6.5"] = closed_common(4, 5, 0, 0, 0);
        t["ex6.7"] = {
            {"tetrahedra", 4},     {"closed", 0},
            {"orientable", 1},     {"connected", 1},
            {"manifold", 1},       {"simplicial", 0},
            {"vertices", 3},       {"edges", 7},
            {"boundary_faces", 2}, {"boundary_components", 1},
            {"h1_rank", 0},        {"h1_torsion", 0},
            {"h2_rank", 0},        {"h3_rank", 0},
            {"max_boundary_faces_per_tet", 1},
            {"boundary.0.euler", 2},
            {"boundary.0.genus", 0},
            {"boundary.0.orientable", 1},
            {"boundary.0.vertices", 3},
        };
        t["ex6.8"] = closed_common(8, 9, 1, 1, 0);
        auto& e8 = t["ex6.8"];
        e8["surface.s1.components"] = 1;
        e8["surface.s1.closed"] = 1;
        e8["surface.s1.orientable"] = 0;
        e8["surface.s1.genus"] = 4;
        e8["surface.s1.euler"] = -2;
        e8["surface.s1.quads"] = 1;
        e8["surface.s1.triangles"] = 14;
        e8["surface.s1.vertices"] = 6;
        e8["surface.s2.components"] = 1;
        e8["surface.s2.closed"] = 1;
        e8["surface.s2.orientable"] = 1;
        e8["surface.s2.genus"] = 3;
        e8["surface.s2.euler"] = -4;
        e8["surface.s2.quads"] = 2;
        e8["surface.s2.triangles"] = 20;
        e8["surface.s2.vertices"] = 8;
        t["ex6.9"] = closed_common(6, 7, 3, 3, 0);
        auto& e9 = t["ex6.9"];
        e9["surface.torus.components"] = 1;
        e9["surface.torus.closed"] = 1;
        e9["surface.torus.orientable"] = 1;
        e9["surface.torus.genus"] = 1;
        e9["surface.torus.euler"] = 0;
        e9["surface.torus.quads"] = 2;
        e9["surface.torus.triangles"] = 4;
        e9["surface.torus.vertices"] = 4;
        t["ex6.10"] = closed_common(5, 6, 1, 1, 0);
        return t;
    }();
    return table;
}

}  // namespace detail

// One of the shipped worked examples, re-checked against its recorded
// invariants on every load.  ex6.8 carries its two shipped surfaces and
// ex6.9 a two-quad torus.
inline GeneratedPackage fixture_package(const std::string& name) {
    const auto& data = fixture_data(name);
    GeneratedPackage pkg{name, parse_triangulation(data.tri_text), {}, {}};
    for (const auto& [sname, stext] : data.surfaces)
        pkg.surfaces.emplace_back(sname, parse_surface(stext));
    if (name == "ex6.9") pkg.surfaces.emplace_back("torus", parse_surface(detail::kTwoQuadTorus));

    auto measured = detail::measure(pkg);
    const auto& expected = detail::fixture_manifests().at(name);
    for (const auto& [key, want] : expected) {
        auto it = measured.find(key);
        detail::require(it != measured.end() && it->second == want, name + ": manifest " + key);
    }
    detail::require(measured.size() == expected.size(), name + ": manifest key set");
    pkg.manifest = std::move(measured);
    return pkg;
}

}  // namespace nsg
