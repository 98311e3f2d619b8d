#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nsg/bigint.hpp"
#include "nsg/skeleton.hpp"
#include "nsg/triangulation.hpp"

namespace nsg {

// Quad type q separates kQuadPairs[q][0] from kQuadPairs[q][1].
constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kQuadPairs = {{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

// The quad type keeping a and b on the same side; its quads are exactly the
// ones disjoint from edge {a,b}.  The other two types cross that edge.
constexpr int quad_pairing(int a, int b) {
    if (a > b) {
        int t = a;
        a = b;
        b = t;
    }
    if ((a == 0 && b == 1) || (a == 2 && b == 3)) return 0;
    if ((a == 0 && b == 2) || (a == 1 && b == 3)) return 1;
    return 2;
}

// Normal surface coordinates: per tetrahedron either the full
// (t0,t1,t2,t3,q1,q2,q3) block or the quad triple alone.
struct NormalCoordinates {
    bool quad_only = false;
    int tets = 0;
    std::vector<Int> v;

    static NormalCoordinates standard(int n) {
        NormalCoordinates c;
        c.tets = n;
        c.v.assign(static_cast<std::size_t>(7 * n), 0);
        return c;
    }
    static NormalCoordinates quads(int n) {
        NormalCoordinates c;
        c.quad_only = true;
        c.tets = n;
        c.v.assign(static_cast<std::size_t>(3 * n), 0);
        return c;
    }

    int block() const { return quad_only ? 3 : 7; }
    int dim() const { return block() * tets; }

    Int& tri(int t, int vtx) { return v[static_cast<std::size_t>(7 * t + vtx)]; }
    const Int& tri(int t, int vtx) const { return v[static_cast<std::size_t>(7 * t + vtx)]; }
    Int& quad(int t, int q) { return v[static_cast<std::size_t>(block() * t + (quad_only ? 0 : 4) + q)]; }
    const Int& quad(int t, int q) const {
        return v[static_cast<std::size_t>(block() * t + (quad_only ? 0 : 4) + q)];
    }

    bool nonnegative() const {
        for (const Int& x : v)
            if (x < 0) return false;
        return true;
    }
    bool zero() const {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const NormalCoordinates& a, const NormalCoordinates& b) {
        return a.quad_only == b.quad_only && a.tets == b.tets && a.v == b.v;
    }
};

inline NormalCoordinates quad_projection(const NormalCoordinates& c) {
    if (c.quad_only) return c;
    NormalCoordinates q = NormalCoordinates::quads(c.tets);
    for (int t = 0; t < c.tets; ++t)
        for (int k = 0; k < 3; ++k) q.quad(t, k) = c.quad(t, k);
    return q;
}

// At most one quad type per tetrahedron may be nonzero.
inline bool is_admissible(const NormalCoordinates& c) {
    for (int t = 0; t < c.tets; ++t) {
        int positive = 0;
        for (int k = 0; k < 3; ++k)
            if (c.quad(t, k) != 0) ++positive;
        if (positive > 1) return false;
    }
    return true;
}

inline NormalCoordinates vertex_link_coordinates(const Skeleton& sk, int vclass) {
    NormalCoordinates c = NormalCoordinates::standard(sk.n);
    for (int t = 0; t < sk.n; ++t)
        for (int v = 0; v < 4; ++v)
            if (sk.corner(t, v) == vclass) c.tri(t, v) += 1;
    return c;
}

inline NormalCoordinates all_vertex_links(const Skeleton& sk) {
    NormalCoordinates c = NormalCoordinates::standard(sk.n);
    for (int t = 0; t < sk.n; ++t)
        for (int v = 0; v < 4; ++v) c.tri(t, v) += 1;
    return c;
}

inline NormalCoordinates add(const NormalCoordinates& a, const NormalCoordinates& b) {
    if (a.quad_only != b.quad_only || a.tets != b.tets)
        throw PreconditionError("cannot add coordinates of different shapes");
    NormalCoordinates r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
    return r;
}

inline NormalCoordinates scale(const NormalCoordinates& a, const Int& k) {
    NormalCoordinates r = a;
    for (Int& x : r.v) x *= k;
    return r;
}

// Weighted sum of compatible surfaces.  Summands must not mix quad types
// within any tetrahedron, so the result is admissible whenever all inputs
// are; geometrically the sum resolves every intersection.
inline NormalCoordinates haken_sum(const std::vector<std::pair<Int, NormalCoordinates>>& summands) {
    if (summands.empty()) throw PreconditionError("empty sum");
    for (const auto& [mult, c] : summands) {
        if (mult < 0) throw PreconditionError("negative multiplicity");
        if (c.quad_only != summands.front().second.quad_only || c.tets != summands.front().second.tets)
            throw PreconditionError("cannot add coordinates of different shapes");
    }
    int n = summands.front().second.tets;
    for (int t = 0; t < n; ++t) {
        int used = -1;
        for (const auto& [mult, c] : summands) {
            if (mult == 0) continue;
            for (int k = 0; k < 3; ++k) {
                if (c.quad(t, k) == 0) continue;
                if (used >= 0 && used != k)
                    throw PreconditionError("summands use conflicting quad types in tetrahedron " +
                                            std::to_string(t));
                used = k;
            }
        }
    }
    NormalCoordinates r = summands.front().second.quad_only
                              ? NormalCoordinates::quads(n)
                              : NormalCoordinates::standard(n);
    for (const auto& [mult, c] : summands) r = add(r, scale(c, mult));
    return r;
}

// Points where the surface crosses an edge instance: the two end triangles
// plus the two quad types whose discs cross the edge.
inline Int edge_weight_at(const NormalCoordinates& c, int t, int e) {
    auto [a, b] = kEdgeVertices[static_cast<std::size_t>(e)];
    Int w = 0;
    int skip = quad_pairing(a, b);
    for (int k = 0; k < 3; ++k)
        if (k != skip) w += c.quad(t, k);
    if (!c.quad_only) w += c.tri(t, a) + c.tri(t, b);
    return w;
}

// Per edge class; throws unless all instances agree (standard coordinates
// satisfying the matching equations always do).
inline std::vector<Int> edge_weights(const Triangulation& tri, const Skeleton& sk, const NormalCoordinates& c) {
    std::vector<Int> w(static_cast<std::size_t>(sk.edge_count()));
    std::vector<bool> seen(static_cast<std::size_t>(sk.edge_count()), false);
    for (int t = 0; t < tri.size(); ++t)
        for (int e = 0; e < 6; ++e) {
            int cls = sk.edge_of(t, e);
            Int here = edge_weight_at(c, t, e);
            if (!seen[static_cast<std::size_t>(cls)]) {
                seen[static_cast<std::size_t>(cls)] = true;
                w[static_cast<std::size_t>(cls)] = here;
            } else if (w[static_cast<std::size_t>(cls)] != here) {
                throw PreconditionError("edge weights disagree across an edge class");
            }
        }
    return w;
}

namespace detail {

inline Int parse_int_token(const std::string& tok, int line, int col) {
    if (tok.empty()) throw ParseError("expected integer", line, col);
    for (char ch : tok)
        if (ch < '0' || ch > '9') throw ParseError("bad coordinate '" + tok + "'", line, col);
    return Int(tok);
}

}  // namespace detail

// surface <std|quad> <n> header, then one row per tetrahedron:
//   std:   i: t0 t1 t2 t3 ; q1 q2 q3
//   quad:  i: q1 q2 q3
inline NormalCoordinates parse_surface(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, raw)) {
            ++lineno;
            std::string s = raw.substr(0, raw.find('#'));
            std::size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            std::size_t b = s.find_last_not_of(" \t\r");
            out = s.substr(a, b - a + 1);
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw ParseError("empty surface description", lineno, 1);
    std::istringstream hdr(line);
    std::string kw, kind;
    int n = -1;
    if (!(hdr >> kw >> kind >> n) || kw != "surface" || (kind != "std" && kind != "quad") || n < 0) {
        throw ParseError("expected 'surface <std|quad> <count>'", lineno, 1);
    }
    std::string extra;
    if (hdr >> extra) throw ParseError("trailing tokens after header", lineno, 1);

    bool quad_only = (kind == "quad");
    NormalCoordinates c = quad_only ? NormalCoordinates::quads(n) : NormalCoordinates::standard(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);

    for (int row = 0; row < n; ++row) {
        if (!next_line(line)) throw ParseError("expected " + std::to_string(n) + " rows", lineno, 1);
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected '<index>:'", lineno, 1);
        int idx;
        try {
            std::size_t used = 0;
            idx = std::stoi(line.substr(0, colon), &used);
            while (used < colon && (line[used] == ' ' || line[used] == '\t')) ++used;
            if (used != colon) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad row index", lineno, 1);
        }
        if (idx < 0 || idx >= n) throw ParseError("row index out of range", lineno, 1);
        if (seen[static_cast<std::size_t>(idx)]) throw ParseError("duplicate row", lineno, 1);
        seen[static_cast<std::size_t>(idx)] = true;

        std::istringstream body(line.substr(colon + 1));
        std::vector<std::string> toks;
        std::string tok;
        while (body >> tok) toks.push_back(tok);
        if (quad_only) {
            if (toks.size() != 3) throw ParseError("expected 3 quad entries", lineno, 1);
            for (int k = 0; k < 3; ++k)
                c.quad(idx, k) = detail::parse_int_token(toks[static_cast<std::size_t>(k)], lineno, 1);
        } else {
            if (toks.size() != 8 || toks[4] != ";")
                throw ParseError("expected 't0 t1 t2 t3 ; q1 q2 q3'", lineno, 1);
            for (int k = 0; k < 4; ++k)
                c.tri(idx, k) = detail::parse_int_token(toks[static_cast<std::size_t>(k)], lineno, 1);
            for (int k = 0; k < 3; ++k)
                c.quad(idx, k) = detail::parse_int_token(toks[static_cast<std::size_t>(5 + k)], lineno, 1);
        }
    }
    if (next_line(line)) throw ParseError("unexpected content after last row", lineno, 1);
    return c;
}

inline std::string serialize_surface(const NormalCoordinates& c) {
    std::ostringstream out;
    out << "surface " << (c.quad_only ? "quad" : "std") << ' ' << c.tets << '\n';
    for (int t = 0; t < c.tets; ++t) {
        out << t << ':';
        if (!c.quad_only) {
            for (int k = 0; k < 4; ++k) out << ' ' << c.tri(t, k);
            out << " ;";
        }
        for (int k = 0; k < 3; ++k) out << ' ' << c.quad(t, k);
        out << '\n';
    }
    return out.str();
}

}  // namespace nsg
