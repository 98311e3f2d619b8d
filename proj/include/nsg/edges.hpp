#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/complex.hpp"

namespace nsg {

// Transverse orientations and the induced edge classes of a closed
// orientable surface in an orientable triangulation.  Each disc gets a sign
// against its reference co-orientation: triangles point away from their
// vertex, quads toward the pair not containing vertex 0.  An arc is short
// when the positive side of its face contains the corner the arc cuts off;
// a triangle whose arcs are short is small, otherwise large.
struct EdgeClassification {
    std::vector<int> disc_tau;     // +-1 per disc
    std::vector<bool> side_short;  // per side id
    // Edges below are canonical side ids: min(side, partner).
    std::vector<std::vector<int>> long_edge_classes;  // long quad edges joined through quads
    std::vector<std::vector<int>> vertical_paths;     // short quad edges chained across long gluings

    bool small_triangle(int d) const { return disc_tau[static_cast<std::size_t>(d)] < 0; }
};

namespace detail {

// Whether the reference co-orientation puts the cut-off corner on the
// positive side of the arc.
inline bool ref_cutoff_positive(const DiscRef& d, int j) {
    if (!d.is_quad()) return false;
    int cut = disc::side_cutoff(d, j);
    const auto& pair2 = kQuadPairs[static_cast<std::size_t>(d.quad_type())][1];
    return cut == pair2[0] || cut == pair2[1];
}

}  // namespace detail

inline EdgeClassification edge_classification(const Triangulation& tri, const NormalSurfaceComplex& S,
                                              bool flip = false) {
    if (!compute_orientation(tri))
        throw PreconditionError("edge classification needs an orientable triangulation");
    for (int s = 0; s < S.side_base.back(); ++s)
        if (S.side_partner[static_cast<std::size_t>(s)] < 0)
            throw PreconditionError("edge classification needs a closed surface");
    for (bool ok : S.component_orientable)
        if (!ok) throw PreconditionError("edge classification needs an orientable surface");

    EdgeClassification out;
    out.disc_tau.assign(S.discs.size(), 0);
    int total_sides = S.side_base.back();
    out.side_short.assign(static_cast<std::size_t>(total_sides), false);

    for (int d0 = 0; d0 < S.size(); ++d0) {
        if (out.disc_tau[static_cast<std::size_t>(d0)] != 0) continue;
        out.disc_tau[static_cast<std::size_t>(d0)] = flip ? -1 : 1;
        std::queue<int> q;
        q.push(d0);
        while (!q.empty()) {
            int d = q.front();
            q.pop();
            for (int j = 0; j < S.sides(d); ++j) {
                int s = S.side_id(d, j);
                int p = S.side_partner[static_cast<std::size_t>(s)];
                int nd = S.side_disc[static_cast<std::size_t>(p)];
                bool same = detail::ref_cutoff_positive(S.discs[static_cast<std::size_t>(d)], j) ==
                            detail::ref_cutoff_positive(S.discs[static_cast<std::size_t>(nd)],
                                                        S.side_index(p));
                int want = same ? out.disc_tau[static_cast<std::size_t>(d)]
                                : -out.disc_tau[static_cast<std::size_t>(d)];
                int& have = out.disc_tau[static_cast<std::size_t>(nd)];
                if (have == 0) {
                    have = want;
                    q.push(nd);
                } else if (have != want) {
                    throw CheckFailure("internal: transverse orientation fails to propagate");
                }
            }
        }
    }

    for (int s = 0; s < total_sides; ++s) {
        int d = S.side_disc[static_cast<std::size_t>(s)];
        bool ref = detail::ref_cutoff_positive(S.discs[static_cast<std::size_t>(d)], S.side_index(s));
        out.side_short[static_cast<std::size_t>(s)] =
            ref != (out.disc_tau[static_cast<std::size_t>(d)] < 0);
    }
    for (int s = 0; s < total_sides; ++s) {
        int p = S.side_partner[static_cast<std::size_t>(s)];
        if (out.side_short[static_cast<std::size_t>(s)] != out.side_short[static_cast<std::size_t>(p)])
            throw CheckFailure("internal: arc class disagrees across a gluing");
    }
    for (int d = 0; d < S.size(); ++d) {
        if (!S.discs[static_cast<std::size_t>(d)].is_quad()) continue;
        int shorts = 0;
        for (int j = 0; j < 4; ++j)
            if (out.side_short[static_cast<std::size_t>(S.side_id(d, j))]) ++shorts;
        if (shorts != 2) throw CheckFailure("internal: quad without two short and two long edges");
    }

    auto canon = [&](int s) { return std::min(s, S.side_partner[static_cast<std::size_t>(s)]); };
    auto quad_edge = [&](int s) {
        return S.discs[static_cast<std::size_t>(S.side_disc[static_cast<std::size_t>(s)])].is_quad() ||
               S.discs[static_cast<std::size_t>(
                           S.side_disc[static_cast<std::size_t>(S.side_partner[static_cast<std::size_t>(s)])])]
                   .is_quad();
    };

    // Long edges, joined when one quad carries both.
    {
        std::map<int, int> index;
        for (int s = 0; s < total_sides; ++s)
            if (!out.side_short[static_cast<std::size_t>(s)] && quad_edge(s)) index.emplace(canon(s), 0);
        int n = 0;
        for (auto& kv : index) kv.second = n++;
        detail::CornerFind uf(n);
        for (int d = 0; d < S.size(); ++d) {
            if (!S.discs[static_cast<std::size_t>(d)].is_quad()) continue;
            int prev = -1;
            for (int j = 0; j < 4; ++j) {
                int s = S.side_id(d, j);
                if (out.side_short[static_cast<std::size_t>(s)]) continue;
                int idx = index.at(canon(s));
                if (prev >= 0) uf.unite(prev, idx);
                prev = idx;
            }
        }
        std::map<int, std::size_t> cls;
        for (const auto& kv : index) {
            int root = uf.find(kv.second);
            auto it = cls.find(root);
            if (it == cls.end()) {
                it = cls.emplace(root, out.long_edge_classes.size()).first;
                out.long_edge_classes.emplace_back();
            }
            out.long_edge_classes[it->second].push_back(kv.first);
        }
    }

    // Vertical paths: at both ends of a long gluing between two quads, the
    // flanking short edges continue one another.
    {
        std::map<int, int> index;
        for (int s = 0; s < total_sides; ++s)
            if (out.side_short[static_cast<std::size_t>(s)] && quad_edge(s)) index.emplace(canon(s), 0);
        int n = 0;
        for (auto& kv : index) kv.second = n++;
        detail::CornerFind uf(n);
        auto adjacent_short = [&](int s, bool at_tail) {
            int d = S.side_disc[static_cast<std::size_t>(s)];
            int j = S.side_index(s);
            int m = S.sides(d);
            return S.side_id(d, at_tail ? (j + m - 1) % m : (j + 1) % m);
        };
        for (int s = 0; s < total_sides; ++s) {
            int p = S.side_partner[static_cast<std::size_t>(s)];
            if (p < s || out.side_short[static_cast<std::size_t>(s)]) continue;
            const DiscRef& A = S.discs[static_cast<std::size_t>(S.side_disc[static_cast<std::size_t>(s)])];
            const DiscRef& B = S.discs[static_cast<std::size_t>(S.side_disc[static_cast<std::size_t>(p)])];
            if (!A.is_quad() || !B.is_quad()) continue;
            bool parallel = S.side_parallel[static_cast<std::size_t>(s)];
            for (bool tail : {true, false}) {
                int sa = adjacent_short(s, tail);
                int sb = adjacent_short(p, parallel ? tail : !tail);
                uf.unite(index.at(canon(sa)), index.at(canon(sb)));
            }
        }
        std::map<int, std::size_t> cls;
        for (const auto& kv : index) {
            int root = uf.find(kv.second);
            auto it = cls.find(root);
            if (it == cls.end()) {
                it = cls.emplace(root, out.vertical_paths.size()).first;
                out.vertical_paths.emplace_back();
            }
            out.vertical_paths[it->second].push_back(kv.first);
        }
    }
    return out;
}

}  // namespace nsg
