#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "nsg/complex.hpp"

namespace nsg {

// A region: the closure of a connected piece of the all-triangle (or
// all-quad) part of the surface.  Pieces are joined across glued arcs whose
// two discs have the same kind; arcs against the other kind, and arcs in
// boundary faces, bound the region.  chains lists the edge count of each
// boundary circuit of the region's compact core.
struct Region {
    bool quads = false;
    std::vector<int> discs;
    long long chi = 0;  // of the closure inside the surface
    int interior_vertices = 0;
    std::vector<int> chains;
    bool simply_connected = false;
};

struct RegionDecomposition {
    std::vector<Region> triangle_regions;
    std::vector<Region> quad_regions;
    // Shortest boundary circuit over triangle regions whose interior is not
    // an open disc; empty when every triangle region is one.
    std::optional<long long> min_chain_length;
};

namespace detail {

inline std::vector<Region> regions_of_kind(const NormalSurfaceComplex& S, bool quads) {
    std::vector<int> region_of(S.discs.size(), -1);
    std::vector<Region> out;

    auto in_kind = [&](int d) { return S.discs[static_cast<std::size_t>(d)].is_quad() == quads; };
    auto interior_side = [&](int s) {
        int p = S.side_partner[static_cast<std::size_t>(s)];
        return p >= 0 && in_kind(S.side_disc[static_cast<std::size_t>(p)]);
    };

    for (int d0 = 0; d0 < S.size(); ++d0) {
        if (!in_kind(d0) || region_of[static_cast<std::size_t>(d0)] != -1) continue;
        Region r;
        r.quads = quads;
        std::vector<int> stack = {d0};
        region_of[static_cast<std::size_t>(d0)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            r.discs.push_back(d);
            for (int j = 0; j < S.sides(d); ++j) {
                int s = S.side_id(d, j);
                if (!interior_side(s)) continue;
                int nd = S.side_disc[static_cast<std::size_t>(
                    S.side_partner[static_cast<std::size_t>(s)])];
                if (region_of[static_cast<std::size_t>(nd)] == -1) {
                    region_of[static_cast<std::size_t>(nd)] = static_cast<int>(out.size());
                    stack.push_back(nd);
                }
            }
        }

        // Cell counts of the closure.
        long long edges = 0;
        std::vector<int> boundary_sides;
        std::set<int> classes;
        for (int d : r.discs)
            for (int j = 0; j < S.sides(d); ++j) {
                int s = S.side_id(d, j);
                classes.insert(S.corner_class[static_cast<std::size_t>(s)]);
                if (interior_side(s)) {
                    if (S.side_partner[static_cast<std::size_t>(s)] > s) ++edges;
                } else {
                    ++edges;
                    boundary_sides.push_back(s);
                }
            }
        r.chi = static_cast<long long>(classes.size()) - edges +
                static_cast<long long>(r.discs.size());

        if (!quads) {
            std::set<std::pair<int, int>> kinds;
            for (int d : r.discs)
                if (!kinds.insert({S.discs[static_cast<std::size_t>(d)].tet,
                                   S.discs[static_cast<std::size_t>(d)].type})
                         .second)
                    throw CheckFailure("triangle region carries two parallel copies of a disc");
        }

        // Boundary corner classes, with the number of disc fans each one has
        // inside this region (two boundary side ends delimit one fan).
        std::vector<int> end_count;
        auto note_end = [&](int corner) {
            int cls = S.corner_class[static_cast<std::size_t>(corner)];
            if (cls >= static_cast<int>(end_count.size())) end_count.resize(static_cast<std::size_t>(cls) + 1, 0);
            ++end_count[static_cast<std::size_t>(cls)];
        };
        for (int s : boundary_sides) {
            int d = S.side_disc[static_cast<std::size_t>(s)];
            note_end(s);
            note_end(S.side_id(d, (S.side_index(s) + 1) % S.sides(d)));
        }
        long long fan_vertices = 0;
        for (int cls : classes) {
            int ends = cls < static_cast<int>(end_count.size()) ? end_count[static_cast<std::size_t>(cls)] : 0;
            if (ends == 0) {
                ++r.interior_vertices;
                ++fan_vertices;
            } else {
                if (ends % 2 != 0) throw CheckFailure("internal: region fan ends do not pair up");
                fan_vertices += ends / 2;
            }
        }

        // Boundary circuits: follow the fan of glued sides around each corner
        // from one boundary side to the next.
        auto head_corner = [&](int s) {
            int d = S.side_disc[static_cast<std::size_t>(s)];
            return S.side_id(d, (S.side_index(s) + 1) % S.sides(d));
        };
        // next side along the circuit, and whether it is entered at its tail
        auto next_boundary = [&](int s, bool entered_tail) {
            int d = S.side_disc[static_cast<std::size_t>(s)];
            int corner = entered_tail ? head_corner(s) : s;
            int via = s;
            for (int guard = 0; guard < 8 * S.side_base.back() + 8; ++guard) {
                int jc = S.side_index(corner);
                int m = S.sides(d);
                int other = S.side_id(d, jc == S.side_index(via) ? (jc + m - 1) % m : jc);
                if (!interior_side(other)) return std::pair<int, bool>{other, corner == other};
                int p = S.side_partner[static_cast<std::size_t>(other)];
                bool at_tail = (corner == other);
                bool parallel = S.side_parallel[static_cast<std::size_t>(other)];
                int d2 = S.side_disc[static_cast<std::size_t>(p)];
                corner = (parallel == at_tail) ? p : head_corner(p);
                d = d2;
                via = p;
            }
            throw CheckFailure("internal: region boundary walk failed to terminate");
        };
        std::set<int> unvisited(boundary_sides.begin(), boundary_sides.end());
        while (!unvisited.empty()) {
            int start = *unvisited.begin();
            int length = 0;
            int s = start;
            bool tail_entry = true;
            do {
                unvisited.erase(s);
                ++length;
                auto [ns, nt] = next_boundary(s, tail_entry);
                s = ns;
                tail_entry = nt;
            } while (s != start && length <= static_cast<int>(boundary_sides.size()));
            if (s != start) throw CheckFailure("internal: region boundary walk failed to close up");
            r.chains.push_back(length);
        }

        if (boundary_sides.empty()) {
            r.simply_connected = (r.chi == 2);
        } else {
            long long chi_core = fan_vertices - edges + static_cast<long long>(r.discs.size());
            long long twice_genus = 2 - static_cast<long long>(r.chains.size()) - chi_core;
            if (twice_genus < 0 || twice_genus % 2 != 0)
                throw CheckFailure("internal: inconsistent region Euler characteristic");
            r.simply_connected =
                twice_genus == 0 && static_cast<long long>(r.chains.size()) + r.interior_vertices == 1;
            if (!quads && twice_genus != 0)
                throw CheckFailure("triangle region has positive genus");
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

inline RegionDecomposition region_decomposition(const NormalSurfaceComplex& S) {
    RegionDecomposition out;
    out.triangle_regions = detail::regions_of_kind(S, false);
    out.quad_regions = detail::regions_of_kind(S, true);
    for (const auto& r : out.triangle_regions) {
        if (r.simply_connected) continue;
        for (int len : r.chains)
            if (!out.min_chain_length || len < *out.min_chain_length)
                out.min_chain_length = len;
    }
    return out;
}

}  // namespace nsg
