#pragma once

#include <array>
#include <numeric>
#include <vector>

#include "nsg/triangulation.hpp"

namespace nsgtest {

// Boundary of the 4-simplex: five tetrahedra on global vertices {0..4},
// tetrahedron i spanning all but i, glued along shared triples by the
// global-vertex identity (opposite vertices swapped).  The smallest
// simplicial triangulation of the 3-sphere.
inline nsg::Triangulation boundary_4simplex() {
    using nsg::Perm4;
    nsg::Triangulation tri(5);
    auto globals = [](int i) {
        std::array<int, 4> g{};
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (v != i) g[static_cast<std::size_t>(k++)] = v;
        return g;
    };
    auto local_of = [&](int i, int gv) {
        auto g = globals(i);
        for (int k = 0; k < 4; ++k)
            if (g[static_cast<std::size_t>(k)] == gv) return k;
        return -1;
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            Perm4 perm;
            auto gi = globals(i);
            for (int k = 0; k < 4; ++k) {
                int gv = gi[static_cast<std::size_t>(k)];
                int target = (gv == j) ? i : gv;
                perm.img[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(local_of(j, target));
            }
            tri.set_half(i, local_of(i, j), j, perm);
        }
    tri.validate();
    return tri;
}

// Two tetrahedra glued along two face pairs whose parities disagree, giving
// a non-orientable complex with consistent edge identifications.
inline nsg::Triangulation twisted_pair() {
    using nsg::Perm4;
    nsg::Triangulation tri(2);
    tri.glue(0, 3, 1, Perm4{});
    tri.glue(0, 0, 1, Perm4{0, 1, 3, 2});
    tri.validate();
    return tri;
}

// Reindexes tetrahedra: tetrahedron t becomes p[t].
inline nsg::Triangulation relabel(const nsg::Triangulation& tri, const std::vector<int>& p) {
    nsg::Triangulation out(tri.size());
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (g) out.set_half(p[static_cast<std::size_t>(t)], f, p[static_cast<std::size_t>(g->tet)], g->perm);
        }
    out.validate();
    return out;
}

}  // namespace nsgtest
