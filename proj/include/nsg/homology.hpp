#pragma once

#include <vector>

#include "nsg/skeleton.hpp"
#include "nsg/smith.hpp"
#include "nsg/triangulation.hpp"

namespace nsg {

// Boundary maps of the quotient cell complex.  Cells are the skeleton
// classes; orientations come from the class representatives (ascending
// vertex order), with instance signs folded in.
struct ChainComplex {
    Matrix d1;  // vertices x edges
    Matrix d2;  // edges x faces
    Matrix d3;  // faces x tetrahedra
};

inline ChainComplex chain_complex(const Triangulation& tri, const Skeleton& sk) {
    ChainComplex cc;
    cc.d1.assign(static_cast<std::size_t>(sk.vertex_count()), std::vector<Int>(static_cast<std::size_t>(sk.edge_count()), 0));
    cc.d2.assign(static_cast<std::size_t>(sk.edge_count()), std::vector<Int>(static_cast<std::size_t>(sk.face_count()), 0));
    cc.d3.assign(static_cast<std::size_t>(sk.face_count()), std::vector<Int>(static_cast<std::size_t>(tri.size()), 0));

    for (int ec = 0; ec < sk.edge_count(); ++ec) {
        auto [t, e] = sk.edge_rep[static_cast<std::size_t>(ec)];
        auto [a, b] = kEdgeVertices[static_cast<std::size_t>(e)];
        cc.d1[static_cast<std::size_t>(sk.corner(t, b))][static_cast<std::size_t>(ec)] += 1;
        cc.d1[static_cast<std::size_t>(sk.corner(t, a))][static_cast<std::size_t>(ec)] -= 1;
    }

    for (int fc = 0; fc < sk.face_count(); ++fc) {
        auto [t, f] = sk.face_rep[static_cast<std::size_t>(fc)];
        const auto& fv = kFaceVertices[static_cast<std::size_t>(f)];
        int a = fv[0], b = fv[1], c = fv[2];  // ascending
        auto add = [&](int x, int y, int coeff) {
            int e = edge_index(x, y);
            cc.d2[static_cast<std::size_t>(sk.edge_of(t, e))][static_cast<std::size_t>(fc)] +=
                coeff * sk.edge_sign[static_cast<std::size_t>(6 * t + e)];
        };
        add(b, c, 1);
        add(a, c, -1);
        add(a, b, 1);
    }

    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            int coeff = (f % 2 == 0) ? 1 : -1;
            cc.d3[static_cast<std::size_t>(sk.face_of(t, f))][static_cast<std::size_t>(t)] +=
                coeff * sk.face_sign[static_cast<std::size_t>(4 * t + f)];
        }
    return cc;
}

struct Homology {
    std::array<int, 4> betti{0, 0, 0, 0};
    std::vector<Int> h1_torsion;  // invariant factors > 1
};

inline Homology compute_homology(const Triangulation& tri, const Skeleton& sk) {
    ChainComplex cc = chain_complex(tri, sk);
    SmithResult s1 = smith_normal_form(cc.d1);
    SmithResult s2 = smith_normal_form(cc.d2);
    SmithResult s3 = smith_normal_form(cc.d3);

    Homology h;
    h.betti[0] = sk.vertex_count() - s1.rank;
    h.betti[1] = sk.edge_count() - s1.rank - s2.rank;
    h.betti[2] = sk.face_count() - s2.rank - s3.rank;
    h.betti[3] = tri.size() - s3.rank;
    for (const Int& d : s2.divisors)
        if (d > 1) h.h1_torsion.push_back(d);
    return h;
}

}  // namespace nsg
