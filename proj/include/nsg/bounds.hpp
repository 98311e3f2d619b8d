#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsg/bigint.hpp"
#include "nsg/classify.hpp"
#include "nsg/complex.hpp"
#include "nsg/regions.hpp"

namespace nsg {

// One inequality evaluated on a single connected surface.  lhs and rhs are
// the two sides after clearing denominators, so holds and sharp are exact
// integer comparisons.  A row with applicable == false makes no claim.
struct BoundRow {
    std::string name;
    bool applicable = false;
    Int lhs = 0;
    Int rhs = 0;
    bool holds = false;
    bool sharp = false;
};

// Caller-supplied sum decomposition: the surface together with vertex_links
// vertex-linking spheres is the sum of summands closed, connected,
// orientable normal surfaces.  Nothing here can derive this from the
// coordinates alone.
struct HakenSumData {
    Int summands = 1;
    Int vertex_links = 0;
};

struct BoundOptions {
    // Caller vouches that the triangulation is minimal and the manifold is
    // prime; minimality is not checkable from the gluings.
    bool assert_minimal = false;
};

struct BoundReport {
    std::vector<BoundRow> rows;
    // 2g > q rules out incompressibility.  false certifies nothing.
    bool compressible_certified = false;
    // The quadrilateral count bounds the Thurston norm of the class of a
    // closed orientable surface from above.  Absent otherwise.
    std::optional<Int> thurston_norm_upper;
    // n used by the chains row; absent when every triangle region with
    // non-trivial topology is missing, i.e. n is infinite.
    std::optional<long long> chain_length;

    const BoundRow& row(const std::string& name) const {
        for (const BoundRow& r : rows)
            if (r.name == name) return r;
        throw PreconditionError("no bound row named '" + name + "'");
    }
};

// Exact lower bound for the size of any triangulation of a manifold with
// the given boundary, and genus caps for vertex normal surfaces in a
// triangulation with `tetrahedra` tetrahedra.
struct ComplexityBounds {
    Int lower_bound_from_boundary = 0;  // max(0, 2 sum of (2 genus - 1))
    Int genus_cap_normal = 0;           // floor((6n^2 + 3) sqrt(6)^n)
    Int genus_cap_incompressible = 0;   // floor((2n^2 + 1) sqrt(6)^n)
};

namespace detail {

// floor(a * sqrt(6)^n) for a >= 0, exactly.  Even powers are integers; odd
// powers bracket sqrt(6) between consecutive integer multiples of 2^-64,
// and both ends of the bracket must floor to the same integer.
inline Int floor_mul_sqrt6_pow(Int a, int n) {
    for (int i = 0; i < n / 2; ++i) a *= 6;
    if (n % 2 == 0) return a;
    constexpr unsigned kFracBits = 64;
    static const Int root = boost::multiprecision::sqrt(Int(6) << (2 * kFracBits));
    Int lo = (a * root) >> kFracBits;
    Int hi = (a * (root + 1)) >> kFracBits;
    if (lo != hi) throw CheckFailure("internal: sqrt(6) bracket too coarse for an exact floor");
    return lo;
}

}  // namespace detail

inline BoundReport bound_report(const Classification& cls, const TopologySummary& summary,
                                const RegionDecomposition& regions,
                                const std::optional<HakenSumData>& haken = {},
                                const BoundOptions& opt = {}) {
    long long summary_discs = 0;
    for (const SurfaceComponent& c : summary.components) summary_discs += c.triangles + c.quads;
    long long region_discs = 0;
    for (const Region& r : regions.triangle_regions)
        region_discs += static_cast<long long>(r.discs.size());
    for (const Region& r : regions.quad_regions)
        region_discs += static_cast<long long>(r.discs.size());
    if (summary_discs != region_discs)
        throw PreconditionError("summary and regions describe different surfaces");

    BoundReport rep;
    rep.chain_length = regions.min_chain_length;

    auto add = [&rep](const char* name, bool applicable, Int lhs, Int rhs) {
        BoundRow row;
        row.name = name;
        row.applicable = applicable;
        if (applicable) {
            row.lhs = std::move(lhs);
            row.rhs = std::move(rhs);
            row.holds = row.lhs <= row.rhs;
            row.sharp = row.lhs == row.rhs;
        }
        rep.rows.push_back(std::move(row));
    };

    // Every inequality is stated for a connected surface; on disconnected
    // input all rows stay inapplicable.
    const bool one = summary.connected();
    const SurfaceComponent blank{};
    const SurfaceComponent& c = one ? summary.components.front() : blank;
    const Int g(c.genus), q(c.quads), chi(c.chi);
    const bool closed = one && c.boundary_curves == 0;
    const bool orient = one && c.orientable;

    add("closed-orientable", closed && orient, 2 * g, 3 * q);
    add("closed-nonorientable", closed && !orient, g, 3 * q + 1);
    add("with-boundary", one && !closed && orient, 2 - chi, 3 * q + 1);
    if (haken)
        add("haken-sum", closed && orient, 2 * g,
            3 * q + 2 * (1 - haken->summands + haken->vertex_links));
    else
        add("haken-sum", false, 0, 0);
    if (regions.min_chain_length) {
        Int n(*regions.min_chain_length);
        add("chains", closed && orient, 2 * g * n, (n + 4) * q);
    } else {
        add("chains", closed && orient, 2 * g, q);
    }
    add("simplicial", closed && orient && cls.simplicial, 6 * g, 7 * q);
    add("minimal-prime", closed && orient && opt.assert_minimal, 6 * g, 7 * q);
    // Known weaker bound, kept for side-by-side comparison only.
    add("comparison-7q", closed && orient, 2 * g, 7 * q);

    rep.compressible_certified = closed && orient && 2 * g > q;
    if (summary.closed() && summary.orientable()) rep.thurston_norm_upper = Int(summary.quad_count());
    return rep;
}

inline ComplexityBounds complexity_bounds(const Classification& cls, int tetrahedra) {
    if (tetrahedra < 0) throw PreconditionError("negative tetrahedron count");
    ComplexityBounds out;
    Int sum = 0;
    for (const BoundarySummary& b : cls.boundary) sum += 2 * Int(b.genus) - 1;
    // A triangulation has nonnegative size, so clamp for sphere boundaries.
    out.lower_bound_from_boundary = (sum > 0) ? 2 * sum : Int(0);
    const Int n(tetrahedra);
    out.genus_cap_normal = detail::floor_mul_sqrt6_pow(6 * n * n + 3, tetrahedra);
    out.genus_cap_incompressible = detail::floor_mul_sqrt6_pow(2 * n * n + 1, tetrahedra);
    return out;
}

}  // namespace nsg
