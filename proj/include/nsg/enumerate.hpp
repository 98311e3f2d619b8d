#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsg/coordinates.hpp"
#include "nsg/matching.hpp"
#include "nsg/smith.hpp"
#include "nsg/triangulation.hpp"

namespace nsg {

struct Ray {
    std::vector<Int> x;  // primitive, nonnegative, exact solution of the system
    bool admissible = true;
};

struct RayList {
    int dim = 0;
    std::vector<Ray> rays;
};

struct EnumerateOptions {
    // Replace the zero-set adjacency test by the exact rank criterion.
    // Slower; kept as a cross-check.
    bool algebraic_adjacency = false;
};

namespace detail {

using ZeroMask = std::vector<std::uint64_t>;

inline ZeroMask zero_mask(const std::vector<Int>& x) {
    ZeroMask m((x.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 0) m[i >> 6] |= std::uint64_t{1} << (i & 63);
    return m;
}

struct DDRay {
    std::vector<Int> x;
    ZeroMask zero;
};

// Lattice basis of {x : rows * x = 0} by unimodular column operations.
inline std::vector<std::vector<Int>> kernel_basis(const Matrix& rows, int dim) {
    std::size_t d = static_cast<std::size_t>(dim);
    Matrix w = rows;
    std::vector<std::vector<Int>> v(d, std::vector<Int>(d, 0));
    for (std::size_t i = 0; i < d; ++i) v[i][i] = 1;  // v[c] is column c

    auto col_sub = [&](std::size_t c, const Int& q, std::size_t p) {
        for (auto& row : w) row[c] -= q * row[p];
        for (std::size_t i = 0; i < d; ++i) v[c][i] -= q * v[p][i];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (auto& row : w) std::swap(row[a], row[b]);
        std::swap(v[a], v[b]);
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < w.size() && lead < d; ++r) {
        for (;;) {
            std::size_t p = d;
            for (std::size_t c = lead; c < d; ++c)
                if (w[r][c] != 0 && (p == d || abs(w[r][c]) < abs(w[r][p]))) p = c;
            if (p == d) break;
            bool rem = false;
            for (std::size_t c = lead; c < d; ++c) {
                if (c == p || w[r][c] == 0) continue;
                col_sub(c, w[r][c] / w[r][p], p);
                rem = rem || w[r][c] != 0;
            }
            if (!rem) {
                col_swap(lead, p);
                ++lead;
                break;
            }
        }
    }
    return {v.begin() + static_cast<std::ptrdiff_t>(lead), v.end()};
}

// Extreme rays of the simplicial cone cut out by the chosen coordinate
// hyperplanes: columns of kernel * inverse(M), cleared to primitive integers.
inline std::vector<DDRay> simplicial_seed(const std::vector<std::vector<Int>>& kernel,
                                          const std::vector<std::size_t>& chosen) {
    using Rat = boost::multiprecision::cpp_rational;
    std::size_t m = kernel.size(), d = kernel.front().size();
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(2 * m, 0));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < m; ++j) a[r][j] = Rat(kernel[j][chosen[r]]);
        a[r][m + r] = 1;
    }
    for (std::size_t c = 0; c < m; ++c) {  // Gauss-Jordan
        std::size_t p = c;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) throw CheckFailure("internal: seed matrix is singular");
        std::swap(a[p], a[c]);
        Rat inv = Rat(1) / a[c][c];
        for (std::size_t j = 0; j < 2 * m; ++j) a[c][j] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (std::size_t j = 0; j < 2 * m; ++j) a[r][j] -= f * a[c][j];
        }
    }
    std::vector<DDRay> rays(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rat> x(d, 0);
        Int scale = 1;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < m; ++k) x[i] += Rat(kernel[k][i]) * a[k][m + j];
            Int den = Int(denominator(x[i]));
            scale = scale / int_gcd(scale, den) * den;
        }
        rays[j].x.resize(d);
        for (std::size_t i = 0; i < d; ++i)
            rays[j].x[i] = Int(numerator(x[i])) * (scale / Int(denominator(x[i])));
        make_primitive(rays[j].x);
        for (std::size_t r = 0; r < m; ++r) {
            const Int& at = rays[j].x[chosen[r]];
            if (r == j ? at <= 0 : at != 0) throw CheckFailure("internal: seed rays are not simplicial");
        }
        rays[j].zero = zero_mask(rays[j].x);
    }
    return rays;
}

// The pair spans a 2-face iff the constraints active on both (all equality
// rows plus the already-cut coordinate hyperplanes they lie on) have rank
// exactly dimension - 2.
inline bool rank_adjacent(const Matrix& rows, const ZeroMask& meet, std::size_t dim) {
    Matrix m = rows;
    for (std::size_t i = 0; i < dim; ++i)
        if (meet[i >> 6] & (std::uint64_t{1} << (i & 63))) {
            std::vector<Int> unit(dim, 0);
            unit[i] = 1;
            m.push_back(std::move(unit));
        }
    return matrix_rank(m) == static_cast<int>(dim) - 2;
}

}  // namespace detail

// Extreme rays of {x >= 0, sys * x = 0} by double description run inside the
// solution subspace: seed with a simplicial cone on independent coordinate
// constraints, then cut with the remaining ones.  Output is primitive,
// deduplicated, and sorted by zero set then by value, so the result does not
// depend on the order the rows are supplied in.
inline RayList extreme_rays(const LinearSystem& sys, int dimension,
                            const std::function<bool(const std::vector<Int>&)>& admissible = {},
                            const EnumerateOptions& opt = {}) {
    if (sys.dim != dimension) throw PreconditionError("system dimension mismatch");
    for (const auto& row : sys.rows)
        if (static_cast<int>(row.size()) != dimension) throw PreconditionError("system dimension mismatch");

    RayList out;
    out.dim = dimension;
    if (dimension == 0) return out;
    const std::size_t d = static_cast<std::size_t>(dimension);

    auto kernel = detail::kernel_basis(sys.rows, dimension);
    const std::size_t m = kernel.size();
    std::vector<detail::DDRay> rays;
    std::vector<bool> in_active(d, false);

    if (m > 0) {
        // greedy independent coordinate rows of the kernel matrix
        std::vector<std::size_t> chosen;
        Matrix picked;
        for (std::size_t i = 0; i < d && chosen.size() < m; ++i) {
            std::vector<Int> row(m);
            for (std::size_t j = 0; j < m; ++j) row[j] = kernel[j][i];
            Matrix trial = picked;
            trial.push_back(row);
            if (matrix_rank(trial) == static_cast<int>(chosen.size()) + 1) {
                picked = std::move(trial);
                chosen.push_back(i);
            }
        }
        if (chosen.size() != m) throw CheckFailure("internal: kernel basis is rank deficient");

        rays = detail::simplicial_seed(kernel, chosen);
        detail::ZeroMask active((d + 63) / 64, 0);
        for (std::size_t i : chosen) {
            active[i >> 6] |= std::uint64_t{1} << (i & 63);
            in_active[i] = true;
        }

        for (std::size_t cut = 0; cut < d; ++cut) {
            if (in_active[cut]) continue;
            in_active[cut] = true;
            std::vector<std::size_t> pos, neg;
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (rays[i].x[cut] > 0) pos.push_back(i);
                if (rays[i].x[cut] < 0) neg.push_back(i);
            }
            active[cut >> 6] |= std::uint64_t{1} << (cut & 63);
            if (neg.empty()) continue;

            std::vector<detail::DDRay> next;
            std::set<std::vector<Int>> seen;
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (rays[i].x[cut] >= 0 && seen.insert(rays[i].x).second) next.push_back(rays[i]);

            detail::ZeroMask meet(active.size());
            for (std::size_t p : pos)
                for (std::size_t n : neg) {
                    int common = 0;
                    for (std::size_t w = 0; w < meet.size(); ++w) {
                        meet[w] = rays[p].zero[w] & rays[n].zero[w] & active[w];
                        common += std::popcount(meet[w]);
                    }
                    // a 2-face needs at least m - 2 active hyperplanes
                    if (common < static_cast<int>(m) - 2) continue;
                    bool adjacent;
                    if (opt.algebraic_adjacency) {
                        adjacent = detail::rank_adjacent(sys.rows, meet, d);
                    } else {
                        adjacent = true;
                        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                            if (r == p || r == n) continue;
                            bool contains = true;
                            for (std::size_t w = 0; w < meet.size(); ++w)
                                if (meet[w] & ~rays[r].zero[w]) {
                                    contains = false;
                                    break;
                                }
                            if (contains) adjacent = false;
                        }
                    }
                    if (!adjacent) continue;

                    detail::DDRay combo;
                    combo.x.resize(d);
                    for (std::size_t i = 0; i < d; ++i)
                        combo.x[i] = rays[p].x[cut] * rays[n].x[i] - rays[n].x[cut] * rays[p].x[i];
                    make_primitive(combo.x);
                    if (!seen.insert(combo.x).second) continue;
                    combo.zero = detail::zero_mask(combo.x);
                    next.push_back(std::move(combo));
                }
            rays = std::move(next);
        }
    }

    for (const auto& r : rays) {
        for (const Int& x : r.x)
            if (x < 0) throw CheckFailure("internal: enumerated ray leaves the orthant");
        for (const auto& row : sys.rows)
            if (dot(row, r.x) != 0) throw CheckFailure("internal: enumerated ray violates the system");
    }

    std::vector<std::pair<std::vector<int>, std::size_t>> order(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
        order[i].second = i;
        for (std::size_t k = 0; k < d; ++k)
            if (rays[i].x[k] == 0) order[i].first.push_back(static_cast<int>(k));
    }
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return rays[a.second].x < rays[b.second].x;
    });

    out.rays.reserve(rays.size());
    for (const auto& [zeros, i] : order) {
        Ray r;
        r.x = std::move(rays[i].x);
        r.admissible = admissible ? admissible(r.x) : true;
        out.rays.push_back(std::move(r));
    }
    return out;
}

// An admissible extreme ray of the matching system, scaled to its smallest
// integer representative.  Quad solutions carry their standard realisation
// alongside (same quads, minimal triangle part).
struct VertexSurface {
    NormalCoordinates coords;
    NormalCoordinates as_standard;
};

inline std::vector<VertexSurface> vertex_normal_surfaces(const Triangulation& tri, bool quad_only,
                                                         const EnumerateOptions& opt = {}) {
    LinearSystem sys = matching_system(tri, quad_only);
    const int n = tri.size();
    auto wrap = [&](const std::vector<Int>& x) {
        NormalCoordinates c = quad_only ? NormalCoordinates::quads(n) : NormalCoordinates::standard(n);
        c.v = x;
        return c;
    };
    RayList rl = extreme_rays(
        sys, sys.dim, [&](const std::vector<Int>& x) { return is_admissible(wrap(x)); }, opt);

    Skeleton sk = compute_skeleton(tri);
    std::vector<VertexSurface> out;
    for (Ray& r : rl.rays) {
        if (!r.admissible) continue;
        VertexSurface vs;
        vs.coords = wrap(r.x);
        vs.as_standard = quad_only ? lift_to_standard(tri, sk, vs.coords) : vs.coords;
        out.push_back(std::move(vs));
    }
    return out;
}

}  // namespace nsg
