#include "facelat/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace facelat {

void validate_point_config(const PointConfig& pc) {
    if (pc.dim < 0) throw std::invalid_argument("negative ambient dimension");
    std::set<std::vector<Rational>> seen;
    for (const auto& p : pc.points) {
        if (static_cast<int>(p.size()) != pc.dim)
            throw std::invalid_argument("point arity does not match ambient dimension");
        if (!seen.insert(p).second) throw std::invalid_argument("duplicate point");
    }
}

namespace {

// Clear denominators uniformly: scaling every point by the global lcm of the
// denominators preserves all affine/convex relations among them.
std::vector<std::vector<BigInt>> scale_to_integers(const std::vector<std::vector<Rational>>& pts) {
    BigInt l = 1;
    for (const auto& p : pts)
        for (const auto& x : p) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    std::vector<std::vector<BigInt>> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        out[i].reserve(pts[i].size());
        for (const auto& x : pts[i])
            out[i].push_back(boost::multiprecision::numerator(x) *
                             (l / boost::multiprecision::denominator(x)));
    }
    return out;
}

// Fraction-free (Bareiss) forward elimination. Returns the pivot columns;
// rows holds the echelon form afterwards. Divisions are exact.
std::vector<int> bareiss_echelon(std::vector<std::vector<BigInt>>& rows) {
    const int nrows = static_cast<int>(rows.size());
    const int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
    std::vector<int> pivot_cols;
    BigInt prev_pivot = 1;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        for (int i = r + 1; i < nrows; ++i) {
            for (int j = c + 1; j < ncols; ++j)
                rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) / prev_pivot;
            rows[i][c] = 0;
        }
        prev_pivot = rows[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

int integer_rank(std::vector<std::vector<BigInt>> rows) {
    return static_cast<int>(bareiss_echelon(rows).size());
}

void content_reduce_and_orient(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

// Nonzero integer kernel vector of a k x (k+1) matrix of rank k, via Bareiss
// echelon and rational back substitution; content-reduced, sign per the first
// nonzero entry. Nullopt when the rank is deficient.
std::optional<std::vector<BigInt>> kernel_vector(std::vector<std::vector<BigInt>> rows) {
    const int ncols = static_cast<int>(rows[0].size());
    std::vector<int> pivots = bareiss_echelon(rows);
    if (static_cast<int>(pivots.size()) != ncols - 1) return std::nullopt;

    int free_col = 0;
    for (int c = 0; c < ncols; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_col = c;

    std::vector<Rational> x(static_cast<size_t>(ncols), Rational(0));
    x[static_cast<size_t>(free_col)] = 1;
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        const int c = pivots[static_cast<size_t>(i)];
        Rational acc = 0;
        for (int j = c + 1; j < ncols; ++j) acc += Rational(rows[i][j]) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(c)] = -acc / Rational(rows[i][c]);
    }

    BigInt l = 1;
    for (const auto& q : x) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
    std::vector<BigInt> out;
    out.reserve(x.size());
    for (const auto& q : x)
        out.push_back(boost::multiprecision::numerator(q) *
                      (l / boost::multiprecision::denominator(q)));
    content_reduce_and_orient(out);
    return out;
}

int sign_of(const BigInt& x) { return x < 0 ? -1 : x > 0 ? 1 : 0; }

}  // namespace

std::optional<Hyperplane> hyperplane_through(const std::vector<std::vector<Rational>>& pts) {
    if (pts.empty()) throw std::invalid_argument("no points given");
    const int d = static_cast<int>(pts[0].size());
    if (static_cast<int>(pts.size()) != d)
        throw std::invalid_argument("need exactly d points in dimension d");
    auto ints = scale_to_integers(pts);
    std::vector<std::vector<BigInt>> rows(ints.size());
    for (size_t i = 0; i < ints.size(); ++i) {
        rows[i] = std::move(ints[i]);
        rows[i].push_back(1);  // affine coordinate
    }
    auto kernel = kernel_vector(std::move(rows));
    if (!kernel) return std::nullopt;
    // kernel = (a_0..a_{d-1}, c) with a.p + c = 0 on every row; a nonzero
    // kernel vector of rows ending in 1 always has a nonzero normal part
    Hyperplane h;
    h.offset = -kernel->back();
    kernel->pop_back();
    h.normal = std::move(*kernel);
    return h;
}

int affine_dim(const PointConfig& pc) {
    validate_point_config(pc);
    if (pc.points.empty()) throw std::invalid_argument("affine_dim of an empty configuration");
    auto ints = scale_to_integers(pc.points);
    std::vector<std::vector<BigInt>> diffs;
    for (size_t i = 1; i < ints.size(); ++i) {
        std::vector<BigInt> row(ints[i]);
        for (size_t j = 0; j < row.size(); ++j) row[j] -= ints[0][j];
        diffs.push_back(std::move(row));
    }
    if (diffs.empty()) return 0;
    return integer_rank(std::move(diffs));
}

VertexFacetIncidence facet_enumeration(const PointConfig& pc) {
    validate_point_config(pc);
    const int d = pc.dim;
    const int n = static_cast<int>(pc.points.size());
    if (d < 1) throw NotFullDimensional("facet enumeration needs ambient dimension >= 1");
    if (n < d + 1)
        throw FewerThanDPlus1Points("need at least d+1 points, got " + std::to_string(n));
    if (affine_dim(pc) != d)
        throw NotFullDimensional("points do not span the ambient space");
    if (n > max_vertices())
        throw std::invalid_argument("point count exceeds the vertex cap");

    const auto pts = scale_to_integers(pc.points);

    // candidate supporting hyperplanes through each d-subset; canonical
    // (normal, offset) is the dedup key
    std::map<std::pair<std::vector<BigInt>, BigInt>, VertexSet> facets_by_plane;
    std::vector<int> idx(static_cast<size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<std::vector<BigInt>> rows(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            rows[static_cast<size_t>(i)] = pts[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            rows[static_cast<size_t>(i)].push_back(1);
        }
        if (auto kernel = kernel_vector(std::move(rows))) {
            // side values a.p + c over all points
            int lo = 0, hi = 0;
            VertexSet on_plane = 0;
            for (int i = 0; i < n; ++i) {
                BigInt val = kernel->back();
                for (int j = 0; j < d; ++j)
                    val += (*kernel)[static_cast<size_t>(j)] * pts[static_cast<size_t>(i)][static_cast<size_t>(j)];
                const int sgn = sign_of(val);
                if (sgn < 0) ++lo;
                else if (sgn > 0) ++hi;
                else on_plane |= single(i);
            }
            if (lo == 0 || hi == 0) {
                BigInt offset = -kernel->back();
                kernel->pop_back();
                facets_by_plane[{std::move(*kernel), std::move(offset)}] = on_plane;
            }
        }
        // next d-combination of {0..n-1}
        int i = d - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }

    // hull vertices: points whose incident facets meet in exactly that point
    std::vector<int> new_index(static_cast<size_t>(n), -1);
    std::vector<int> hull;
    for (int i = 0; i < n; ++i) {
        VertexSet meet = full_set(n);
        bool on_any = false;
        for (const auto& [plane, set] : facets_by_plane)
            if (has_vertex(set, i)) {
                meet &= set;
                on_any = true;
            }
        if (on_any && meet == single(i)) {
            new_index[static_cast<size_t>(i)] = static_cast<int>(hull.size());
            hull.push_back(i);
        }
    }

    VertexFacetIncidence inc;
    inc.num_vertices = static_cast<int>(hull.size());
    for (const auto& [plane, set] : facets_by_plane) {
        VertexSet restricted = 0;
        for (int v : to_indices(set))
            if (new_index[static_cast<size_t>(v)] >= 0)
                restricted |= single(new_index[static_cast<size_t>(v)]);
        inc.facet_sets.push_back(restricted);
    }
    std::sort(inc.facet_sets.begin(), inc.facet_sets.end());
    inc.facet_sets.erase(std::unique(inc.facet_sets.begin(), inc.facet_sets.end()),
                         inc.facet_sets.end());
    return inc;
}

FaceLattice lattice_from_points(const PointConfig& pc) {
    return build_from_incidence(facet_enumeration(pc), pc.dim);
}

namespace {

std::vector<Rational> barycenter(const std::vector<std::vector<Rational>>& pts) {
    std::vector<Rational> b(pts[0].size(), Rational(0));
    for (const auto& p : pts)
        for (size_t j = 0; j < b.size(); ++j) b[j] += p[j];
    for (auto& x : b) x /= static_cast<int>(pts.size());
    return b;
}

PointConfig lifted_with_apexes(const PointConfig& base, bool both_sides) {
    PointConfig out;
    out.dim = base.dim + 1;
    for (const auto& p : base.points) {
        auto q = p;
        q.push_back(Rational(0));
        out.points.push_back(std::move(q));
    }
    auto bary = base.points.empty() ? std::vector<Rational>{} : barycenter(base.points);
    auto apex = bary;
    apex.push_back(Rational(1));
    out.points.push_back(std::move(apex));
    if (both_sides) {
        auto apex2 = bary;
        apex2.push_back(Rational(-1));
        out.points.push_back(std::move(apex2));
    }
    return out;
}

PointConfig realize_simplex(int s) {
    if (s < 0) throw std::invalid_argument("simplex dimension must be nonnegative");
    PointConfig out;
    out.dim = s;
    out.points.emplace_back(static_cast<size_t>(s), Rational(0));
    for (int i = 0; i < s; ++i) {
        std::vector<Rational> p(static_cast<size_t>(s), Rational(0));
        p[static_cast<size_t>(i)] = 1;
        out.points.push_back(std::move(p));
    }
    return out;
}

// Each summand centered at the origin of its own coordinate block, so the
// origin is interior to both and the union is a direct sum.
PointConfig realize_dsum(int m, int r) {
    if (m < 1 || r < 1)
        throw std::invalid_argument("direct sum needs both summands of dimension >= 1");
    PointConfig a = realize_simplex(m), b = realize_simplex(r);
    auto ca = barycenter(a.points), cb = barycenter(b.points);
    PointConfig out;
    out.dim = m + r;
    for (const auto& p : a.points) {
        std::vector<Rational> q(static_cast<size_t>(m + r), Rational(0));
        for (int j = 0; j < m; ++j) q[static_cast<size_t>(j)] = p[static_cast<size_t>(j)] - ca[static_cast<size_t>(j)];
        out.points.push_back(std::move(q));
    }
    for (const auto& p : b.points) {
        std::vector<Rational> q(static_cast<size_t>(m + r), Rational(0));
        for (int j = 0; j < r; ++j) q[static_cast<size_t>(m + j)] = p[static_cast<size_t>(j)] - cb[static_cast<size_t>(j)];
        out.points.push_back(std::move(q));
    }
    return out;
}

}  // namespace

PointConfig realize(const Construction& spec) {
    using K = Construction::Kind;
    switch (spec.kind) {
        case K::Simplex: return realize_simplex(spec.a);
        case K::Pyramid: return lifted_with_apexes(realize(spec.child[0]), false);
        case K::KFoldPyramid: {
            if (spec.a < 0) throw std::invalid_argument("pyramid fold count must be nonnegative");
            PointConfig out = realize(spec.child[0]);
            for (int i = 0; i < spec.a; ++i) out = lifted_with_apexes(out, false);
            return out;
        }
        case K::Bipyramid: {
            PointConfig base = realize(spec.child[0]);
            if (base.dim < 1) throw std::invalid_argument("bipyramid needs a base of dimension >= 1");
            return lifted_with_apexes(base, true);
        }
        case K::DirectSum: return realize_dsum(spec.a, spec.b);
        case K::Tdsm: {
            if (!(2 <= spec.b && spec.b <= spec.a) || !(1 <= spec.c && spec.c <= spec.b - 1))
                throw std::invalid_argument("tdsm parameters out of range");
            PointConfig out = realize_dsum(spec.c, spec.b - spec.c);
            for (int i = 0; i < spec.a - spec.b; ++i) out = lifted_with_apexes(out, false);
            return out;
        }
        case K::Dual:
            throw DualNotRealizable("dual() has no geometric realization here; "
                                    "duality is combinatorial only");
    }
    throw std::logic_error("unreachable construction kind");
}

PointConfig random_polytope(int d, int n, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("random_polytope: need d >= 2");
    if (n < d + 1 || n > 2 * d)
        throw std::invalid_argument("random_polytope: need d+1 <= n <= 2d");

    std::mt19937_64 rng(seed);
    constexpr int kAttempts = 10000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        PointConfig pc;
        pc.dim = d;
        std::set<std::vector<Rational>> seen;
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> p;
            p.reserve(static_cast<size_t>(d));
            // raw modulo keeps the draw identical on every platform
            for (int j = 0; j < d; ++j) p.emplace_back(static_cast<int>(rng() % 17) - 8);
            seen.insert(p);
            pc.points.push_back(std::move(p));
        }
        if (seen.size() != static_cast<size_t>(n)) continue;
        if (affine_dim(pc) != d) continue;
        if (facet_enumeration(pc).num_vertices != n) continue;  // some point not a hull vertex
        return pc;
    }
    throw SamplingExhausted("no convex-position sample for d=" + std::to_string(d) +
                            " n=" + std::to_string(n) + " within 10000 attempts");
}

}  // namespace facelat
