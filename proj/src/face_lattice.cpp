#include "facelat/face_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace facelat {

int max_vertices() {
    static const int cap = [] {
        const char* env = std::getenv("FACELAT_MAX_N");
        if (!env || !*env) return 64;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 64)
            throw std::invalid_argument(
                "FACELAT_MAX_N must be an integer in 1..64 (bit-packed vertex sets)");
        return static_cast<int>(v);
    }();
    return cap;
}

std::string to_string(const FVector& f) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < f.counts.size(); ++i) {
        if (i) os << ", ";
        os << f.counts[i];
    }
    os << ')';
    return os.str();
}

namespace {

void check_vertex_count(int n) {
    if (n < 1) throw std::invalid_argument("lattice needs at least one vertex");
    if (n > max_vertices())
        throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(max_vertices()));
}

}  // namespace

FaceLattice::FaceLattice(int dim, int num_vertices, std::vector<std::vector<VertexSet>> faces_by_rank)
    : dim_(dim), num_vertices_(num_vertices), faces_(std::move(faces_by_rank)) {
    if (dim_ < 0) throw std::invalid_argument("lattice dimension must be nonnegative");
    check_vertex_count(num_vertices_);
    if (faces_.size() != static_cast<size_t>(dim_) + 2)
        throw std::invalid_argument("faces_by_rank must cover ranks -1..dim");

    const VertexSet full = full_set(num_vertices_);
    for (auto& level : faces_) {
        std::sort(level.begin(), level.end());
        if (std::adjacent_find(level.begin(), level.end()) != level.end())
            throw std::invalid_argument("duplicate face within a rank");
        if (level.empty()) throw std::invalid_argument("empty rank in lattice");
        for (VertexSet f : level)
            if (!contains(full, f)) throw std::invalid_argument("face uses vertex out of range");
    }
    if (faces_.front() != std::vector<VertexSet>{kEmptySet})
        throw std::invalid_argument("rank -1 must be exactly the empty face");
    if (faces_.back() != std::vector<VertexSet>{full})
        throw std::invalid_argument("rank dim must be exactly the full vertex set");
    if (dim_ >= 0) {
        const auto& atoms = faces_[1];
        if (static_cast<int>(atoms.size()) != num_vertices_)
            throw std::invalid_argument("atoms must be exactly the vertex singletons");
        for (int v = 0; v < num_vertices_; ++v)
            if (atoms[static_cast<size_t>(v)] != single(v))
                throw std::invalid_argument("atoms must be exactly the vertex singletons");
    }
}

const std::vector<VertexSet>& FaceLattice::faces(int rank) const {
    if (rank < -1 || rank > dim_) throw std::out_of_range("rank outside [-1, dim]");
    return faces_[static_cast<size_t>(rank) + 1];
}

std::int64_t FaceLattice::face_count(int rank) const {
    return static_cast<std::int64_t>(faces(rank).size());
}

bool FaceLattice::has_face(int rank, VertexSet f) const {
    const auto& level = faces(rank);
    return std::binary_search(level.begin(), level.end(), f);
}

int FaceLattice::rank_of(VertexSet f) const {
    for (int r = -1; r <= dim_; ++r)
        if (has_face(r, f)) return r;
    throw std::invalid_argument("not a face of this lattice");
}

FVector FaceLattice::f_vector() const {
    FVector fv;
    fv.counts.reserve(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) fv.counts.push_back(face_count(k));
    return fv;
}

bool FaceLattice::is_simplicial() const {
    for (VertexSet f : facets())
        if (cardinality(f) != dim_) return false;
    return true;
}

void FaceLattice::validate() const {
    auto fail = [](const std::string& msg) { throw std::logic_error("lattice invariant: " + msg); };

    std::vector<std::pair<VertexSet, int>> all;  // (face, rank)
    std::unordered_map<VertexSet, int> rank_of;
    for (int r = -1; r <= dim_; ++r)
        for (VertexSet f : faces(r)) {
            all.emplace_back(f, r);
            if (!rank_of.emplace(f, r).second) fail("face appears at two ranks");
        }

    // closed under pairwise intersection
    for (const auto& [f, rf] : all)
        for (const auto& [g, rg] : all)
            if (!rank_of.count(f & g)) fail("family not closed under intersection");

    // every non-maximal face is the intersection of the facets containing it
    for (const auto& [f, r] : all) {
        if (r == dim_) continue;
        VertexSet meet = vertex_mask();
        for (VertexSet g : facets())
            if (contains(g, f)) meet &= g;
        if (meet != f) fail("face is not the meet of its facets");
    }

    // rank strictly monotone under strict containment
    for (const auto& [f, rf] : all)
        for (const auto& [g, rg] : all)
            if (g != f && contains(f, g) && rg >= rf) fail("rank not monotone");

    // graded: any containment with a rank gap must factor through an
    // intermediate face (monotonicity confines candidates to the gap ranks)
    for (const auto& [f, rf] : all)
        for (const auto& [g, rg] : all) {
            if (g == f || !contains(f, g) || rf - rg < 2) continue;
            bool has_between = false;
            for (int r = rg + 1; r < rf && !has_between; ++r)
                for (VertexSet h : faces(r))
                    if (contains(f, h) && contains(h, g)) {
                        has_between = true;
                        break;
                    }
            if (!has_between) fail("cover relation skips a rank");
        }

    // Euler-Poincare
    std::int64_t sum = 0;
    for (int k = 0; k < dim_; ++k) sum += (k % 2 ? -1 : 1) * face_count(k);
    if (sum != 1 - (dim_ % 2 ? -1 : 1)) fail("Euler-Poincare alternating sum is off");

    if (dim_ >= 1 && face_count(dim_ - 1) < dim_ + 1) fail("fewer than d+1 facets");
}

// --- constructors ---

FaceLattice simplex(int s) {
    if (s < 0) throw std::invalid_argument("simplex dimension must be nonnegative");
    if (s + 1 > max_vertices())
        throw std::invalid_argument("simplex too large for the vertex cap");
    if (s > 20) throw std::invalid_argument("simplex lattice would have 2^" +
                                            std::to_string(s + 1) + " faces; refusing");
    std::vector<std::vector<VertexSet>> by_rank(static_cast<size_t>(s) + 2);
    const VertexSet full = full_set(s + 1);
    for (VertexSet f = 0; ; ++f) {
        by_rank[static_cast<size_t>(cardinality(f))].push_back(f);
        if (f == full) break;
    }
    return FaceLattice(s, s + 1, std::move(by_rank));
}

FaceLattice pyramid(const FaceLattice& p) {
    const int d = p.dim();
    const int n = p.num_vertices();
    check_vertex_count(n + 1);
    const VertexSet apex = single(n);
    std::vector<std::vector<VertexSet>> by_rank(static_cast<size_t>(d) + 3);
    // every face survives (the old top becomes the base facet) and every face
    // joined with the apex appears one rank up
    for (int r = -1; r <= d; ++r)
        for (VertexSet f : p.faces(r)) {
            by_rank[static_cast<size_t>(r) + 1].push_back(f);
            by_rank[static_cast<size_t>(r) + 2].push_back(f | apex);
        }
    return FaceLattice(d + 1, n + 1, std::move(by_rank));
}

FaceLattice k_fold_pyramid(const FaceLattice& p, int r) {
    if (r < 0) throw std::invalid_argument("pyramid fold count must be nonnegative");
    FaceLattice out = p;
    for (int i = 0; i < r; ++i) out = pyramid(out);
    return out;
}

FaceLattice bipyramid(const FaceLattice& p) {
    const int d = p.dim();
    if (d < 1) throw std::invalid_argument("bipyramid needs a base of dimension >= 1");
    const int n = p.num_vertices();
    check_vertex_count(n + 2);
    const VertexSet top_apex = single(n), bot_apex = single(n + 1);
    std::vector<std::vector<VertexSet>> by_rank(static_cast<size_t>(d) + 3);
    // proper faces of p survive; p itself is not a face of the bipyramid
    for (int r = -1; r <= d - 1; ++r)
        for (VertexSet f : p.faces(r)) {
            by_rank[static_cast<size_t>(r) + 1].push_back(f);
            by_rank[static_cast<size_t>(r) + 2].push_back(f | top_apex);
            by_rank[static_cast<size_t>(r) + 2].push_back(f | bot_apex);
        }
    by_rank[static_cast<size_t>(d) + 2].push_back(full_set(n + 2));
    return FaceLattice(d + 1, n + 2, std::move(by_rank));
}

FaceLattice direct_sum_simplices(int m, int r) {
    if (m < 1 || r < 1)
        throw std::invalid_argument("direct sum needs both summands of dimension >= 1");
    const int n = m + r + 2;
    check_vertex_count(n);
    if (m + r > 20) throw std::invalid_argument("direct sum lattice too large; refusing");
    const VertexSet block_a = full_set(m + 1);
    const int d = m + r;

    // proper faces of each summand simplex = all vertex subsets except the full one
    std::vector<VertexSet> proper_a, proper_b;
    for (VertexSet f = 0; f < block_a; ++f) proper_a.push_back(f);
    for (VertexSet u = 0; u < full_set(r + 1); ++u) proper_b.push_back(u << (m + 1));

    std::vector<std::vector<VertexSet>> by_rank(static_cast<size_t>(d) + 2);
    for (VertexSet fa : proper_a)
        for (VertexSet fb : proper_b) {
            VertexSet f = fa | fb;
            by_rank[static_cast<size_t>(cardinality(f))].push_back(f);
        }
    by_rank[static_cast<size_t>(d) + 1].push_back(full_set(n));
    return FaceLattice(d, n, std::move(by_rank));
}

FaceLattice t_dsm(int d, int s, int m) {
    if (!(2 <= s && s <= d)) throw std::invalid_argument("t_dsm requires 2 <= s <= d");
    if (!(1 <= m && m <= s - 1)) throw std::invalid_argument("t_dsm requires 1 <= m <= s-1");
    return k_fold_pyramid(direct_sum_simplices(m, s - m), d - s);
}

FaceLattice dual(const FaceLattice& p) {
    const int d = p.dim();
    const auto& facets = p.faces(d - 1);  // rank -1 when d == 0: the empty face
    const int n_dual = static_cast<int>(facets.size());
    check_vertex_count(n_dual);
    std::vector<std::vector<VertexSet>> by_rank(static_cast<size_t>(d) + 2);
    for (int r = -1; r <= d; ++r)
        for (VertexSet f : p.faces(r)) {
            VertexSet image = 0;
            for (int j = 0; j < n_dual; ++j)
                if (contains(facets[static_cast<size_t>(j)], f)) image |= single(j);
            by_rank[static_cast<size_t>(d - 1 - r) + 1].push_back(image);
        }
    return FaceLattice(d, n_dual, std::move(by_rank));
}

FaceLattice vertex_figure(const FaceLattice& p, int v) {
    if (v < 0 || v >= p.num_vertices()) throw std::invalid_argument("vertex index out of range");
    const int d = p.dim();
    if (d < 1) throw std::invalid_argument("vertex figure needs dimension >= 1");
    const VertexSet vm = single(v);

    std::vector<VertexSet> edges_at_v;  // become the figure's vertices
    for (VertexSet e : p.faces(1))
        if (contains(e, vm)) edges_at_v.push_back(e);

    std::vector<std::vector<VertexSet>> by_rank(static_cast<size_t>(d) + 1);
    for (int r = 0; r <= d; ++r)
        for (VertexSet f : p.faces(r)) {
            if (!contains(f, vm)) continue;
            VertexSet image = 0;
            for (size_t i = 0; i < edges_at_v.size(); ++i)
                if (contains(f, edges_at_v[i])) image |= single(static_cast<int>(i));
            by_rank[static_cast<size_t>(r)].push_back(image);
        }
    return FaceLattice(d - 1, static_cast<int>(edges_at_v.size()), std::move(by_rank));
}

FaceLattice build_from_incidence(const VertexFacetIncidence& inc, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    const int n = inc.num_vertices;
    check_vertex_count(n);
    const VertexSet full = full_set(n);
    const auto& fs = inc.facet_sets;
    if (fs.empty()) throw std::invalid_argument("no facet sets given");

    VertexSet cover = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (!contains(full, fs[i]) || fs[i] == 0)
            throw std::invalid_argument("facet set empty or out of vertex range");
        cover |= fs[i];
        for (size_t j = 0; j < fs.size(); ++j)
            if (i != j && contains(fs[i], fs[j]))
                throw AntichainViolation("facet set " + std::to_string(j) +
                                         " is contained in facet set " + std::to_string(i));
    }
    if (cover != full) throw std::invalid_argument("some vertex lies on no facet");

    // intersection closure
    std::unordered_set<VertexSet> family(fs.begin(), fs.end());
    family.insert(full);
    family.insert(kEmptySet);
    std::vector<VertexSet> order(family.begin(), family.end());
    std::vector<VertexSet> work(order);
    while (!work.empty()) {
        VertexSet cur = work.back();
        work.pop_back();
        const size_t snapshot = order.size();
        for (size_t i = 0; i < snapshot; ++i) {
            VertexSet x = cur & order[i];
            if (family.insert(x).second) {
                order.push_back(x);
                work.push_back(x);
            }
        }
    }

    // rank by longest chain from the bottom
    std::sort(order.begin(), order.end(),
              [](VertexSet a, VertexSet b) {
                  int ca = cardinality(a), cb = cardinality(b);
                  return ca != cb ? ca < cb : a < b;
              });
    std::unordered_map<VertexSet, int> rank;
    for (size_t i = 0; i < order.size(); ++i) {
        VertexSet f = order[i];
        int r = -2;
        for (size_t j = 0; j < i; ++j)
            if (order[j] != f && contains(f, order[j])) r = std::max(r, rank[order[j]]);
        rank[f] = (f == kEmptySet) ? -1 : r + 1;
    }

    // longest-chain ranks are monotone, so the family is graded iff every
    // containment with a rank gap >= 2 factors through an intermediate face
    for (size_t i = 0; i < order.size(); ++i) {
        VertexSet f = order[i];
        for (size_t j = 0; j < i; ++j) {
            VertexSet g = order[j];
            if (g == f || !contains(f, g) || rank[f] - rank[g] < 2) continue;
            bool has_between = false;
            for (size_t l = j + 1; l < i && !has_between; ++l) {
                VertexSet h = order[l];
                has_between = h != g && h != f && contains(f, h) && contains(h, g);
            }
            if (!has_between)
                throw NotGraded("maximal chains through a cover differ in length");
        }
    }

    const int top_rank = rank[full];
    if (top_rank != d)
        throw RankMismatch("computed top rank " + std::to_string(top_rank) +
                           " != declared dimension " + std::to_string(d));

    // every proper face ranks strictly below the full set, so indices fit
    std::vector<std::vector<VertexSet>> by_rank(static_cast<size_t>(d) + 2);
    for (VertexSet f : order) by_rank[static_cast<size_t>(rank[f]) + 1].push_back(f);
    // FaceLattice's own shape checks reject non-singleton atoms etc.
    return FaceLattice(d, n, std::move(by_rank));
}

VertexFacetIncidence incidence_of(const FaceLattice& p) {
    return VertexFacetIncidence{p.num_vertices(), p.facets()};
}

}  // namespace facelat
