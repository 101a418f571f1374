// Combinatorial polytopes as graded face lattices over bit-packed vertex
// subsets, plus the constructors (simplex, pyramid, bipyramid, direct sum of
// simplices, duals, vertex figures) and lattice reconstruction from
// vertex-facet incidences.
#pragma once

#include "facelat/errors.hpp"
#include "facelat/subsets.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace facelat {

// Effective vertex cap: 64, or the value of FACELAT_MAX_N if set (must be in
// 1..64; the bit-packed representation cannot go past 64).
int max_vertices();

struct FVector {
    std::vector<std::int64_t> counts;  // f_0 .. f_{d-1}

    bool operator==(const FVector&) const = default;
    std::int64_t operator[](int k) const { return counts.at(static_cast<size_t>(k)); }
    int dim() const { return static_cast<int>(counts.size()); }
};

std::string to_string(const FVector& f);  // "(5, 8, 5)"

// Serialization form of a lattice: the facets determine everything else.
struct VertexFacetIncidence {
    int num_vertices = 0;
    std::vector<VertexSet> facet_sets;
};

// Graded face lattice of a d-polytope on vertices {0..n-1}. Rank -1 is the
// empty face, rank d the whole polytope. Immutable after construction; all
// operations below are pure functions.
class FaceLattice {
public:
    // faces_by_rank[r + 1] holds the faces of rank r, r in [-1, dim]. The
    // constructor sorts each rank and checks basic shape (unique bottom/top,
    // atoms are exactly the n singletons, no duplicates, no empty rank).
    FaceLattice(int dim, int num_vertices, std::vector<std::vector<VertexSet>> faces_by_rank);

    int dim() const { return dim_; }
    int num_vertices() const { return num_vertices_; }
    VertexSet vertex_mask() const { return full_set(num_vertices_); }

    // rank in [-1, dim]; faces are sorted ascending as masks
    const std::vector<VertexSet>& faces(int rank) const;
    const std::vector<VertexSet>& facets() const { return faces(dim_ - 1); }
    std::int64_t face_count(int rank) const;
    bool has_face(int rank, VertexSet f) const;
    // rank of a face mask, or throws if absent
    int rank_of(VertexSet f) const;

    FVector f_vector() const;
    bool is_simplicial() const;  // every facet has exactly dim() vertices

    // Full invariant check: intersection closure, facets generate every
    // non-maximal face, gradedness via covers, Euler-Poincare alternating sum.
    // Throws std::logic_error with a description on the first violation.
    void validate() const;

private:
    int dim_;
    int num_vertices_;
    std::vector<std::vector<VertexSet>> faces_;  // index r+1 = rank r
};

// --- constructors ---

FaceLattice simplex(int s);
FaceLattice pyramid(const FaceLattice& p);
FaceLattice k_fold_pyramid(const FaceLattice& p, int r);
FaceLattice bipyramid(const FaceLattice& p);  // requires dim >= 1
// Direct sum of an m-simplex and an r-simplex (m, r >= 1): a simplicial
// (m+r)-polytope on m+r+2 vertices with (m+1)(r+1) facets.
FaceLattice direct_sum_simplices(int m, int r);
// (d-s)-fold pyramid over direct_sum_simplices(m, s-m); 2 <= s <= d, 1 <= m <= s-1.
FaceLattice t_dsm(int d, int s, int m);

// Combinatorial dual: one vertex per facet, order reversed. No geometry.
FaceLattice dual(const FaceLattice& p);

// Interval [{v}, top] re-ranked as a (d-1)-lattice; its vertices are the
// edges of p at v, so f_{k-1}(figure) = #{k-faces of p containing v}.
FaceLattice vertex_figure(const FaceLattice& p, int v);

// Smallest intersection-closed family containing the facet sets, the full
// set and the empty set, ranked by longest chains. Throws AntichainViolation,
// NotGraded, or RankMismatch as appropriate.
FaceLattice build_from_incidence(const VertexFacetIncidence& inc, int d);

VertexFacetIncidence incidence_of(const FaceLattice& p);

}  // namespace facelat
