// The lower-bound function phi_k(n, d) for d-polytopes with n <= 2d vertices,
// the closed face-count formula for k-fold pyramids over direct sums of
// simplices, witness face sequences, and the bound/equality checkers.
#pragma once

#include "facelat/face_lattice.hpp"
#include "facelat/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace facelat {

// C(d+1, k+1) + C(d, k+1) - C(d+1-s, k+1) with s = n - d. No domain gate;
// the checked public entry point is phi().
BigInt phi_formula(int k, int n, int d);

// Minimum possible number of k-faces of a d-polytope with n vertices,
// asserted for d+1 <= n <= 2d only (std::domain_error outside).
BigInt phi(int k, int n, int d);

// f_k of the (d-a)-fold pyramid over direct_sum_simplices(m, a-m):
// C(d+2, d-k+1) - C(d-a+m+1, d-k+1) - C(d-m+1, d-k+1) + C(d-a+1, d-k+1).
BigInt closed_fk_tdsm(int k, int d, int a, int m);

// #{k-faces F of p : F meets S}; S must be a nonempty set of vertices.
std::int64_t count_kfaces_containing(const FaceLattice& p, VertexSet s, int k);

// Nested face sequence for an ordered vertex list v_1..v_m (m <= dim):
// dim(F_i) = d-i+1, v_i in F_i, and no earlier v_j in F_i.
struct WitnessSequence {
    std::vector<int> vertices;
    std::vector<VertexSet> faces;
};

WitnessSequence witness_sequence(const FaceLattice& p, const std::vector<int>& verts);

// Throws std::logic_error if ws violates its invariants with respect to p.
void validate_witness(const FaceLattice& p, const WitnessSequence& ws);

enum class Verdict { Holds, ViolationAt };

enum class EqualityClass { NotTight, TightAndIsomorphicToDualT1, TightButNotIsomorphic };

std::string to_string(EqualityClass c);

struct BoundRow {
    int k;
    std::int64_t f_k;
    BigInt phi_k;
    BigInt slack;  // f_k - phi_k, exact
};

struct BoundReport {
    int d = 0;
    int s = 0;
    std::vector<BoundRow> per_k;    // k = 1..d-1
    std::vector<int> equality_ks;   // zero-slack k in 1..d-2
    Verdict verdict = Verdict::Holds;
    int violation_k = -1;           // set when verdict == ViolationAt
    EqualityClass equality_class = EqualityClass::NotTight;
    bool facet_profile_ok = false;  // meaningful for tight reports

    bool holds() const { return verdict == Verdict::Holds; }
    bool tight() const { return !equality_ks.empty(); }
};

// Per-k slack table for a lattice with d >= 2 and d+1 <= n <= 2d
// (std::domain_error outside that range). Does not classify equality.
BoundReport check_lower_bound(const FaceLattice& p);

// Equality-case classification: NotTight unless some k in 1..d-2 has zero
// slack; otherwise compares p against dual(t_dsm(d, s, 1)). Requires
// 2 <= s <= d.
EqualityClass classify_equality(const FaceLattice& p);

// True iff every facet has d, d+s-2, or d+s-1 vertices and there are exactly
// d+2 facets. Only meaningful for lattices classified tight.
bool facet_profile_check(const FaceLattice& p);

// check_lower_bound plus equality classification and facet profile, the
// composition used by the CLI and the sampling campaign.
BoundReport full_bound_report(const FaceLattice& p);

}  // namespace facelat
