#include "facelat/bounds.hpp"

#include "facelat/isomorphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace facelat {

BigInt phi_formula(int k, int n, int d) {
    const int s = n - d;
    return binomial(d + 1, k + 1) + binomial(d, k + 1) - binomial(d + 1 - s, k + 1);
}

BigInt phi(int k, int n, int d) {
    if (d < 1) throw std::domain_error("phi: d must be >= 1");
    if (n < d + 1 || n > 2 * d)
        throw std::domain_error("phi: bound asserted only for d+1 <= n <= 2d, got n=" +
                                std::to_string(n) + " d=" + std::to_string(d));
    if (k < 0 || k > d - 1) throw std::domain_error("phi: k must be in 0..d-1");
    return phi_formula(k, n, d);
}

BigInt closed_fk_tdsm(int k, int d, int a, int m) {
    if (!(2 <= a && a <= d)) throw std::domain_error("closed_fk_tdsm: need 2 <= a <= d");
    if (!(1 <= m && m <= a - 1)) throw std::domain_error("closed_fk_tdsm: need 1 <= m <= a-1");
    if (k < 0 || k > d - 1) throw std::domain_error("closed_fk_tdsm: k must be in 0..d-1");
    return binomial(d + 2, d - k + 1) - binomial(d - a + m + 1, d - k + 1) -
           binomial(d - m + 1, d - k + 1) + binomial(d - a + 1, d - k + 1);
}

std::int64_t count_kfaces_containing(const FaceLattice& p, VertexSet s, int k) {
    if (s == 0 || !contains(p.vertex_mask(), s))
        throw std::invalid_argument("count_kfaces_containing: S must be a nonempty vertex set");
    if (k < 0 || k > p.dim() - 1)
        throw std::invalid_argument("count_kfaces_containing: k must be in 0..d-1");
    std::int64_t count = 0;
    for (VertexSet f : p.faces(k))
        if (f & s) ++count;
    return count;
}

namespace {

// Faces of rank r-1 contained in face f of rank r (the facets of f viewed as
// a polytope in its own right).
std::vector<VertexSet> subfacets_of(const FaceLattice& p, VertexSet f, int r) {
    std::vector<VertexSet> out;
    for (VertexSet g : p.faces(r - 1))
        if (contains(f, g)) out.push_back(g);
    return out;
}

WitnessSequence witness_rec(const FaceLattice& p, const std::vector<int>& verts) {
    WitnessSequence ws;
    ws.vertices = verts;
    if (verts.empty()) return ws;
    if (verts.size() == 1) {
        ws.faces = {p.vertex_mask()};
        return ws;
    }
    const size_t m = verts.size();
    std::vector<int> prefix(verts.begin(), verts.end() - 1);
    ws.faces = witness_rec(p, prefix).faces;  // F_1 .. F_{m-1}

    // F: a (d-m+2)-face containing v_m but none of v_1..v_{m-2}
    std::vector<int> alt(verts.begin(), verts.end() - 2);
    alt.push_back(verts.back());
    VertexSet f = witness_rec(p, alt).faces.back();
    const int rank_f = p.dim() - static_cast<int>(m) + 2;

    // F_m: facet of F containing v_m but not v_{m-1}; lexicographically
    // smallest vertex set when several qualify
    const VertexSet vm = single(verts.back());
    const VertexSet vprev = single(verts[m - 2]);
    bool found = false;
    VertexSet fm = 0;
    for (VertexSet g : subfacets_of(p, f, rank_f))
        if (contains(g, vm) && !contains(g, vprev) && (!found || lex_less(g, fm))) {
            fm = g;
            found = true;
        }
    if (!found)
        throw std::logic_error("no facet of F separates the last two vertices; "
                               "input lattice is not polytopal");
    ws.faces.push_back(fm);
    return ws;
}

}  // namespace

WitnessSequence witness_sequence(const FaceLattice& p, const std::vector<int>& verts) {
    if (static_cast<int>(verts.size()) > p.dim())
        throw std::invalid_argument("witness_sequence: need m <= dim");
    std::set<int> seen;
    for (int v : verts) {
        if (v < 0 || v >= p.num_vertices())
            throw std::invalid_argument("witness_sequence: vertex out of range");
        if (!seen.insert(v).second)
            throw std::invalid_argument("witness_sequence: vertices must be distinct");
    }
    return witness_rec(p, verts);
}

void validate_witness(const FaceLattice& p, const WitnessSequence& ws) {
    const int d = p.dim();
    if (ws.faces.size() != ws.vertices.size())
        throw std::logic_error("witness: face/vertex count mismatch");
    for (size_t i = 0; i < ws.faces.size(); ++i) {
        const int want_rank = d - static_cast<int>(i);  // dim d-i+1 for 1-based i
        if (!p.has_face(want_rank, ws.faces[i]))
            throw std::logic_error("witness: F_i has the wrong dimension or is not a face");
        if (!has_vertex(ws.faces[i], ws.vertices[i]))
            throw std::logic_error("witness: v_i not in F_i");
        for (size_t j = 0; j < i; ++j)
            if (has_vertex(ws.faces[i], ws.vertices[j]))
                throw std::logic_error("witness: earlier vertex inside F_i");
    }
}

BoundReport check_lower_bound(const FaceLattice& p) {
    const int d = p.dim();
    const int n = p.num_vertices();
    if (d < 2) throw std::domain_error("check_lower_bound: need d >= 2");
    if (n < d + 1 || n > 2 * d)
        throw std::domain_error("check_lower_bound: bound asserted only for d+1 <= n <= 2d, got n=" +
                                std::to_string(n) + " d=" + std::to_string(d));

    BoundReport rep;
    rep.d = d;
    rep.s = n - d;
    const FVector fv = p.f_vector();
    for (int k = 1; k <= d - 1; ++k) {
        BoundRow row;
        row.k = k;
        row.f_k = fv[k];
        row.phi_k = phi(k, n, d);
        row.slack = BigInt(row.f_k) - row.phi_k;
        if (row.slack < 0 && rep.verdict == Verdict::Holds) {
            rep.verdict = Verdict::ViolationAt;
            rep.violation_k = k;
        }
        if (row.slack == 0 && k <= d - 2) rep.equality_ks.push_back(k);
        rep.per_k.push_back(std::move(row));
    }
    return rep;
}

EqualityClass classify_equality(const FaceLattice& p) {
    const int d = p.dim();
    const int s = p.num_vertices() - d;
    if (!(2 <= s && s <= d))
        throw std::domain_error("classify_equality: need 2 <= s <= d");
    BoundReport rep = check_lower_bound(p);
    if (!rep.tight()) return EqualityClass::NotTight;
    const FaceLattice extremal = dual(t_dsm(d, s, 1));
    return is_isomorphic(p, extremal).isomorphic ? EqualityClass::TightAndIsomorphicToDualT1
                                                 : EqualityClass::TightButNotIsomorphic;
}

bool facet_profile_check(const FaceLattice& p) {
    const int d = p.dim();
    const int s = p.num_vertices() - d;
    if (p.face_count(d - 1) != d + 2) return false;
    for (VertexSet f : p.facets()) {
        const int c = cardinality(f);
        if (c != d && c != d + s - 2 && c != d + s - 1) return false;
    }
    return true;
}

BoundReport full_bound_report(const FaceLattice& p) {
    BoundReport rep = check_lower_bound(p);
    if (rep.s >= 2 && rep.tight()) {
        rep.equality_class = classify_equality(p);
        rep.facet_profile_ok = facet_profile_check(p);
    }
    return rep;
}

std::string to_string(EqualityClass c) {
    switch (c) {
        case EqualityClass::NotTight: return "NotTight";
        case EqualityClass::TightAndIsomorphicToDualT1: return "TightAndIsomorphicToDual_T1";
        case EqualityClass::TightButNotIsomorphic: return "TightButNotIsomorphic";
    }
    return "?";
}

}  // namespace facelat
