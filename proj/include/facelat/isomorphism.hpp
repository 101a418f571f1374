// Combinatorial isomorphism of face lattices, decided by canonical labeling
// of the vertex-facet incidence (color refinement plus individualization
// backtracking). Worst-case exponential; fine at the vertex counts used here.
#pragma once

#include "facelat/face_lattice.hpp"

#include <optional>
#include <vector>

namespace facelat {

struct IsomorphismResult {
    bool isomorphic = false;
    // witness[v] = image of vertex v of the first lattice in the second
    std::vector<int> witness;
};

IsomorphismResult is_isomorphic(const FaceLattice& p, const FaceLattice& q);

// Canonical certificate of the vertex-facet incidence; equal certificates
// iff isomorphic lattices (faces are generated by facets).
std::vector<std::vector<int>> canonical_certificate(const FaceLattice& p);

// For a simplicial lattice with d+2 vertices, the unique m in 1..floor(d/2)
// with P isomorphic to the direct sum of an m- and a (d-m)-simplex; nullopt
// when the input is not of this form.
std::optional<int> classify_simplicial_d2(const FaceLattice& p);

}  // namespace facelat
