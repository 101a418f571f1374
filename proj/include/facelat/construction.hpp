// Construction expressions: the small language of polytope constructors used
// by the CLI and the oracle. Grammar (integers are nonnegative decimals):
//   expr := simplex(s) | pyr(expr) | kpyr(expr, r) | bipyr(expr)
//         | dsum(m, r) | tdsm(d, s, m) | dual(expr)
#pragma once

#include <string>
#include <vector>

#include "facelat/face_lattice.hpp"

namespace facelat {

struct Construction {
    enum class Kind { Simplex, Pyramid, KFoldPyramid, Bipyramid, DirectSum, Tdsm, Dual };

    Kind kind = Kind::Simplex;
    // Simplex: a = s. KFoldPyramid: a = r. DirectSum: a = m, b = r.
    // Tdsm: a = d, b = s, c = m.
    int a = 0, b = 0, c = 0;
    std::vector<Construction> child;  // empty or exactly one

    static Construction make_simplex(int s);
    static Construction pyr(Construction base);
    static Construction kpyr(Construction base, int r);
    static Construction bipyr(Construction base);
    static Construction dsum(int m, int r);
    static Construction tdsm(int d, int s, int m);
    static Construction dual_of(Construction base);
};

// Parse the textual grammar; std::invalid_argument with position info on error.
Construction parse_construction(const std::string& text);

std::string to_string(const Construction& spec);

bool contains_dual(const Construction& spec);

// Evaluate the expression combinatorially.
FaceLattice build(const Construction& spec);

}  // namespace facelat
