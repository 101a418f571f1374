// Vertex subsets packed into 64-bit masks. Vertex indices are 0..63; the
// library-wide vertex cap lives in face_lattice (max_vertices()).
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace facelat {

using VertexSet = std::uint64_t;

constexpr VertexSet kEmptySet = 0;

inline VertexSet single(int v) { return VertexSet{1} << v; }

// {0, 1, ..., n-1}
inline VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline bool contains(VertexSet sup, VertexSet sub) { return (sup & sub) == sub; }

inline bool has_vertex(VertexSet s, int v) { return (s >> v) & 1; }

inline int cardinality(VertexSet s) { return std::popcount(s); }

inline std::vector<int> to_indices(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::popcount(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

// Lexicographic order on the sorted vertex index sequences, e.g. {0,3} < {1,2}
// and {1} < {1,2}. Not the same as numeric order on the masks.
inline bool lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int i = std::countr_zero(a);
        int j = std::countr_zero(b);
        if (i != j) return i < j;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

}  // namespace facelat
