// Exact-rational brute-force geometry: realize construction expressions as
// point configurations, enumerate facets by scanning candidate supporting
// hyperplanes over all d-subsets, and sample random polytopes in convex
// position. Every decision is an integer sign test; nothing is rounded.
#pragma once

#include "facelat/construction.hpp"
#include "facelat/errors.hpp"
#include "facelat/face_lattice.hpp"
#include "facelat/numbers.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace facelat {

struct PointConfig {
    int dim = 0;  // ambient dimension
    std::vector<std::vector<Rational>> points;
};

// Throws std::invalid_argument on shape mismatch or duplicate points.
void validate_point_config(const PointConfig& pc);

// Oriented hyperplane {x : normal . x = offset} with content-reduced integer
// coefficients and the first nonzero normal coordinate positive.
struct Hyperplane {
    std::vector<BigInt> normal;
    BigInt offset;
};

// Hyperplane through d affinely independent rational points; nullopt when the
// points do not span one.
std::optional<Hyperplane> hyperplane_through(const std::vector<std::vector<Rational>>& pts);

// Dimension of the affine span; requires at least one point.
int affine_dim(const PointConfig& pc);

// All facets of conv(points) as vertex sets over the hull vertices, found by
// the d-subset scan. Requires affine_dim == dim >= 1 and at least d+1 points.
VertexFacetIncidence facet_enumeration(const PointConfig& pc);

// facet_enumeration composed with build_from_incidence.
FaceLattice lattice_from_points(const PointConfig& pc);

// Geometric realization of a dual-free construction expression.
// Simplices get the origin plus unit vectors; pyramids and bipyramids lift
// apexes above (and below) the barycenter; direct sums center each summand
// at the origin of its own coordinate block.
PointConfig realize(const Construction& spec);

// n integer points in [-8, 8]^d, redrawn until full-dimensional with every
// point a hull vertex; deterministic in seed. Requires d >= 2 and
// d+1 <= n <= 2d. Throws SamplingExhausted after 10000 attempts.
PointConfig random_polytope(int d, int n, std::uint64_t seed);

}  // namespace facelat
