// Error types for the named failure modes. Everything else malformed is
// reported with std::invalid_argument; math-domain refusals (parameters the
// bound is not asserted for) use std::domain_error.
#pragma once

#include <stdexcept>
#include <string>

namespace facelat {

// Incidence input where one facet set contains another.
struct AntichainViolation : std::runtime_error {
    explicit AntichainViolation(const std::string& what) : std::runtime_error(what) {}
};

// Intersection closure has inconsistent maximal-chain lengths; the input is
// not the incidence of a polytope.
struct NotGraded : std::runtime_error {
    explicit NotGraded(const std::string& what) : std::runtime_error(what) {}
};

// Top rank of the reconstructed lattice differs from the declared dimension.
struct RankMismatch : std::runtime_error {
    explicit RankMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Construction expressions containing dual() have no geometric realization here.
struct DualNotRealizable : std::runtime_error {
    explicit DualNotRealizable(const std::string& what) : std::runtime_error(what) {}
};

// random_polytope hit its rejection cap without finding a valid configuration.
struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Point configuration does not span its ambient space.
struct NotFullDimensional : std::runtime_error {
    explicit NotFullDimensional(const std::string& what) : std::runtime_error(what) {}
};

// Fewer than d+1 points: cannot be a d-polytope.
struct FewerThanDPlus1Points : std::runtime_error {
    explicit FewerThanDPlus1Points(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace facelat
