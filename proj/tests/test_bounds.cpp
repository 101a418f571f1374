#include "facelat/bounds.hpp"

#include "facelat/isomorphism.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

using namespace facelat;

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("phi values and domain") {
    CHECK(phi(2, 5, 3) == 5);       // d+2 facets at k = d-1
    CHECK(phi(1, 5, 3) == 8);       // edges of the square pyramid
    CHECK(phi(2, 6, 5) == 20);      // s = 1 collapses to C(d+1, k+1)
    CHECK(phi(1, 6, 3) == 9);
    CHECK(phi(2, 6, 3) == 5);
    CHECK_THROWS_AS(phi(1, 7, 3), std::domain_error);   // n > 2d
    CHECK_THROWS_AS(phi(1, 3, 3), std::domain_error);   // n < d+1
    CHECK_THROWS_AS(phi(3, 5, 3), std::domain_error);   // k out of range
}

TEST_CASE("pascal identities for phi") {
    const int dmax = 12;
    SUBCASE("difference identity") {
        for (int d = 1; d <= dmax; ++d)
            for (int b = 0; b < d; ++b)
                for (int a = b + 1; a <= d; ++a)
                    for (int k = 0; k <= d - 1; ++k) {
                        BigInt lhs = phi_formula(k, d + a, d) - phi_formula(k, d + b, d);
                        BigInt mid = binomial(d + 1 - b, k + 1) - binomial(d + 1 - a, k + 1);
                        BigInt sum = 0;
                        for (int i = 1; i <= a - b; ++i) sum += binomial(d + 1 - b - i, k);
                        CHECK(lhs == mid);
                        CHECK(lhs == sum);
                    }
    }
    SUBCASE("one extra vertex gives the simplex counts") {
        for (int d = 1; d <= dmax; ++d)
            for (int k = 0; k <= d - 1; ++k)
                CHECK(phi(k, d + 1, d) == binomial(d + 1, k + 1));
    }
    SUBCASE("dimension-step identity") {
        for (int d = 2; d <= dmax; ++d)
            for (int s = 0; s <= d - 2; ++s)
                for (int k = 0; k <= d - 2; ++k)
                    CHECK(phi(k, d + s, d - 1) + binomial(d - 1, k) + binomial(d, k) ==
                          phi(k, d + s + 2, d));
        CHECK(phi(1, 6, 3) + binomial(3, 1) + binomial(4, 1) == phi(1, 8, 4));  // 9+3+4 = 16
    }
}

TEST_CASE("closed_fk_tdsm") {
    CHECK(closed_fk_tdsm(3, 4, 4, 2) == 9);           // d+1+m(d-m)
    CHECK(closed_fk_tdsm(1, 3, 3, 1) == 9);           // edges of the triangle bipyramid
    CHECK(closed_fk_tdsm(3, 4, 2, 1) == 6);
    for (int d = 2; d <= 8; ++d)
        for (int m = 1; m <= d - 1; ++m)
            CHECK(closed_fk_tdsm(d - 1, d, d, m) == d + 1 + m * (d - m));
    CHECK_THROWS_AS(closed_fk_tdsm(0, 3, 1, 1), std::domain_error);
    CHECK_THROWS_AS(closed_fk_tdsm(0, 3, 3, 3), std::domain_error);
}

TEST_CASE("closed formula agrees with the lattice counts, d <= 6") {
    for (int d = 2; d <= 6; ++d)
        for (int a = 2; a <= d; ++a)
            for (int m = 1; m <= a - 1; ++m) {
                FVector fv = t_dsm(d, a, m).f_vector();
                for (int k = 0; k <= d - 1; ++k)
                    CHECK(closed_fk_tdsm(k, d, a, m) == fv[k]);
            }
}

TEST_CASE("count_kfaces_containing") {
    FaceLattice t3 = simplex(3);
    CHECK(count_kfaces_containing(t3, single(0), 1) == 3);  // C(d, k)
    FaceLattice sp = t_dsm(3, 2, 1);
    CHECK(count_kfaces_containing(sp, single(4), 1) == 4);  // apex meets 4 edges
    for (int k = 0; k < sp.dim(); ++k)
        CHECK(count_kfaces_containing(sp, sp.vertex_mask(), k) == sp.face_count(k));
    CHECK_THROWS_AS(count_kfaces_containing(sp, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_kfaces_containing(sp, single(0), 3), std::invalid_argument);
}

TEST_CASE("witness sequence basics") {
    FaceLattice t3 = simplex(3);
    SUBCASE("m = 1 picks the whole polytope") {
        WitnessSequence ws = witness_sequence(t3, {2});
        CHECK(ws.faces == std::vector<VertexSet>{t3.vertex_mask()});
        validate_witness(t3, ws);
    }
    SUBCASE("m = 2 on the tetrahedron") {
        WitnessSequence ws = witness_sequence(t3, {0, 1});
        REQUIRE(ws.faces.size() == 2);
        CHECK(ws.faces[0] == t3.vertex_mask());
        CHECK(ws.faces[1] == (single(1) | single(2) | single(3)));
        validate_witness(t3, ws);
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(witness_sequence(t3, {0, 1, 2, 3}), std::invalid_argument);  // m > d
        CHECK_THROWS_AS(witness_sequence(t3, {0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(witness_sequence(t3, {7}), std::invalid_argument);
    }
}

TEST_CASE("witness sequence properties on constructed corpus") {
    std::mt19937_64 rng(20240811);
    const FaceLattice corpus[] = {simplex(4), t_dsm(4, 3, 1), dual(t_dsm(4, 4, 2)),
                                  bipyramid(t_dsm(3, 2, 1)), direct_sum_simplices(2, 3)};
    for (const FaceLattice& p : corpus) {
        const int d = p.dim();
        for (int trial = 0; trial < 40; ++trial) {
            int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
            std::vector<int> verts;
            while (static_cast<int>(verts.size()) < m) {
                int v = static_cast<int>(rng() % static_cast<unsigned>(p.num_vertices()));
                if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
            }
            WitnessSequence ws = witness_sequence(p, verts);
            validate_witness(p, ws);
            VertexSet s = 0;
            for (int v : verts) s |= single(v);
            for (int k = 0; k <= d - 1; ++k) {
                BigInt lower = 0;
                for (int i = 1; i <= m; ++i) lower += binomial(d - i + 1, k);
                CHECK(BigInt(count_kfaces_containing(p, s, k)) >= lower);
            }
        }
    }
}

TEST_CASE("check_lower_bound") {
    SUBCASE("square pyramid is tight everywhere") {
        BoundReport rep = check_lower_bound(t_dsm(3, 2, 1));
        CHECK(rep.holds());
        CHECK(rep.d == 3);
        CHECK(rep.s == 2);
        REQUIRE(rep.per_k.size() == 2);
        CHECK(rep.per_k[0].slack == 0);
        CHECK(rep.per_k[1].slack == 0);
        CHECK(rep.equality_ks == std::vector<int>{1});
    }
    SUBCASE("octahedron has slack (3, 3)") {
        BoundReport rep = check_lower_bound(bipyramid(direct_sum_simplices(1, 1)));
        CHECK(rep.holds());
        CHECK(rep.s == 3);
        CHECK(rep.per_k[0].slack == 3);
        CHECK(rep.per_k[1].slack == 3);
        CHECK(rep.equality_ks.empty());
    }
    SUBCASE("triangular prism is tight") {
        BoundReport rep = check_lower_bound(dual(t_dsm(3, 3, 1)));
        CHECK(rep.holds());
        CHECK(rep.per_k[0].slack == 0);
        CHECK(rep.per_k[1].slack == 0);
        CHECK(rep.equality_ks == std::vector<int>{1});
    }
    SUBCASE("domain gate") {
        CHECK_THROWS_AS(check_lower_bound(dual(bipyramid(direct_sum_simplices(1, 1)))),
                        std::domain_error);  // cube: n = 8 > 2d = 6
        CHECK_THROWS_AS(check_lower_bound(simplex(1)), std::domain_error);
    }
}

TEST_CASE("classify_equality") {
    CHECK(classify_equality(t_dsm(3, 2, 1)) == EqualityClass::TightAndIsomorphicToDualT1);
    CHECK(classify_equality(dual(t_dsm(3, 3, 1))) == EqualityClass::TightAndIsomorphicToDualT1);
    CHECK(classify_equality(bipyramid(direct_sum_simplices(1, 1))) == EqualityClass::NotTight);
    CHECK_THROWS_AS(classify_equality(simplex(3)), std::domain_error);  // s = 1
}

TEST_CASE("facet_profile_check") {
    CHECK(facet_profile_check(t_dsm(3, 2, 1)));
    CHECK(facet_profile_check(dual(t_dsm(3, 3, 1))));
    // octahedron: 8 facets != d+2
    CHECK_FALSE(facet_profile_check(bipyramid(direct_sum_simplices(1, 1))));
}

TEST_CASE("full_bound_report composes the three checks") {
    BoundReport rep = full_bound_report(dual(t_dsm(4, 3, 1)));
    CHECK(rep.holds());
    CHECK(rep.tight());
    CHECK(rep.equality_class == EqualityClass::TightAndIsomorphicToDualT1);
    CHECK(rep.facet_profile_ok);
}
