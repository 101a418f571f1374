// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Everything here is exact integer arithmetic, so "pass" means equality or
// zero violations, never a tolerance.
#include "facelat/bounds.hpp"
#include "facelat/construction.hpp"
#include "facelat/isomorphism.hpp"
#include "facelat/oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace facelat;

namespace {

struct Entry {
    std::string name;
    FaceLattice lat;
};

std::vector<Entry> constructor_corpus_d6() {
    std::vector<Entry> out;
    for (int d = 2; d <= 6; ++d) out.push_back({"simplex(" + std::to_string(d) + ")", simplex(d)});
    for (int d = 2; d <= 6; ++d)
        for (int s = 2; s <= d; ++s)
            for (int m = 1; m <= s - 1; ++m) {
                std::string suffix = std::to_string(d) + "," + std::to_string(s) + "," +
                                     std::to_string(m) + ")";
                out.push_back({"tdsm(" + suffix, t_dsm(d, s, m)});
                out.push_back({"dual(tdsm(" + suffix + ")", dual(t_dsm(d, s, m))});
            }
    for (int d = 3; d <= 5; ++d)
        for (int s = 2; s <= d; ++s)
            out.push_back({"bipyr(tdsm(" + std::to_string(d) + "," + std::to_string(s) + ",1))",
                           bipyramid(t_dsm(d, s, 1))});
    for (int d = 2; d <= 5; ++d)
        for (int s = 2; s <= d; ++s)
            out.push_back({"pyr(dual(tdsm(" + std::to_string(d) + "," + std::to_string(s) + ",1)))",
                           pyramid(dual(t_dsm(d, s, 1)))});
    out.push_back({"octahedron", bipyramid(direct_sum_simplices(1, 1))});
    out.push_back({"cube", dual(bipyramid(direct_sum_simplices(1, 1)))});
    return out;
}

// dual-free construction grid for the oracle cross-check
std::vector<Construction> dual_free_grid_d6() {
    std::vector<Construction> out;
    for (int s = 1; s <= 6; ++s) out.push_back(Construction::make_simplex(s));
    for (int m = 1; m <= 5; ++m)
        for (int r = 1; m + r <= 6; ++r) out.push_back(Construction::dsum(m, r));
    for (int d = 2; d <= 6; ++d)
        for (int s = 2; s <= d; ++s)
            for (int m = 1; m <= s - 1; ++m) out.push_back(Construction::tdsm(d, s, m));
    for (int s = 1; s <= 5; ++s) out.push_back(Construction::bipyr(Construction::make_simplex(s)));
    for (int d = 3; d <= 5; ++d)
        for (int s = 2; s <= d; ++s)
            out.push_back(Construction::bipyr(Construction::tdsm(d, s, 1)));
    for (int s = 1; s <= 4; ++s)
        out.push_back(Construction::pyr(Construction::bipyr(Construction::make_simplex(s))));
    for (int r = 1; r <= 4; ++r) out.push_back(Construction::kpyr(Construction::dsum(1, 1), r));
    for (int s = 1; s <= 4; ++s)
        out.push_back(Construction::bipyr(Construction::bipyr(Construction::make_simplex(s))));
    return out;
}

bool criterion1(std::ostream& log) {
    long long checked = 0;
    for (int d = 2; d <= 8; ++d)
        for (int s = 2; s <= d; ++s) {
            const FVector fv = dual(t_dsm(d, s, 1)).f_vector();
            for (int k = 1; k <= d - 1; ++k) {
                ++checked;
                if (BigInt(fv[k]) != phi(k, d + s, d)) {
                    log << "f_" << k << "(dual(tdsm(" << d << "," << s << ",1))) = " << fv[k]
                        << " != phi = " << phi(k, d + s, d);
                    return false;
                }
            }
        }
    log << checked << " (d,s,k) triples, all exact";
    return true;
}

bool criterion2(std::ostream& log) {
    long long checked = 0;
    for (int d = 2; d <= 8; ++d)
        for (int a = 2; a <= d; ++a)
            for (int m = 1; m <= a - 1; ++m) {
                const FVector fv = t_dsm(d, a, m).f_vector();
                for (int k = 0; k <= d - 1; ++k) {
                    ++checked;
                    if (closed_fk_tdsm(k, d, a, m) != BigInt(fv[k])) {
                        log << "closed formula disagrees at (k,d,a,m)=(" << k << ',' << d << ','
                            << a << ',' << m << ")";
                        return false;
                    }
                }
            }
    log << checked << " (d,a,m,k) tuples, all exact";
    return true;
}

struct SampleStats {
    long long samples = 0;
    long long tight = 0;
    long long tight_iso = 0;
    long long profile_fail = 0;
    bool ok = true;
    std::string detail;
};

// shared by criteria 3 and 4: verdicts plus the equality characterization
SampleStats run_bound_suite() {
    SampleStats st;
    auto inspect = [&](const std::string& name, const FaceLattice& lat) {
        BoundReport rep = check_lower_bound(lat);
        ++st.samples;
        if (!rep.holds()) {
            st.ok = false;
            st.detail = name + ": ViolationAt(" + std::to_string(rep.violation_k) + ")";
            return false;
        }
        if (rep.s >= 2 && rep.tight()) {
            ++st.tight;
            if (classify_equality(lat) != EqualityClass::TightAndIsomorphicToDualT1) {
                st.ok = false;
                st.detail = name + ": tight but not isomorphic to the extremal dual";
                return false;
            }
            ++st.tight_iso;
            if (!facet_profile_check(lat)) {
                ++st.profile_fail;
                st.ok = false;
                st.detail = name + ": tight but facet profile check failed";
                return false;
            }
        }
        return true;
    };

    for (const Entry& e : constructor_corpus_d6()) {
        const int d = e.lat.dim(), n = e.lat.num_vertices();
        if (d < 2 || n < d + 1 || n > 2 * d) continue;
        if (!inspect(e.name, e.lat)) return st;
    }

    int cell_index = 0;
    for (int d = 2; d <= 5; ++d)
        for (int s = 1; s <= d; ++s, ++cell_index)
            for (int j = 0; j < 200; ++j) {
                const std::uint64_t seed =
                    1000003ull * static_cast<std::uint64_t>(cell_index) + static_cast<std::uint64_t>(j);
                PointConfig pc = random_polytope(d, d + s, seed);
                std::string name = "sample(d=" + std::to_string(d) + ",s=" + std::to_string(s) +
                                   ",seed=" + std::to_string(seed) + ")";
                if (!inspect(name, lattice_from_points(pc))) return st;
            }
    return st;
}

bool criterion5(std::ostream& log) {
    long long instances = 0;
    std::mt19937_64 rng(0x5eedf00dULL);
    for (int d = 2; d <= 5; ++d)
        for (int i = 0; i < 100; ++i) {
            const int n = d + 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
            FaceLattice p = lattice_from_points(random_polytope(d, n, rng()));
            const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
            std::vector<int> verts;
            while (static_cast<int>(verts.size()) < m) {
                int v = static_cast<int>(rng() % static_cast<unsigned>(p.num_vertices()));
                if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
            }
            WitnessSequence ws = witness_sequence(p, verts);
            try {
                validate_witness(p, ws);
            } catch (const std::exception& e) {
                log << "witness invariant failed (d=" << d << ", i=" << i << "): " << e.what();
                return false;
            }
            VertexSet set = 0;
            for (int v : verts) set |= single(v);
            for (int k = 0; k <= d - 1; ++k) {
                BigInt lower = 0;
                for (int idx = 1; idx <= m; ++idx) lower += binomial(d - idx + 1, k);
                if (BigInt(count_kfaces_containing(p, set, k)) < lower) {
                    log << "union bound failed (d=" << d << ", k=" << k << ")";
                    return false;
                }
            }
            ++instances;
        }
    log << instances << " (P, vertex-list) instances, zero violations";
    return true;
}

bool criterion6(std::ostream& log) {
    const int dmax = 12;
    long long checked = 0;
    for (int d = 1; d <= dmax; ++d)
        for (int b = 0; b < d; ++b)
            for (int a = b + 1; a <= d; ++a)
                for (int k = 0; k <= d - 1; ++k) {
                    BigInt lhs = phi_formula(k, d + a, d) - phi_formula(k, d + b, d);
                    BigInt mid = binomial(d + 1 - b, k + 1) - binomial(d + 1 - a, k + 1);
                    BigInt sum = 0;
                    for (int i = 1; i <= a - b; ++i) sum += binomial(d + 1 - b - i, k);
                    if (lhs != mid || lhs != sum) {
                        log << "difference identity failed at d=" << d << " a=" << a << " b=" << b
                            << " k=" << k;
                        return false;
                    }
                    ++checked;
                }
    for (int d = 1; d <= dmax; ++d)
        for (int k = 0; k <= d - 1; ++k) {
            if (phi(k, d + 1, d) != binomial(d + 1, k + 1)) {
                log << "simplex identity failed at d=" << d << " k=" << k;
                return false;
            }
            ++checked;
        }
    for (int d = 2; d <= dmax; ++d)
        for (int s = 0; s <= d - 2; ++s)
            for (int k = 0; k <= d - 2; ++k) {
                if (phi(k, d + s, d - 1) + binomial(d - 1, k) + binomial(d, k) !=
                    phi(k, d + s + 2, d)) {
                    log << "dimension-step identity failed at d=" << d << " s=" << s << " k=" << k;
                    return false;
                }
                ++checked;
            }
    log << checked << " identity instances, all exact";
    return true;
}

bool criterion7(std::ostream& log) {
    long long pairs = 0;
    for (const Construction& spec : dual_free_grid_d6()) {
        FaceLattice combinatorial = build(spec);
        FaceLattice geometric = lattice_from_points(realize(spec));
        if (!is_isomorphic(combinatorial, geometric).isomorphic) {
            log << to_string(spec) << ": constructor and oracle lattices differ";
            return false;
        }
        ++pairs;
    }
    for (int d = 2; d <= 7; ++d)
        for (int m = 1; m <= d - 1; ++m) {
            if (!is_isomorphic(direct_sum_simplices(m, d - m), direct_sum_simplices(d - m, m))
                     .isomorphic) {
                log << "swapped direct sums differ at d=" << d << " m=" << m;
                return false;
            }
            ++pairs;
        }
    log << pairs << " isomorphism checks";
    return true;
}

bool criterion8(std::ostream& log) {
    std::vector<Entry> corpus = constructor_corpus_d6();
    corpus.push_back({"tdsm(7,5,2)", t_dsm(7, 5, 2)});
    corpus.push_back({"tdsm(8,8,4)", t_dsm(8, 8, 4)});
    corpus.push_back({"dual(tdsm(8,6,1))", dual(t_dsm(8, 6, 1))});
    // a handful of oracle-built lattices join the corpus
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        corpus.push_back({"sample3/" + std::to_string(seed),
                          lattice_from_points(random_polytope(3, 6, seed))});
        corpus.push_back({"sample4/" + std::to_string(seed),
                          lattice_from_points(random_polytope(4, 7, seed))});
    }

    long long checks = 0;
    for (const Entry& e : corpus) {
        const FaceLattice& p = e.lat;
        const int d = p.dim();
        try {
            p.validate();  // closure, gradedness, atoms, Euler-Poincare
        } catch (const std::exception& ex) {
            log << e.name << ": " << ex.what();
            return false;
        }
        ++checks;

        const FVector fv = p.f_vector();
        FVector pyr_fv = pyramid(p).f_vector();
        for (int k = 0; k <= d; ++k) {
            std::int64_t expect = (k < d ? fv[k] : 1) + (k == 0 ? 1 : fv[k - 1]);
            if (pyr_fv[k] != expect) {
                log << e.name << ": pyramid recurrence failed at k=" << k;
                return false;
            }
        }
        ++checks;

        FVector dual_fv = dual(p).f_vector();
        for (int k = 0; k <= d - 1; ++k)
            if (dual_fv[k] != fv[d - 1 - k]) {
                log << e.name << ": dual f-vector is not the reversal";
                return false;
            }
        ++checks;

        for (int v = 0; v < p.num_vertices(); ++v) {
            FaceLattice fig = vertex_figure(p, v);
            for (int k = 1; k <= d; ++k) {
                std::int64_t with_v = 0;
                for (VertexSet f : p.faces(k))
                    if (has_vertex(f, v)) ++with_v;
                if (fig.face_count(k - 1) != with_v) {
                    log << e.name << ": vertex-figure bijection failed at v=" << v;
                    return false;
                }
            }
        }
        ++checks;

        if (p.is_simplicial() && p.num_vertices() >= d + 2 && fv[d - 1] < 2 * d) {
            log << e.name << ": simplicial lattice with fewer than 2d facets";
            return false;
        }
        ++checks;
    }
    log << corpus.size() << " corpus members, " << checks << " structural checks";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<bool(std::ostream&)> run;
    };

    SampleStats bound_stats;
    bool bound_suite_ran = false;
    auto ensure_bound_suite = [&] {
        if (!bound_suite_ran) {
            bound_stats = run_bound_suite();
            bound_suite_ran = true;
        }
    };

    const std::vector<Criterion> criteria = {
        {1, "extremal duals meet phi exactly (2<=s<=d<=8)", criterion1},
        {2, "closed face-count formula matches lattices (d<=8)", criterion2},
        {3, "lower bound holds on constructors and 200 samples/cell (d<=5)",
         [&](std::ostream& log) {
             ensure_bound_suite();
             if (!bound_stats.ok) {
                 log << bound_stats.detail;
                 return false;
             }
             log << bound_stats.samples << " lattices, zero violations";
             return true;
         }},
        {4, "every tight case is the extremal dual with the right facet profile",
         [&](std::ostream& log) {
             ensure_bound_suite();
             if (!bound_stats.ok) {
                 log << bound_stats.detail;
                 return false;
             }
             if (bound_stats.tight == 0) {
                 log << "no tight case was exercised";
                 return false;
             }
             log << bound_stats.tight << " tight cases, all isomorphic, profiles ok";
             return true;
         }},
        {5, "witness sequences and the union lower bound (100/d, d<=5)", criterion5},
        {6, "binomial identities for phi (d<=12)", criterion6},
        {7, "constructor lattices match the geometric oracle (d<=6 grid)", criterion7},
        {8, "structural sanity across the corpus", criterion8},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s  %s — %s  [%.2fs]\n", c.id, ok ? "PASS" : "FAIL",
                    c.title.c_str(), log.str().c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - static_cast<size_t>(failed),
                criteria.size());
    return failed == 0 ? 0 : 1;
}
