// facelat command line: build polytopes from constructor expressions or
// point files, check the vertex-count lower bound and its equality case,
// print phi tables, and drive sampling campaigns.
//
// Exit codes: 0 ok; 1 usage/parse/config error; 2 domain refusal (bound not
// asserted for the input); 3 verification failure (bound violation or a
// tight sample that is not the expected dual type).
#include "facelat/bounds.hpp"
#include "facelat/construction.hpp"
#include "facelat/io.hpp"
#include "facelat/isomorphism.hpp"
#include "facelat/oracle.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace facelat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitViolation = 3;

bool looks_like_file(const std::string& arg) {
    return arg.find(".json") != std::string::npos || std::filesystem::exists(arg);
}

Construction parse_spec_arg(const std::string& arg) {
    if (looks_like_file(arg)) {
        const std::string text = read_file(arg);
        // a construction file is a JSON object with an "op" key
        if (text.find("\"op\"") != std::string::npos) return construction_from_json(text);
        throw std::invalid_argument(arg + " is not a construction file (no \"op\" key)");
    }
    return parse_construction(arg);
}

// points file -> oracle lattice; lattice file -> rebuild; else expression
FaceLattice load_lattice_arg(const std::string& arg) {
    if (looks_like_file(arg)) {
        const std::string text = read_file(arg);
        if (text.find("\"points\"") != std::string::npos)
            return lattice_from_points(points_from_json(text));
        if (text.find("\"facets\"") != std::string::npos) return lattice_from_json(text);
        if (text.find("\"op\"") != std::string::npos) return build(construction_from_json(text));
        throw std::invalid_argument(arg + ": unrecognized JSON payload");
    }
    return build(parse_construction(arg));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

int cmd_construct(const std::string& input, const std::string& out_path) {
    FaceLattice p = build(parse_spec_arg(input));
    std::cout << "f = " << to_string(p.f_vector()) << "\n";
    if (!out_path.empty()) write_file(out_path, lattice_to_json(p));
    return kExitOk;
}

int cmd_check(const std::string& input, const std::string& out_path, const std::string& format) {
    FaceLattice p = load_lattice_arg(input);
    BoundReport rep;
    try {
        rep = full_bound_report(p);
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    }
    emit(format == "csv" ? report_to_csv(rep) : report_to_json(rep), out_path);
    std::cout << "verdict: "
              << (rep.holds() ? "Holds" : "ViolationAt(" + std::to_string(rep.violation_k) + ")")
              << "  equality: " << to_string(rep.equality_class);
    if (rep.tight() && rep.s >= 2)
        std::cout << "  facet_profile: " << (rep.facet_profile_ok ? "ok" : "FAIL");
    std::cout << "\n";
    if (rep.equality_class == EqualityClass::TightButNotIsomorphic)
        std::cerr << "DIAGNOSTIC: tight f-vector but not the expected dual type; "
                     "either the input is not polytopal or this is a library bug\n";
    if (!rep.holds() || rep.equality_class == EqualityClass::TightButNotIsomorphic)
        return kExitViolation;
    return kExitOk;
}

int cmd_phi_table(int dmax, const std::string& out_path) {
    std::ostringstream os;
    os << "d,s,k,phi\n";
    for (int d = 1; d <= dmax; ++d)
        for (int s = 1; s <= d; ++s)
            for (int k = 0; k <= d - 1; ++k)
                os << d << ',' << s << ',' << k << ',' << phi(k, d + s, d) << '\n';
    emit(os.str(), out_path);
    return kExitOk;
}

int cmd_isomorphic(const std::string& a, const std::string& b) {
    FaceLattice p = load_lattice_arg(a);
    FaceLattice q = load_lattice_arg(b);
    IsomorphismResult res = is_isomorphic(p, q);
    if (!res.isomorphic) {
        std::cout << "isomorphic: false\n";
        return kExitOk;
    }
    std::cout << "isomorphic: true\nwitness:";
    for (size_t v = 0; v < res.witness.size(); ++v)
        std::cout << ' ' << v << "->" << res.witness[v];
    std::cout << "\n";
    return kExitOk;
}

struct CampaignConfig {
    int d_min = 0, d_max = 0;
    int s_min = 2, s_max = 0;  // s_max clamped to d per cell
    int samples = 0;
    std::uint64_t base_seed = 0;
    bool fixtures = true;
};

int cmd_campaign(const CampaignConfig& cfg, const std::string& out_path) {
    if (cfg.d_min < 2 || cfg.d_max < cfg.d_min)
        throw std::invalid_argument("campaign: need 2 <= dmin <= dmax");
    if (cfg.s_min < 2) throw std::invalid_argument("campaign: need smin >= 2");
    if (cfg.samples < 1) throw std::invalid_argument("campaign: need at least one sample per cell");

    std::vector<std::pair<int, int>> cells;
    for (int d = cfg.d_min; d <= cfg.d_max; ++d)
        for (int s = cfg.s_min; s <= std::min(cfg.s_max, d); ++s) cells.emplace_back(d, s);
    if (cells.empty())
        throw std::invalid_argument(
            "campaign: no valid (d, s) cells; ranges must respect 2 <= s <= d");

    std::ostringstream csv;
    csv << "d,s,sample,seed,verdict,equality_class,facet_profile_ok\n";
    long long violations = 0, tight = 0, tight_iso = 0, tight_noniso = 0, total = 0;

    for (size_t ci = 0; ci < cells.size(); ++ci) {
        const auto [d, s] = cells[ci];
        auto record = [&](const std::string& label, std::uint64_t seed, const FaceLattice& lat) {
            BoundReport rep = full_bound_report(lat);
            ++total;
            if (!rep.holds()) ++violations;
            if (rep.tight()) {
                ++tight;
                if (rep.equality_class == EqualityClass::TightAndIsomorphicToDualT1) ++tight_iso;
                else ++tight_noniso;
            }
            csv << d << ',' << s << ',' << label << ',' << seed << ','
                << (rep.holds() ? "Holds" : "ViolationAt(" + std::to_string(rep.violation_k) + ")")
                << ',' << to_string(rep.equality_class) << ','
                << (rep.tight() ? (rep.facet_profile_ok ? "true" : "false") : "") << '\n';
        };

        // the s = 2 extremal type is a pyramid tower over a quadrilateral and
        // is self-dual, so it can be injected geometrically
        if (cfg.fixtures && s == 2)
            record("fixture", 0, lattice_from_points(realize(Construction::tdsm(d, 2, 1))));

        for (int j = 0; j < cfg.samples; ++j) {
            const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(ci) +
                                       static_cast<std::uint64_t>(j);
            PointConfig pc;
            try {
                pc = random_polytope(d, d + s, seed);
            } catch (const SamplingExhausted& e) {
                std::cerr << "cell (" << d << "," << s << ") sample " << j << ": " << e.what()
                          << "\n";
                throw;
            }
            record(std::to_string(j), seed, lattice_from_points(pc));
        }
    }

    emit(csv.str(), out_path);
    std::cout << "cells: " << cells.size() << "  samples: " << total
              << "  violations: " << violations << "  tight: " << tight
              << "  tight_isomorphic: " << tight_iso << "  tight_not_isomorphic: " << tight_noniso
              << "\n";
    return (violations || tight_noniso) ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"face lattices, f-vectors, and the vertex-count lower bound phi_k(n, d)"};
    app.require_subcommand(1);

    std::string input, input_b, out_path, format = "json";
    int dmax = 8;
    CampaignConfig cfg;

    auto* construct = app.add_subcommand("construct", "build a lattice from an expression or file");
    construct->add_option("spec", input, "constructor expression or construction JSON file")
        ->required();
    construct->add_option("--out", out_path, "write lattice JSON here");

    auto* check = app.add_subcommand("check", "lower-bound report for a polytope");
    check->add_option("input", input, "points file, lattice file, or constructor expression")
        ->required();
    check->add_option("--out", out_path, "write the report here instead of stdout");
    check->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* phitab = app.add_subcommand("phi-table", "CSV of phi_k(d+s, d) for all valid (d, s, k)");
    phitab->add_option("--dmax", dmax, "largest dimension, at most 16")->check(CLI::Range(1, 16));
    phitab->add_option("--out", out_path, "write the CSV here instead of stdout");

    auto* iso = app.add_subcommand("isomorphic", "decide lattice isomorphism of two inputs");
    iso->add_option("a", input, "first input")->required();
    iso->add_option("b", input_b, "second input")->required();

    auto* campaign = app.add_subcommand("campaign", "random sampling over the (d, s) grid");
    campaign->add_option("--d", cfg.d_min, "smallest dimension")->required();
    campaign->add_option("--dmax", cfg.d_max, "largest dimension (default: --d)");
    campaign->add_option("--s", cfg.s_min, "smallest vertex excess (>= 2)");
    campaign->add_option("--smax", cfg.s_max, "largest vertex excess (clamped to d per cell)");
    campaign->add_option("--samples", cfg.samples, "samples per (d, s) cell")->required();
    campaign->add_option("--seed", cfg.base_seed,
                         "base seed; per-sample seed = base + cell index + sample index");
    campaign->add_flag("!--no-fixtures", cfg.fixtures, "skip the injected s=2 extremal fixtures");
    campaign->add_option("--out", out_path, "write the per-sample CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(input, out_path);
        if (check->parsed()) return cmd_check(input, out_path, format);
        if (phitab->parsed()) return cmd_phi_table(dmax, out_path);
        if (iso->parsed()) return cmd_isomorphic(input, input_b);
        if (campaign->parsed()) {
            if (cfg.d_max == 0) cfg.d_max = cfg.d_min;
            if (cfg.s_max == 0) cfg.s_max = cfg.d_max;
            return cmd_campaign(cfg, out_path);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
