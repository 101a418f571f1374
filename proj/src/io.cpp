#include "facelat/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

using nlohmann::json;

namespace facelat {

namespace {

void check_schema(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw std::invalid_argument("missing schema_version");
    if (j["schema_version"].get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported schema_version");
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;  // prints "num/den", or "num" when the denominator is 1
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
    }
}

}  // namespace

std::string lattice_to_json(const FaceLattice& p) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = p.dim();
    j["num_vertices"] = p.num_vertices();
    json facets = json::array();
    for (VertexSet f : p.facets()) facets.push_back(to_indices(f));
    j["facets"] = std::move(facets);
    return j.dump(2) + "\n";
}

FaceLattice lattice_from_json(const std::string& text) {
    json j = json::parse(text);
    check_schema(j);
    const int dim = j.at("dim").get<int>();
    VertexFacetIncidence inc;
    inc.num_vertices = j.at("num_vertices").get<int>();
    if (inc.num_vertices < 1 || inc.num_vertices > max_vertices())
        throw std::invalid_argument("num_vertices out of range");
    for (const auto& facet : j.at("facets")) {
        VertexSet mask = 0;
        for (const auto& v : facet) {
            const int idx = v.get<int>();
            if (idx < 0 || idx >= inc.num_vertices)
                throw std::invalid_argument("facet vertex index out of range");
            mask |= single(idx);
        }
        inc.facet_sets.push_back(mask);
    }
    return build_from_incidence(inc, dim);
}

std::string points_to_json(const PointConfig& pc) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = pc.dim;
    json pts = json::array();
    for (const auto& p : pc.points) {
        json row = json::array();
        for (const auto& x : p) row.push_back(rational_to_string(x));
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

PointConfig points_from_json(const std::string& text) {
    json j = json::parse(text);
    check_schema(j);
    PointConfig pc;
    pc.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("points")) {
        std::vector<Rational> p;
        for (const auto& x : row) p.push_back(rational_from_string(x.get<std::string>()));
        pc.points.push_back(std::move(p));
    }
    validate_point_config(pc);
    return pc;
}

std::string construction_to_json(const Construction& spec) {
    using K = Construction::Kind;
    json j;
    switch (spec.kind) {
        case K::Simplex: j = {{"op", "simplex"}, {"s", spec.a}}; break;
        case K::Pyramid:
            j = {{"op", "pyr"}, {"child", json::parse(construction_to_json(spec.child[0]))}};
            break;
        case K::KFoldPyramid:
            j = {{"op", "kpyr"},
                 {"child", json::parse(construction_to_json(spec.child[0]))},
                 {"r", spec.a}};
            break;
        case K::Bipyramid:
            j = {{"op", "bipyr"}, {"child", json::parse(construction_to_json(spec.child[0]))}};
            break;
        case K::DirectSum: j = {{"op", "dsum"}, {"m", spec.a}, {"r", spec.b}}; break;
        case K::Tdsm: j = {{"op", "tdsm"}, {"d", spec.a}, {"s", spec.b}, {"m", spec.c}}; break;
        case K::Dual:
            j = {{"op", "dual"}, {"child", json::parse(construction_to_json(spec.child[0]))}};
            break;
    }
    return j.dump();
}

namespace {

Construction construction_from_json_obj(const json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "simplex") return Construction::make_simplex(j.at("s").get<int>());
    if (op == "pyr") return Construction::pyr(construction_from_json_obj(j.at("child")));
    if (op == "kpyr")
        return Construction::kpyr(construction_from_json_obj(j.at("child")), j.at("r").get<int>());
    if (op == "bipyr") return Construction::bipyr(construction_from_json_obj(j.at("child")));
    if (op == "dsum") return Construction::dsum(j.at("m").get<int>(), j.at("r").get<int>());
    if (op == "tdsm")
        return Construction::tdsm(j.at("d").get<int>(), j.at("s").get<int>(), j.at("m").get<int>());
    if (op == "dual") return Construction::dual_of(construction_from_json_obj(j.at("child")));
    throw std::invalid_argument("unknown construction op '" + op + "'");
}

}  // namespace

Construction construction_from_json(const std::string& text) {
    return construction_from_json_obj(json::parse(text));
}

std::string report_to_json(const BoundReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["d"] = rep.d;
    j["s"] = rep.s;
    json rows = json::array();
    for (const auto& row : rep.per_k)
        rows.push_back({{"k", row.k},
                        {"f_k", row.f_k},
                        {"phi_k", row.phi_k.str()},
                        {"slack", row.slack.str()}});
    j["per_k"] = std::move(rows);
    j["equality_ks"] = rep.equality_ks;
    j["verdict"] = rep.holds() ? "Holds" : ("ViolationAt(" + std::to_string(rep.violation_k) + ")");
    j["equality_class"] = to_string(rep.equality_class);
    j["facet_profile_ok"] = rep.facet_profile_ok;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const BoundReport& rep) {
    std::ostringstream os;
    os << "d,s,k,f_k,phi_k,slack\n";
    for (const auto& row : rep.per_k)
        os << rep.d << ',' << rep.s << ',' << row.k << ',' << row.f_k << ',' << row.phi_k << ','
           << row.slack << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace facelat
