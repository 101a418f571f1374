#include "facelat/construction.hpp"

#include <cctype>
#include <stdexcept>

namespace facelat {

Construction Construction::make_simplex(int s) {
    Construction c;
    c.kind = Kind::Simplex;
    c.a = s;
    return c;
}

Construction Construction::pyr(Construction base) {
    Construction c;
    c.kind = Kind::Pyramid;
    c.child.push_back(std::move(base));
    return c;
}

Construction Construction::kpyr(Construction base, int r) {
    Construction c;
    c.kind = Kind::KFoldPyramid;
    c.a = r;
    c.child.push_back(std::move(base));
    return c;
}

Construction Construction::bipyr(Construction base) {
    Construction c;
    c.kind = Kind::Bipyramid;
    c.child.push_back(std::move(base));
    return c;
}

Construction Construction::dsum(int m, int r) {
    Construction c;
    c.kind = Kind::DirectSum;
    c.a = m;
    c.b = r;
    return c;
}

Construction Construction::tdsm(int d, int s, int m) {
    Construction c;
    c.kind = Kind::Tdsm;
    c.a = d;
    c.b = s;
    c.c = m;
    return c;
}

Construction Construction::dual_of(Construction base) {
    Construction c;
    c.kind = Kind::Dual;
    c.child.push_back(std::move(base));
    return c;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a constructor name");
        return text.substr(start, pos - start);
    }

    Construction expr() {
        std::string name = ident();
        expect('(');
        Construction out;
        if (name == "simplex") {
            out = Construction::make_simplex(integer());
        } else if (name == "pyr") {
            out = Construction::pyr(expr());
        } else if (name == "kpyr") {
            Construction base = expr();
            expect(',');
            out = Construction::kpyr(std::move(base), integer());
        } else if (name == "bipyr") {
            out = Construction::bipyr(expr());
        } else if (name == "dsum") {
            int m = integer();
            expect(',');
            out = Construction::dsum(m, integer());
        } else if (name == "tdsm") {
            int d = integer();
            expect(',');
            int s = integer();
            expect(',');
            out = Construction::tdsm(d, s, integer());
        } else if (name == "dual") {
            out = Construction::dual_of(expr());
        } else {
            fail("unknown constructor '" + name + "'");
        }
        expect(')');
        return out;
    }
};

}  // namespace

Construction parse_construction(const std::string& text) {
    Parser p{text};
    Construction out = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

std::string to_string(const Construction& spec) {
    using K = Construction::Kind;
    switch (spec.kind) {
        case K::Simplex: return "simplex(" + std::to_string(spec.a) + ")";
        case K::Pyramid: return "pyr(" + to_string(spec.child[0]) + ")";
        case K::KFoldPyramid:
            return "kpyr(" + to_string(spec.child[0]) + ", " + std::to_string(spec.a) + ")";
        case K::Bipyramid: return "bipyr(" + to_string(spec.child[0]) + ")";
        case K::DirectSum:
            return "dsum(" + std::to_string(spec.a) + ", " + std::to_string(spec.b) + ")";
        case K::Tdsm:
            return "tdsm(" + std::to_string(spec.a) + ", " + std::to_string(spec.b) + ", " +
                   std::to_string(spec.c) + ")";
        case K::Dual: return "dual(" + to_string(spec.child[0]) + ")";
    }
    return "?";
}

bool contains_dual(const Construction& spec) {
    if (spec.kind == Construction::Kind::Dual) return true;
    for (const auto& c : spec.child)
        if (contains_dual(c)) return true;
    return false;
}

FaceLattice build(const Construction& spec) {
    using K = Construction::Kind;
    switch (spec.kind) {
        case K::Simplex: return simplex(spec.a);
        case K::Pyramid: return pyramid(build(spec.child[0]));
        case K::KFoldPyramid: return k_fold_pyramid(build(spec.child[0]), spec.a);
        case K::Bipyramid: return bipyramid(build(spec.child[0]));
        case K::DirectSum: return direct_sum_simplices(spec.a, spec.b);
        case K::Tdsm: return t_dsm(spec.a, spec.b, spec.c);
        case K::Dual: return dual(build(spec.child[0]));
    }
    throw std::logic_error("unreachable construction kind");
}

}  // namespace facelat
