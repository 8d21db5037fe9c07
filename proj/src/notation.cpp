#include "kodsum/notation.hpp"

#include <cctype>

namespace kodsum {

namespace {

class Cursor {
  public:
    explicit Cursor(const std::string& t) : t_(t) {}

    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_])))
            ++i_;
    }
    bool done() {
        skip();
        return i_ == t_.size();
    }
    bool accept(const std::string& tok) {
        skip();
        if (t_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!accept(tok))
            throw ParseError("expected '" + tok + "'", i_);
    }
    Int integer() {
        skip();
        const std::size_t start = i_;
        if (i_ < t_.size() && (t_[i_] == '-' || t_[i_] == '+'))
            ++i_;
        if (i_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[i_])))
            throw ParseError("expected an integer", start);
        while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_])))
            ++i_;
        try {
            return std::stoll(t_.substr(start, i_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }
    Int natural() {
        skip();
        if (i_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[i_])))
            throw ParseError("expected a non-negative integer", i_);
        return integer();
    }
    void finish() {
        if (!done())
            throw ParseError("unexpected trailing input", i_);
    }
    std::size_t pos() const { return i_; }

  private:
    const std::string& t_;
    std::size_t i_ = 0;
};

std::vector<Int> bracket_list(Cursor& c) {
    c.expect("[");
    std::vector<Int> out;
    if (c.accept("]"))
        return out;
    out.push_back(c.integer());
    while (c.accept(","))
        out.push_back(c.integer());
    c.expect("]");
    return out;
}

SL2Z matrix(Cursor& c) {
    const std::size_t at = c.pos();
    c.expect("[");
    const auto r0 = bracket_list(c);
    c.expect(",");
    const auto r1 = bracket_list(c);
    c.expect("]");
    if (r0.size() != 2 || r1.size() != 2)
        throw ParseError("a 2x2 matrix needs two rows of two entries", at);
    try {
        return SL2Z(r0[0], r0[1], r1[0], r1[1]);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), at);
    }
}

} // namespace

SurfaceFamily parse_family(const std::string& text) {
    Cursor c(text);
    const auto blowups = [&c]() -> Int { return c.accept("#") ? c.natural() : 0; };
    SurfaceFamily fam = SurfaceFamily::s2xs2();
    if (c.accept("E1")) {
        fam = SurfaceFamily::e1();
    } else if (c.accept("CP2")) {
        fam = SurfaceFamily::cp2_blowup(blowups());
    } else if (c.accept("S2xS2")) {
        fam = SurfaceFamily::s2xs2();
    } else if (c.accept("S2~x")) {
        Int h = 1;
        if (!c.accept("T2")) {
            c.expect("Sigma");
            h = c.natural();
        }
        if (h < 1)
            throw ParseError("base genus must be at least 1", c.pos());
        fam = SurfaceFamily::ruled_twisted(h);
    } else if (c.accept("S2x")) {
        Int h = 1;
        if (!c.accept("T2")) {
            c.expect("Sigma");
            h = c.natural();
        }
        if (h < 1)
            throw ParseError("base genus must be at least 1", c.pos());
        fam = SurfaceFamily::ruled_trivial(h, blowups());
    } else {
        throw ParseError("unknown manifold '" + text + "'", 0);
    }
    c.finish();
    return fam;
}

H2Class parse_class(const SurfaceFamily& family, const std::string& text) {
    Cursor c(text);
    auto coeffs = bracket_list(c);
    c.finish();
    if (coeffs.size() != family.rank())
        throw ParseError("class needs " + std::to_string(family.rank()) + " coefficients for " + family.name(), 0);
    return {family, std::move(coeffs)};
}

SL2Z parse_sl2z(const std::string& text) {
    Cursor c(text);
    SL2Z m = matrix(c);
    c.finish();
    return m;
}

TorusBundle parse_bundle(const std::string& text) {
    Cursor c(text);
    c.expect("M(");
    const SL2Z A = matrix(c);
    c.expect(",");
    const SL2Z B = matrix(c);
    c.expect(";");
    c.expect("(");
    const Int m = c.integer();
    c.expect(",");
    const Int n = c.integer();
    c.expect(")");
    c.expect(")");
    c.finish();
    try {
        return {A, B, {m, n}};
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

FamilyTag parse_tag(const std::string& text) {
    const TorusBundle b = parse_bundle(text);
    const Int w = b.B().b();
    for (Pattern p : kAllPatterns) {
        const char sym = pattern_parameter(p);
        const bool odd_form = p == Pattern::mI_N2y1_00 || p == Pattern::mI_N2y1_01 || p == Pattern::I_N2y1_01;
        const Int param = sym == 'z' ? w : floor_div(odd_form ? w - 1 : w, 2);
        const FamilyTag t{p, param};
        if (t.bundle() == b)
            return t;
    }
    throw ParseError(text + " is not a table family literal", 0);
}

std::vector<Int> parse_int_list(const std::string& text) {
    Cursor c(text);
    std::vector<Int> out;
    if (c.done())
        return out;
    out.push_back(c.integer());
    while (c.accept(","))
        out.push_back(c.integer());
    c.finish();
    return out;
}

GluingData parse_gluing(const std::string& form, const std::string& params) {
    const auto v = parse_int_list(params);
    if (v.size() != 5)
        throw ParseError("gluing data needs five parameters", 0);
    if (form == "even")
        return GluingData::even(v[0], v[1], v[2], v[3], v[4]);
    if (form == "odd")
        return GluingData::odd(v[0], v[1], v[2], v[3], v[4]);
    throw ParseError("form must be 'even' or 'odd'", 0);
}

} // namespace kodsum
