#include "kodsum/torusbundle.hpp"

#include <sstream>

namespace kodsum {

SL2Z::SL2Z(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
    if (checked_sub(checked_mul(a, d), checked_mul(b, c)) != 1)
        throw DomainError("matrix [[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) +
                          "," + std::to_string(d) + "]] does not have determinant 1");
}

SL2Z SL2Z::operator*(const SL2Z& o) const {
    return {checked_add(checked_mul(a_, o.a_), checked_mul(b_, o.c_)),
            checked_add(checked_mul(a_, o.b_), checked_mul(b_, o.d_)),
            checked_add(checked_mul(c_, o.a_), checked_mul(d_, o.c_)),
            checked_add(checked_mul(c_, o.b_), checked_mul(d_, o.d_))};
}

SL2Z SL2Z::pow(Int n) const {
    SL2Z base = n < 0 ? inverse() : *this;
    Int e = n < 0 ? -n : n;
    SL2Z out;
    while (e > 0) {
        if (e & 1)
            out = out * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return out;
}

std::string render(const SL2Z& m) {
    std::ostringstream os;
    os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << "," << m.d() << "]]";
    return os.str();
}

TorusBundle::TorusBundle(SL2Z A, SL2Z B, Vec2 v) : A_(A), B_(B), v_(v) {
    if (!(A_ * B_ == B_ * A_))
        throw DomainError("monodromies " + render(A_) + " and " + render(B_) + " do not commute");
}

std::string render(const TorusBundle& b) {
    std::ostringstream os;
    os << "M(" << render(b.A()) << "," << render(b.B()) << ";(" << b.v().x << "," << b.v().y << "))";
    return os.str();
}

Presentation pi1(const TorusBundle& b) {
    enum { x, y, s, t };
    const auto X = [](Int e) { return Word::gen(x, e); };
    const auto Y = [](Int e) { return Word::gen(y, e); };
    const Word S = Word::gen(s), T = Word::gen(t);
    const auto action = [&](const Word& g, const SL2Z& M) {
        return std::vector<Word>{g * X(1) * g.inverse() * (X(M.a()) * Y(M.c())).inverse(),
                                 g * Y(1) * g.inverse() * (X(M.b()) * Y(M.d())).inverse()};
    };
    std::vector<Word> rels{commutator(X(1), Y(1))};
    for (auto& w : action(S, b.A()))
        rels.push_back(w);
    for (auto& w : action(T, b.B()))
        rels.push_back(w);
    rels.push_back(commutator(S, T) * (X(b.v().x) * Y(b.v().y)).inverse());
    return {{"x", "y", "s", "t"}, rels};
}

namespace {

std::vector<Vec2> monodromy_columns(const SL2Z& A, const SL2Z& B) {
    return {{A.a() - 1, A.c()}, {A.b(), A.d() - 1}, {B.a() - 1, B.c()}, {B.b(), B.d() - 1}};
}

} // namespace

AbelianInvariants h1(const TorusBundle& b) {
    auto gens = monodromy_columns(b.A(), b.B());
    gens.push_back(b.v());
    Matrix<Int> rel(gens.size(), 2);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        rel(i, 0) = gens[i].x;
        rel(i, 1) = gens[i].y;
    }
    AbelianInvariants fiber = cokernel(rel);
    fiber.rank += 2; // s and t are free in H_1
    return fiber;
}

TorusBundle base_change(const TorusBundle& b, const SL2Z& P) {
    const SL2Z& A = b.A();
    const SL2Z& B = b.B();
    return {A.pow(P.a()) * B.pow(P.c()), A.pow(P.b()) * B.pow(P.d()), b.v()};
}

TwistLattice TwistLattice::span(const std::vector<Vec2>& gens) {
    // Euclid on first coordinates; everything else collapses onto the y-axis.
    Vec2 lead{0, 0};
    Int d = 0;
    for (Vec2 w : gens) {
        while (w.x != 0) {
            if (lead.x == 0 || std::llabs(w.x) < std::llabs(lead.x))
                std::swap(lead, w);
            const Int q = w.x / lead.x;
            w = {checked_sub(w.x, checked_mul(q, lead.x)), checked_sub(w.y, checked_mul(q, lead.y))};
        }
        d = gcd(d, w.y);
    }
    if (lead.x < 0)
        lead = {-lead.x, -lead.y};
    TwistLattice L;
    L.g = lead.x;
    L.d = d;
    if (L.g == 0) {
        L.d = gcd(d, lead.y);
        L.t = 0;
    } else {
        L.t = d == 0 ? lead.y : mod_floor(lead.y, d);
    }
    return L;
}

Vec2 TwistLattice::reduce(Vec2 v) const {
    if (g != 0) {
        const Int k = floor_div(v.x, g);
        v = {checked_sub(v.x, checked_mul(k, g)), checked_sub(v.y, checked_mul(k, t))};
    }
    if (d != 0)
        v.y = mod_floor(v.y, d);
    return v;
}

TwistLattice twist_lattice(const SL2Z& A, const SL2Z& B) { return TwistLattice::span(monodromy_columns(A, B)); }

TorusBundle twist_reduce(const TorusBundle& b) {
    return {b.A(), b.B(), twist_lattice(b.A(), b.B()).reduce(b.v())};
}

std::string pattern_text(Pattern p) {
    switch (p) {
    case Pattern::I_Nz_00:
        return "M(I,[[-1,z],[0,-1]];(0,0))";
    case Pattern::mI_N2y_00:
        return "M(-I,[[1,2y],[0,1]];(0,0))";
    case Pattern::I_N2y_01:
        return "M(I,[[-1,2y],[0,-1]];(0,1))";
    case Pattern::mI_N2y_01:
        return "M(-I,[[1,2y],[0,1]];(0,1))";
    case Pattern::mI_N2y1_00:
        return "M(-I,[[1,2y+1],[0,1]];(0,0))";
    case Pattern::mI_N2y1_01:
        return "M(-I,[[1,2y+1],[0,1]];(0,1))";
    case Pattern::I_Nz_10:
        return "M(I,[[-1,z],[0,-1]];(1,0))";
    case Pattern::mI_N2y_10:
        return "M(-I,[[1,2y],[0,1]];(1,0))";
    case Pattern::I_N2y1_01:
        return "M(I,[[-1,2y+1],[0,-1]];(0,1))";
    }
    return "?";
}

char pattern_parameter(Pattern p) { return p == Pattern::I_Nz_00 || p == Pattern::I_Nz_10 ? 'z' : 'y'; }

TorusBundle FamilyTag::bundle() const {
    const Int y2 = checked_mul(2, param);
    const SL2Z I = SL2Z::identity();
    const SL2Z mI = SL2Z::minus_identity();
    const auto minus_N = [](Int w) { return SL2Z(-1, w, 0, -1); };
    switch (pattern) {
    case Pattern::I_Nz_00:
        return {I, minus_N(param), {0, 0}};
    case Pattern::mI_N2y_00:
        return {mI, SL2Z::unipotent(y2), {0, 0}};
    case Pattern::I_N2y_01:
        return {I, minus_N(y2), {0, 1}};
    case Pattern::mI_N2y_01:
        return {mI, SL2Z::unipotent(y2), {0, 1}};
    case Pattern::mI_N2y1_00:
        return {mI, SL2Z::unipotent(checked_add(y2, 1)), {0, 0}};
    case Pattern::mI_N2y1_01:
        return {mI, SL2Z::unipotent(checked_add(y2, 1)), {0, 1}};
    case Pattern::I_Nz_10:
        return {I, minus_N(param), {1, 0}};
    case Pattern::mI_N2y_10:
        return {mI, SL2Z::unipotent(y2), {1, 0}};
    case Pattern::I_N2y1_01:
        return {I, minus_N(checked_add(y2, 1)), {0, 1}};
    }
    throw DomainError("unknown pattern");
}

std::string render(const FamilyTag& t) { return render(t.bundle()); }

namespace {

struct Unipotent {
    Int sign;  // +-1
    Int power; // M = sign * [[1,power],[0,1]]
};

std::optional<Unipotent> as_unipotent(const SL2Z& M) {
    if (M.c() != 0 || M.a() != M.d())
        return std::nullopt;
    return Unipotent{M.a(), checked_mul(M.a(), M.b())};
}

Int parity_sign(Int sign, Int exponent) { return (sign < 0 && mod_floor(exponent, 2) == 1) ? -1 : 1; }

// Reads off the table family of (sA I, sB N^w; v) after the sign cleanup.
FamilyTag classify_diagonal(Int sA, Int sB, Int w, Vec2 v) {
    TorusBundle b{sA < 0 ? SL2Z::minus_identity() : SL2Z::identity(), sB < 0 ? SL2Z(-1, -w, 0, -1) : SL2Z::unipotent(w),
                  v};
    if (sA < 0 && sB < 0) {
        // M(-I, -N^w) = M(-I, N^w) via P = [[1,1],[0,1]].
        b = base_change(b, SL2Z(1, 1, 0, 1));
        sB = 1;
    }
    if (sA < 0 && w < 0) {
        b = base_change(b, SL2Z::minus_identity());
        w = -w;
    }
    if (sA < 0 && w == 0) {
        // M(-I, I) = M(I, -I) by swapping the base circles.
        b = base_change(b, SL2Z(0, -1, 1, 0));
        sA = 1;
        sB = -1;
    }
    if (sA > 0 && sB > 0)
        throw DomainError("bundle reduces to M(I,[[1," + std::to_string(w) +
                          "],[0,1]];v), a nilmanifold or torus bundle outside the table");
    Int param = sA > 0 ? -w : w; // upper-right entry of B for the I families
    if (sA > 0 && param < 0) {
        b = base_change(b, SL2Z::minus_identity());
        param = -param;
    }

    const TwistLattice L = twist_lattice(b.A(), b.B());
    const Vec2 cands[] = {{0, 0}, {1, 0}, {0, 1}};
    int cls = -1;
    for (int i = 0; i < 3 && cls < 0; ++i)
        if (L.reduce(v) == L.reduce(cands[i]))
            cls = i;
    if (cls < 0)
        throw DomainError("twist vector of " + render(b) + " is not congruent to (0,0), (1,0) or (0,1)");

    const bool odd = mod_floor(param, 2) == 1;
    const Int half = floor_div(param, 2);
    if (sA > 0) {
        switch (cls) {
        case 0:
            return {Pattern::I_Nz_00, param};
        case 1:
            return {Pattern::I_Nz_10, param};
        default:
            return odd ? FamilyTag{Pattern::I_N2y1_01, half} : FamilyTag{Pattern::I_N2y_01, half};
        }
    }
    switch (cls) {
    case 0:
        return odd ? FamilyTag{Pattern::mI_N2y1_00, half} : FamilyTag{Pattern::mI_N2y_00, half};
    case 1:
        // With w odd, (1,0) lies in L and the first candidate already matched.
        return FamilyTag{Pattern::mI_N2y_10, half};
    default:
        return odd ? FamilyTag{Pattern::mI_N2y1_01, half} : FamilyTag{Pattern::mI_N2y_01, half};
    }
}

FamilyTag tag_for(const Unipotent& A, const Unipotent& B, Vec2 v, Int p, Int q, Int r, Int s, Int z) {
    const Int sA = parity_sign(A.sign, p) * parity_sign(B.sign, r);
    const Int sB = parity_sign(A.sign, q) * parity_sign(B.sign, s);
    return classify_diagonal(sA, sB, z, v);
}

} // namespace

NormalForm normal_form(const TorusBundle& b) {
    const auto A = as_unipotent(b.A());
    const auto B = as_unipotent(b.B());
    if (!A || !B)
        throw DomainError(render(b) + " is not in a reducible shape (monodromies must be +-[[1,w],[0,1]])");

    NormalFormTrace tr;
    tr.delta = b.A().b();
    tr.zeta = b.B().b();
    tr.j = mod_floor(b.v().x, 2);
    tr.x = (b.v().x - tr.j) / 2;

    const Int alpha = A->power;
    const Int beta = B->power;
    const ExtGcd eg = ext_gcd(alpha, beta);
    tr.z = eg.g;
    if (tr.z != 0) {
        tr.p = beta / tr.z;
        tr.r = -alpha / tr.z;
        if (tr.p == 0) {
            tr.q = -tr.r;
            tr.s = 0;
        } else {
            const Int m = std::llabs(tr.p);
            Int q = mod_floor(eg.x, m);
            if (2 * q > m)
                q -= m;
            tr.q = q;
            tr.s = checked_add(1, checked_mul(q, tr.r)) / tr.p;
        }
    }
    if (tr.p * tr.s - tr.q * tr.r != 1 || alpha * tr.p + beta * tr.r != 0 || alpha * tr.q + beta * tr.s != tr.z)
        throw Error("internal: gcd reduction produced an invalid base change");

    const FamilyTag tag = tag_for(*A, *B, b.v(), tr.p, tr.q, tr.r, tr.s, tr.z);
    // Any other Bezout solution (q + p, s + r) must land on the same tag.
    if (tr.z != 0) {
        const FamilyTag alt = tag_for(*A, *B, b.v(), tr.p, tr.q + tr.p, tr.r, tr.s + tr.r, tr.z);
        if (!(alt == tag))
            throw Error("internal: normal form depends on the Bezout choice for " + render(b));
    }
    return {tag, tr};
}

Tribool same_type(const FamilyTag& a, const FamilyTag& b) {
    if (a == b)
        return Tribool::True;
    if (!(h1(a.bundle()) == h1(b.bundle())))
        return Tribool::False;
    return Tribool::Unknown;
}

Tribool same_type(const TorusBundle& a, const TorusBundle& b) {
    if (!(h1(a) == h1(b)))
        return Tribool::False;
    try {
        return normal_form(a).tag == normal_form(b).tag ? Tribool::True : Tribool::Unknown;
    } catch (const DomainError&) {
        return Tribool::Unknown;
    }
}

} // namespace kodsum
