#include "kodsum/glue.hpp"

#include <optional>
#include <sstream>

namespace kodsum {

ComplementKind::ComplementKind(Int j) : j_(j) {
    if (j != 0 && j != 1)
        throw DomainError("complement index must be 0 or 1, got " + std::to_string(j));
}

ComplementKind complement_of(const Summand& s) {
    const auto& fam = s.family();
    const bool over_torus = fam.is_ruled() && fam.base_genus() == 1 && fam.is_sphere_bundle();
    if (!over_torus)
        throw DomainError(fam.name() + " is not an S2-bundle over T2");
    if (!s.has_anticanonical_F())
        throw DomainError("the complement is only known for the anticanonical torus");
    return ComplementKind(fam.kind() == SurfaceFamily::Kind::RuledTrivial ? 0 : 1);
}

Int annulus_bundle_reduce(Int n) { return mod_floor(n, 2); }

Presentation boundary_pi1(ComplementKind k) {
    enum { alpha, beta, m };
    const Word A = Word::gen(alpha), B = Word::gen(beta), M = Word::gen(m);
    return {{"alpha", "beta", "m"},
            {A.inverse() * M * A * M, commutator(B, M), commutator(A, B) * Word::gen(m, -k.j())}};
}

// alpha^-a beta alpha^a = beta m^(j [a odd]) and alpha^-a m alpha^a = m^((-1)^a).
YElement YGroup::mul(const YElement& x, const YElement& y) const {
    const bool odd = mod_floor(y.a, 2) == 1;
    const Int moved = odd ? checked_sub(checked_mul(j_, x.b), x.w) : x.w;
    return {checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(moved, y.w)};
}

YElement YGroup::inv(const YElement& x) const {
    const bool odd = mod_floor(x.a, 2) == 1;
    const Int moved = odd ? checked_sub(checked_mul(j_, x.b), x.w) : x.w;
    return {-x.a, -x.b, -moved};
}

YElement YGroup::pow(const YElement& x, Int n) const {
    const YElement base = n < 0 ? inv(x) : x;
    YElement out;
    for (Int i = 0; i < (n < 0 ? -n : n); ++i)
        out = mul(out, base);
    return out;
}

YElement YGroup::commutator(const YElement& x, const YElement& y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
}

std::array<Int, 3> YGroup::boundary_coords(const YElement& x) const {
    if (mod_floor(x.a, 2) != 0)
        throw DomainError("element is not in the boundary subgroup");
    return {x.a / 2, x.b, x.w};
}

GluingData GluingData::even(Int b, Int c, Int d, Int e, Int f) {
    if (checked_sub(d, checked_mul(2, checked_mul(b, c))) != 1)
        throw DomainError("even gluing data needs d - 2bc = 1");
    return {Form::Even, 0, b, c, d, e, f};
}

GluingData GluingData::odd(Int a, Int b, Int d, Int e, Int f) {
    if (checked_sub(checked_mul(a, d), b) != 1)
        throw DomainError("odd gluing data needs ad - b = 1");
    return {Form::Odd, a, b, 0, d, e, f};
}

std::array<Int, 5> GluingData::params() const {
    if (form_ == Form::Even)
        return {b_, c_, d_, e_, f_};
    return {a_, b_, d_, e_, f_};
}

std::string render(const GluingData& g) {
    std::ostringstream os;
    const auto p = g.params();
    if (g.form() == GluingData::Form::Even)
        os << "even(b=" << p[0] << ",c=" << p[1];
    else
        os << "odd(a=" << p[0] << ",b=" << p[1];
    os << ",d=" << p[2] << ",e=" << p[3] << ",f=" << p[4] << ")";
    return os.str();
}

namespace {

Int det3(const Matrix<Int>& M) {
    auto at = [&](std::size_t i, std::size_t j) { return M(i, j); };
    Int total = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        const Int minor = checked_sub(checked_mul(at(1, (c + 1) % 3), at(2, (c + 2) % 3)),
                                      checked_mul(at(1, (c + 2) % 3), at(2, (c + 1) % 3)));
        total = checked_add(total, checked_mul(at(0, c), minor));
    }
    return total;
}

// Inverse of a unimodular 3x3 matrix via the adjugate.
Matrix<Int> inverse3(const Matrix<Int>& M) {
    const Int det = det3(M);
    if (det != 1 && det != -1)
        throw DomainError("matrix is not unimodular");
    Matrix<Int> inv(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            // cofactor of (j, i)
            const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            const Int cof = checked_sub(checked_mul(M(r0, c0), M(r1, c1)), checked_mul(M(r0, c1), M(r1, c0)));
            inv(i, j) = checked_mul(cof, det);
        }
    return inv;
}

Matrix<Int> mul3(const Matrix<Int>& a, const Matrix<Int>& b) {
    Matrix<Int> c(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    return c;
}

std::optional<GluingData> direct_match(const Matrix<Int>& M) {
    if (M(0, 2) != 0 || M(1, 2) != 0 || M(2, 2) != 1)
        return std::nullopt;
    if (M(0, 0) == 1 && mod_floor(M(1, 0), 2) == 0)
        return GluingData::even(M(0, 1), M(1, 0) / 2, M(1, 1), M(2, 0), M(2, 1));
    if (M(1, 0) == 1)
        return GluingData::odd(M(0, 0), M(0, 1), M(1, 1), M(2, 0), M(2, 1));
    return std::nullopt;
}

} // namespace

BoundaryMap::BoundaryMap(Matrix<Int> M) : M_(std::move(M)) {
    if (M_.rows() != 3 || M_.cols() != 3)
        throw DomainError("a boundary map is a 3x3 matrix");
    if (M_(0, 2) != 0 || M_(1, 2) != 0 || (M_(2, 2) != 1 && M_(2, 2) != -1))
        throw DomainError("a boundary map must send m1 to m2 or m2^-1 (third column (0,0,+-1))");
    const Int det = det3(M_);
    if (det != 1 && det != -1)
        throw DomainError("a boundary map must have determinant +-1");
}

BoundaryMap boundary_map(const GluingData& g) {
    if (g.form() == GluingData::Form::Even)
        return BoundaryMap(Matrix<Int>{{1, g.b(), 0}, {2 * g.c(), g.d(), 0}, {g.e(), g.f(), 1}});
    return BoundaryMap(Matrix<Int>{{g.a(), g.b(), 0}, {1, g.d(), 0}, {g.e(), g.f(), 1}});
}

GluingData normalize_boundary_map(const BoundaryMap& map, ComplementKind, ComplementKind k) {
    Matrix<Int> M = map.matrix();
    const Int x0 = M(0, 0), y0 = M(1, 0);
    if (gcd(x0, y0) != 1)
        throw DomainError("alpha1^2 must map to an element projecting to a primitive vector");

    if (M(2, 2) == -1) {
        // beta2 -> beta2 m2^k, then m2 -> m2^-1.
        const Matrix<Int> T{{1, 0, 0}, {0, 1, 0}, {0, k.j(), -1}};
        M = mul3(T, M);
    }
    if (checked_sub(checked_mul(M(0, 0), M(1, 1)), checked_mul(M(0, 1), M(1, 0))) != 1)
        throw DomainError("the gluing reverses the orientation of the base torus");

    if (auto g = direct_match(M))
        return *g;

    // Rename alpha2 -> alpha2^p beta2^r, beta2 -> alpha2^q beta2^s m2^(k t)
    // with q even and s = 2t + 1, chosen to move the first column to (1,0)
    // or (0,1) in the (alpha2^2, beta2) plane.
    const Int x = M(0, 0), y = M(1, 0);
    Int p, q, r, s;
    if (mod_floor(y, 2) == 0) {
        const ExtGcd eg = ext_gcd(x, y); // x X + y Y = 1
        p = x;
        r = y / 2;
        q = checked_mul(2, -eg.y);
        s = eg.x;
    } else {
        const ExtGcd eg = ext_gcd(y, checked_mul(2, x)); // y X + 2x Y = 1
        p = eg.x;
        r = -eg.y;
        q = checked_mul(2, x);
        s = y;
    }
    const Int t = (s - 1) / 2;

    const YGroup G(k);
    const YElement a2 = G.mul(G.alpha(p), G.beta(r));
    const YElement b2 = G.mul(G.mul(G.alpha(q), G.beta(s)), G.m(checked_mul(k.j(), t)));
    if (!(G.mul(G.inv(a2), G.mul(G.m(), a2)) == G.m(-1)) || !(G.commutator(a2, b2) == G.m(k.j())) ||
        !(G.commutator(b2, G.m()) == YElement{}))
        throw Error("internal: generator change does not preserve the complement's presentation");

    const auto ca = G.boundary_coords(G.mul(a2, a2));
    const auto cb = G.boundary_coords(b2);
    const Matrix<Int> C{{ca[0], cb[0], 0}, {ca[1], cb[1], 0}, {ca[2], cb[2], 1}};
    const Matrix<Int> N = mul3(inverse3(C), M);
    if (auto g = direct_match(N))
        return *g;
    throw DomainError("boundary map could not be brought to a normalized form");
}

namespace {

// Relators of pi_1(Y_j) on generators (alpha, beta, m) at the given indices.
std::vector<Word> complement_relators(Int j, std::size_t alpha, std::size_t beta, std::size_t m) {
    const Word A = Word::gen(alpha), B = Word::gen(beta), M = Word::gen(m);
    return {A.inverse() * M * A * M, commutator(B, M), commutator(A, B) * Word::gen(m, -j)};
}

} // namespace

Presentation glue_presentation(ComplementKind j, ComplementKind k, const GluingData& g) {
    enum { a1, b1, a2, b2, m };
    const Word A1 = Word::gen(a1), B1 = Word::gen(b1), A2 = Word::gen(a2), B2 = Word::gen(b2), M = Word::gen(m);
    std::vector<Word> rels{
        A1.inverse() * M * A1 * M,
        A2.inverse() * M * A2 * M,
        commutator(B1, M),
        commutator(B2, M),
        commutator(A1, B1) * Word::gen(m, -j.j()),
        commutator(A2, B2) * Word::gen(m, -k.j()),
    };
    if (g.form() == GluingData::Form::Even)
        rels.push_back(A1.pow(2) * (Word::gen(a2, 2) * Word::gen(b2, 2 * g.c()) * Word::gen(m, g.e())).inverse());
    else
        rels.push_back(A1.pow(2) * (Word::gen(a2, 2 * g.a()) * B2 * Word::gen(m, g.e())).inverse());
    rels.push_back(B1 * (Word::gen(a2, 2 * g.b()) * Word::gen(b2, g.d()) * Word::gen(m, g.f())).inverse());
    return {{"alpha1", "beta1", "alpha2", "beta2", "m"}, rels};
}

Presentation glue_presentation_from_map(ComplementKind j, ComplementKind k, const BoundaryMap& map) {
    enum { a1, b1, m1, a2, b2, m2 };
    const Matrix<Int>& M = map.matrix();
    std::vector<Word> rels = complement_relators(j.j(), a1, b1, m1);
    for (auto& w : complement_relators(k.j(), a2, b2, m2))
        rels.push_back(w);
    const auto image = [&](std::size_t col) {
        return Word::gen(a2, checked_mul(2, M(0, col))) * Word::gen(b2, M(1, col)) * Word::gen(m2, M(2, col));
    };
    rels.push_back(Word::gen(a1, 2) * image(0).inverse());
    rels.push_back(Word::gen(b1) * image(1).inverse());
    rels.push_back(Word::gen(m1) * image(2).inverse());
    return {{"alpha1", "beta1", "m1", "alpha2", "beta2", "m2"}, rels};
}

TorusBundle glue_bundle(ComplementKind jk, ComplementKind kk, const GluingData& g) {
    const Int j = jk.j(), k = kk.j();
    if (g.form() == GluingData::Form::Even) {
        const Int twist = checked_mul(2, checked_sub(g.f(), checked_mul(g.b(), g.e())));
        return {SL2Z(-1, checked_sub(checked_mul(k, g.c()), g.e()), 0, -1), SL2Z::unipotent(j - k + twist),
                Vec2{j + twist, 0}};
    }
    const Int twist = checked_mul(2, checked_sub(g.f(), checked_mul(g.d(), g.e())));
    return {SL2Z(-1, checked_sub(k, checked_mul(2, g.e())), 0, -1), SL2Z(-1, checked_add(j, twist), 0, -1),
            Vec2{0, 1}};
}

InvolutionVerdict involution_composite(const SL2Z& A) {
    const Int tx2 = mod_floor(checked_add(A.d(), 1), 2);
    const Int ty2 = mod_floor(-A.c(), 2);
    const auto kind = (tx2 == 0 && ty2 == 0) ? InvolutionVerdict::Kind::Identity
                                             : InvolutionVerdict::Kind::FreeInvolution;
    return {kind, tx2, ty2};
}

std::string render(const InvolutionVerdict& v) {
    const auto half = [](Int n) { return n == 0 ? std::string("0") : std::string("1/2"); };
    std::string s = v.kind == InvolutionVerdict::Kind::Identity ? "Identity" : "FreeInvolution";
    return s + " (" + half(v.tx2) + "," + half(v.ty2) + ")";
}

} // namespace kodsum
