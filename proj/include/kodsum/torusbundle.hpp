#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kodsum/fpgroup.hpp"
#include "kodsum/integer.hpp"
#include "kodsum/sumcalc.hpp"

namespace kodsum {

/// [[a, b], [c, d]] with ad - bc = 1.
class SL2Z {
  public:
    SL2Z() : SL2Z(1, 0, 0, 1) {}
    SL2Z(Int a, Int b, Int c, Int d);

    static SL2Z identity() { return {}; }
    static SL2Z minus_identity() { return {-1, 0, 0, -1}; }
    /// [[1, w], [0, 1]].
    static SL2Z unipotent(Int w) { return {1, w, 0, 1}; }

    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    Int c() const noexcept { return c_; }
    Int d() const noexcept { return d_; }

    SL2Z operator*(const SL2Z& o) const;
    SL2Z operator-() const { return {-a_, -b_, -c_, -d_}; }
    SL2Z inverse() const { return {d_, -b_, -c_, a_}; }
    SL2Z pow(Int n) const;

    friend auto operator<=>(const SL2Z&, const SL2Z&) = default;

  private:
    Int a_, b_, c_, d_;
};

std::string render(const SL2Z& m);

struct Vec2 {
    Int x = 0;
    Int y = 0;

    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// M(A, B; v): the T^2-bundle over T^2 with commuting monodromies A, B and
/// twist vector v.
class TorusBundle {
  public:
    TorusBundle(SL2Z A, SL2Z B, Vec2 v);

    const SL2Z& A() const noexcept { return A_; }
    const SL2Z& B() const noexcept { return B_; }
    const Vec2& v() const noexcept { return v_; }

    friend auto operator<=>(const TorusBundle&, const TorusBundle&) = default;

  private:
    SL2Z A_;
    SL2Z B_;
    Vec2 v_;
};

/// `M([[a,b],[c,d]],[[e,f],[g,h]];(m,n))`.
std::string render(const TorusBundle& b);

/// Generators x, y (fiber) and s, t (base). Conjugation by s acts on the
/// fiber by the columns of A: s x s^-1 = x^A11 y^A21, s y s^-1 = x^A12 y^A22;
/// likewise t with B; and [s, t] = x^v1 y^v2.
Presentation pi1(const TorusBundle& b);

/// Z^2 + Z^2 / L with L spanned by the columns of A - I, B - I and by v.
AbelianInvariants h1(const TorusBundle& b);

/// M(A^p B^r, A^q B^s; v) for P = [[p, q], [r, s]].
TorusBundle base_change(const TorusBundle& b, const SL2Z& P);

/// A rank <= 2 sublattice of Z^2 in column Hermite form: basis (g, t) and
/// (0, d) with g, d >= 0 and 0 <= t < d when d > 0. A zero g or d drops that
/// basis vector.
struct TwistLattice {
    Int g = 0;
    Int t = 0;
    Int d = 0;

    static TwistLattice span(const std::vector<Vec2>& gens);
    /// Lexicographically least non-negative representative of v + L in the
    /// reduced coordinates.
    Vec2 reduce(Vec2 v) const;
    bool contains(Vec2 v) const { return reduce(v) == Vec2{} ; }
};

/// Span of the columns of A - I and B - I.
TwistLattice twist_lattice(const SL2Z& A, const SL2Z& B);

/// Replaces v by its canonical representative modulo twist_lattice(A, B).
TorusBundle twist_reduce(const TorusBundle& b);

/// The nine parameterized families of the classification table.
enum class Pattern {
    I_Nz_00,       // M(I, [[-1,z],[0,-1]]; (0,0))
    mI_N2y_00,     // M(-I, [[1,2y],[0,1]]; (0,0))
    I_N2y_01,      // M(I, [[-1,2y],[0,-1]]; (0,1))
    mI_N2y_01,     // M(-I, [[1,2y],[0,1]]; (0,1))
    mI_N2y1_00,    // M(-I, [[1,2y+1],[0,1]]; (0,0))
    mI_N2y1_01,    // M(-I, [[1,2y+1],[0,1]]; (0,1))
    I_Nz_10,       // M(I, [[-1,z],[0,-1]]; (1,0))
    mI_N2y_10,     // M(-I, [[1,2y],[0,1]]; (1,0))
    I_N2y1_01,     // M(I, [[-1,2y+1],[0,-1]]; (0,1))
};

inline constexpr Pattern kAllPatterns[] = {
    Pattern::I_Nz_00,   Pattern::mI_N2y_00,  Pattern::I_N2y_01,  Pattern::mI_N2y_01, Pattern::mI_N2y1_00,
    Pattern::mI_N2y1_01, Pattern::I_Nz_10,   Pattern::mI_N2y_10, Pattern::I_N2y1_01,
};

/// The pattern with its parameter written symbolically, e.g.
/// `M(-I,[[1,2y+1],[0,1]];(0,1))`.
std::string pattern_text(Pattern p);
/// 'y' or 'z'.
char pattern_parameter(Pattern p);

/// A table family plus the value of its parameter (y or z).
struct FamilyTag {
    Pattern pattern;
    Int param;

    /// The bundle the tag denotes.
    TorusBundle bundle() const;

    friend auto operator<=>(const FamilyTag&, const FamilyTag&) = default;
};

/// The tag's bundle literal, e.g. `M([[-1,0],[0,-1]],[[1,2],[0,1]];(0,0))`.
std::string render(const FamilyTag& t);

/// The intermediate quantities of the gcd reduction. The bundle enters as
/// A = e_A [[1,alpha],[0,1]], B = e_B [[1,beta],[0,1]]; delta and zeta are
/// the upper-right entries of A and B. P = [[p,q],[r,s]] satisfies
/// alpha p + beta r = 0 and alpha q + beta s = z, z = gcd(alpha, beta).
/// j and x split the first twist coordinate as j + 2x, j in {0,1}.
struct NormalFormTrace {
    Int delta = 0;
    Int zeta = 0;
    Int z = 0;
    Int p = 1;
    Int q = 0;
    Int r = 0;
    Int s = 1;
    Int x = 0;
    Int j = 0;

    friend bool operator==(const NormalFormTrace&, const NormalFormTrace&) = default;
};

struct NormalForm {
    FamilyTag tag;
    NormalFormTrace trace;
};

/// Reduces a bundle with upper-triangular monodromies of trace +-2 to one of
/// the table families. Parameters are made non-negative with the base change
/// -I. Throws DomainError for other shapes, and for bundles equivalent to
/// M(I, [[1,w],[0,1]]; v), which no table family is.
NormalForm normal_form(const TorusBundle& b);

/// True when both bundles reduce to the same tag, False when their h1 differ.
Tribool same_type(const TorusBundle& a, const TorusBundle& b);

/// Literal comparison of tags: equal tags are True, differing h1 is False,
/// anything else Unknown.
Tribool same_type(const FamilyTag& a, const FamilyTag& b);

} // namespace kodsum
