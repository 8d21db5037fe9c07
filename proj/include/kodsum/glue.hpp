#pragma once

#include <array>
#include <string>

#include "kodsum/fpgroup.hpp"
#include "kodsum/sumcalc.hpp"
#include "kodsum/torusbundle.hpp"

namespace kodsum {

/// Y_j, the complement of an anticanonical torus in an S^2-bundle over T^2:
/// Y_0 for S2xT2, Y_1 for the twisted bundle.
class ComplementKind {
  public:
    explicit ComplementKind(Int j);
    Int j() const noexcept { return j_; }

    friend auto operator<=>(const ComplementKind&, const ComplementKind&) = default;

  private:
    Int j_;
};

/// Throws DomainError unless s is (S2xT2, 2 sigma) or (S2~xT2, 2 s- + f).
ComplementKind complement_of(const Summand& s);

/// Regluing the annulus bundle with twist n gives Y_(n mod 2).
Int annulus_bundle_reduce(Int n);

/// <alpha, beta, m | alpha^-1 m alpha m, [beta, m], [alpha, beta] m^-j>.
/// The boundary torus is generated by alpha^2, beta, m.
Presentation boundary_pi1(ComplementKind k);

/// An element alpha^a beta^b m^w of pi_1(Y_j); every element has exactly
/// one such form.
struct YElement {
    Int a = 0;
    Int b = 0;
    Int w = 0;

    friend bool operator==(const YElement&, const YElement&) = default;
};

class YGroup {
  public:
    explicit YGroup(ComplementKind k) : j_(k.j()) {}

    YElement alpha(Int n = 1) const { return {n, 0, 0}; }
    YElement beta(Int n = 1) const { return {0, n, 0}; }
    YElement m(Int n = 1) const { return {0, 0, n}; }

    YElement mul(const YElement& x, const YElement& y) const;
    YElement inv(const YElement& x) const;
    YElement pow(const YElement& x, Int n) const;
    YElement commutator(const YElement& x, const YElement& y) const;

    /// Coordinates (a/2, b, w) of a boundary element in the basis
    /// (alpha^2, beta, m); throws if a is odd.
    std::array<Int, 3> boundary_coords(const YElement& x) const;
    YElement from_boundary(const std::array<Int, 3>& c) const { return {2 * c[0], c[1], c[2]}; }

  private:
    Int j_;
};

/// The normalized gluing parameters. Even: alpha1^2 -> alpha2^2 beta2^2c m^e,
/// beta1 -> alpha2^2b beta2^d m^f with d - 2bc = 1. Odd: alpha1^2 ->
/// alpha2^2a beta2 m^e, beta1 -> alpha2^2b beta2^d m^f with ad - b = 1.
class GluingData {
  public:
    enum class Form { Even, Odd };

    static GluingData even(Int b, Int c, Int d, Int e, Int f);
    static GluingData odd(Int a, Int b, Int d, Int e, Int f);

    Form form() const noexcept { return form_; }
    Int a() const noexcept { return a_; } // Odd only
    Int b() const noexcept { return b_; }
    Int c() const noexcept { return c_; } // Even only
    Int d() const noexcept { return d_; }
    Int e() const noexcept { return e_; }
    Int f() const noexcept { return f_; }

    /// (b,c,d,e,f) or (a,b,d,e,f).
    std::array<Int, 5> params() const;

    friend auto operator<=>(const GluingData&, const GluingData&) = default;

  private:
    GluingData(Form form, Int a, Int b, Int c, Int d, Int e, Int f)
        : form_(form), a_(a), b_(b), c_(c), d_(d), e_(e), f_(f) {}
    Form form_;
    Int a_, b_, c_, d_, e_, f_;
};

std::string render(const GluingData& g);

/// The action of the gluing on boundary fundamental groups. Columns are the
/// images of (alpha1^2, beta1, m1) in the basis (alpha2^2, beta2, m2).
class BoundaryMap {
  public:
    explicit BoundaryMap(Matrix<Int> M);
    const Matrix<Int>& matrix() const noexcept { return M_; }

    friend bool operator==(const BoundaryMap&, const BoundaryMap&) = default;

  private:
    Matrix<Int> M_;
};

BoundaryMap boundary_map(const GluingData& g);

/// Renames generators of Y_k (and flips m if needed) until the map takes
/// one of the two normalized forms. Throws DomainError when the first
/// column does not project to a primitive vector.
GluingData normalize_boundary_map(const BoundaryMap& M, ComplementKind j, ComplementKind k);

/// van Kampen presentation on alpha1, beta1, alpha2, beta2, m.
Presentation glue_presentation(ComplementKind j, ComplementKind k, const GluingData& g);

/// van Kampen presentation for an arbitrary boundary map, on alpha1, beta1,
/// m1, alpha2, beta2, m2.
Presentation glue_presentation_from_map(ComplementKind j, ComplementKind k, const BoundaryMap& M);

/// The torus bundle whose fundamental group the glued presentation is.
TorusBundle glue_bundle(ComplementKind j, ComplementKind k, const GluingData& g);

/// A^-1 tau A tau for tau(x, y) = (x + 1/2, y): a translation by
/// ((d+1)/2, -c/2) mod Z^2.
struct InvolutionVerdict {
    enum class Kind { Identity, FreeInvolution };
    Kind kind;
    /// Translation as numerators over 2, each in {0, 1}.
    Int tx2;
    Int ty2;

    friend bool operator==(const InvolutionVerdict&, const InvolutionVerdict&) = default;
};

InvolutionVerdict involution_composite(const SL2Z& A);

/// e.g. "FreeInvolution (0,1/2)".
std::string render(const InvolutionVerdict& v);

} // namespace kodsum
