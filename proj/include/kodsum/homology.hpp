#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kodsum/integer.hpp"
#include "kodsum/matrix.hpp"

namespace kodsum {

/// The rational and ruled surfaces that occur as summands.
///
/// Each family carries a fixed ordered basis of H_2:
///   CP2Blowup(k)      H, E1..Ek                 diag(1,-1,...,-1)
///   S2xS2             A=[S2 x pt], B=[pt x S2]  [[0,1],[1,0]]
///   RuledTrivial(h,k) sigma, f, e1..ek          sigma^2=0, f^2=0, sigma.f=1, ei^2=-1
///   RuledTwisted(h)   s-, f                     [[-1,1],[1,0]]
/// For the twisted bundle the section of square +1 is s+ = s- + f.
class SurfaceFamily {
  public:
    enum class Kind { CP2Blowup, S2xS2, RuledTrivial, RuledTwisted };

    static SurfaceFamily cp2_blowup(Int k);
    static SurfaceFamily s2xs2();
    static SurfaceFamily ruled_trivial(Int h, Int k);
    static SurfaceFamily ruled_twisted(Int h);
    /// E(1) = CP2 # 9 CP2-bar.
    static SurfaceFamily e1() { return cp2_blowup(9); }

    Kind kind() const noexcept { return kind_; }
    /// Number of blowups (0 for S2xS2 and the twisted bundle).
    Int blowups() const noexcept { return k_; }
    /// Genus of the base curve for ruled families, 0 otherwise.
    Int base_genus() const noexcept { return h_; }

    bool is_rational() const noexcept { return kind_ == Kind::CP2Blowup || kind_ == Kind::S2xS2; }
    bool is_ruled() const noexcept { return !is_rational(); }
    /// True for the S^2-bundles: S2xS2, RuledTrivial(h,0), RuledTwisted(h).
    bool is_sphere_bundle() const noexcept;
    /// No exceptional basis classes (S2xS2, CP2, unblown ruled surfaces).
    bool is_minimal() const noexcept;

    std::size_t rank() const noexcept;
    std::vector<std::string> basis_labels() const;
    /// Indices of the exceptional basis classes E_i / e_i.
    std::vector<std::size_t> exceptional_indices() const;

    std::string name() const;

    friend bool operator==(const SurfaceFamily&, const SurfaceFamily&) = default;

  private:
    SurfaceFamily(Kind kind, Int h, Int k) : kind_(kind), h_(h), k_(k) {}
    Kind kind_;
    Int h_;
    Int k_;
};

struct Lattice {
    std::vector<std::string> labels;
    Matrix<Int> gram;
};

/// An integral second homology class in a family's fixed basis.
class H2Class {
  public:
    H2Class(SurfaceFamily family, std::vector<Int> coeffs);

    const SurfaceFamily& family() const noexcept { return family_; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    Int operator[](std::size_t i) const { return coeffs_.at(i); }

    H2Class operator+(const H2Class& o) const;
    H2Class operator-(const H2Class& o) const;
    H2Class operator-() const;
    friend H2Class operator*(Int s, const H2Class& c);

    friend bool operator==(const H2Class&, const H2Class&) = default;

  private:
    SurfaceFamily family_;
    std::vector<Int> coeffs_;
};

Lattice gram(const SurfaceFamily& family);

/// a^T . gram . b; throws DomainError on a family mismatch.
Int intersect(const H2Class& a, const H2Class& b);

inline Int square(const H2Class& a) { return intersect(a, a); }

/// -PD(kappa), the anticanonical class.
H2Class anticanonical(const SurfaceFamily& family);

/// PD(kappa).
inline H2Class canonical(const SurfaceFamily& family) { return -anticanonical(family); }

/// Basis class by index (e.g. basis_class(CP2Blowup(2), 0) == H).
H2Class basis_class(const SurfaceFamily& family, std::size_t index);

/// Outcome of the adjunction formula 2g - 2 = F.F + kappa.F.
struct AdjunctionGenus {
    enum class Status { Defined, OddRightSide, NegativeGenus };
    Status status;
    Int value; // genus when Defined; the raw right side F.F + kappa.F otherwise

    bool defined() const noexcept { return status == Status::Defined; }
    std::optional<Int> genus() const {
        if (defined())
            return value;
        return std::nullopt;
    }
};

AdjunctionGenus adjunction_genus(const H2Class& F);

Int euler(const SurfaceFamily& family);
Int signature(const SurfaceFamily& family);
/// c_1^2 = 2 chi + 3 sigma.
Int c1sq(const SurfaceFamily& family);

/// Adds one exceptional class. S2xS2 is rejected here; use blow_up_s2xs2()
/// which makes the basis change explicit. The twisted bundle is rejected
/// because its blowup has no basis of its own in this model.
SurfaceFamily blow_up(const SurfaceFamily& family);

/// Removes the last exceptional class; throws on minimal families.
SurfaceFamily blow_down(const SurfaceFamily& family);

/// (S2 x S2) # CP2-bar relabelled as CP2 # 2 CP2-bar.
///
/// With basis (A, B, e) on the blown-up product, the standard identification
/// is A = H - E2, B = H - E1, e = H - E1 - E2. transport() maps a coefficient
/// vector in (A, B, e) to one in (H, E1, E2).
struct BlownUpS2xS2 {
    SurfaceFamily family = SurfaceFamily::cp2_blowup(2);
    /// Columns are the images of A, B, e in the (H, E1, E2) basis.
    Matrix<Int> basis_change{{1, 1, 1}, {0, -1, -1}, {-1, 0, -1}};

    H2Class transport(const std::vector<Int>& abe_coeffs) const;
};

BlownUpS2xS2 blow_up_s2xs2();

/// Human-readable rendering of a class, e.g. "3H-E1-E2".
std::string render_class(const H2Class& c);

} // namespace kodsum
