#pragma once

#include <string>
#include <vector>

#include "kodsum/homology.hpp"

namespace kodsum {

/// One side of a symplectic sum: a surface family together with the class
/// of the embedded surface F. Embeddedness and symplecticity of F are
/// assumed, not checked.
class Summand {
  public:
    Summand(SurfaceFamily family, H2Class F);
    /// The summand with F = -PD(kappa).
    static Summand anticanonical(const SurfaceFamily& family);

    const SurfaceFamily& family() const noexcept { return family_; }
    const H2Class& F() const noexcept { return F_; }

    bool has_anticanonical_F() const;

    friend bool operator==(const Summand&, const Summand&) = default;

  private:
    SurfaceFamily family_;
    H2Class F_;
};

/// Two summands to be glued along F1 = F2. Area equality is not modelled.
struct SumProblem {
    Summand X1;
    Summand X2;

    friend bool operator==(const SumProblem&, const SumProblem&) = default;
};

struct SumInvariants {
    Int chi;
    Int sigma;
    Int c1sq;
    Int genus;

    friend bool operator==(const SumInvariants&, const SumInvariants&) = default;
};

enum class ValidationError { GenusMismatch, SquareMismatch, UndefinedGenus };

std::string to_string(ValidationError e);

/// Every violated hypothesis; empty means the sum is well posed.
std::vector<ValidationError> validate(const SumProblem& p);

/// chi = chi1 + chi2 + 4g - 4, sigma = sigma1 + sigma2. Throws DomainError
/// when validate() reports a problem.
SumInvariants sum_invariants(const SumProblem& p);

/// Some X_i is an S^2-bundle and F_i meets a ruling fiber once.
bool is_smoothly_trivial(const SumProblem& p);

/// Some (X_i, F_i) is an S^2-bundle with a section, blown up away from F_i.
bool is_blowup_type(const SumProblem& p);

enum class Tribool { False, True, Unknown };

std::string to_string(Tribool t);

/// Decided exactly when every F_i is anticanonical or X_i is minimal;
/// Unknown otherwise.
Tribool is_relatively_minimal(const SumProblem& p);

enum class TradeDirection { TwoToOne, OneToTwo };

/// One blowup moved across the sum, recorded for certificates.
struct TradeStep {
    TradeDirection direction;
    SurfaceFamily source_before;
    SurfaceFamily target_before;
    SurfaceFamily source_after;
    SurfaceFamily target_after;
    bool relabelled_s2xs2 = false;
};

std::string describe(const TradeStep& step);

/// Blow down an exceptional sphere of the source summand and blow up the
/// target at a point of its surface. Both F_i must be anticanonical; the new
/// F_i are again the anticanonical classes. A target S2xS2 becomes CP2#2.
SumProblem trade_blowup(const SumProblem& p, TradeDirection dir, TradeStep* step = nullptr);

struct Reduction {
    SumProblem result;
    std::vector<TradeStep> trades;
};

/// Trades blowups until the pair is {CP2#9, CP2#9} (rational pairs) or
/// {CP2#9, minimal ruled} (mixed pairs). Ruled pairs must already be
/// minimal.
Reduction reduce_pair_traced(const SumProblem& p);

inline SumProblem reduce_pair(const SumProblem& p) { return reduce_pair_traced(p).result; }

} // namespace kodsum
