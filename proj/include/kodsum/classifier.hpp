#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kodsum/sumcalc.hpp"
#include "kodsum/torusbundle.hpp"

namespace kodsum {

enum class KodairaDim { MinusInfinity, Zero, One, Two };

std::string to_string(KodairaDim k);

/// Kodaira dimension from the signs (-1, 0, +1) of kappa.[omega] and kappa^2
/// on a minimal model. The four cases are tried in their usual order and the
/// first match wins; (0, +) matches none of them and throws DomainError.
KodairaDim kodaira_dimension(int kappa_dot_omega_sign, int kappa_sq_sign);

enum class MinusFError { WrongClass, WrongGenus };

std::string to_string(MinusFError e);

/// F must be the anticanonical class and a torus.
std::optional<MinusFError> check_minusf(const Summand& s);

struct Rational {
    Int num;
    Int den;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Which argument bounds the proportionality factor mu (PD(kappa) = mu [F]).
enum class MuCase {
    Rational,           // CP2 # k and S2xS2: adjunction with positive genus
    RuledBlownUp,       // ruled, k > 0: integrality of [F]
    SectionExcluded,    // S2 x Sigma_h: mu = -2 would make F a section
    TwistedIntegrality, // S2 ~x Sigma_h: |1/mu| >= 1
};

std::string to_string(MuCase c);

struct MuBound {
    Rational lower;
    MuCase reason;
};

MuBound mu_bound(const SurfaceFamily& family);

struct Verdict {
    enum class Kind { K3, Enriques, TorusBundleFamilies, NotKodairaZero, HypothesisFailure };
    Kind kind;
    /// TorusBundleFamilies only: the table families, in table order.
    std::vector<Pattern> patterns;
    /// TorusBundleFamilies only: the enumerated members behind the patterns.
    std::vector<FamilyTag> evidence;
    /// Negative verdicts only.
    std::string reason;

    bool is_manifold() const noexcept { return kind == Kind::K3 || kind == Kind::Enriques || kind == Kind::TorusBundleFamilies; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(Verdict::Kind k);

/// Kodaira dimension of the glued manifold for manifold verdicts.
KodairaDim verdict_kodaira(const Verdict& v);

/// What classify() did, in enough detail to redo it.
struct Certificate {
    SumProblem input;
    std::vector<TradeStep> trades;
    /// Complement indices (j, k) for torus-bundle verdicts.
    std::optional<std::pair<Int, Int>> complements;
    Int bound = 3;
    /// Human-readable log, one line per step.
    std::vector<std::string> steps;
};

struct Classification {
    Verdict verdict;
    Certificate certificate;
};

inline constexpr Int kDefaultBound = 3;

/// Decides which row of the Kodaira-dimension-zero classification the sum
/// falls in, or why it falls in none. `bound` limits the gluing parameters
/// enumerated for torus-bundle rows.
Classification classify(const SumProblem& p, Int bound = kDefaultBound);

/// Re-executes a certificate: re-checks the hypotheses, re-applies the
/// recorded trades (verifying each one) and redoes the final dispatch.
Verdict replay(const Certificate& c);

struct ModelInvariants {
    Int chi;
    Int sigma;
    Int b1;

    friend bool operator==(const ModelInvariants&, const ModelInvariants&) = default;
};

/// Euler characteristic, signature and b1 of K3 or Enriques; throws for
/// other verdicts.
ModelInvariants model_invariants(const Verdict& v);
/// A torus bundle has chi = sigma = 0; b1 from h1.
ModelInvariants model_invariants(const FamilyTag& t);

} // namespace kodsum
