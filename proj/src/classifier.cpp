#include "kodsum/classifier.hpp"

#include <algorithm>

#include "kodsum/enumerate.hpp"
#include "kodsum/glue.hpp"

namespace kodsum {

std::string to_string(KodairaDim k) {
    switch (k) {
    case KodairaDim::MinusInfinity:
        return "-infinity";
    case KodairaDim::Zero:
        return "0";
    case KodairaDim::One:
        return "1";
    case KodairaDim::Two:
        return "2";
    }
    return "?";
}

KodairaDim kodaira_dimension(int dot, int sq) {
    if (dot < -1 || dot > 1 || sq < -1 || sq > 1)
        throw DomainError("signs must be -1, 0 or +1");
    if (dot < 0 || sq < 0)
        return KodairaDim::MinusInfinity;
    if (dot == 0 && sq == 0)
        return KodairaDim::Zero;
    if (dot > 0 && sq == 0)
        return KodairaDim::One;
    if (dot > 0 && sq > 0)
        return KodairaDim::Two;
    throw DomainError("kappa.[omega] = 0 with kappa^2 > 0 does not occur on a minimal model");
}

std::string to_string(MinusFError e) { return e == MinusFError::WrongClass ? "WrongClass" : "WrongGenus"; }

std::optional<MinusFError> check_minusf(const Summand& s) {
    if (!s.has_anticanonical_F())
        return MinusFError::WrongClass;
    const auto g = adjunction_genus(s.F()).genus();
    if (!g || *g != 1)
        return MinusFError::WrongGenus;
    return std::nullopt;
}

std::string to_string(MuCase c) {
    switch (c) {
    case MuCase::Rational:
        return "rational";
    case MuCase::RuledBlownUp:
        return "blown-up ruled integrality";
    case MuCase::SectionExcluded:
        return "section excluded";
    case MuCase::TwistedIntegrality:
        return "integrality";
    }
    return "?";
}

MuBound mu_bound(const SurfaceFamily& family) {
    switch (family.kind()) {
    case SurfaceFamily::Kind::CP2Blowup:
    case SurfaceFamily::Kind::S2xS2:
        return {{-1, 1}, MuCase::Rational};
    case SurfaceFamily::Kind::RuledTrivial:
        return {{-1, 1}, family.blowups() > 0 ? MuCase::RuledBlownUp : MuCase::SectionExcluded};
    case SurfaceFamily::Kind::RuledTwisted:
        return {{-1, 1}, MuCase::TwistedIntegrality};
    }
    throw DomainError("family is neither rational nor ruled");
}

std::string to_string(Verdict::Kind k) {
    switch (k) {
    case Verdict::Kind::K3:
        return "K3 surface";
    case Verdict::Kind::Enriques:
        return "Enriques surface";
    case Verdict::Kind::TorusBundleFamilies:
        return "T2-bundle over T2";
    case Verdict::Kind::NotKodairaZero:
        return "not Kodaira dimension zero";
    case Verdict::Kind::HypothesisFailure:
        return "hypothesis failure";
    }
    return "?";
}

KodairaDim verdict_kodaira(const Verdict& v) {
    if (!v.is_manifold())
        throw DomainError("no manifold for a " + to_string(v.kind) + " verdict");
    return KodairaDim::Zero;
}

namespace {

Verdict negative(Verdict::Kind kind, std::string reason) { return {kind, {}, {}, std::move(reason)}; }

std::string pair_name(const SumProblem& p) { return "{" + p.X1.family().name() + ", " + p.X2.family().name() + "}"; }

// Stages 1-3: hypotheses of the classification and the c1^2 constraint.
std::optional<Verdict> precheck(const SumProblem& p, std::vector<std::string>& log) {
    const auto errors = validate(p);
    if (!errors.empty()) {
        const bool only_square = errors.size() == 1 && errors.front() == ValidationError::SquareMismatch;
        if (only_square && p.X1.has_anticanonical_F() && p.X2.has_anticanonical_F()) {
            const Int c1 = c1sq(p.X1.family()) + c1sq(p.X2.family());
            log.push_back("anticanonical tori have squares " + std::to_string(square(p.X1.F())) + " and " +
                          std::to_string(square(p.X2.F())));
            return negative(Verdict::Kind::NotKodairaZero, "c1² = " + std::to_string(c1) + " ≠ 0");
        }
        std::string why;
        for (auto e : errors)
            why += (why.empty() ? "" : ", ") + to_string(e);
        return negative(Verdict::Kind::HypothesisFailure, "not a symplectic sum: " + why);
    }
    log.push_back("validated " + pair_name(p) + ": genus " + std::to_string(*adjunction_genus(p.X1.F()).genus()) +
                  ", squares " + std::to_string(square(p.X1.F())) + " + " + std::to_string(square(p.X2.F())) + " = 0");

    if (is_smoothly_trivial(p))
        return negative(Verdict::Kind::HypothesisFailure, "smoothly trivial: F is a section of an S2-bundle");
    if (is_relatively_minimal(p) != Tribool::True)
        return negative(Verdict::Kind::HypothesisFailure, "relative minimality could not be decided");
    const Int g = *adjunction_genus(p.X1.F()).genus();
    if (g < 1)
        return negative(Verdict::Kind::HypothesisFailure, "F has genus 0");
    log.push_back("smoothly nontrivial and relatively minimal");

    for (const auto* s : {&p.X1, &p.X2})
        if (auto e = check_minusf(*s)) {
            const std::string which = s == &p.X1 ? "F1" : "F2";
            return negative(Verdict::Kind::NotKodairaZero,
                            e == MinusFError::WrongClass ? which + " is not Poincare dual to -kappa"
                                                         : which + " is not a torus");
        }
    const SumInvariants inv = sum_invariants(p);
    if (inv.c1sq != 0)
        return negative(Verdict::Kind::NotKodairaZero, "c1² = " + std::to_string(inv.c1sq) + " ≠ 0");
    log.push_back("F1, F2 anticanonical tori; sum has chi = " + std::to_string(inv.chi) +
                  ", sigma = " + std::to_string(inv.sigma) + ", c1² = 0");
    return std::nullopt;
}

bool is_e1(const SurfaceFamily& f) { return f == SurfaceFamily::e1(); }

bool is_bundle_over_torus(const SurfaceFamily& f) {
    return f.is_ruled() && f.is_sphere_bundle() && f.base_genus() == 1;
}

// Stage 5 on an already reduced pair.
Verdict dispatch(const SumProblem& r, Int bound, Certificate& cert) {
    const auto& f1 = r.X1.family();
    const auto& f2 = r.X2.family();
    if (is_e1(f1) && is_e1(f2)) {
        cert.steps.push_back("E(1) # E(1) along fibers is K3");
        return {Verdict::Kind::K3, {}, {}, {}};
    }
    if ((is_e1(f1) && is_bundle_over_torus(f2)) || (is_e1(f2) && is_bundle_over_torus(f1))) {
        cert.steps.push_back("E(1) # (S2-bundle over T2) is Enriques");
        return {Verdict::Kind::Enriques, {}, {}, {}};
    }
    if (is_bundle_over_torus(f1) && is_bundle_over_torus(f2)) {
        const ComplementKind j = complement_of(r.X1), k = complement_of(r.X2);
        cert.complements = std::pair{j.j(), k.j()};
        cert.steps.push_back("complements Y" + std::to_string(j.j()) + " and Y" + std::to_string(k.j()));
        const auto tags = enumerate_table(j, k, bound);
        Verdict v{Verdict::Kind::TorusBundleFamilies, {}, {tags.begin(), tags.end()}, {}};
        for (Pattern pat : kAllPatterns)
            if (std::any_of(tags.begin(), tags.end(), [pat](const FamilyTag& t) { return t.pattern == pat; }))
                v.patterns.push_back(pat);
        cert.steps.push_back("enumerated gluings with |parameters| <= " + std::to_string(bound) + ": " +
                             std::to_string(tags.size()) + " normal forms in " + std::to_string(v.patterns.size()) +
                             " families");
        return v;
    }
    if ((f1.is_ruled() && f1.base_genus() >= 2) || (f2.is_ruled() && f2.base_genus() >= 2))
        return negative(Verdict::Kind::NotKodairaZero, "both X1 and X2 must be S²-bundles over T²");
    throw Error("internal: reduced pair " + pair_name(r) + " matches no case");
}

} // namespace

Classification classify(const SumProblem& p, Int bound) {
    Classification c{negative(Verdict::Kind::HypothesisFailure, "unclassified"), {p, {}, std::nullopt, bound, {}}};
    if (auto v = precheck(p, c.certificate.steps)) {
        c.verdict = *v;
        return c;
    }
    std::optional<Reduction> red;
    try {
        red = reduce_pair_traced(p);
    } catch (const DomainError& e) {
        c.verdict = negative(Verdict::Kind::HypothesisFailure, e.what());
        return c;
    }
    c.certificate.trades = red->trades;
    for (const auto& t : red->trades)
        c.certificate.steps.push_back(describe(t));
    if (!red->trades.empty())
        c.certificate.steps.push_back("reduced to " + pair_name(red->result) + " after " +
                                      std::to_string(red->trades.size()) + " trades");
    c.verdict = dispatch(red->result, bound, c.certificate);
    return c;
}

Verdict replay(const Certificate& cert) {
    std::vector<std::string> log;
    if (auto v = precheck(cert.input, log))
        return *v;
    if (cert.trades.empty()) {
        // A verdict reached without trades may still have failed in reduction.
        try {
            reduce_pair_traced(cert.input);
        } catch (const DomainError& e) {
            return negative(Verdict::Kind::HypothesisFailure, e.what());
        }
    }
    SumProblem cur = cert.input;
    for (const auto& recorded : cert.trades) {
        TradeStep step{recorded};
        cur = trade_blowup(cur, recorded.direction, &step);
        if (!(step.source_after == recorded.source_after) || !(step.target_after == recorded.target_after))
            throw DomainError("certificate does not replay: " + describe(recorded));
    }
    if (!(reduce_pair(cur) == cur))
        throw DomainError("certificate stops before the reduced pair");
    Certificate scratch{cert.input, {}, std::nullopt, cert.bound, {}};
    return dispatch(cur, cert.bound, scratch);
}

ModelInvariants model_invariants(const Verdict& v) {
    switch (v.kind) {
    case Verdict::Kind::K3:
        return {24, -16, 0};
    case Verdict::Kind::Enriques:
        return {12, -8, 0};
    default:
        throw DomainError("model invariants need a K3 or Enriques verdict or a single torus-bundle tag");
    }
}

ModelInvariants model_invariants(const FamilyTag& t) { return {0, 0, h1(t.bundle()).rank}; }

} // namespace kodsum
