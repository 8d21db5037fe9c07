#include "kodsum/sumcalc.hpp"

#include <utility>

namespace kodsum {

Summand::Summand(SurfaceFamily family, H2Class F) : family_(std::move(family)), F_(std::move(F)) {
    if (!(F_.family() == family_))
        throw DomainError("surface class belongs to " + F_.family().name() + ", not " + family_.name());
}

Summand Summand::anticanonical(const SurfaceFamily& family) {
    return {family, kodsum::anticanonical(family)};
}

bool Summand::has_anticanonical_F() const { return F_ == kodsum::anticanonical(family_); }

std::string to_string(ValidationError e) {
    switch (e) {
    case ValidationError::GenusMismatch:
        return "GenusMismatch";
    case ValidationError::SquareMismatch:
        return "SquareMismatch";
    case ValidationError::UndefinedGenus:
        return "UndefinedGenus";
    }
    return "?";
}

std::string to_string(Tribool t) {
    switch (t) {
    case Tribool::False:
        return "false";
    case Tribool::True:
        return "true";
    case Tribool::Unknown:
        return "unknown";
    }
    return "?";
}

std::vector<ValidationError> validate(const SumProblem& p) {
    std::vector<ValidationError> errors;
    const auto g1 = adjunction_genus(p.X1.F());
    const auto g2 = adjunction_genus(p.X2.F());
    if (!g1.defined() || !g2.defined())
        errors.push_back(ValidationError::UndefinedGenus);
    else if (g1.value != g2.value)
        errors.push_back(ValidationError::GenusMismatch);
    if (checked_add(square(p.X1.F()), square(p.X2.F())) != 0)
        errors.push_back(ValidationError::SquareMismatch);
    return errors;
}

SumInvariants sum_invariants(const SumProblem& p) {
    const auto errors = validate(p);
    if (!errors.empty())
        throw DomainError("sum is not well posed: " + to_string(errors.front()));
    const Int g = *adjunction_genus(p.X1.F()).genus();
    SumInvariants inv{};
    inv.genus = g;
    inv.chi = euler(p.X1.family()) + euler(p.X2.family()) + 4 * g - 4;
    inv.sigma = signature(p.X1.family()) + signature(p.X2.family());
    inv.c1sq = 2 * inv.chi + 3 * inv.sigma;
    return inv;
}

namespace {

// Classes of the fibers of the S^2-fibrations on a sphere bundle (or on the
// bundle underlying a blown-up ruled surface).
std::vector<H2Class> ruling_fibers(const SurfaceFamily& fam) {
    switch (fam.kind()) {
    case SurfaceFamily::Kind::S2xS2:
        return {basis_class(fam, 0), basis_class(fam, 1)};
    case SurfaceFamily::Kind::RuledTrivial:
    case SurfaceFamily::Kind::RuledTwisted:
        return {basis_class(fam, 1)};
    case SurfaceFamily::Kind::CP2Blowup:
        break;
    }
    return {};
}

bool is_section_pair(const Summand& s) {
    if (!s.family().is_sphere_bundle())
        return false;
    for (const auto& fiber : ruling_fibers(s.family()))
        if (intersect(s.F(), fiber) == 1)
            return true;
    return false;
}

bool is_blown_up_section_pair(const Summand& s) {
    const auto& fam = s.family();
    if (fam.kind() == SurfaceFamily::Kind::CP2Blowup)
        return false;
    for (std::size_t idx : fam.exceptional_indices())
        if (intersect(s.F(), basis_class(fam, idx)) != 0)
            return false;
    // Exceptional classes are orthogonal to the fibers, so dropping them does
    // not change F.fiber.
    for (const auto& fiber : ruling_fibers(fam))
        if (intersect(s.F(), fiber) == 1)
            return true;
    return false;
}

bool relatively_minimal_side(const Summand& s) { return s.has_anticanonical_F() || s.family().is_minimal(); }

} // namespace

bool is_smoothly_trivial(const SumProblem& p) { return is_section_pair(p.X1) || is_section_pair(p.X2); }

bool is_blowup_type(const SumProblem& p) {
    return is_blown_up_section_pair(p.X1) || is_blown_up_section_pair(p.X2);
}

Tribool is_relatively_minimal(const SumProblem& p) {
    if (relatively_minimal_side(p.X1) && relatively_minimal_side(p.X2))
        return Tribool::True;
    return Tribool::Unknown;
}

std::string describe(const TradeStep& step) {
    std::string s = step.direction == TradeDirection::TwoToOne ? "trade 2->1: " : "trade 1->2: ";
    s += "{" + step.source_before.name() + ", " + step.target_before.name() + "} -> {" +
         step.source_after.name() + ", " + step.target_after.name() + "}";
    if (step.relabelled_s2xs2)
        s += " (S2xS2#CP2-bar = CP2#2)";
    return s;
}

SumProblem trade_blowup(const SumProblem& p, TradeDirection dir, TradeStep* step) {
    if (!p.X1.has_anticanonical_F() || !p.X2.has_anticanonical_F())
        throw DomainError("trading blowups needs both surfaces anticanonical");
    const bool two_to_one = dir == TradeDirection::TwoToOne;
    const SurfaceFamily& source = two_to_one ? p.X2.family() : p.X1.family();
    const SurfaceFamily& target = two_to_one ? p.X1.family() : p.X2.family();
    if (source.is_minimal())
        throw DomainError("nothing to trade: " + source.name() + " has no exceptional sphere");

    const SurfaceFamily new_source = blow_down(source);
    bool relabelled = false;
    SurfaceFamily new_target = target;
    if (target.kind() == SurfaceFamily::Kind::S2xS2) {
        new_target = blow_up_s2xs2().family;
        relabelled = true;
    } else {
        new_target = blow_up(target);
    }
    if (step)
        *step = TradeStep{dir, source, target, new_source, new_target, relabelled};

    const Summand s = Summand::anticanonical(new_source);
    const Summand t = Summand::anticanonical(new_target);
    return two_to_one ? SumProblem{t, s} : SumProblem{s, t};
}

namespace {

SumProblem apply_trade(const SumProblem& p, TradeDirection dir, std::vector<TradeStep>& log) {
    TradeStep step{dir, p.X1.family(), p.X2.family(), p.X1.family(), p.X2.family()};
    SumProblem next = trade_blowup(p, dir, &step);
    log.push_back(step);
    return next;
}

} // namespace

Reduction reduce_pair_traced(const SumProblem& p) {
    if (!p.X1.has_anticanonical_F() || !p.X2.has_anticanonical_F())
        throw DomainError("reduction needs both surfaces anticanonical");
    if (!validate(p).empty())
        throw DomainError("inapplicable configuration: the anticanonical tori have squares " +
                          std::to_string(square(p.X1.F())) + " and " + std::to_string(square(p.X2.F())));

    Reduction red{p, {}};
    SumProblem& cur = red.result;
    const auto& f1 = [&]() -> const SurfaceFamily& { return cur.X1.family(); };
    const auto& f2 = [&]() -> const SurfaceFamily& { return cur.X2.family(); };

    if (f1().is_rational() && f2().is_rational()) {
        if (f1().kind() == SurfaceFamily::Kind::S2xS2 && !f2().is_minimal())
            cur = apply_trade(cur, TradeDirection::TwoToOne, red.trades);
        else if (f2().kind() == SurfaceFamily::Kind::S2xS2 && !f1().is_minimal())
            cur = apply_trade(cur, TradeDirection::OneToTwo, red.trades);
        if (f1().kind() != SurfaceFamily::Kind::CP2Blowup || f2().kind() != SurfaceFamily::Kind::CP2Blowup)
            throw DomainError("inapplicable configuration: {" + f1().name() + ", " + f2().name() + "}");
        while (f1().blowups() + 1 < f2().blowups())
            cur = apply_trade(cur, TradeDirection::TwoToOne, red.trades);
        while (f2().blowups() + 1 < f1().blowups())
            cur = apply_trade(cur, TradeDirection::OneToTwo, red.trades);
        return red;
    }

    if (f1().is_ruled() && f2().is_ruled()) {
        if (!f1().is_minimal() || !f2().is_minimal())
            throw DomainError("inapplicable configuration: blowups cannot be traded between ruled summands");
        return red;
    }

    // One rational, one ruled: move every blowup of the ruled side across.
    const bool ruled_is_two = f2().is_ruled();
    const TradeDirection dir = ruled_is_two ? TradeDirection::TwoToOne : TradeDirection::OneToTwo;
    while (!(ruled_is_two ? f2() : f1()).is_minimal())
        cur = apply_trade(cur, dir, red.trades);
    return red;
}

} // namespace kodsum
