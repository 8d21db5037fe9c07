// Acceptance suite: one line per criterion, exit status 1 if any fails.
//   acceptance            run all nine
//   acceptance --only N   run criterion N

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "../families.hpp"
#include "../oracles.hpp"
#include "kodsum/classifier.hpp"
#include "kodsum/enumerate.hpp"
#include "kodsum/glue.hpp"
#include "kodsum/snf.hpp"

using namespace kodsum;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail.str("");
            detail << what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SumProblem anti_pair(const SurfaceFamily& a, const SurfaceFamily& b) {
    return {Summand::anticanonical(a), Summand::anticanonical(b)};
}

std::string describe_patterns(const std::set<Pattern>& ps) {
    std::string s;
    for (Pattern p : ps)
        s += (s.empty() ? "" : ", ") + pattern_text(p);
    return "{" + s + "}";
}

std::vector<SL2Z> small_sl2z(Int bound) {
    std::vector<SL2Z> out;
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b)
            for (Int c = -bound; c <= bound; ++c)
                for (Int d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1)
                        out.emplace_back(a, b, c, d);
    return out;
}

constexpr Int kTableBound = 4;

// Tags from the table enumeration, shared with criterion 4.
std::set<FamilyTag> table_tags() {
    std::set<FamilyTag> all;
    for (Int j = 0; j < 2; ++j)
        for (Int k = 0; k < 2; ++k) {
            const auto t = enumerate_table(ComplementKind(j), ComplementKind(k), kTableBound);
            all.insert(t.begin(), t.end());
        }
    return all;
}

// 1. The enumerated tag sets equal the table families at the realizable
// parameters, for all four (j, k).
void table_reproduction(Outcome& o) {
    const auto t0 = Clock::now();
    std::size_t tags = 0;
    const auto grid = gluing_grid(kTableBound);
    for (Int j = 0; j < 2; ++j)
        for (Int k = 0; k < 2; ++k) {
            const ComplementKind J(j), K(k);
            const auto got = enumerate_table_serial(J, K, kTableBound);
            std::set<FamilyTag> expected;
            for (const auto& g : grid)
                expected.insert(testing::table_rule(glue_bundle(J, K, g)));
            std::set<Pattern> patterns;
            for (const auto& t : got)
                patterns.insert(t.pattern);
            const std::string at = " at (j,k) = (" + std::to_string(j) + "," + std::to_string(k) + ")";
            o.require(got == expected, "tag set differs from the gcd-rule oracle" + at);
            o.require(patterns == testing::table_patterns(j, k),
                      "families " + describe_patterns(patterns) + " instead of " +
                          describe_patterns(testing::table_patterns(j, k)) + at);
            o.require(got == enumerate_table(J, K, kTableBound), "parallel and serial enumeration differ" + at);
            tags += got.size();
        }
    const double secs = seconds_since(t0);
    o.require(secs < 60, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail << tags << " tags over 4 (j,k) at bound " << kTableBound << ", " << grid.size()
                 << " gluings each, " << secs << " s";
}

// 2. Every row of the main classification table.
void main_table(Outcome& o) {
    const auto t0 = Clock::now();
    const auto cp2 = [](Int k) { return SurfaceFamily::cp2_blowup(k); };
    const auto s2t2 = [](Int k) { return SurfaceFamily::ruled_trivial(1, k); };
    const SurfaceFamily tw = SurfaceFamily::ruled_twisted(1);
    const SurfaceFamily q = SurfaceFamily::s2xs2();
    std::size_t rows = 0;
    const auto expect = [&](const SumProblem& p, Verdict::Kind kind, const std::set<Pattern>& pats = {}) {
        const Classification c = classify(p);
        const std::string row = "{" + p.X1.family().name() + ", " + p.X2.family().name() + "}";
        o.require(c.verdict.kind == kind, row + " gave " + to_string(c.verdict.kind) + " " + c.verdict.reason);
        if (kind == Verdict::Kind::TorusBundleFamilies) {
            const std::set<Pattern> got(c.verdict.patterns.begin(), c.verdict.patterns.end());
            o.require(got == pats, row + " gave " + describe_patterns(got));
        }
        ++rows;
    };
    for (Int k = 0; k <= 9; ++k)
        expect(anti_pair(cp2(k), cp2(18 - k)), Verdict::Kind::K3);
    expect(anti_pair(q, cp2(17)), Verdict::Kind::K3);
    for (Int k = 0; k <= 9; ++k)
        expect(anti_pair(cp2(9 - k), s2t2(k)), Verdict::Kind::Enriques);
    expect(anti_pair(q, s2t2(8)), Verdict::Kind::Enriques);
    expect(anti_pair(cp2(9), tw), Verdict::Kind::Enriques);
    expect(anti_pair(s2t2(0), s2t2(0)), Verdict::Kind::TorusBundleFamilies, testing::table_patterns(0, 0));
    expect(anti_pair(s2t2(0), tw), Verdict::Kind::TorusBundleFamilies, testing::table_patterns(0, 1));
    expect(anti_pair(tw, tw), Verdict::Kind::TorusBundleFamilies, testing::table_patterns(1, 1));
    const double secs = seconds_since(t0);
    o.require(secs < 5, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail << rows << " rows, " << secs << " s";
}

// 3. abelianize(glue_presentation) = h1(glue_bundle) on the whole [-3,3] grid.
void cross_oracle(Outcome& o) {
    const auto mismatches = cross_oracle_sweep(3);
    if (!mismatches.empty()) {
        const auto& m = mismatches.front();
        o.require(false, std::to_string(mismatches.size()) + " mismatches, first (j,k) = (" + std::to_string(m.j) +
                             "," + std::to_string(m.k) + ") " + render(m.gluing) + ": " +
                             render(m.from_presentation) + " vs " + render(m.from_bundle));
        return;
    }
    o.detail << cross_oracle_size(3) << " (j,k,gluing) triples, 0 mismatches";
}

// 4. b1 = 2 for every enumerated and classified family; b1(M(I,I;(0,1))) = 3.
void b1_facts(Outcome& o) {
    std::set<FamilyTag> tags = table_tags();
    for (const auto& p : {anti_pair(SurfaceFamily::ruled_trivial(1, 0), SurfaceFamily::ruled_trivial(1, 0)),
                          anti_pair(SurfaceFamily::ruled_trivial(1, 0), SurfaceFamily::ruled_twisted(1)),
                          anti_pair(SurfaceFamily::ruled_twisted(1), SurfaceFamily::ruled_twisted(1))}) {
        const auto v = classify(p).verdict;
        tags.insert(v.evidence.begin(), v.evidence.end());
    }
    for (const auto& t : tags)
        o.require(h1(t.bundle()).rank == 2, render(t) + " has b1 = " + std::to_string(h1(t.bundle()).rank));
    const Int r = h1(TorusBundle{SL2Z::identity(), SL2Z::identity(), {0, 1}}).rank;
    o.require(r == 3, "b1(M(I,I;(0,1))) = " + std::to_string(r));
    if (o.pass)
        o.detail << tags.size() << " tags with b1 = 2; b1(M(I,I;(0,1))) = 3";
}

// 5. The involution lemma against the orbit oracle on (1/2 Z / Z)^2.
void involution(Outcome& o) {
    const auto mats = small_sl2z(3);
    for (const auto& A : mats) {
        const auto oracle = testing::involution_oracle(A);
        const InvolutionVerdict v = involution_composite(A);
        o.require(oracle.has_value(), render(A) + ": composite is not a translation");
        if (!oracle)
            continue;
        o.require(v.tx2 == (*oracle)[0] && v.ty2 == (*oracle)[1], render(A) + ": translation differs from oracle");
        o.require((v.kind == InvolutionVerdict::Kind::Identity) == (A.c() % 2 == 0),
                  render(A) + ": verdict does not follow the parity of c");
        o.require((v.kind == InvolutionVerdict::Kind::Identity) == ((*oracle)[0] == 0 && (*oracle)[1] == 0),
                  render(A) + ": verdict disagrees with the fixed points");
    }
    if (o.pass)
        o.detail << mats.size() << " matrices in SL(2,Z) with entries in [-3,3]";
}

// 6. h1 under base change and twist reduction, normal form idempotence,
// invariants under trades.
void invariant_preservation(Outcome& o) {
    std::mt19937 rng(600613);
    const auto mats = small_sl2z(3);
    std::vector<std::pair<SL2Z, SL2Z>> commuting;
    for (const auto& A : mats)
        for (const auto& B : mats)
            if (A * B == B * A)
                commuting.emplace_back(A, B);
    std::uniform_int_distribution<std::size_t> pick_pair(0, commuting.size() - 1), pick_mat(0, mats.size() - 1);
    std::uniform_int_distribution<Int> coord(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 500; ++i) {
        const auto& [A, B] = commuting[pick_pair(rng)];
        const TorusBundle b{A, B, {coord(rng), coord(rng)}};
        const TorusBundle c = coin(rng) ? base_change(b, mats[pick_mat(rng)]) : twist_reduce(b);
        o.require(h1(c) == h1(b), render(b) + " -> " + render(c) + " changed h1");
    }

    std::set<FamilyTag> outputs = table_tags();
    for (const auto& t : outputs)
        o.require(normal_form(t.bundle()).tag == t, "normal_form not idempotent on " + render(t));

    std::size_t trades = 0;
    for (Int k = 0; k <= 18; ++k) {
        const SumProblem p = anti_pair(SurfaceFamily::cp2_blowup(k), SurfaceFamily::cp2_blowup(18 - k));
        const SumInvariants before = sum_invariants(p);
        for (auto dir : {TradeDirection::TwoToOne, TradeDirection::OneToTwo}) {
            if ((dir == TradeDirection::TwoToOne && k == 18) || (dir == TradeDirection::OneToTwo && k == 0))
                continue;
            const SumInvariants after = sum_invariants(trade_blowup(p, dir));
            o.require(after.chi == before.chi && after.sigma == before.sigma && after.c1sq == before.c1sq,
                      "trade changed the invariants of CP2#" + std::to_string(k) + " + CP2#" + std::to_string(18 - k));
            ++trades;
        }
    }
    if (o.pass)
        o.detail << "500 moves keep h1; " << outputs.size() << " normal forms idempotent; " << trades
                 << " trades keep (chi, sigma, c1^2)";
}

// 7. Genus of the anticanonical class and the mu bound over the classifier's universe.
void minusf_arithmetic(Outcome& o) {
    const auto universe = testing::family_universe(20, 4);
    std::set<std::string> claimed, observed;
    bool mu_ok = true;
    for (Int k = 0; k <= 9; ++k)
        claimed.insert(SurfaceFamily::cp2_blowup(k).name());
    claimed.insert(SurfaceFamily::s2xs2().name());
    for (Int k = 0; k <= 8; ++k)
        claimed.insert(SurfaceFamily::ruled_trivial(1, k).name());
    claimed.insert(SurfaceFamily::ruled_twisted(1).name());

    for (const auto& f : universe) {
        if (adjunction_genus(anticanonical(f)).genus() == Int{1})
            observed.insert(f.name());
        const MuBound m = mu_bound(f);
        const MuCase expected = f.is_rational() ? MuCase::Rational
                                : f.kind() == SurfaceFamily::Kind::RuledTwisted ? MuCase::TwistedIntegrality
                                : f.blowups() > 0 ? MuCase::RuledBlownUp
                                                  : MuCase::SectionExcluded;
        if (m.lower != Rational{-1, 1} || m.reason != expected) {
            mu_ok = false;
            o.require(false, "mu_bound of " + f.name() + " is " + to_string(m.reason));
        }
    }
    if (observed != claimed) {
        std::size_t extra = 0;
        std::string example;
        for (const auto& n : observed)
            if (!claimed.count(n)) {
                ++extra;
                if (example.empty())
                    example = n;
            }
        o.require(false, "genus(-kappa) = 1 on " + std::to_string(observed.size()) + " of " +
                             std::to_string(universe.size()) + " families, expected exactly the " +
                             std::to_string(claimed.size()) + " listed; " + std::to_string(extra) +
                             " others, e.g. " + example + " (the adjunction right side (-kappa)^2 + kappa.(-kappa) "
                             "is identically 0); mu_bound part " +
                             (mu_ok ? "holds" : "fails"));
        return;
    }
    o.detail << observed.size() << " families with genus 1; mu_bound -1 everywhere";
}

// 8. Rejections and the absence of Kodaira dimension -infinity.
void negative_controls(Outcome& o) {
    const Classification c = classify(anti_pair(SurfaceFamily::cp2_blowup(3), SurfaceFamily::cp2_blowup(3)));
    o.require(c.verdict.kind == Verdict::Kind::NotKodairaZero, "{CP2#3, CP2#3} gave " + to_string(c.verdict.kind));
    o.require(c.verdict.reason.find("c1²") != std::string::npos, "{CP2#3, CP2#3} reason: " + c.verdict.reason);

    // Sections: sigma + n f in S2xT2, s- + n f in S2~xT2, A + n B in S2xS2.
    std::size_t sections = 0;
    const auto section_pair = [&](const SurfaceFamily& f, std::vector<Int> a, std::vector<Int> b) {
        const SumProblem p{Summand(f, H2Class(f, std::move(a))), Summand(f, H2Class(f, std::move(b)))};
        const Classification r = classify(p);
        o.require(r.verdict.kind == Verdict::Kind::HypothesisFailure &&
                      r.verdict.reason.find("smoothly trivial") != std::string::npos,
                  "section pair in " + f.name() + " gave " + to_string(r.verdict.kind) + ": " + r.verdict.reason);
        ++sections;
    };
    for (Int n = -3; n <= 3; ++n) {
        section_pair(SurfaceFamily::ruled_trivial(1, 0), {1, n}, {1, -n});
        section_pair(SurfaceFamily::ruled_twisted(1), {1, n}, {1, 1 - n});
        section_pair(SurfaceFamily::s2xs2(), {1, n}, {1, -n});
    }
    const SurfaceFamily t = SurfaceFamily::ruled_trivial(1, 0);
    const Classification mixed = classify({Summand(t, H2Class(t, {1, 0})), Summand::anticanonical(SurfaceFamily::e1())});
    o.require(mixed.verdict.kind == Verdict::Kind::HypothesisFailure, "section against E(1) was accepted");
    ++sections;

    std::size_t checked = 0;
    const auto fams = testing::family_universe(18, 2);
    for (const auto& a : fams)
        for (const auto& b : fams) {
            const SumProblem p = anti_pair(a, b);
            if (!validate(p).empty() || is_smoothly_trivial(p) || is_relatively_minimal(p) != Tribool::True ||
                adjunction_genus(p.X1.F()).genus() != Int{1})
                continue;
            const Classification r = classify(p, 1);
            ++checked;
            if (r.verdict.is_manifold())
                o.require(verdict_kodaira(r.verdict) == KodairaDim::Zero, "manifold verdict with kappa != 0");
            o.require(r.verdict.reason.find("infinity") == std::string::npos,
                      "{" + a.name() + ", " + b.name() + "} rendered Kodaira dimension -infinity");
        }
    if (o.pass)
        o.detail << "{CP2#3, CP2#3} rejected (" << c.verdict.reason << "); " << sections
                 << " section sums smoothly trivial; " << checked << " admissible pairs, none -infinity";
}

// 9. Smith normal form against the gcd-of-minors oracle.
void snf_oracle(Outcome& o) {
    const auto t0 = Clock::now();
    std::mt19937 rng(9001);
    for (int i = 0; i < 1000; ++i) {
        const Matrix<Int> M = testing::random_matrix(rng, 4, 5, 5);
        const SmithForm s = snf(M);
        std::ostringstream m;
        m << M;
        o.require(s.invariant_factors() == testing::minors_oracle(M), "invariant factors differ on " + m.str());
        o.require(s.U * to_big(M) * s.V == s.D, "U M V != D on " + m.str());
    }
    const double secs = seconds_since(t0);
    o.require(secs < 10, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail << "1000 matrices up to 4x5, " << secs << " s";
}

struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {"table reproduction", table_reproduction},   {"main table", main_table},
        {"cross-oracle", cross_oracle},               {"b1 facts", b1_facts},
        {"involution lemma", involution},             {"invariant preservation", invariant_preservation},
        {"anticanonical genus and mu bound", minusf_arithmetic}, {"negative controls", negative_controls},
        {"SNF oracle", snf_oracle},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1)
            continue;
        Outcome o;
        try {
            criteria[i].run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail.str("");
            o.detail << "exception: " << e.what();
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << " [" << criteria[i].name << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
                  << o.detail.str() << ")" << std::endl;
    }
    return all ? 0 : 1;
}
