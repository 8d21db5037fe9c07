#include "kodsum/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "kodsum/classifier.hpp"
#include "kodsum/enumerate.hpp"
#include "kodsum/glue.hpp"
#include "kodsum/notation.hpp"

namespace kodsum::cli {

namespace {

using Record = nlohmann::ordered_json;

class Emitter {
  public:
    Emitter(std::ostream& out, bool records) : out_(out), records_(records) {}

    void emit(const Record& r) {
        if (records_) {
            out_ << r.dump() << "\n";
            return;
        }
        for (const auto& [key, value] : r.items()) {
            if (value.is_string()) {
                out_ << key << ": " << value.get<std::string>() << "\n";
            } else if (value.is_array() && !value.empty() &&
                       std::all_of(value.begin(), value.end(), [](const Record& v) { return v.is_string(); })) {
                out_ << key << ":\n";
                for (const auto& line : value)
                    out_ << "  " << line.get<std::string>() << "\n";
            } else {
                out_ << key << ": " << value.dump() << "\n";
            }
        }
        out_ << "\n";
    }

  private:
    std::ostream& out_;
    bool records_;
};

Record trace_record(const NormalFormTrace& t) {
    return Record{{"delta", t.delta}, {"zeta", t.zeta}, {"z", t.z}, {"p", t.p}, {"q", t.q},
                  {"r", t.r},         {"s", t.s},       {"x", t.x}, {"j", t.j}};
}

Record tag_record(const FamilyTag& t) {
    return Record{{"tag", render(t)}, {"pattern", pattern_text(t.pattern)}, {std::string(1, pattern_parameter(t.pattern)), t.param}};
}

int cmd_invariants(const std::string& text, Emitter& em) {
    const SurfaceFamily fam = parse_family(text);
    const H2Class k = anticanonical(fam);
    const auto g = adjunction_genus(k);
    Record r{{"command", "invariants"},
             {"manifold", fam.name()},
             {"basis", fam.basis_labels()},
             {"chi", euler(fam)},
             {"sigma", signature(fam)},
             {"c1sq", c1sq(fam)},
             {"anticanonical", render_class(k)},
             {"anticanonical_coeffs", k.coeffs()}};
    r["genus"] = g.defined() ? Record(g.value) : Record(nullptr);
    em.emit(r);
    return kExitOk;
}

int cmd_classify(const std::string& s1, const std::string& s2, const std::optional<std::string>& F1,
                 const std::optional<std::string>& F2, Int bound, Emitter& em) {
    if (bound < 1)
        throw DomainError("--bound must be at least 1");
    const SurfaceFamily f1 = parse_family(s1), f2 = parse_family(s2);
    const Summand X1 = F1 ? Summand(f1, parse_class(f1, *F1)) : Summand::anticanonical(f1);
    const Summand X2 = F2 ? Summand(f2, parse_class(f2, *F2)) : Summand::anticanonical(f2);
    const Classification c = classify({X1, X2}, bound);

    Record r{{"command", "classify"},
             {"X1", f1.name()},
             {"X2", f2.name()},
             {"F1", render_class(X1.F())},
             {"F2", render_class(X2.F())},
             {"verdict", to_string(c.verdict.kind)}};
    if (!c.verdict.is_manifold()) {
        r["reason"] = c.verdict.reason;
    } else {
        r["kodaira_dimension"] = to_string(verdict_kodaira(c.verdict));
        if (c.verdict.kind == Verdict::Kind::TorusBundleFamilies) {
            std::vector<std::string> fams;
            for (Pattern p : c.verdict.patterns)
                fams.push_back(pattern_text(p));
            r["families"] = fams;
            r["enumerated_members"] = c.verdict.evidence.size();
            r["chi"] = 0;
            r["sigma"] = 0;
            std::vector<Int> b1s;
            for (const auto& t : c.verdict.evidence)
                b1s.push_back(model_invariants(t).b1);
            std::sort(b1s.begin(), b1s.end());
            b1s.erase(std::unique(b1s.begin(), b1s.end()), b1s.end());
            r["b1"] = b1s.size() == 1 ? Record(b1s.front()) : Record(b1s);
        } else {
            const ModelInvariants m = model_invariants(c.verdict);
            r["chi"] = m.chi;
            r["sigma"] = m.sigma;
            r["b1"] = m.b1;
        }
    }
    r["trades"] = c.certificate.trades.size();
    r["certificate"] = c.certificate.steps;
    em.emit(r);
    return c.verdict.is_manifold() ? kExitOk : kExitNegative;
}

int cmd_normalform(const std::string& literal, Emitter& em) {
    const TorusBundle b = parse_bundle(literal);
    const NormalForm nf = normal_form(b);
    Record r{{"command", "normalform"}, {"input", render(b)}};
    r.update(tag_record(nf.tag));
    r["trace"] = trace_record(nf.trace);
    r["h1"] = render(h1(b));
    em.emit(r);
    return kExitOk;
}

int cmd_h1(const std::string& literal, Emitter& em) {
    const TorusBundle b = parse_bundle(literal);
    const AbelianInvariants a = h1(b);
    em.emit(Record{{"command", "h1"},
                   {"input", render(b)},
                   {"rank", a.rank},
                   {"torsion", a.torsion},
                   {"b1", a.rank},
                   {"h1", render(a)}});
    return kExitOk;
}

int cmd_glue(Int j, Int k, const std::string& form, const std::string& params, Emitter& em) {
    const ComplementKind J(j), K(k);
    const GluingData g = parse_gluing(form, params);
    const TorusBundle b = glue_bundle(J, K, g);
    const Presentation p = glue_presentation(J, K, g);
    Record r{{"command", "glue"},
             {"j", j},
             {"k", k},
             {"gluing", render(g)},
             {"presentation", render(p)},
             {"abelianization", render(abelianize(p))},
             {"bundle", render(b)},
             {"h1", render(h1(b))}};
    const NormalForm nf = normal_form(b);
    r.update(tag_record(nf.tag));
    em.emit(r);
    return kExitOk;
}

int cmd_enumerate(Int j, Int k, Int bound, bool emit_presentations, Emitter& em) {
    const ComplementKind J(j), K(k);
    std::size_t grid_points = 0;
    std::set<FamilyTag> tags;
    if (emit_presentations) {
        for (const auto& rec : enumerate_records(J, K, bound)) {
            Record r{{"gluing", render(rec.gluing)},
                     {"presentation", render(rec.presentation)},
                     {"abelianization", render(rec.abelianization)},
                     {"bundle", render(rec.bundle)}};
            r.update(tag_record(rec.tag));
            em.emit(r);
            tags.insert(rec.tag);
            ++grid_points;
        }
    } else {
        tags = enumerate_table(J, K, bound);
        grid_points = gluing_grid(bound).size();
    }

    std::map<Pattern, std::vector<Int>> by_pattern;
    for (const auto& t : tags)
        by_pattern[t.pattern].push_back(t.param);
    std::vector<std::string> families;
    for (const auto& [pat, params] : by_pattern) {
        families.push_back(pattern_text(pat));
        em.emit(Record{{"pattern", pattern_text(pat)}, {std::string(1, pattern_parameter(pat)), params}});
    }
    em.emit(Record{{"command", "enumerate"},
                   {"j", j},
                   {"k", k},
                   {"bound", bound},
                   {"grid_points", grid_points},
                   {"normal_forms", tags.size()},
                   {"families", families}});
    return kExitOk;
}

int cmd_involution(const std::string& literal, Emitter& em) {
    const SL2Z A = parse_sl2z(literal);
    const InvolutionVerdict v = involution_composite(A);
    const auto half = [](Int n) { return n == 0 ? std::string("0") : std::string("1/2"); };
    em.emit(Record{{"command", "involution"},
                   {"matrix", render(A)},
                   {"verdict", v.kind == InvolutionVerdict::Kind::Identity ? "Identity" : "FreeInvolution"},
                   {"translation", "(" + half(v.tx2) + "," + half(v.ty2) + ")"}});
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symplectic sums of Kodaira dimension zero: invariants, classification and T2-bundle normal forms",
                 "kodsum"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));

    std::string text, text2, literal, form, params;
    std::optional<std::string> F1, F2;
    Int bound = kDefaultBound, j = 0, k = 0;
    bool emit_presentations = false;

    auto* inv = app.add_subcommand("invariants", "chi, sigma, c1^2, -kappa and its genus for a summand");
    inv->add_option("manifold", text, "e.g. CP2#9, S2xS2, S2xT2#3, S2~xT2")->required();

    auto* cls = app.add_subcommand("classify", "Classify the sum of two summands along F1 = F2");
    cls->add_option("X1", text, "first summand")->required();
    cls->add_option("X2", text2, "second summand")->required();
    cls->add_option("--F1", F1, "class of F1 as [c1,...] (default: -kappa)");
    cls->add_option("--F2", F2, "class of F2 as [c1,...] (default: -kappa)");
    cls->add_option("--bound", bound, "gluing parameter bound for T2-bundle rows")->capture_default_str();

    auto* nf = app.add_subcommand("normalform", "Reduce a bundle M(A,B;v) to its table family");
    nf->add_option("bundle", literal, "M([[a,b],[c,d]],[[e,f],[g,h]];(m,n))")->required();

    auto* hom = app.add_subcommand("h1", "First homology of a bundle M(A,B;v)");
    hom->add_option("bundle", literal, "M([[a,b],[c,d]],[[e,f],[g,h]];(m,n))")->required();

    auto* glue = app.add_subcommand("glue", "Glue Y_j to Y_k with normalized gluing data");
    glue->add_option("--j", j, "complement of X1 (0 or 1)")->required();
    glue->add_option("--k", k, "complement of X2 (0 or 1)")->required();
    glue->add_option("--form", form, "even or odd")->required()->check(CLI::IsMember({"even", "odd"}));
    glue->add_option("--params", params, "b,c,d,e,f (even) or a,b,d,e,f (odd)")->required();

    auto* en = app.add_subcommand("enumerate", "Enumerate the gluing grid and collect table families");
    en->add_option("--j", j, "complement of X1 (0 or 1)")->required();
    en->add_option("--k", k, "complement of X2 (0 or 1)")->required();
    en->add_option("--bound", bound, "parameter bound")->capture_default_str();
    en->add_flag("--emit-presentations", emit_presentations, "print every grid point with its presentation");

    auto* invol = app.add_subcommand("involution", "A^-1 tau A tau for tau a half translation");
    invol->add_option("matrix", literal, "[[a,b],[c,d]]")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        app.exit(e, err, err);
        return kExitParse;
    }

    Emitter em(out, format == "records");
    try {
        if (*inv)
            return cmd_invariants(text, em);
        if (*cls)
            return cmd_classify(text, text2, F1, F2, bound, em);
        if (*nf)
            return cmd_normalform(literal, em);
        if (*hom)
            return cmd_h1(literal, em);
        if (*glue)
            return cmd_glue(j, k, form, params, em);
        if (*en)
            return cmd_enumerate(j, k, bound, emit_presentations, em);
        if (*invol)
            return cmd_involution(literal, em);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitParse;
}

} // namespace kodsum::cli
