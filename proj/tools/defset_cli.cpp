// defset: command-line front end.
//
//   defset construct --family paley --p 7 --m 1
//   defset code --family hkm:1 --expect thm-HKMcodes
//   defset walsh --func 1@3 --m 5
//   defset verify-paper --case glynn2-m9
//
// Exit status: 0 success, 1 usage or input error, 2 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defset/defset.hpp"

namespace {

using namespace defset;

constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct Globals {
    std::optional<std::uint32_t> p;
    std::optional<unsigned> m;
    std::string modulus;
    std::optional<std::string> u;
    unsigned max_field_bits = FieldLimits{}.max_field_bits;
    std::uint64_t max_work = CodeLimits{}.max_work;
    bool json = false;

    FamilyOptions family_options() const {
        FamilyOptions o;
        o.p = p;
        o.m = m;
        if (!modulus.empty()) o.modulus = parse_modulus(modulus);
        o.u = u;
        o.limits.max_field_bits = max_field_bits;
        return o;
    }
    CodeLimits code_limits() const { return {max_work, 0}; }
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string field_name(const Field& F) { return "GF(" + std::to_string(F.p()) + "^" + std::to_string(F.m()) + ")"; }

// ---------------------------------------------------------------------------

int cmd_construct(const Globals& g, const std::string& spec, bool dlog, bool classify) {
    const Family fam = parse_family(spec, g.family_options());
    const Field& F = fam.set.field;
    std::vector<std::uint64_t> shown;
    for (auto e : fam.set.elems) shown.push_back(dlog ? F.dlog(e) : e.index);
    std::optional<std::string> design;
    if (classify) design = to_string(classify_design(AbelianGroup::additive(F), fam.set.indices()));
    if (g.json) {
        Json j{{"family", spec},
               {"p", F.p()},
               {"m", F.m()},
               {"modulus", format_modulus(F.modulus())},
               {"size", fam.set.size()},
               {dlog ? "dlog" : "elements", shown}};
        if (design) j["design"] = *design;
        print(j);
    } else {
        std::cout << spec << " over " << field_name(F) << ", size " << fam.set.size() << '\n';
        std::cout << (dlog ? "dlog: " : "elements: ") << '{';
        for (std::size_t i = 0; i < shown.size(); ++i) std::cout << (i ? "," : "") << shown[i];
        std::cout << "}\n";
        if (design) std::cout << "design (additive): " << *design << '\n';
    }
    return 0;
}

int cmd_analyze_design(const Globals& g, const std::string& spec, const std::string& group) {
    const Family fam = parse_family(spec, g.family_options());
    const Field& F = fam.set.field;
    std::optional<AbelianGroup> G;
    std::vector<std::uint64_t> D;
    if (group == "additive") {
        G = AbelianGroup::additive(F);
        D = fam.set.indices();
    } else if (group.rfind("cyclic", 0) == 0) {
        std::uint64_t n = F.q() - 1;
        if (group.size() > 6) {
            if (group[6] != ':') throw Error(ErrorCode::ParseError, "group must be additive, cyclic or cyclic:N");
            n = std::stoull(group.substr(7));
        }
        if (n == 0 || (F.q() - 1) % n != 0) throw Error(ErrorCode::NotDivisor, "cyclic quotient order must divide q-1");
        G = AbelianGroup::cyclic(n);
        D = to_cyclic(F, fam.set.elems, n);
    } else {
        throw Error(ErrorCode::ParseError, "group must be additive, cyclic or cyclic:N");
    }
    const auto cls = classify_design(*G, D);
    const auto spectrum = difference_spectrum(*G, D);
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::size_t x = 1; x < spectrum.size(); ++x) ++hist[spectrum[x]];
    if (g.json) {
        Json h = Json::object();
        for (auto [v, c] : hist) h[std::to_string(v)] = c;
        print(Json{{"family", spec}, {"group", group}, {"order", G->order()}, {"size", D.size()},
                   {"class", to_string(cls)}, {"difference_histogram", h}});
    } else {
        std::cout << spec << " in " << group << " group of order " << G->order() << ", size " << D.size() << '\n';
        std::cout << "class: " << to_string(cls) << '\n';
        std::cout << "diff values over x != 0:";
        for (auto [v, c] : hist) std::cout << ' ' << v << ":" << c;
        std::cout << '\n';
    }
    return 0;
}

int cmd_walsh(const Globals& g, const std::string& expr) {
    FamilyOptions o = g.family_options();
    if (!o.p) o.p = 2;
    if (*o.p != 2) throw Error(ErrorCode::PreconditionFailed, "walsh needs p = 2");
    if (!o.m) throw Error(ErrorCode::PreconditionFailed, "walsh needs --m");
    const Field F(2, *o.m, o.modulus, o.limits);
    std::optional<Elem> u;
    if (o.u) u = parse_coefficient(F, *o.u);
    const FuncSpec f = parse_funcspec(F, expr, FuncTarget::Trace, u);
    const auto s = walsh_transform(F, f);
    const auto cls = classify_spectrum(s);
    std::optional<unsigned> rank;
    try {
        rank = quadratic_rank(F, f).rank;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotQuadraticForm) throw;
    }
    if (g.json) {
        Json h = Json::object();
        for (auto [v, c] : s.histogram()) h[std::to_string(v)] = c;
        Json j{{"function", to_string(F, f)}, {"m", F.m()}, {"values", h}, {"class", to_string(cls.kind)},
               {"n_f", cls.support_size}};
        if (cls.kind == SpectralKind::Plateaued) j["amplitude"] = cls.amplitude;
        if (rank) j["rank"] = *rank;
        print(j);
    } else {
        std::cout << to_string(F, f) << " on " << field_name(F) << '\n';
        std::cout << "values:";
        for (auto [v, c] : s.histogram()) std::cout << ' ' << v << ":" << c;
        std::cout << "\nclass: " << to_string(cls.kind);
        if (cls.kind == SpectralKind::Plateaued) std::cout << " (amplitude " << cls.amplitude << ")";
        std::cout << "\nn_f: " << cls.support_size << '\n';
        if (rank) std::cout << "rank: " << *rank << '\n';
    }
    return 0;
}

/// Fills the side data a theorem needs from the family itself.
PredictionParams derive_params(const Family& fam, const std::string& theorem) {
    const Field& F = fam.set.field;
    PredictionParams q;
    q.p = F.p();
    q.m = F.m();
    q.h = fam.h;
    q.n_f = fam.set.size();
    if (theorem == "thm-qfcodes") {
        if (!fam.func || fam.kind != "qf-image") throw Error(ErrorCode::PreconditionFailed, "thm-qfcodes needs a qf-image family");
        const auto e = eto1_check(F, *fam.func);
        if (!e) throw Error(ErrorCode::PreconditionFailed, "thm-qfcodes: f is not e-to-1 on GF(q)*");
        q.e = *e;
        q.r = quadratic_rank(F, *fam.func).rank;
    }
    if (theorem == "thm-CodeQBFs") {
        if (!fam.func || fam.kind != "bool") throw Error(ErrorCode::PreconditionFailed, "thm-CodeQBFs needs a bool family");
        q.r = quadratic_rank(F, *fam.func).rank;
        q.fhat0 = walsh_transform(F, *fam.func).values.at(0);
    }
    return q;
}

int cmd_code(const Globals& g, const std::string& spec, const std::string& expect) {
    const Family fam = parse_family(spec, g.family_options());
    const DefiningSetCode C(fam.set);
    const auto E = weight_enumerator(C, g.code_limits());
    const auto W = dual_distance_witness(C);
    std::optional<std::uint64_t> d;
    std::optional<GriesmerStatus> gs;
    std::optional<PlessReport> pless;
    if (E.k >= 1) {
        d = minimum_distance(E);
        gs = griesmer_check(E.n, E.k, *d, E.p);
        pless = pless_moment_check(E, W);
    }
    std::optional<Prediction> pred;
    if (!expect.empty() && expect != "none") pred = predicted_enumerator(expect, derive_params(fam, expect));
    const bool match = !pred || pred->matches(E);

    if (g.json) {
        Json j{{"family", spec}, {"enumerator", to_json(E)}};
        j["d"] = d ? Json(*d) : Json(nullptr);
        j["griesmer"] = gs ? Json(to_string(*gs)) : Json(nullptr);
        j["dual_distance"] = W.at_least_3 ? ">=3" : W.at_least_2 ? ">=2" : "1";
        if (pless) {
            Json pj{{"count", pless->count_ok}};
            if (pless->first_moment) pj["first"] = *pless->first_moment;
            if (pless->second_moment) pj["second"] = *pless->second_moment;
            j["pless"] = pj;
        }
        if (pred)
            j["expect"] = Json{{"theorem", expect}, {"predicted", to_string(*pred)}, {"verdict", match ? "pass" : "fail"}};
        print(j);
    } else {
        const Field& F = fam.set.field;
        std::cout << spec << " over " << field_name(F) << '\n';
        std::cout << "parameters: [" << E.n << "," << E.k << "," << (d ? std::to_string(*d) : "-") << "]\n";
        std::cout << "enumerator: " << to_polynomial(E.counts) << '\n';
        if (gs) std::cout << "griesmer: " << to_string(*gs) << '\n';
        std::cout << "dual distance: " << (W.at_least_3 ? ">=3" : W.at_least_2 ? ">=2" : "1") << '\n';
        if (pless) {
            std::cout << "pless: count " << (pless->count_ok ? "ok" : "FAIL");
            if (pless->first_moment) std::cout << ", first " << (*pless->first_moment ? "ok" : "FAIL");
            if (pless->second_moment) std::cout << ", second " << (*pless->second_moment ? "ok" : "FAIL");
            std::cout << '\n';
        }
        if (pred) {
            std::cout << "expect " << expect << ": " << to_string(*pred) << '\n';
            std::cout << "verdict: " << (match ? "pass" : "fail") << '\n';
        }
    }
    return match ? 0 : kMismatch;
}

int cmd_export_gen(const Globals& g, const std::string& spec, const std::string& out) {
    const Family fam = parse_family(spec, g.family_options());
    const DefiningSetCode C(fam.set);
    if (out.empty() || out == "-") {
        write_generator_matrix(std::cout, C);
    } else {
        std::ofstream os(out);
        if (!os) throw Error(ErrorCode::PreconditionFailed, "cannot open " + out);
        write_generator_matrix(os, C);
    }
    return 0;
}

int cmd_verify(const Globals& g, const std::string& filter) {
    if (!filter.empty()) {
        bool any = false;
        for (const auto& c : verify_cases()) any = any || c.id.rfind(filter, 0) == 0;
        if (!any) throw Error(ErrorCode::UnknownKind, "no case matches '" + filter + "'");
    }
    const auto reports = run_cases(filter);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.verdict != Verdict::Fail;
    if (g.json) {
        Json arr = Json::array();
        for (const auto& r : reports) {
            Json cmp = Json::array();
            for (const auto& c : r.comparisons)
                cmp.push_back(Json{{"what", c.what}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
            arr.push_back(Json{{"case_id", r.case_id},
                               {"criterion", r.criterion},
                               {"verdict", to_string(r.verdict)},
                               {"reason", r.reason},
                               {"seconds", r.seconds},
                               {"comparisons", cmp},
                               {"notes", r.notes}});
        }
        print(Json{{"cases", arr}, {"ok", ok}});
    } else {
        std::cout << std::left << std::setw(22) << "case" << std::setw(6) << "crit" << std::setw(9) << "verdict"
                  << std::setw(10) << "seconds" << "detail\n";
        for (const auto& r : reports) {
            std::cout << std::setw(22) << r.case_id << std::setw(6) << r.criterion << std::setw(9) << to_string(r.verdict)
                      << std::setw(10) << std::fixed << std::setprecision(3) << r.seconds;
            if (r.verdict == Verdict::Fail)
                std::cout << r.reason;
            else if (r.comparisons.size() <= 3)
                std::cout << r.actual();
            else
                std::cout << r.comparisons.size() << " checks";
            std::cout << '\n';
            for (const auto& n : r.notes) std::cout << "    " << n << '\n';
            if (r.verdict == Verdict::Fail)
                for (const auto& c : r.comparisons)
                    if (!c.ok) std::cout << "    " << c.what << ": expected " << c.expected << ", got " << c.actual << '\n';
        }
        std::cout << reports.size() << " cases, " << (ok ? "all pass" : "FAILURES") << '\n';
    }
    return ok ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Defining-set codes: construction, enumeration and verification"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--p", g.p, "field characteristic");
    app.add_option("--m", g.m, "extension degree");
    app.add_option("--modulus", g.modulus, "primitive modulus, constant term first, e.g. 1,1,0,1");
    app.add_option("--u", g.u, "value of the parameter u in term lists, e.g. a or a^5");
    app.add_option("--max-field-bits", g.max_field_bits, "field size budget (q <= 2^bits)")->capture_default_str();
    app.add_option("--max-work", g.max_work, "enumeration budget q * n")->capture_default_str();
    app.add_flag("--json", g.json, "JSON output");

    std::string family, func, expect, out, group = "additive", filter;
    bool dlog = false, classify = false;

    auto* construct = app.add_subcommand("construct", "build a defining set");
    construct->add_option("--family", family, "family spec")->required();
    construct->add_flag("--dlog", dlog, "print discrete logarithms instead of indices");
    construct->add_flag("--classify", classify, "classify as a design in the additive group");

    auto* analyze = app.add_subcommand("analyze-design", "difference function and design class");
    analyze->add_option("--family", family, "family spec")->required();
    analyze->add_option("--group", group, "additive, cyclic or cyclic:N")->capture_default_str();

    auto* walsh = app.add_subcommand("walsh", "Walsh spectrum of a trace function");
    walsh->add_option("--func", func, "term list c@e,...")->required();

    auto* code = app.add_subcommand("code", "enumerate the code of a defining set");
    code->add_option("--family", family, "family spec")->required();
    code->add_option("--expect", expect, "theorem id to compare against, or none");

    auto* gen = app.add_subcommand("export-gen", "write the generator matrix");
    gen->add_option("--family", family, "family spec")->required();
    gen->add_option("--out", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify-paper", "run the reproduction cases");
    verify->add_option("--case", filter, "case id or id prefix");

    for (auto* sub : {construct, analyze, walsh, code, gen, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*construct) return cmd_construct(g, family, dlog, classify);
        if (*analyze) return cmd_analyze_design(g, family, group);
        if (*walsh) return cmd_walsh(g, func);
        if (*code) return cmd_code(g, family, expect);
        if (*gen) return cmd_export_gen(g, family, out);
        if (*verify) return cmd_verify(g, filter);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
