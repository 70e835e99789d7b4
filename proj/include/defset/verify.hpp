#pragma once

// Registry of reproducible cases: each one rebuilds a family, enumerates its
// code or analyses its design/spectrum, and compares with the closed form.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "defset/boolfn.hpp"
#include "defset/code.hpp"
#include "defset/cyclotomic.hpp"
#include "defset/designs.hpp"
#include "defset/field.hpp"
#include "defset/funcspec.hpp"
#include "defset/predict.hpp"

namespace defset {

enum class Verdict { Pass, Fail, Skipped };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

struct Comparison {
    std::string what;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct CaseReport {
    std::string case_id;
    int criterion = 0;
    Verdict verdict = Verdict::Pass;
    std::string reason;
    double seconds = 0;
    std::vector<Comparison> comparisons;
    std::vector<std::string> notes;

    std::string expected() const { return join(true); }
    std::string actual() const { return join(false); }

private:
    std::string join(bool exp) const {
        std::string s;
        for (const auto& c : comparisons) {
            if (!s.empty()) s += "; ";
            s += c.what + "=" + (exp ? c.expected : c.actual);
        }
        return s;
    }
};

namespace detail {

inline std::string show(const std::string& s) { return s; }
inline std::string show(const char* s) { return s; }
inline std::string show(bool b) { return b ? "true" : "false"; }
template <class T>
    requires std::is_integral_v<T>
std::string show(T v) {
    return std::to_string(v);
}
inline std::string show(const std::map<std::uint64_t, std::uint64_t>& m) { return to_polynomial(m); }
inline std::string show(const std::map<std::int64_t, std::uint64_t>& m) {
    std::string s = "{";
    for (auto [k, v] : m) s += (s.size() > 1 ? "," : "") + std::to_string(k) + ":" + std::to_string(v);
    return s + "}";
}
template <class T>
std::string show(const std::set<T>& v) {
    std::string s = "{";
    for (const auto& x : v) s += (s.size() > 1 ? "," : "") + show(x);
    return s + "}";
}
inline std::string show(const BigInt& v) { return v.str(); }
inline std::string show(const WeightEnumerator& E) {
    return "[" + std::to_string(E.n) + "," + std::to_string(E.k) + "] " + to_polynomial(E.counts);
}

}  // namespace detail

/// Collects comparisons into a CaseReport.
class Recorder {
public:
    explicit Recorder(CaseReport& r) : r_(r) {}

    template <class T>
    bool compare(const std::string& what, const T& expected, const T& actual) {
        return push(what, detail::show(expected), detail::show(actual), expected == actual);
    }
    bool check(const std::string& what, bool ok, const std::string& detail = "") {
        return push(what, "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")"), ok);
    }
    void note(std::string s) { r_.notes.push_back(std::move(s)); }

private:
    bool push(const std::string& what, std::string e, std::string a, bool ok) {
        r_.comparisons.push_back({what, std::move(e), std::move(a), ok});
        if (!ok) {
            r_.verdict = Verdict::Fail;
            if (!r_.reason.empty()) r_.reason += "; ";
            r_.reason += what + " mismatch";
        }
        return ok;
    }
    CaseReport& r_;
};

struct VerifyCase {
    std::string id;
    int criterion = 0;
    std::string title;
    std::function<void(Recorder&)> run;
};

// ---------------------------------------------------------------------------
// Shared helpers

namespace detail {

inline std::string params(const WeightEnumerator& E) {
    return "[" + std::to_string(E.n) + "," + std::to_string(E.k) + "," +
           (E.k ? std::to_string(minimum_distance(E)) : std::string("-")) + "]";
}

inline std::string params(const Prediction& P) {
    return "[" + std::to_string(P.n) + "," + std::to_string(P.k) + "," + std::to_string(P.d) + "]";
}

/// Enumerates the code of D and checks it against P; also runs the moment
/// identities the dual-distance witness allows.
inline WeightEnumerator check_code(Recorder& rec, const DefiningSet& D, const Prediction& P) {
    const DefiningSetCode C(D);
    const WeightEnumerator E = weight_enumerator(C);
    rec.compare("parameters", params(P), params(E));
    if (P.has_distribution())
        rec.compare("enumerator", to_polynomial(P.counts), to_polynomial(E.counts));
    else {
        std::set<std::uint64_t> got;
        for (auto [w, a] : E.counts)
            if (w) got.insert(w);
        rec.check("weights within " + show(P.weights),
                  std::includes(P.weights.begin(), P.weights.end(), got.begin(), got.end()), show(got));
    }
    const auto W = dual_distance_witness(C);
    if (E.k >= 1) {
        const auto pr = pless_moment_check(E, W);
        rec.check("pless moments", pr.ok());
    }
    return E;
}

inline FuncSpec trace_form(std::vector<Term> terms) {
    std::vector<Term> kept;
    for (const auto& t : terms)
        if (!t.coeff.is_zero()) kept.push_back(t);
    return FuncSpec{std::move(kept), FuncTarget::Trace};
}

/// Quadratic Boolean functions Tr(sum_{i <= m/2} f_i x^{2^i+1}) with each
/// f_i drawn from {0, 1, alpha, alpha^2, ..., alpha^{extra}}, in mixed-radix
/// order of the coefficient tuple. The zero function is skipped.
inline void for_each_quadratic_boolean(const Field& F, unsigned extra, const std::function<bool(const FuncSpec&)>& visit) {
    const unsigned terms = F.m() / 2 + 1;
    std::vector<Elem> pool{F.zero(), F.one()};
    for (unsigned t = 1; t <= extra; ++t) pool.push_back(F.alpha_pow(t));
    std::vector<std::size_t> digit(terms, 0);
    while (true) {
        std::size_t i = 0;
        while (i < terms && ++digit[i] == pool.size()) digit[i++] = 0;
        if (i == terms) return;
        std::vector<Term> tt;
        for (unsigned k = 0; k < terms; ++k) tt.push_back({pool[digit[k]], (std::uint64_t{1} << k) + 1});
        if (!visit(trace_form(std::move(tt)))) return;
    }
}

inline std::map<std::int64_t, std::uint64_t> walsh_table_counts(unsigned m, unsigned r) {
    const std::int64_t amp = std::int64_t{1} << (m - r / 2);
    const std::uint64_t base = std::uint64_t{1} << (r - 1), side = std::uint64_t{1} << ((r - 2) / 2);
    std::map<std::int64_t, std::uint64_t> h;
    if ((std::uint64_t{1} << m) > (std::uint64_t{1} << r)) h[0] = (std::uint64_t{1} << m) - (std::uint64_t{1} << r);
    h[amp] = base + side;
    if (base > side) h[-amp] = base - side;
    return h;
}

/// Table multiset over nonzero w for a quadratic Boolean function.
inline std::map<std::uint64_t, std::uint64_t> qbf_table_multiset(unsigned m, unsigned r, std::int64_t fhat0) {
    const std::int64_t amp = std::int64_t{1} << (m - r / 2);
    const std::int64_t n_f = (std::int64_t{1} << (m - 1)) - fhat0 / 2, s = amp / 2;
    const int e1 = fhat0 == 0, e2 = fhat0 == amp, e3 = fhat0 == -amp;
    std::map<std::uint64_t, std::uint64_t> h;
    auto add = [&](std::int64_t w, std::int64_t a) {
        if (a > 0) h[static_cast<std::uint64_t>(w)] += static_cast<std::uint64_t>(a);
    };
    add(n_f / 2, (std::int64_t{1} << m) - (std::int64_t{1} << r) - e1);
    add((n_f + s) / 2, (std::int64_t{1} << (r - 1)) + (std::int64_t{1} << ((r - 2) / 2)) - e2);
    add((n_f - s) / 2, (std::int64_t{1} << (r - 1)) - (std::int64_t{1} << ((r - 2) / 2)) - e3);
    return h;
}

inline DefiningSet with_elems(const DefiningSet& D, std::vector<Elem> elems) {
    DefiningSet out = D;
    out.elems = std::move(elems);
    return out;
}

/// Deterministic sample of `count` nonzero elements spread over the log range.
inline std::vector<Elem> sample_nonzero(const Field& F, std::size_t count) {
    std::vector<Elem> out;
    const std::uint64_t n = F.q() - 1;
    if (count >= n) {
        for (std::uint32_t x = 1; x < F.q(); ++x) out.push_back(Elem(x));
        return out;
    }
    std::uint64_t step = n / count;
    while (std::gcd(step, n) != 1) ++step;
    for (std::size_t i = 0; i < count; ++i) out.push_back(F.alpha_pow((i * step + 1) % n));
    return out;
}

// ---------------------------------------------------------------------------
// Family runners

inline void run_skew(Recorder& rec, std::uint32_t p, unsigned m) {
    const Field F(p, m);
    const DefiningSet D = paley_set(F);
    rec.check("paley set is skew", is_skew_set(F, D.elems));
    const Prediction P = predict_skew(p, m);
    const auto E = check_code(rec, D, P);
    if (E.k >= 1)
        rec.compare("griesmer", std::string("meets"), to_string(griesmer_check(E.n, E.k, minimum_distance(E), p)));
}

inline void run_qr(Recorder& rec, std::uint32_t p, unsigned m) {
    const Field F(p, m);
    const FuncSpec sq = FuncSpec::monomial(F.one(), 2);
    const auto e = eto1_check(F, sq);
    rec.compare("e", std::string("2"), e ? std::to_string(*e) : std::string("none"));
    rec.compare("rank", m, quadratic_rank(F, sq).rank);
    const DefiningSet D = paley_set(F);
    rec.check("image of x^2 equals the squares", image_set(F, sq).elems == D.elems);
    check_code(rec, D, predict_quadratic_residue(p, m));
}

inline void run_qf(Recorder& rec, const Field& F, const FuncSpec& f, const std::string& label) {
    const auto e = eto1_check(F, f);
    rec.compare(label + " e", std::string("2"), e ? std::to_string(*e) : std::string("none"));
    if (!e) return;
    const unsigned r = quadratic_rank(F, f).rank;
    rec.note(label + ": rank " + std::to_string(r) + ", trace-form rank " +
             std::to_string(quadratic_rank(F, f.with_target(FuncTarget::Trace)).rank));
    const DefiningSet D = image_set(F, f);
    const Prediction P = predict_qf(F.p(), F.m(), *e, r);
    const auto E = weight_enumerator(DefiningSetCode(D));
    rec.compare(label + " enumerator (r=" + std::to_string(r) + ")", to_string(P), params(E) + " " + to_polynomial(E.counts));
}

inline FuncSpec cubic_form(const Field& F, Elem u) {
    // x^10 - u x^6 - u^2 x^2
    return FuncSpec{{{F.one(), 10}, {F.neg(u), 6}, {F.neg(F.mul(u, u)), 2}}, FuncTarget::Self};
}

inline void run_maschietti_ds(Recorder& rec, unsigned m) {
    const Field F(2, m);
    const std::uint64_t v = F.q() - 1;
    const DifferenceSetParams want{v, ipow(2, m - 1) - 1, ipow(2, m - 2) - 1};
    for (auto c : {HyperovalCase::Singer, HyperovalCase::Segre, HyperovalCase::GlynnI, HyperovalCase::GlynnII}) {
        const DefiningSet D = maschietti_set(F, c);
        const auto name = to_string(c);
        rec.compare(name + " size", want.k, static_cast<std::uint64_t>(D.size()));
        const auto cyc = to_cyclic(F, D.elems, v);
        rec.compare(name + " design", to_string(DesignClass(want)), to_string(classify_design(AbelianGroup::cyclic(v), cyc)));
    }
}

inline void run_hyperoval(Recorder& rec, unsigned m, HyperovalCase c) {
    const Field F(2, m);
    const DefiningSet D = maschietti_set(F, c);
    check_code(rec, D, predict_hyperoval(m));
    const auto [i, j] = hyperoval_exponent_pair(m, c);
    const auto rep = hyperoval_spectrum_check(F, i, j);
    rec.check("walsh spectrum of Im(Gamma)", rep.ok(), rep.ok() ? "" : rep.violations.front());
    // fhat(b) = -2 (chi_b(D) + 1), D = Im(Gamma) minus 0.
    std::vector<std::uint8_t> tt(F.q(), 0);
    tt[0] = 1;
    for (auto d : D.elems) tt[d.index] = 1;
    const auto s = walsh_from_truth_table(F, tt);
    bool ok = true;
    for (std::uint32_t b = 1; b < F.q() && ok; ++b) {
        const auto chi = char_sum(F, D.elems, Elem(b)).to_integer();
        ok = chi && BigInt(s.values[b]) == -2 * (*chi + 1);
    }
    rec.check("fhat(b) = -2(chi_b(D)+1)", ok);
}

inline void run_glynn2(Recorder& rec, unsigned m) {
    const Field F(2, m);
    const DefiningSet D = maschietti_set(F, HyperovalCase::GlynnII);
    const auto E = check_code(rec, D, reported_glynn2(m));
    if (m >= 9) {
        const Prediction C = glynn2_conjecture(m);
        std::set<std::uint64_t> got;
        for (auto [w, a] : E.counts)
            if (w) got.insert(w);
        rec.compare("conjectured weights", C.weights, got);
        rec.compare("conjectured d", C.d, E.k ? minimum_distance(E) : 0);
    }
}

/// First quadratic Boolean function (in search order) satisfying `want`.
inline std::optional<FuncSpec> search_quadratic(const Field& F, unsigned extra,
                                                const std::function<bool(const FuncSpec&, const WalshSpectrum&)>& want) {
    std::optional<FuncSpec> hit;
    for_each_quadratic_boolean(F, extra, [&](const FuncSpec& f) {
        if (f.terms.empty()) return true;
        const auto s = walsh_transform(F, f);
        if (want(f, s)) {
            hit = f;
            return false;
        }
        return true;
    });
    return hit;
}

inline void run_bent(Recorder& rec, unsigned m) {
    const Field F(2, m);
    const std::int64_t amp = std::int64_t{1} << (m / 2);
    const auto f = search_quadratic(F, 3, [&](const FuncSpec& g, const WalshSpectrum& s) {
        return s.values[0] == amp && quadratic_rank(F, g).rank == m;
    });
    if (!rec.check("full-rank quadratic with fhat(0)=+2^{m/2} found", f.has_value())) return;
    rec.note("f = " + to_string(F, *f));
    const auto s = walsh_transform(F, *f);
    rec.compare("class", std::string("Bent"), to_string(classify_spectrum(s).kind));
    const DefiningSet D = boolean_support(F, *f);
    const std::uint64_t n_f = ipow(2, m - 1) - ipow(2, (m - 2) / 2);
    rec.compare("n_f", n_f, static_cast<std::uint64_t>(D.size()));
    check_code(rec, D, predict_bent(m, n_f));
    const DifferenceSetParams menon{ipow(2, m), n_f, ipow(2, m - 2) - ipow(2, (m - 2) / 2)};
    std::vector<std::uint64_t> idx = D.indices();
    rec.compare("support design", to_string(DesignClass(menon)),
                to_string(classify_design(AbelianGroup::additive(F), idx)));
}

inline void run_semibent(Recorder& rec, unsigned m) {
    const Field F(2, m);
    const std::int64_t amp = std::int64_t{1} << ((m + 1) / 2);
    const FuncSpec gold = FuncSpec::monomial(F.one(), 3, FuncTarget::Trace);
    const auto gs = walsh_transform(F, gold);
    rec.note("Tr(x^3): fhat(0) = " + std::to_string(gs.values[0]) + ", rank " +
             std::to_string(quadratic_rank(F, gold).rank));
    std::optional<FuncSpec> f;
    if (gs.values[0] == amp)
        f = gold;
    else
        f = search_quadratic(F, 3, [&](const FuncSpec& g, const WalshSpectrum& s) {
            return s.values[0] == amp && quadratic_rank(F, g).rank == m - 1;
        });
    if (!rec.check("rank m-1 quadratic with fhat(0)=+2^{(m+1)/2} found", f.has_value())) return;
    rec.note("f = " + to_string(F, *f));
    const auto s = walsh_transform(F, *f);
    rec.compare("class", std::string("Semibent"), to_string(classify_spectrum(s).kind));
    const DefiningSet D = boolean_support(F, *f);
    const std::uint64_t n_f = ipow(2, m - 1) - ipow(2, (m - 1) / 2);
    rec.compare("n_f", n_f, static_cast<std::uint64_t>(D.size()));
    const DefiningSetCode C(D);
    rec.check("dual distance >= 3", dual_distance_witness(C).at_least_3);
    check_code(rec, D, predict_semibent(m, n_f));
}

inline void run_almost_bent(Recorder& rec, unsigned m) {
    const Field F(2, m);
    const FuncSpec g = FuncSpec::monomial(F.one(), 3);
    rec.compare("almost bent", true, is_almost_bent(F, g));
    const std::int64_t l10 = lambda_spectrum(F, g, F.one(), F.zero());
    const auto sizes = support_size_prediction(SupportKind::AlmostBentTrace, m, l10);
    const DefiningSet D = boolean_support(F, g.with_target(FuncTarget::Trace));
    rec.compare("n_f", *sizes.begin(), static_cast<std::int64_t>(D.size()));
    rec.note("lambda_g(1,0) = " + std::to_string(l10));
    check_code(rec, D, predict_almost_bent(m, D.size()));
}

inline void run_qbf_sample(Recorder& rec, unsigned m, unsigned rank, std::size_t per_bucket, std::size_t minimum) {
    const Field F(2, m);
    std::map<std::pair<unsigned, std::int64_t>, std::size_t> buckets;
    std::size_t tested = 0;
    std::set<std::int64_t> signs;
    for_each_quadratic_boolean(F, 4, [&](const FuncSpec& f) {
        const unsigned r = quadratic_rank(F, f).rank;
        if (r != rank) return true;
        const auto s = walsh_transform(F, f);
        const std::int64_t f0 = s.values[0];
        auto& b = buckets[{r, f0 > 0 ? 1 : f0 < 0 ? -1 : 0}];
        if (b >= per_bucket) return true;
        ++b;
        ++tested;
        signs.insert(f0 > 0 ? 1 : f0 < 0 ? -1 : 0);
        const std::string tag = to_string(F, f) + " r=" + std::to_string(r) + " fhat0=" + std::to_string(f0);
        rec.compare("walsh counts " + tag, show(walsh_table_counts(m, r)), show(s.histogram()));
        const DefiningSet D = boolean_support(F, f);
        const auto E = weight_enumerator(DefiningSetCode(D));
        auto over_x = E.element_histogram();
        rec.compare("weights over w!=0 " + tag, show(qbf_table_multiset(m, r, f0)), show(over_x));
        const Prediction P = predict_quadratic_boolean(m, r, f0);
        rec.compare("code " + tag, to_string(P), params(E) + " " + to_polynomial(E.counts));
        if (E.k != m) rec.note("dimension " + std::to_string(E.k) + " < m for " + tag);
        return true;
    });
    rec.check("sample size >= " + std::to_string(minimum), tested >= minimum, std::to_string(tested));
    const std::set<std::int64_t> all_signs = rank == m ? std::set<std::int64_t>{-1, 1} : std::set<std::int64_t>{-1, 0, 1};
    rec.compare("signs of fhat(0) covered", all_signs, signs);
}

inline void run_hkm_code(Recorder& rec, unsigned h) {
    const DefiningSet D = hkm_set(h);
    const auto E = check_code(rec, D, predict_hkm(h));
    rec.check("dual distance >= 3", dual_distance_witness(DefiningSetCode(D)).at_least_3);
    (void)E;
}

inline FuncSpec q_form(const Field& F, Elem u, unsigned h) {
    // Q_u(x) = Tr(u x^{e+1} + x^2), e = 3^h
    std::vector<Term> t{{F.one(), 2}};
    if (!u.is_zero()) t.push_back({u, ipow(3, h) + 1});
    return FuncSpec{std::move(t), FuncTarget::Trace};
}

/// HKM supporting lemmas on the given u and b samples.
inline void run_hkm_lemmas(Recorder& rec, unsigned h, const std::vector<Elem>& us, const std::vector<Elem>& bs) {
    const Field F(3, 3 * h);
    const unsigned m = F.m();
    const std::uint64_t e1 = ipow(3, h) + 1;
    rec.compare("rank Q_1", m, quadratic_rank(F, q_form(F, F.one(), h)).rank);

    std::set<unsigned> lf08_ranks;
    bool dingcs = true;
    for (Elem u : us) {
        const unsigned r = quadratic_rank(F, q_form(F, u, h)).rank;
        lf08_ranks.insert(r);
        const Elem w = F.sub(F.neg(F.one()), u);  // -1 - u
        const unsigned r2 = quadratic_rank(F, q_form(F, w, h)).rank;
        dingcs = dingcs && (r == m || r2 == m);
    }
    const std::set<unsigned> allowed{m, m - h, m - 2 * h};
    rec.check("rank Q_u in {m, m-h, m-2h}",
              std::includes(allowed.begin(), allowed.end(), lf08_ranks.begin(), lf08_ranks.end()), show(lf08_ranks));
    rec.check("Q_u or Q_{-1-u} has rank m", dingcs);

    bool lf081 = true;
    for (Elem b : bs) lf081 = lf081 && quadratic_rank(F, FuncSpec::monomial(b, e1, FuncTarget::Trace)).rank == m;
    rec.check("rank Tr(b x^{e+1}) = m", lf081);

    const DefiningSet D = hkm_set(F, h);
    std::vector<Elem> d0 = D.elems;
    for (auto d : D.elems) d0.push_back(F.neg(d));
    std::sort(d0.begin(), d0.end());
    const auto zeros = zero_set(F, hkm_function(F, h));
    std::vector<Elem> zero_nonzero;
    for (auto z : zeros)
        if (!z.is_zero()) zero_nonzero.push_back(z);
    rec.check("D, -D, {0} partition f^{-1}(0)",
              zero_nonzero == d0 && std::adjacent_find(d0.begin(), d0.end()) == d0.end() &&
                  std::find(zeros.begin(), zeros.end(), F.zero()) != zeros.end());

    const std::int64_t base = static_cast<std::int64_t>(ipow(3, m - 2)), t = static_cast<std::int64_t>(ipow(3, 2 * (h - 1)));
    const std::set<std::vector<std::uint64_t>> triples{
        {std::uint64_t(base), std::uint64_t(base), std::uint64_t(base)},
        {std::uint64_t(base + 2 * t), std::uint64_t(base - t), std::uint64_t(base - t)},
        {std::uint64_t(base - 2 * t), std::uint64_t(base + t), std::uint64_t(base + t)}};
    const std::int64_t c = static_cast<std::int64_t>(ipow(3, 2 * h - 1));
    const std::set<std::int64_t> chi_allowed{-1, c - 1, -c - 1};
    bool july = true, ddd = true, chi1 = true;
    std::set<std::int64_t> chi_seen;
    for (Elem b : bs) {
        const auto N = joint_counts(F, zeros, b);
        july = july && (N[0] == std::uint64_t(base) || N[0] == std::uint64_t(base + 2 * t) || N[0] == std::uint64_t(base - 2 * t));
        ddd = ddd && triples.count(N);
        const auto chi = char_sum(F, d0, b).to_integer();
        chi1 = chi1 && chi && chi_allowed.count(static_cast<std::int64_t>(*chi));
        if (chi) chi_seen.insert(static_cast<std::int64_t>(*chi));
    }
    rec.check("N_(b,0) takes one of three values", july);
    rec.check("(N_(b,0), N_(b,1), N_(b,2)) in the three triples", ddd);
    rec.check("chi_1(b D_0) in {-1, +-3^{2h-1}-1}", chi1, show(chi_seen));
    rec.note("tested " + std::to_string(us.size()) + " u and " + std::to_string(bs.size()) + " b");
}

/// Quadratic trace forms Tr(c x^{p^i+p^j}) and two-term sums for the
/// character-sum lemma.
inline std::vector<FuncSpec> zd13_instances(const Field& F) {
    std::vector<std::uint64_t> exps;
    for (unsigned i = 0; i < F.m(); ++i)
        for (unsigned j = i; j < F.m(); ++j) exps.push_back(ipow(F.p(), i) + ipow(F.p(), j));
    const std::vector<Elem> coeffs{F.one(), F.alpha(), F.alpha_pow(2), F.from_int(-1)};
    std::vector<FuncSpec> out;
    for (auto e : exps)
        for (auto c : coeffs) out.push_back(FuncSpec::monomial(c, e, FuncTarget::Trace));
    for (std::size_t a = 0; a < exps.size(); ++a)
        for (std::size_t b = a + 1; b < exps.size(); ++b)
            out.push_back(FuncSpec{{{F.one(), exps[a]}, {F.alpha(), exps[b]}}, FuncTarget::Trace});
    return out;
}

inline void run_zd13(Recorder& rec, std::uint32_t p, unsigned m) {
    const Field F(p, m);
    std::size_t tested = 0, bad = 0;
    std::set<unsigned> ranks;
    std::string first_bad;
    for (const auto& f : zd13_instances(F)) {
        const unsigned r = quadratic_rank(F, f).rank;
        const auto vals = tabulate(F, f);
        CycInt total(p);
        for (std::uint32_t y = 1; y < p; ++y) {
            std::vector<std::uint32_t> scaled(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i) scaled[i] = vals[i] * y % p;
            total += exponential_sum(p, scaled);
        }
        const auto v = total.to_integer();
        bool ok = v.has_value();
        if (ok) {
            if (r % 2 == 1)
                ok = *v == 0;
            else {
                const BigInt mag = BigInt(p - 1) * ipow(p, m - r / 2);
                ok = *v == mag || *v == -mag;
            }
        }
        ++tested;
        ranks.insert(r);
        if (!ok && bad++ == 0) first_bad = to_string(F, f) + " r=" + std::to_string(r) + " sum=" + (v ? v->str() : total.to_string());
    }
    rec.check("Galois sum = +-(p-1)p^{m-r/2} or 0 on " + std::to_string(tested) + " forms", bad == 0, first_bad);
    rec.note("ranks seen " + show(ranks));
}

inline void charsum_agreement(Recorder& rec, const std::string& label, const DefiningSet& D, std::size_t sample) {
    const DefiningSetCode C(D);
    const Field& F = C.field();
    std::vector<Elem> xs;
    if (F.q() <= 243 || sample == 0)
        for (std::uint32_t x = 0; x < F.q(); ++x) xs.push_back(Elem(x));
    else {
        xs = sample_nonzero(F, sample);
        xs.push_back(F.zero());
    }
    std::size_t bad = 0;
    for (Elem x : xs)
        if (weight_via_charsum(C, x) != hamming_weight(codeword(C, x))) ++bad;
    rec.check(label + " charsum weight = direct weight on " + std::to_string(xs.size()) + " x", bad == 0,
              std::to_string(bad) + " disagree");
}

// ---------------------------------------------------------------------------
// Property suites

inline void run_invariance(Recorder& rec) {
    struct Item {
        std::string name;
        std::function<DefiningSet(const Field&)> make;
        std::uint32_t p;
        unsigned m;
    };
    const std::vector<Item> items{
        {"paley q27", [](const Field& F) { return paley_set(F); }, 3, 3},
        {"paley q81", [](const Field& F) { return paley_set(F); }, 3, 4},
        {"hkm h1", [](const Field& F) { return hkm_set(F, 1); }, 3, 3},
        {"segre m7", [](const Field& F) { return maschietti_set(F, HyperovalCase::Segre); }, 2, 7},
        {"glynn2 m7", [](const Field& F) { return maschietti_set(F, HyperovalCase::GlynnII); }, 2, 7},
        {"tr(x^3) m6", [](const Field& F) { return boolean_support(F, FuncSpec::monomial(F.one(), 3, FuncTarget::Trace)); }, 2, 6},
    };
    for (const auto& it : items) {
        const Field F(it.p, it.m);
        const DefiningSet D = it.make(F);
        const auto E = weight_enumerator(DefiningSetCode(D));
        std::vector<Elem> rev(D.elems.rbegin(), D.elems.rend());
        std::vector<Elem> rot = D.elems;
        std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(rot.size() / 3), rot.end());
        rec.compare(it.name + " reversed order", E.counts, weight_enumerator(DefiningSetCode(with_elems(D, rev))).counts);
        rec.compare(it.name + " rotated order", E.counts, weight_enumerator(DefiningSetCode(with_elems(D, rot))).counts);
        for (std::uint64_t t : {1u, 5u}) {
            std::vector<Elem> scaled;
            for (auto d : D.elems) scaled.push_back(F.mul(F.alpha_pow(t), d));
            rec.compare(it.name + " scaled by a^" + std::to_string(t), E.counts,
                        weight_enumerator(DefiningSetCode(make_defining_set(F, scaled))).counts);
        }
        const auto moduli = primitive_moduli(it.p, it.m, 3);
        for (std::size_t k = 1; k < moduli.size(); ++k) {
            const Field G(it.p, it.m, moduli[k]);
            rec.compare(it.name + " modulus " + std::to_string(k), E.counts,
                        weight_enumerator(DefiningSetCode(it.make(G))).counts);
        }
        rec.compare(it.name + " reference kernel", E, weight_enumerator_reference(DefiningSetCode(D)));
    }
}

inline void run_walsh_identities(Recorder& rec) {
    for (unsigned m : {3u, 4u, 5u, 6u, 7u, 8u}) {
        const Field F(2, m);
        const std::vector<FuncSpec> fs{
            FuncSpec::monomial(F.one(), 3, FuncTarget::Trace),
            FuncSpec::monomial(F.alpha(), 7, FuncTarget::Trace),
            FuncSpec{{{F.one(), 5}, {F.alpha_pow(3), 11}}, FuncTarget::Trace},
            FuncSpec::monomial(F.one(), 1, FuncTarget::Trace),
        };
        for (const auto& f : fs) {
            const auto s = walsh_transform(F, f);
            BigInt parseval = 0;
            for (auto v : s.values) parseval += BigInt(v) * v;
            const std::string tag = to_string(F, f) + " m=" + std::to_string(m);
            rec.compare("parseval " + tag, BigInt(BigInt(1) << (2 * m)), parseval);
            const auto tt = truth_table(F, f);
            const auto back = inverse_walsh(F, s);
            bool ok = back.size() == tt.size();
            for (std::size_t i = 0; ok && i < tt.size(); ++i) ok = back[i] == (tt[i] ? -1 : 1);
            rec.check("inverse transform " + tag, ok);
            const std::int64_t n_f = static_cast<std::int64_t>(std::count(tt.begin(), tt.end(), 1));
            rec.compare("fhat(0) = 2^m - 2 n_f " + tag, (std::int64_t{1} << m) - 2 * n_f, s.values[0]);
        }
    }
}

inline void run_pless_all(Recorder& rec) {
    std::vector<DefiningSet> sets;
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}})
        sets.push_back(paley_set(Field(p, m)));
    sets.push_back(hkm_set(1));
    for (unsigned m : {5u, 7u})
        for (auto c : {HyperovalCase::Singer, HyperovalCase::Segre, HyperovalCase::GlynnI, HyperovalCase::GlynnII})
            sets.push_back(maschietti_set(Field(2, m), c));
    {
        const Field F(2, 6);
        sets.push_back(boolean_support(F, FuncSpec::monomial(F.one(), 3, FuncTarget::Trace)));
        sets.push_back(boolean_support(F, FuncSpec{{{F.one(), 3}, {F.alpha(), 5}}, FuncTarget::Trace}));
    }
    {
        const Field F(3, 3);
        sets.push_back(image_set(F, cubic_form(F, F.alpha())));
    }
    std::size_t checked_first = 0, checked_second = 0;
    for (const auto& D : sets) {
        const DefiningSetCode C(D);
        const auto E = weight_enumerator(C);
        const auto W = dual_distance_witness(C);
        const auto r = pless_moment_check(E, W);
        checked_first += r.first_moment.has_value();
        checked_second += r.second_moment.has_value();
        rec.check("moments " + D.family + " over GF(" + std::to_string(D.field.q()) + ")", r.ok());
    }
    rec.note("first moment checked on " + std::to_string(checked_first) + ", second on " + std::to_string(checked_second));
}

inline void run_complement(Recorder& rec) {
    auto check = [&](const std::string& name, const AbelianGroup& G, const std::vector<std::uint64_t>& D) {
        const auto c = classify_design(G, D);
        const auto* ds = std::get_if<DifferenceSetParams>(&c);
        if (!rec.check(name + " is a difference set", ds != nullptr, to_string(c))) return;
        const DifferenceSetParams want{ds->v, ds->v - ds->k, ds->v - 2 * ds->k + ds->lambda};
        rec.compare(name + " complement", to_string(DesignClass(want)), to_string(classify_design(G, complement(G, D))));
    };
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {11, 1}, {19, 1}, {3, 3}}) {
        const Field F(p, m);
        check("paley q" + std::to_string(F.q()), AbelianGroup::additive(F), paley_set(F).indices());
    }
    for (unsigned m : {5u, 7u}) {
        const Field F(2, m);
        const auto D = maschietti_set(F, HyperovalCase::Segre);
        check("segre m" + std::to_string(m), AbelianGroup::cyclic(F.q() - 1), to_cyclic(F, D.elems, F.q() - 1));
    }
    {
        const Field F(3, 3);
        const auto D = hkm_set(F, 1);
        check("hkm h1", AbelianGroup::cyclic(13), to_cyclic(F, D.elems, 13));
    }
    {
        const Field F(2, 6);
        const auto f = search_quadratic(F, 3, [&](const FuncSpec& g, const WalshSpectrum& s) {
            return classify_spectrum(s).kind == SpectralKind::Bent && !g.terms.empty();
        });
        if (rec.check("bent function found for m=6", f.has_value()))
            check("bent support m6", AbelianGroup::additive(F), boolean_support(F, *f).indices());
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registry

inline const std::vector<VerifyCase>& verify_cases() {
    using namespace detail;
    static const std::vector<VerifyCase> cases = [] {
        std::vector<VerifyCase> v;
        for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {11, 1}, {19, 1}, {23, 1}, {3, 3}}) {
            const auto q = ipow(p, m);
            v.push_back({"skew-q" + std::to_string(q), 1, "Paley skew set code, q=" + std::to_string(q),
                         [p, m](Recorder& r) { run_skew(r, p, m); }});
        }
        for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {3, 4}, {5, 2}, {7, 2}, {3, 3}, {5, 3}})
            v.push_back({"qr-p" + std::to_string(p) + "m" + std::to_string(m), 2, "quadratic residue code",
                         [p, m](Recorder& r) { run_qr(r, p, m); }});
        v.push_back({"qf-gold-q27", 3, "image of x^4 over GF(27)", [](Recorder& r) {
                         const Field F(3, 3);
                         run_qf(r, F, FuncSpec::monomial(F.one(), 4), "x^4");
                     }});
        v.push_back({"qf-cubic-q27", 3, "image of x^10 - u x^6 - u^2 x^2 over GF(27), all u != 0", [](Recorder& r) {
                         const Field F(3, 3);
                         for (std::uint32_t u = 1; u < F.q(); ++u) run_qf(r, F, cubic_form(F, Elem(u)), "u=" + F.format(Elem(u)));
                     }});
        v.push_back({"qf-cubic-q243", 3, "image of x^10 - u x^6 - u^2 x^2 over GF(243), all u != 0", [](Recorder& r) {
                         const Field F(3, 5);
                         for (std::uint32_t u = 1; u < F.q(); ++u) run_qf(r, F, cubic_form(F, Elem(u)), "u=" + F.format(Elem(u)));
                     }});
        for (unsigned m : {5u, 7u})
            v.push_back({"maschietti-ds-m" + std::to_string(m), 4, "hyperoval difference sets",
                         [m](Recorder& r) { run_maschietti_ds(r, m); }});
        for (unsigned m : {5u, 7u, 9u})
            v.push_back({"segre-m" + std::to_string(m), 5, "Segre hyperoval code",
                         [m](Recorder& r) { run_hyperoval(r, m, HyperovalCase::Segre); }});
        for (unsigned m : {5u, 7u})
            v.push_back({"glynn1-m" + std::to_string(m), 5, "Glynn I hyperoval code",
                         [m](Recorder& r) { run_hyperoval(r, m, HyperovalCase::GlynnI); }});
        for (unsigned m : {5u, 7u, 9u, 11u})
            v.push_back({"glynn2-m" + std::to_string(m), 6, "Glynn II hyperoval code",
                         [m](Recorder& r) { run_glynn2(r, m); }});
        for (unsigned m : {4u, 6u, 8u})
            v.push_back({"bent-m" + std::to_string(m), 7, "bent support code", [m](Recorder& r) { run_bent(r, m); }});
        for (unsigned m : {5u, 7u})
            v.push_back({"semibent-m" + std::to_string(m), 8, "semibent support code",
                         [m](Recorder& r) { run_semibent(r, m); }});
        for (unsigned m : {5u, 7u})
            v.push_back({"ab-m" + std::to_string(m), 9, "almost bent x^3 support code",
                         [m](Recorder& r) { run_almost_bent(r, m); }});
        for (unsigned r : {2u, 4u, 6u})
            v.push_back({"qbf-m6-r" + std::to_string(r), 10, "sampled quadratic Boolean functions, m=6, rank " + std::to_string(r),
                         [r](Recorder& rec) { run_qbf_sample(rec, 6, r, 4, 8); }});
        v.push_back({"hkm-h1", 11, "HKM ternary code, h=1", [](Recorder& r) {
                         run_hkm_code(r, 1);
                         const Field F(3, 3);
                         const auto D = hkm_set(F, 1);
                         r.compare("design", to_string(DesignClass(DifferenceSetParams{13, 4, 1})),
                                   to_string(classify_design(AbelianGroup::cyclic(13), to_cyclic(F, D.elems, 13))));
                     }});
        v.push_back({"hkm-h3", 11, "HKM ternary code, h=3", [](Recorder& r) { run_hkm_code(r, 3); }});
        v.push_back({"hkm-lemmas-h1", 11, "HKM lemmas, exhaustive at h=1", [](Recorder& r) {
                         const Field F(3, 3);
                         std::vector<Elem> us, bs;
                         for (std::uint32_t x = 0; x < F.q(); ++x) us.push_back(Elem(x));
                         for (std::uint32_t x = 1; x < F.q(); ++x) bs.push_back(Elem(x));
                         run_hkm_lemmas(r, 1, us, bs);
                     }});
        v.push_back({"hkm-lemmas-h3", 11, "HKM lemmas, sampled at h=3", [](Recorder& r) {
                         const Field F(3, 9);
                         auto us = sample_nonzero(F, 120);
                         us.push_back(F.zero());
                         run_hkm_lemmas(r, 3, us, sample_nonzero(F, 120));
                     }});
        for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}})
            v.push_back({"lemma-zd13-p" + std::to_string(p) + "m" + std::to_string(m), 12, "quadratic character sums",
                         [p, m](Recorder& r) { run_zd13(r, p, m); }});
        v.push_back({"charsum-weights", 12, "character-sum weight formula", [](Recorder& r) {
                         for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 3}})
                             charsum_agreement(r, "paley GF(" + std::to_string(ipow(p, m)) + ")", paley_set(Field(p, m)), 0);
                         {
                             const Field F(3, 5);
                             charsum_agreement(r, "cubic image GF(243)", image_set(F, cubic_form(F, F.alpha())), 0);
                         }
                         charsum_agreement(r, "hkm h1", hkm_set(1), 0);
                         charsum_agreement(r, "glynn2 m7", maschietti_set(Field(2, 7), HyperovalCase::GlynnII), 0);
                         charsum_agreement(r, "paley GF(2187)", paley_set(Field(3, 7)), 200);
                         charsum_agreement(r, "hkm h3", hkm_set(3), 200);
                     }});
        v.push_back({"props-invariance", 13, "order, scaling and representation invariance", [](Recorder& r) { run_invariance(r); }});
        v.push_back({"props-walsh", 13, "Parseval and inverse transform", [](Recorder& r) { run_walsh_identities(r); }});
        v.push_back({"props-pless", 13, "Pless moment identities", [](Recorder& r) { run_pless_all(r); }});
        v.push_back({"props-complement", 13, "difference set complement rule", [](Recorder& r) { run_complement(r); }});
        return v;
    }();
    return cases;
}

inline CaseReport run_case(const VerifyCase& c) {
    CaseReport rep;
    rep.case_id = c.id;
    rep.criterion = c.criterion;
    Recorder rec(rep);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.run(rec);
    } catch (const std::exception& e) {
        rep.verdict = Verdict::Fail;
        rep.reason = std::string("exception: ") + e.what();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Runs every case whose id starts with `filter` (all when empty); results
/// are ordered by case id.
inline std::vector<CaseReport> run_cases(const std::string& filter = "") {
    std::vector<CaseReport> out;
    for (const auto& c : verify_cases())
        if (c.id.rfind(filter, 0) == 0) out.push_back(run_case(c));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.case_id < b.case_id; });
    return out;
}

}  // namespace defset
