#pragma once

// Closed-form code parameters and weight distributions, to be compared
// against exhaustive enumeration.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "defset/boolfn.hpp"
#include "defset/code.hpp"
#include "defset/error.hpp"
#include "defset/numeric.hpp"

namespace defset {

struct Prediction {
    std::string theorem;
    std::uint32_t p = 0;
    unsigned m = 0;
    std::uint64_t n = 0;
    unsigned k = 0;
    std::uint64_t d = 0;
    /// Full distribution including A_0 = 1. Empty when only weights are known.
    std::map<std::uint64_t, std::uint64_t> counts;
    /// Admissible nonzero weights.
    std::set<std::uint64_t> weights;

    bool has_distribution() const { return !counts.empty(); }

    /// Exact agreement on every field the prediction fixes.
    bool matches(const WeightEnumerator& E) const {
        if (E.p != p || E.n != n || E.k != k) return false;
        if (has_distribution()) return E.counts == counts;
        for (auto [w, a] : E.counts)
            if (w != 0 && !weights.count(w)) return false;
        return true;
    }
};

/// Optional side data; each theorem reads the fields it needs.
struct PredictionParams {
    std::optional<std::uint32_t> p;
    std::optional<unsigned> m;
    std::optional<std::uint64_t> e;      ///< e-to-1 multiplicity
    std::optional<unsigned> r;           ///< quadratic form rank
    std::optional<std::uint64_t> n_f;    ///< support size
    std::optional<std::int64_t> fhat0;   ///< Walsh value at 0 (or lambda_g(1,0))
    std::optional<unsigned> h;
};

namespace detail {

[[noreturn]] inline void hypothesis(const std::string& theorem, const std::string& what) {
    throw Error(ErrorCode::PreconditionFailed, theorem + ": " + what);
}

template <class T>
T need(const std::optional<T>& v, const std::string& theorem, const char* name) {
    if (!v) hypothesis(theorem, std::string("parameter '") + name + "' is required");
    return *v;
}

/// num / den, which must be a nonnegative integer.
inline std::uint64_t exact_quotient(const std::string& theorem, __int128 num, __int128 den) {
    if (den == 0 || num % den != 0 || num / den < 0) hypothesis(theorem, "table entry is not a nonnegative integer");
    return static_cast<std::uint64_t>(num / den);
}

inline void add_weight(Prediction& P, std::uint64_t w, std::uint64_t a) {
    if (a == 0) return;
    P.counts[w] += a;
    if (w != 0) P.weights.insert(w);
}

inline void finish(Prediction& P) {
    P.counts[0] += 1;
    P.d = P.weights.empty() ? 0 : *P.weights.begin();
}

inline void require_odd(const std::string& t, unsigned m) {
    if (m % 2 == 0) hypothesis(t, "m must be odd");
}

}  // namespace detail

/// One-weight code of a skew set: [(q-1)/2, m, (p-1)q/2p].
inline Prediction predict_skew(std::uint32_t p, unsigned m) {
    const std::string t = "thm-part2";
    if (p == 2) detail::hypothesis(t, "skew sets need odd q");
    const std::uint64_t q = ipow(p, m);
    if (q % 4 != 3) detail::hypothesis(t, "a skew set exists only for q = 3 mod 4");
    Prediction P{t, p, m, (q - 1) / 2, m, 0, {}, {}};
    detail::add_weight(P, detail::exact_quotient(t, __int128(p - 1) * q, 2 * p), q - 1);
    detail::finish(P);
    return P;
}

/// Image of an e-to-1 quadratic form of rank r.
inline Prediction predict_qf(std::uint32_t p, unsigned m, std::uint64_t e, unsigned r) {
    const std::string t = "thm-qfcodes";
    if (p == 2) detail::hypothesis(t, "q must be odd");
    if (r < 1 || r > m) detail::hypothesis(t, "rank must lie in [1, m]");
    const std::uint64_t q = ipow(p, m);
    if (e == 0 || (q - 1) % e != 0) detail::hypothesis(t, "e must divide q - 1");
    Prediction P{t, p, m, (q - 1) / e, m, 0, {}, {}};
    if (r % 2 == 1) {
        detail::add_weight(P, detail::exact_quotient(t, __int128(p - 1) * q, __int128(e) * p), q - 1);
    } else {
        const std::uint64_t s = ipow(p, m - r / 2);
        if ((q - 1) % 2 != 0) detail::hypothesis(t, "(q-1)/2 is not an integer");
        detail::add_weight(P, detail::exact_quotient(t, __int128(p - 1) * (q - s), __int128(e) * p), (q - 1) / 2);
        detail::add_weight(P, detail::exact_quotient(t, __int128(p - 1) * (q + s), __int128(e) * p), (q - 1) / 2);
    }
    detail::finish(P);
    return P;
}

/// Quadratic residues: x^2, e = 2, rank m.
inline Prediction predict_quadratic_residue(std::uint32_t p, unsigned m) {
    Prediction P = predict_qf(p, m, 2, m);
    P.theorem = "thm-part1";
    return P;
}

/// Hyperoval image codes (three weights).
inline Prediction predict_hyperoval(unsigned m) {
    const std::string t = "thm-hyperovalDS";
    detail::require_odd(t, m);
    if (m < 3) detail::hypothesis(t, "m must be at least 3");
    Prediction P{t, 2, m, ipow(2, m - 1) - 1, m, 0, {}, {}};
    const std::uint64_t a = ipow(2, m - 2), b = ipow(2, (m - 3) / 2);
    detail::add_weight(P, a - b, a + b);
    detail::add_weight(P, a, 2 * a - 1);
    detail::add_weight(P, a + b, a - b);
    detail::finish(P);
    return P;
}

inline Prediction predict_bent(unsigned m, std::uint64_t n_f) {
    const std::string t = "thm-bentcodes";
    if (m % 2 != 0 || m < 4) detail::hypothesis(t, "m must be even and at least 4");
    const std::uint64_t half = ipow(2, m - 1), s = ipow(2, (m - 2) / 2);
    if (n_f != half - s && n_f != half + s) detail::hypothesis(t, "n_f must be 2^{m-1} +- 2^{(m-2)/2}");
    Prediction P{t, 2, m, n_f, m, 0, {}, {}};
    const std::uint64_t q = ipow(2, m), delta = ipow(2, (m - 4) / 2);
    const std::uint64_t scaled = detail::exact_quotient(t, n_f, s);
    detail::add_weight(P, n_f / 2 - delta, detail::exact_quotient(t, __int128(q) - 1 - scaled, 2));
    detail::add_weight(P, n_f / 2 + delta, detail::exact_quotient(t, __int128(q) - 1 + scaled, 2));
    detail::finish(P);
    return P;
}

namespace detail {

inline Prediction semibent_table(const std::string& t, unsigned m, std::uint64_t n_f) {
    require_odd(t, m);
    const std::uint64_t half = ipow(2, m - 1), s = ipow(2, (m - 1) / 2);
    if (n_f != half - s && n_f != half + s && n_f != half) hypothesis(t, "n_f must be 2^{m-1} or 2^{m-1} +- 2^{(m-1)/2}");
    Prediction P{t, 2, m, n_f, m, 0, {}, {}};
    const __int128 q = ipow(2, m);
    const __int128 prod = __int128(n_f) * (q - __int128(n_f));
    // n_f (2^m - n_f) 2^{-m} -+ n_f 2^{-(m+1)/2}, over the common denominator 2^m.
    const __int128 corr = __int128(n_f) * ipow(2, (m - 1) / 2);
    if ((n_f - s) % 2 != 0) hypothesis(t, "weights are not integers");
    add_weight(P, (n_f - s) / 2, exact_quotient(t, prod - corr, q));
    add_weight(P, n_f / 2, exact_quotient(t, (q - 1) * (q / 2) - prod, q / 2));
    add_weight(P, (n_f + s) / 2, exact_quotient(t, prod + corr, q));
    finish(P);
    return P;
}

}  // namespace detail

inline Prediction predict_semibent(unsigned m, std::uint64_t n_f) {
    return detail::semibent_table("thm-semibentcodes", m, n_f);
}

inline Prediction predict_almost_bent(unsigned m, std::uint64_t n_f) {
    return detail::semibent_table("thm-abcodes", m, n_f);
}

/// Quadratic Boolean function of rank r with Walsh value fhat0 at zero.
/// fhat0 must be 0 or +-2^{m - r/2}; the nonzero weights are
/// n_f/2 and (n_f +- 2^{m-1-r/2})/2.
///
/// The table lists weights for every nonzero w. When a nonzero w lands on
/// weight 0 (rank 2 with fhat0 = +2^{m-1}) the code has dimension m - 1 and
/// each codeword is hit twice; the distribution returned here is then the
/// one of the actual code.
inline Prediction predict_quadratic_boolean(unsigned m, unsigned r, std::int64_t fhat0) {
    const std::string t = "thm-CodeQBFs";
    if (r < 2 || r > m || r % 2 != 0) detail::hypothesis(t, "rank must be even and in [2, m]");
    const std::int64_t amp = static_cast<std::int64_t>(ipow(2, m - r / 2));
    int branch;
    if (fhat0 == 0)
        branch = 1;
    else if (fhat0 == amp)
        branch = 2;
    else if (fhat0 == -amp)
        branch = 3;
    else
        detail::hypothesis(t, "fhat(0) must be 0 or +-2^{m-r/2}");
    const std::int64_t n_f = static_cast<std::int64_t>(ipow(2, m - 1)) - fhat0 / 2;
    const std::int64_t s = amp / 2;
    const std::int64_t base = static_cast<std::int64_t>(ipow(2, r - 1));
    const std::int64_t side = static_cast<std::int64_t>(ipow(2, (r - 2) / 2));
    std::map<std::int64_t, std::int64_t> element;  // weight -> number of nonzero w
    element[n_f / 2] += static_cast<std::int64_t>(ipow(2, m) - ipow(2, r)) - (branch == 1);
    element[(n_f + s) / 2] += base + side - (branch == 2);
    element[(n_f - s) / 2] += base - side - (branch == 3);
    if (n_f % 2 != 0 || (n_f + s) % 2 != 0) detail::hypothesis(t, "weights are not integers");

    const std::uint64_t kernel = 1 + static_cast<std::uint64_t>(element.count(0) ? element[0] : 0);
    unsigned k = 0;
    if (!exact_log(ipow(2, m) / kernel, 2, k) || ipow(2, m) % kernel != 0)
        detail::hypothesis(t, "zero-weight count is not a subgroup order");
    Prediction P{t, 2, m, static_cast<std::uint64_t>(n_f), k, 0, {}, {}};
    for (auto [w, a] : element) {
        if (a < 0) detail::hypothesis(t, "negative multiplicity");
        if (w == 0 || a == 0) continue;
        if (static_cast<std::uint64_t>(a) % kernel != 0) detail::hypothesis(t, "multiplicity not divisible by kernel");
        detail::add_weight(P, static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(a) / kernel);
    }
    detail::finish(P);
    return P;
}

inline Prediction predict_hkm(unsigned h) {
    const std::string t = "thm-HKMcodes";
    if (h == 0 || h % 2 == 0) detail::hypothesis(t, "h must be odd and positive");
    const unsigned m = 3 * h;
    Prediction P{t, 3, m, (ipow(3, m - 1) - 1) / 2, m, 0, {}, {}};
    const std::uint64_t a = ipow(3, 3 * h - 2), b = ipow(3, 2 * h - 2);
    const std::uint64_t e2 = ipow(3, 2 * h), e1 = ipow(3, h);
    detail::add_weight(P, a - b, e2 + e1);
    detail::add_weight(P, a, ipow(3, 3 * h) - 2 * e2 - 1);
    detail::add_weight(P, a + b, e2 - e1);
    detail::finish(P);
    return P;
}

/// Enumerators reported for the Glynn II codes at m = 5, 7, 9, 11.
inline Prediction reported_glynn2(unsigned m) {
    const std::string t = "glynn2-reported";
    Prediction P{t, 2, m, ipow(2, m - 1) - 1, m, 0, {}, {}};
    switch (m) {
        case 5: P.counts = {{0, 1}, {6, 10}, {8, 15}, {10, 6}}; break;
        case 7: P.counts = {{0, 1}, {28, 36}, {32, 63}, {36, 28}}; break;
        case 9: P.counts = {{0, 1}, {112, 9}, {120, 108}, {128, 285}, {136, 108}, {144, 1}}; break;
        case 11: P.counts = {{0, 1}, {480, 22}, {496, 440}, {512, 1155}, {528, 408}, {544, 22}}; break;
        default: detail::hypothesis(t, "no enumerator reported for m = " + std::to_string(m));
    }
    for (auto [w, a] : P.counts)
        if (w) P.weights.insert(w);
    P.d = *P.weights.begin();
    return P;
}

/// The conjectured Glynn II shape for odd m >= 9: five admissible weights.
inline Prediction glynn2_conjecture(unsigned m) {
    const std::string t = "glynn2-conjecture";
    detail::require_odd(t, m);
    if (m < 9) detail::hypothesis(t, "the conjecture covers m >= 9");
    const std::uint64_t a = ipow(2, m - 2), b = ipow(2, (m - 1) / 2), c = ipow(2, (m - 3) / 2);
    Prediction P{t, 2, m, ipow(2, m - 1) - 1, m, 0, {}, {}};
    P.weights = {a - b, a - c, a, a + c, a + b};
    P.d = a - b;
    return P;
}

/// Weight multiset {(2 n_f + fhat(w))/4 : w != 0} plus the zero word,
/// counted over x (not over distinct codewords).
inline std::map<std::uint64_t, std::uint64_t> boolean_weight_multiset(const WalshSpectrum& s, std::uint64_t n_f) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::size_t w = 1; w < s.values.size(); ++w) {
        const std::int64_t num = 2 * static_cast<std::int64_t>(n_f) + s.values[w];
        if (num < 0 || num % 4 != 0) throw Error(ErrorCode::NonIntegralWeight, "(2 n_f + fhat(w)) / 4 is not a weight");
        ++out[static_cast<std::uint64_t>(num / 4)];
    }
    return out;
}

/// Dispatch by theorem id.
inline Prediction predicted_enumerator(const std::string& theorem, const PredictionParams& q) {
    using detail::need;
    if (theorem == "thm-part2") return predict_skew(need(q.p, theorem, "p"), need(q.m, theorem, "m"));
    if (theorem == "thm-part1") return predict_quadratic_residue(need(q.p, theorem, "p"), need(q.m, theorem, "m"));
    if (theorem == "thm-qfcodes")
        return predict_qf(need(q.p, theorem, "p"), need(q.m, theorem, "m"), need(q.e, theorem, "e"),
                          need(q.r, theorem, "r"));
    if (theorem == "thm-hyperovalDS") return predict_hyperoval(need(q.m, theorem, "m"));
    if (theorem == "thm-bentcodes") return predict_bent(need(q.m, theorem, "m"), need(q.n_f, theorem, "n_f"));
    if (theorem == "thm-semibentcodes") return predict_semibent(need(q.m, theorem, "m"), need(q.n_f, theorem, "n_f"));
    if (theorem == "thm-abcodes") return predict_almost_bent(need(q.m, theorem, "m"), need(q.n_f, theorem, "n_f"));
    if (theorem == "thm-CodeQBFs")
        return predict_quadratic_boolean(need(q.m, theorem, "m"), need(q.r, theorem, "r"),
                                         need(q.fhat0, theorem, "fhat0"));
    if (theorem == "thm-HKMcodes") return predict_hkm(need(q.h, theorem, "h"));
    if (theorem == "glynn2-reported") return reported_glynn2(need(q.m, theorem, "m"));
    if (theorem == "glynn2-conjecture") return glynn2_conjecture(need(q.m, theorem, "m"));
    throw Error(ErrorCode::UnknownKind, "unknown theorem id '" + theorem + "'");
}

inline std::string to_string(const Prediction& P) {
    std::string s = "[" + std::to_string(P.n) + "," + std::to_string(P.k) + "," + std::to_string(P.d) + "]";
    if (P.has_distribution()) return s + " " + to_polynomial(P.counts);
    s += " weights {";
    bool first = true;
    for (auto w : P.weights) {
        s += (first ? "" : ",") + std::to_string(w);
        first = false;
    }
    return s + "}";
}

}  // namespace defset
