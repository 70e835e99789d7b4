#pragma once

// Walsh spectra of Boolean functions on GF(2^m), spectral classification,
// ranks of quadratic forms over GF(p^m) and the almost-bent test.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "defset/designs.hpp"
#include "defset/error.hpp"
#include "defset/field.hpp"
#include "defset/funcspec.hpp"
#include "defset/numeric.hpp"

namespace defset {

struct WalshSpectrum {
    unsigned m = 0;
    std::vector<std::int64_t> values;  ///< values[w.index] = sum_x (-1)^{f(x) + Tr(wx)}

    std::int64_t at(Elem w) const { return values.at(w.index); }
    /// Support size implied by the value at zero.
    std::int64_t support_size() const { return ((std::int64_t{1} << m) - values.at(0)) / 2; }
    std::map<std::int64_t, std::uint64_t> histogram() const {
        std::map<std::int64_t, std::uint64_t> h;
        for (auto v : values) ++h[v];
        return h;
    }
};

namespace detail {

inline void fwht(std::vector<std::int64_t>& a) {
    for (std::size_t len = 1; len < a.size(); len <<= 1)
        for (std::size_t i = 0; i < a.size(); i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                const std::int64_t u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
}

/// tau(w) = sum_i Tr(w e_i) 2^i for the polynomial basis e_i, so that
/// Tr(w x) is the bitwise dot product of tau(w) and the index of x.
inline std::vector<std::uint32_t> trace_dual_map(const Field& F) {
    const unsigned m = F.m();
    std::vector<std::uint32_t> tau(F.q(), 0);
    std::vector<std::uint32_t> unit(m, 0);
    for (unsigned j = 0; j < m; ++j)
        for (unsigned i = 0; i < m; ++i)
            if (F.trace(F.mul(Elem(1u << j), Elem(1u << i)))) unit[j] |= 1u << i;
    for (std::uint32_t w = 1; w < F.q(); ++w) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(w));
        tau[w] = tau[w & (w - 1)] ^ unit[low];
    }
    return tau;
}

inline void require_binary(const Field& F) {
    if (F.p() != 2) throw Error(ErrorCode::PreconditionFailed, "Walsh transforms need characteristic 2");
}

}  // namespace detail

/// Spectrum of an arbitrary Boolean function given by its truth table
/// (indexed by element index), in O(m 2^m).
inline WalshSpectrum walsh_from_truth_table(const Field& F, std::span<const std::uint8_t> tt) {
    detail::require_binary(F);
    std::vector<std::int64_t> a(F.q());
    for (std::uint32_t x = 0; x < F.q(); ++x) a[x] = tt[x] ? -1 : 1;
    detail::fwht(a);
    const auto tau = detail::trace_dual_map(F);
    WalshSpectrum s{F.m(), std::vector<std::int64_t>(F.q())};
    for (std::uint32_t w = 0; w < F.q(); ++w) s.values[w] = a[tau[w]];
    return s;
}

inline std::vector<std::uint8_t> truth_table(const Field& F, const FuncSpec& f) {
    const auto values = tabulate(F, f);
    return {values.begin(), values.end()};
}

inline WalshSpectrum walsh_transform(const Field& F, const FuncSpec& f) {
    detail::require_binary(F);
    if (f.target != FuncTarget::Trace) throw Error(ErrorCode::PreconditionFailed, "Boolean function must be trace-valued");
    const auto tt = truth_table(F, f);
    return walsh_from_truth_table(F, tt);
}

/// Recovers (-1)^{f(x)} from a spectrum: 2^{-m} sum_w f̂(w) (-1)^{Tr(wx)}.
inline std::vector<int> inverse_walsh(const Field& F, const WalshSpectrum& s) {
    detail::require_binary(F);
    const auto tau = detail::trace_dual_map(F);
    std::vector<std::int64_t> a(F.q(), 0);
    for (std::uint32_t w = 0; w < F.q(); ++w) a[tau[w]] = s.values[w];
    detail::fwht(a);
    std::vector<int> out(F.q());
    for (std::uint32_t x = 0; x < F.q(); ++x) {
        if (a[x] % static_cast<std::int64_t>(F.q()) != 0)
            throw Error(ErrorCode::PreconditionFailed, "not the spectrum of a Boolean function");
        out[x] = static_cast<int>(a[x] / static_cast<std::int64_t>(F.q()));
    }
    return out;
}

enum class SpectralKind { Bent, Semibent, Plateaued, FiveValued, Other };

inline std::string to_string(SpectralKind k) {
    switch (k) {
        case SpectralKind::Bent: return "Bent";
        case SpectralKind::Semibent: return "Semibent";
        case SpectralKind::Plateaued: return "Plateaued";
        case SpectralKind::FiveValued: return "FiveValued";
        case SpectralKind::Other: return "Other";
    }
    return "?";
}

struct SpectralClass {
    SpectralKind kind = SpectralKind::Other;
    std::int64_t amplitude = 0;         ///< for Plateaued
    std::set<std::int64_t> values;      ///< distinct spectrum values
    std::int64_t support_size = 0;      ///< n_f
};

inline SpectralClass classify_spectrum(const WalshSpectrum& s) {
    SpectralClass c;
    c.values = std::set<std::int64_t>(s.values.begin(), s.values.end());
    c.support_size = s.support_size();
    const unsigned m = s.m;
    const std::int64_t full = std::int64_t{1} << m;
    auto subset_of = [&](std::initializer_list<std::int64_t> allowed) {
        return std::all_of(c.values.begin(), c.values.end(), [&](std::int64_t v) {
            return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
        });
    };
    if (m % 2 == 0) {
        const std::int64_t a = std::int64_t{1} << (m / 2);
        if (subset_of({a, -a})) {
            c.kind = SpectralKind::Bent;
            c.amplitude = a;
            return c;
        }
    } else {
        const std::int64_t hi = std::int64_t{1} << ((m + 1) / 2);
        const std::int64_t lo = std::int64_t{1} << ((m - 1) / 2);
        if (hi < full && subset_of({0, hi, -hi})) {
            c.kind = SpectralKind::Semibent;
            c.amplitude = hi;
            return c;
        }
        if (c.values == std::set<std::int64_t>{0, lo, -lo, hi, -hi}) {
            c.kind = SpectralKind::FiveValued;
            return c;
        }
    }
    std::set<std::int64_t> mags;
    for (auto v : c.values)
        if (v != 0) mags.insert(std::llabs(v));
    if (mags.size() == 1 && *mags.begin() < full) {
        c.kind = SpectralKind::Plateaued;
        c.amplitude = *mags.begin();
        return c;
    }
    c.kind = SpectralKind::Other;
    return c;
}

// ---------------------------------------------------------------------------
// Quadratic forms

struct QuadraticRank {
    unsigned rank = 0;
    unsigned radical_dim = 0;  ///< dim V_f = m - rank
};

/// Exponents of shape p^i + p^j with i, j < m (i = j allowed).
inline bool is_quadratic_exponent(const Field& F, std::uint64_t e) {
    const std::uint64_t q = F.q();
    if (e >= q) e = (e - 1) % (q - 1) + 1;
    for (unsigned i = 0; i < F.m(); ++i)
        for (unsigned j = i; j < F.m(); ++j)
            if (ipow(F.p(), i) + ipow(F.p(), j) == e) return true;
    return false;
}

/// Rank of the quadratic form f: m minus the dimension of its radical
/// V_f = {x : f(x+z) - f(x) - f(z) = 0 for all z}. Works for GF(q)-valued
/// forms and for trace forms; the radical is the kernel of the bilinear form
/// sampled on the polynomial basis.
inline QuadraticRank quadratic_rank(const Field& F, const FuncSpec& f) {
    f.validate();
    for (const auto& t : f.terms)
        if (!t.coeff.is_zero() && !is_quadratic_exponent(F, t.exponent))
            throw Error(ErrorCode::NotQuadraticForm, "exponent " + std::to_string(t.exponent) + " is not p^i + p^j");
    const unsigned m = F.m();
    std::vector<Elem> basis(m);
    for (unsigned i = 0; i < m; ++i) basis[i] = Elem(static_cast<std::uint32_t>(ipow(F.p(), i)));
    std::vector<Elem> fb(m);
    for (unsigned i = 0; i < m; ++i) fb[i] = eval(F, f, basis[i]);

    // One row per (z = e_j, output coordinate), one column per e_i.
    const unsigned coords = f.target == FuncTarget::Trace ? 1 : m;
    std::vector<std::vector<std::uint32_t>> mat(m * coords, std::vector<std::uint32_t>(m, 0));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            const Elem b = F.sub(F.sub(eval(F, f, F.add(basis[i], basis[j])), fb[i]), fb[j]);
            const auto d = F.digits(b);
            for (unsigned c = 0; c < coords; ++c) mat[j * coords + c][i] = d[c];
        }
    const unsigned r = rank_mod_p(std::move(mat), F.p());
    return {r, m - r};
}

// ---------------------------------------------------------------------------
// Vectorial functions

/// lambda_g(a, b) = sum_x (-1)^{Tr(a g(x) + b x)}.
inline std::int64_t lambda_spectrum(const Field& F, const FuncSpec& g, Elem a, Elem b) {
    detail::require_binary(F);
    std::int64_t s = 0;
    for (std::uint32_t i = 0; i < F.q(); ++i) {
        const Elem x(i);
        const Elem arg = F.add(F.mul(a, eval_poly(F, g, x)), F.mul(b, x));
        s += F.trace(arg) ? -1 : 1;
    }
    return s;
}

/// Exhaustive almost-bent test: every lambda_g(a, b) with a != 0 lies in
/// {0, ±2^{(m+1)/2}}. Each a costs one Walsh transform of Tr(a g).
inline bool is_almost_bent(const Field& F, const FuncSpec& g, unsigned max_m = 9) {
    detail::require_binary(F);
    if (F.m() % 2 == 0) throw Error(ErrorCode::EvenDegree, "almost bent functions exist only for odd m");
    if (F.m() > max_m) throw Error(ErrorCode::SizeLimit, "exhaustive almost-bent test limited to m <= " + std::to_string(max_m));
    const auto gv = tabulate(F, g.with_target(FuncTarget::Self));
    const std::int64_t amp = std::int64_t{1} << ((F.m() + 1) / 2);
    std::vector<std::uint8_t> tt(F.q());
    for (std::uint32_t a = 1; a < F.q(); ++a) {
        for (std::uint32_t x = 0; x < F.q(); ++x) tt[x] = static_cast<std::uint8_t>(F.trace(F.mul(Elem(a), Elem(gv[x]))));
        const auto s = walsh_from_truth_table(F, tt);
        for (auto v : s.values)
            if (v != 0 && v != amp && v != -amp) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Support sizes

enum class SupportKind { Bent, Semibent, AlmostBentTrace, Quadratic };

inline SupportKind parse_support_kind(const std::string& s) {
    if (s == "bent") return SupportKind::Bent;
    if (s == "semibent") return SupportKind::Semibent;
    if (s == "ab-trace") return SupportKind::AlmostBentTrace;
    if (s == "quadratic") return SupportKind::Quadratic;
    throw Error(ErrorCode::UnknownKind, "unknown support kind '" + s + "'");
}

/// Admissible n_f = |D_f| values. `value_at_zero` is f̂(0) (for ab-trace,
/// lambda_g(1, 0)); when absent every admissible size is returned. Quadratic
/// functions also need their rank.
inline std::set<std::int64_t> support_size_prediction(SupportKind kind, unsigned m,
                                                      std::optional<std::int64_t> value_at_zero = std::nullopt,
                                                      std::optional<unsigned> rank = std::nullopt) {
    const std::int64_t half = std::int64_t{1} << (m - 1);
    std::int64_t amp = 0;
    bool zero_allowed = true;
    switch (kind) {
        case SupportKind::Bent:
            if (m % 2 != 0 || m < 2) throw Error(ErrorCode::PreconditionFailed, "bent functions need even m");
            amp = std::int64_t{1} << (m / 2);
            zero_allowed = false;
            break;
        case SupportKind::Semibent:
        case SupportKind::AlmostBentTrace:
            if (m % 2 == 0) throw Error(ErrorCode::EvenDegree, "semibent / almost bent sizes need odd m");
            amp = std::int64_t{1} << ((m + 1) / 2);
            break;
        case SupportKind::Quadratic:
            if (!rank || *rank > m || *rank % 2 != 0 || *rank == 0)
                throw Error(ErrorCode::PreconditionFailed, "quadratic prediction needs an even nonzero rank <= m");
            amp = std::int64_t{1} << (m - *rank / 2);
            break;
    }
    std::set<std::int64_t> allowed{amp, -amp};
    if (zero_allowed) allowed.insert(0);
    std::set<std::int64_t> out;
    if (value_at_zero) {
        if (!allowed.count(*value_at_zero))
            throw Error(ErrorCode::PreconditionFailed, "value at zero " + std::to_string(*value_at_zero) + " is not admissible");
        out.insert(half - *value_at_zero / 2);
    } else {
        for (auto v : allowed) out.insert(half - v / 2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hyperoval spectra

struct HyperovalReport {
    unsigned i = 0, j = 0, kappa = 0;
    std::uint64_t ell = 0;  ///< (2^i + 2^j - 1) / (2^kappa + 1) mod 2^m - 1
    std::uint64_t zero_checked = 0, amplitude_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// kappa = (m+1)/4 for m = 3 (mod 4), (m-1)/4 for m = 1 (mod 4).
inline unsigned glynn_kappa(unsigned m) {
    if (m % 2 == 0) throw Error(ErrorCode::EvenDegree, "kappa is defined for odd m");
    return m % 4 == 3 ? (m + 1) / 4 : (m - 1) / 4;
}

/// Checks the three-valued Walsh spectrum of the indicator of Im(Gamma_rho),
/// rho = 2^i + 2^j: zero at b = 0 and where Tr(b^l) = 0, ±2^{(m+1)/2} where
/// Tr(b^l) = 1.
inline HyperovalReport hyperoval_spectrum_check(const Field& F, unsigned i, unsigned j) {
    detail::require_binary(F);
    const unsigned m = F.m();
    if (m % 2 == 0) throw Error(ErrorCode::PreconditionFailed, "m odd: m = " + std::to_string(m));
    if (!(i < j && j < m)) throw Error(ErrorCode::PreconditionFailed, "0 <= i < j < m");
    HyperovalReport rep;
    rep.i = i;
    rep.j = j;
    rep.kappa = j - i;
    const std::uint64_t n = F.q() - 1;
    const std::uint64_t denom = ((std::uint64_t{1} << rep.kappa) + 1) % n;
    if (std::gcd(denom, n) != 1) throw Error(ErrorCode::PreconditionFailed, "gcd(2^kappa + 1, 2^m - 1) = 1");
    const std::uint64_t rho = (std::uint64_t{1} << i) + (std::uint64_t{1} << j);
    const auto gamma = tabulate(F, gamma_function(F, rho));
    if (!is_two_to_one(gamma, F.q())) throw Error(ErrorCode::PreconditionFailed, "Gamma_rho two-to-one");
    rep.ell = mulmod((rho - 1) % n, inverse_mod(denom, n), n);

    std::vector<std::uint8_t> tt(F.q(), 0);
    for (auto v : gamma) tt[v] = 1;
    const auto s = walsh_from_truth_table(F, tt);
    const std::int64_t amp = std::int64_t{1} << ((m + 1) / 2);
    for (std::uint32_t b = 0; b < F.q(); ++b) {
        const std::int64_t v = s.values[b];
        const bool zero_branch = b == 0 || F.trace(F.pow(Elem(b), rep.ell)) == 0;
        if (zero_branch) {
            ++rep.zero_checked;
            if (v != 0) rep.violations.push_back("b=" + std::to_string(b) + ": expected 0, got " + std::to_string(v));
        } else {
            ++rep.amplitude_checked;
            if (v != amp && v != -amp)
                rep.violations.push_back("b=" + std::to_string(b) + ": expected ±" + std::to_string(amp) + ", got " +
                                         std::to_string(v));
        }
    }
    return rep;
}

}  // namespace defset
