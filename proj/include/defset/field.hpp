#pragma once

// Exact arithmetic in GF(p^m) over a primitive polynomial basis.
//
// Elements are encoded as a single integer index in [0, q): digit i of the
// index written in base p is the coefficient of x^i. Index 0 is zero, index 1
// is one, and for m = 1 the index is the residue itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "defset/error.hpp"
#include "defset/numeric.hpp"

namespace defset {

struct Elem {
    std::uint32_t index = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t i) : index(i) {}

    constexpr bool is_zero() const { return index == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct ElemHash {
    std::size_t operator()(Elem e) const noexcept { return std::hash<std::uint32_t>{}(e.index); }
};

struct FieldLimits {
    unsigned max_field_bits = 26;  ///< q ≤ 2^max_field_bits
    unsigned table_bits = 22;      ///< exp/log tables for q ≤ 2^table_bits, baby-step/giant-step above
};

class Field {
public:
    /// Builds GF(p^m). Without an explicit modulus the default is the first
    /// primitive polynomial in index order of its non-leading coefficients
    /// (c_0 + c_1 p + ... + c_{m-1} p^{m-1} ascending); for m = 1 it is x - g
    /// with g the least primitive root mod p.
    Field(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
          FieldLimits limits = {});

    std::uint32_t p() const { return impl_->p; }
    unsigned m() const { return impl_->m; }
    std::uint32_t q() const { return impl_->q; }
    /// Coefficients of the monic modulus, constant term first (length m + 1).
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
    const FieldLimits& limits() const { return impl_->limits; }
    bool has_tables() const { return impl_->tables; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem alpha() const { return Elem(impl_->alpha); }
    Elem element(std::uint64_t index) const;

    /// Embeds an integer into the prime subfield.
    Elem from_int(std::int64_t c) const {
        return Elem(static_cast<std::uint32_t>(floor_mod(c, static_cast<std::int64_t>(p()))));
    }

    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(const std::vector<std::uint32_t>& d) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    /// Multiplication by a prime-subfield scalar c ∈ [0, p).
    Elem scale(std::uint32_t c, Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem alpha_pow(std::uint64_t t) const;
    Elem frobenius(Elem a) const { return pow(a, p()); }

    /// Absolute trace onto GF(p), as an integer in [0, p).
    std::uint32_t trace(Elem x) const;
    /// Trace onto the subfield of p^d elements; d must divide m.
    Elem relative_trace(unsigned d, Elem x) const;

    std::uint64_t dlog(Elem x) const;
    bool is_square(Elem x) const;

    /// Tr(alpha^t) for t in [0, q-1); built once on first use.
    const std::vector<std::uint32_t>& trace_by_log() const;

    std::string format(Elem x) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.impl_ == b.impl_ || (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
    }

private:
    struct Impl {
        std::uint32_t p = 0;
        unsigned m = 0;
        std::uint32_t q = 0;
        std::vector<std::uint32_t> modulus;
        std::uint32_t alpha = 0;
        FieldLimits limits;
        bool tables = false;
        std::vector<std::uint32_t> exp;  // exp[t] = alpha^t, t < q-1
        std::vector<std::uint32_t> log;  // log[x], x != 0
        std::vector<std::uint32_t> trace;
        std::vector<std::uint32_t> trace_basis;  // Tr(x^i), i < m
        std::uint64_t bsgs_step = 0;
        std::unordered_map<std::uint32_t, std::uint32_t> bsgs_baby;
        std::uint32_t bsgs_giant = 0;  // alpha^{-step}
        mutable std::once_flag trace_log_once;
        mutable std::vector<std::uint32_t> trace_log;
    };

    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_poly(std::uint32_t a, std::uint64_t e) const;

    std::shared_ptr<Impl> impl_;
};

namespace detail {

/// Schoolbook product of a and b (digit vectors of length m) reduced modulo
/// the monic polynomial `mod` of degree m, everything over GF(p).
inline std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b,
                                              const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    const std::size_t m = mod.size() - 1;
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    for (std::size_t k = 2 * m - 1; k >= m; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i]) % p;
    }
    return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m)};
}

inline std::vector<std::uint32_t> poly_powmod(std::vector<std::uint32_t> base, std::uint64_t e,
                                              const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    const std::size_t m = mod.size() - 1;
    std::vector<std::uint32_t> r(m, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

/// True iff x has multiplicative order p^m - 1 modulo `mod`, which forces
/// `mod` to be irreducible as well as primitive.
inline bool is_primitive_modulus(const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    const std::size_t m = mod.size() - 1;
    const std::uint64_t order = ipow(p, static_cast<unsigned>(m)) - 1;
    std::vector<std::uint32_t> x(m, 0);
    if (m == 1)
        x[0] = (p - mod[0]) % p;
    else
        x[1] = 1;
    std::vector<std::uint32_t> one(m, 0);
    one[0] = 1;
    if (poly_powmod(x, order, mod, p) != one) return false;
    for (std::uint64_t r : prime_divisors(order))
        if (poly_powmod(x, order / r, mod, p) == one) return false;
    return true;
}

inline std::uint32_t smallest_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    const auto divs = prime_divisors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto r : divs) {
            std::uint64_t acc = 1, b = g, e = (p - 1) / r;
            while (e) {
                if (e & 1) acc = acc * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

}  // namespace detail

/// The first `count` primitive moduli in default scan order (index order of
/// the non-leading coefficients). Used to build alternative representations.
inline std::vector<std::vector<std::uint32_t>> primitive_moduli(std::uint32_t p, unsigned m, std::size_t count) {
    std::vector<std::vector<std::uint32_t>> out;
    const std::uint64_t q = ipow(p, m);
    for (std::uint64_t s = 0; s < q && out.size() < count; ++s) {
        std::vector<std::uint32_t> mod(m + 1, 0);
        std::uint64_t t = s;
        for (unsigned i = 0; i < m; ++i) {
            mod[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        mod[m] = 1;
        if (mod[0] == 0) continue;
        if (detail::is_primitive_modulus(mod, p)) out.push_back(std::move(mod));
    }
    return out;
}

inline Field::Field(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus,
                    FieldLimits limits)
    : impl_(std::make_shared<Impl>()) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorCode::PreconditionFailed, "extension degree must be at least 1");
    if (limits.max_field_bits > 31) limits.max_field_bits = 31;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > (std::uint64_t{1} << limits.max_field_bits))
            throw Error(ErrorCode::SizeLimit, "p^m exceeds 2^" + std::to_string(limits.max_field_bits));
    }
    Impl& f = *impl_;
    f.p = p;
    f.m = m;
    f.q = static_cast<std::uint32_t>(q);
    f.limits = limits;

    if (modulus) {
        auto mod = *modulus;
        if (mod.size() != m + 1 || mod.back() != 1)
            throw Error(ErrorCode::NotPrimitivePolynomial, "modulus must be monic of degree " + std::to_string(m));
        for (auto c : mod)
            if (c >= p) throw Error(ErrorCode::NotPrimitivePolynomial, "modulus coefficient out of range");
        if (!detail::is_primitive_modulus(mod, p))
            throw Error(ErrorCode::NotPrimitivePolynomial, "modulus is not a primitive polynomial");
        f.modulus = std::move(mod);
    } else if (m == 1) {
        const std::uint32_t g = detail::smallest_primitive_root(p);
        f.modulus = {(p - g) % p, 1};
    } else {
        f.modulus = primitive_moduli(p, m, 1).front();
    }
    f.alpha = m == 1 ? (p - f.modulus[0]) % p : p;

    // Trace of the basis monomials, straight from the definition.
    f.trace_basis.assign(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        std::vector<std::uint32_t> xi(m, 0);
        if (m == 1)
            xi[0] = 1;
        else
            xi[i] = 1;
        std::vector<std::uint32_t> sum(m, 0), cur = xi;
        for (unsigned j = 0; j < m; ++j) {
            for (unsigned k = 0; k < m; ++k) sum[k] = (sum[k] + cur[k]) % p;
            cur = detail::poly_powmod(cur, p, f.modulus, p);
        }
        f.trace_basis[i] = sum[0];
    }

    f.tables = q <= (std::uint64_t{1} << limits.table_bits);
    if (f.tables) {
        f.exp.resize(q - 1);
        f.log.assign(q, 0);
        std::uint32_t cur = 1;
        for (std::uint32_t t = 0; t + 1 < q; ++t) {
            f.exp[t] = cur;
            f.log[cur] = t;
            cur = mul_poly(cur, f.alpha);
        }
        f.trace.resize(q);
        for (std::uint32_t x = 0; x < q; ++x) {
            std::uint32_t v = x, acc = 0;
            for (unsigned i = 0; i < m; ++i) {
                acc = (acc + (v % p) * f.trace_basis[i]) % p;
                v /= p;
            }
            f.trace[x] = acc;
        }
    } else {
        f.bsgs_step = 1;
        while (f.bsgs_step * f.bsgs_step < q - 1) ++f.bsgs_step;
        std::uint32_t cur = 1;
        for (std::uint32_t j = 0; j < f.bsgs_step; ++j) {
            f.bsgs_baby.emplace(cur, j);
            cur = mul_poly(cur, f.alpha);
        }
        f.bsgs_giant = pow_poly(pow_poly(f.alpha, q - 2), f.bsgs_step);
    }
}

inline Elem Field::element(std::uint64_t index) const {
    if (index >= q()) throw Error(ErrorCode::ElementNotInGroup, "element index out of range");
    return Elem(static_cast<std::uint32_t>(index));
}

inline std::vector<std::uint32_t> Field::digits(Elem x) const {
    std::vector<std::uint32_t> d(m());
    std::uint32_t v = x.index;
    for (unsigned i = 0; i < m(); ++i) {
        d[i] = v % p();
        v /= p();
    }
    return d;
}

inline Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p() + d[i] % p();
    return Elem(v);
}

inline Elem Field::add(Elem a, Elem b) const {
    if (p() == 2) return Elem(a.index ^ b.index);
    const std::uint32_t pp = p();
    std::uint32_t x = a.index, y = b.index, r = 0, place = 1;
    while (x || y) {
        r += ((x % pp + y % pp) % pp) * place;
        x /= pp;
        y /= pp;
        place *= pp;
    }
    return Elem(r);
}

inline Elem Field::neg(Elem a) const {
    if (p() == 2) return a;
    return scale(p() - 1, a);
}

inline Elem Field::scale(std::uint32_t c, Elem a) const {
    const std::uint32_t pp = p();
    c %= pp;
    std::uint32_t x = a.index, r = 0, place = 1;
    while (x) {
        r += static_cast<std::uint32_t>(std::uint64_t(x % pp) * c % pp) * place;
        x /= pp;
        place *= pp;
    }
    return Elem(r);
}

inline std::uint32_t Field::mul_poly(std::uint32_t a, std::uint32_t b) const {
    const Impl& f = *impl_;
    if (f.m == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % f.p);
    return from_digits(detail::poly_mulmod(digits(Elem(a)), digits(Elem(b)), f.modulus, f.p)).index;
}

inline std::uint32_t Field::pow_poly(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_poly(r, a);
        a = mul_poly(a, a);
        e >>= 1;
    }
    return r;
}

inline Elem Field::mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    const Impl& f = *impl_;
    if (f.tables) {
        std::uint32_t s = f.log[a.index] + f.log[b.index];
        if (s >= f.q - 1) s -= f.q - 1;
        return Elem(f.exp[s]);
    }
    return Elem(mul_poly(a.index, b.index));
}

inline Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero");
    const Impl& f = *impl_;
    if (f.tables) return Elem(f.exp[(f.q - 1 - f.log[a.index]) % (f.q - 1)]);
    return Elem(pow_poly(a.index, f.q - 2));
}

inline Elem Field::pow(Elem a, std::uint64_t e) const {
    if (a.is_zero()) return e == 0 ? one() : zero();
    const Impl& f = *impl_;
    if (f.tables) return Elem(f.exp[mulmod(f.log[a.index], e % (f.q - 1), f.q - 1)]);
    return Elem(pow_poly(a.index, e % (f.q - 1)));
}

inline Elem Field::alpha_pow(std::uint64_t t) const {
    const Impl& f = *impl_;
    if (f.tables) return Elem(f.exp[t % (f.q - 1)]);
    return Elem(pow_poly(f.alpha, t % (f.q - 1)));
}

inline std::uint32_t Field::trace(Elem x) const {
    const Impl& f = *impl_;
    if (f.tables) return f.trace[x.index];
    std::uint32_t v = x.index, acc = 0;
    for (unsigned i = 0; i < f.m; ++i) {
        acc = (acc + (v % f.p) * f.trace_basis[i]) % f.p;
        v /= f.p;
    }
    return acc;
}

inline Elem Field::relative_trace(unsigned d, Elem x) const {
    if (d == 0 || m() % d != 0)
        throw Error(ErrorCode::NotDivisor, std::to_string(d) + " does not divide " + std::to_string(m()));
    const std::uint64_t step = ipow(p(), d);
    Elem sum = zero(), cur = x;
    for (unsigned i = 0; i < m() / d; ++i) {
        sum = add(sum, cur);
        cur = pow(cur, step);
    }
    return sum;
}

inline std::uint64_t Field::dlog(Elem x) const {
    if (x.is_zero()) throw Error(ErrorCode::LogOfZero, "discrete log of zero");
    const Impl& f = *impl_;
    if (f.tables) return f.log[x.index];
    std::uint32_t gamma = x.index;
    for (std::uint64_t i = 0; i <= f.bsgs_step; ++i) {
        auto it = f.bsgs_baby.find(gamma);
        if (it != f.bsgs_baby.end()) return (i * f.bsgs_step + it->second) % (f.q - 1);
        gamma = mul_poly(gamma, f.bsgs_giant);
    }
    throw Error(ErrorCode::PreconditionFailed, "discrete log not found; modulus is not primitive");
}

inline bool Field::is_square(Elem x) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "is_square is defined on nonzero elements");
    if (p() == 2) return true;
    const Impl& f = *impl_;
    if (f.tables) return f.log[x.index] % 2 == 0;
    return pow_poly(x.index, (f.q - 1) / 2) == 1;
}

inline const std::vector<std::uint32_t>& Field::trace_by_log() const {
    const Impl& f = *impl_;
    std::call_once(f.trace_log_once, [&] {
        f.trace_log.resize(f.q - 1);
        std::uint32_t cur = 1;
        for (std::uint32_t t = 0; t + 1 < f.q; ++t) {
            f.trace_log[t] = trace(Elem(cur));
            cur = f.tables ? f.exp[(t + 1) % (f.q - 1)] : mul_poly(cur, f.alpha);
        }
    });
    return f.trace_log;
}

inline std::string Field::format(Elem x) const {
    if (x.is_zero()) return "0";
    return "a^" + std::to_string(dlog(x));
}

}  // namespace defset
