#pragma once

// Exact arithmetic in Z[zeta_p] and exact additive character sums.
//
// A value is stored on the basis zeta^1, ..., zeta^{p-1}; the constant 1 is
// -(zeta + ... + zeta^{p-1}). That basis is a Z-basis, so equality of values
// is equality of coefficient vectors, and the Galois group acts by permuting
// coordinates. For p = 2 the single basis vector is zeta_2 = -1.

#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "defset/error.hpp"
#include "defset/field.hpp"

namespace defset {

using BigInt = boost::multiprecision::cpp_int;

class CycInt {
public:
    explicit CycInt(std::uint32_t p) : p_(p), coeffs_(p - 1) {
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }

    /// zeta_p^k; k = 0 gives 1.
    static CycInt root_power(std::uint32_t p, std::int64_t k) {
        CycInt r(p);
        const auto e = static_cast<std::uint32_t>(floor_mod(k, p));
        if (e == 0)
            for (auto& c : r.coeffs_) c = -1;
        else
            r.coeffs_[e - 1] = 1;
        return r;
    }

    static CycInt integer(std::uint32_t p, const BigInt& n) {
        CycInt r(p);
        for (auto& c : r.coeffs_) c = -n;
        return r;
    }

    /// Builds sum_t counts[t] * zeta^t from a histogram over GF(p).
    static CycInt from_histogram(std::uint32_t p, std::span<const std::int64_t> counts) {
        CycInt r(p);
        for (std::uint32_t k = 1; k < p; ++k) r.coeffs_[k - 1] = BigInt(counts[k]) - counts[0];
        return r;
    }

    std::uint32_t prime() const { return p_; }
    /// Coefficient of zeta^k, k in [1, p).
    const BigInt& coeff(std::uint32_t k) const { return coeffs_.at(k - 1); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    CycInt& operator+=(const CycInt& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycInt& operator-=(const CycInt& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.check_same(b);
        const std::uint32_t p = a.p_;
        // acc[e] collects the coefficient of zeta^e, e in [0, p); zeta^0 is
        // then folded back in via 1 = -(zeta + ... + zeta^{p-1}).
        std::vector<BigInt> acc(p);
        for (std::uint32_t i = 1; i < p; ++i) {
            if (a.coeffs_[i - 1] == 0) continue;
            for (std::uint32_t j = 1; j < p; ++j) acc[(i + j) % p] += a.coeffs_[i - 1] * b.coeffs_[j - 1];
        }
        CycInt r(p);
        for (std::uint32_t k = 1; k < p; ++k) r.coeffs_[k - 1] = acc[k] - acc[0];
        return r;
    }

    /// Applies zeta -> zeta^s, s a unit mod p.
    CycInt galois(std::uint32_t s) const {
        CycInt r(p_);
        for (std::uint32_t k = 1; k < p_; ++k) r.coeffs_[(std::uint64_t(k) * s % p_) - 1] = coeffs_[k - 1];
        return r;
    }

    /// The integer this value equals, if it is rational.
    std::optional<BigInt> to_integer() const {
        for (const auto& c : coeffs_)
            if (c != coeffs_.front()) return std::nullopt;
        return BigInt(-coeffs_.front());
    }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

    /// Debug form "c1*z^1 + c2*z^2 + ...".
    std::string to_string() const {
        std::ostringstream os;
        for (std::uint32_t k = 1; k < p_; ++k) {
            if (k > 1) os << " + ";
            os << coeffs_[k - 1] << "*z^" << k;
        }
        return os.str();
    }

private:
    void check_same(const CycInt& o) const {
        if (o.p_ != p_)
            throw Error(ErrorCode::MixedPrimes,
                        "cyclotomic values over p=" + std::to_string(p_) + " and p=" + std::to_string(o.p_));
    }

    std::uint32_t p_;
    std::vector<BigInt> coeffs_;
};

inline CycInt cyc_root_power(std::uint32_t p, std::int64_t k) { return CycInt::root_power(p, k); }
inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline std::optional<BigInt> is_rational(const CycInt& a) { return a.to_integer(); }

/// sum_{x in S} zeta_p^{Tr(b x)}.
inline CycInt char_sum(const Field& F, std::span<const Elem> S, Elem b) {
    std::vector<std::int64_t> hist(F.p(), 0);
    for (Elem x : S) ++hist[F.trace(F.mul(b, x))];
    return CycInt::from_histogram(F.p(), hist);
}

/// sum_{y in GF(p)*} chi_1(y b S): the Galois orbit sum of char_sum(F, S, b),
/// always rational.
inline CycInt galois_char_sum(const Field& F, std::span<const Elem> S, Elem b) {
    CycInt total(F.p());
    for (std::uint32_t y = 1; y < F.p(); ++y) total += char_sum(F, S, F.mul(F.from_int(y), b));
    return total;
}

/// sum_{x in GF(q)} zeta_p^{values[x]} for a function tabulated as GF(p) values.
inline CycInt exponential_sum(std::uint32_t p, std::span<const std::uint32_t> values) {
    std::vector<std::int64_t> hist(p, 0);
    for (auto v : values) ++hist[v % p];
    return CycInt::from_histogram(p, hist);
}

}  // namespace defset
