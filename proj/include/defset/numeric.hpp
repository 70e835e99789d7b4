#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "defset/error.hpp"

namespace defset {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors, ascending. Trial division is enough for q ≤ 2^26.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Integer power; throws SizeLimit on overflow of 64 bits.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw Error(ErrorCode::SizeLimit, "integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

inline std::int64_t ipow_signed(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

/// Modular inverse of a modulo n, or 0 when gcd(a, n) != 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return 0;
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

/// Smallest e ≥ 0 with base^e = n, if n is an exact power of base.
inline bool exact_log(std::uint64_t n, std::uint64_t base, unsigned& e) {
    e = 0;
    if (n == 0) return false;
    while (n % base == 0) {
        n /= base;
        ++e;
    }
    return n == 1;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

/// Rank over GF(p) of a dense matrix with entries in [0, p). The matrix is
/// taken by value and reduced in place.
inline unsigned rank_mod_p(std::vector<std::vector<std::uint32_t>> a, std::uint32_t p) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a.front().size();
    unsigned rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const std::uint64_t inv = inverse_mod(a[rank][c] % p, p);
        for (auto& v : a[rank]) v = static_cast<std::uint32_t>(std::uint64_t(v) * inv % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const std::uint64_t factor = a[r][c] % p;
            if (factor == 0) continue;
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = static_cast<std::uint32_t>((a[r][k] + (p - factor) * a[rank][k]) % p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace defset
