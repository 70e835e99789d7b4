#pragma once

// The code C_D = {(Tr(x d_1), ..., Tr(x d_n)) : x in GF(q)} of a defining
// set, its exact weight enumerator by exhaustive enumeration, and the
// bound / identity checks applied to it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "defset/cyclotomic.hpp"
#include "defset/designs.hpp"
#include "defset/error.hpp"
#include "defset/field.hpp"
#include "defset/numeric.hpp"

namespace defset {

struct CodeLimits {
    std::uint64_t max_work = std::uint64_t{1} << 34;  ///< q * n trace evaluations
    unsigned threads = 0;                             ///< 0: hardware concurrency
};

class DefiningSetCode {
public:
    explicit DefiningSetCode(DefiningSet D) : D_(std::move(D)) {
        if (D_.elems.empty()) throw Error(ErrorCode::EmptySet, "a code needs a nonempty defining set");
    }

    const Field& field() const { return D_.field; }
    const DefiningSet& defining_set() const { return D_; }
    std::size_t length() const { return D_.elems.size(); }

private:
    DefiningSet D_;
};

struct WeightEnumerator {
    std::uint32_t p = 0;
    unsigned m = 0;
    std::uint64_t n = 0;
    unsigned k = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  ///< weight -> A_w, A_0 = 1
    /// Number of x in GF(q) giving the zero codeword (p^{m-k}).
    std::uint64_t kernel_size = 1;

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto [w, a] : counts) s += a;
        return s;
    }
    std::uint64_t count(std::uint64_t w) const {
        auto it = counts.find(w);
        return it == counts.end() ? 0 : it->second;
    }
    std::size_t nonzero_weight_count() const { return counts.size() - (counts.count(0) ? 1 : 0); }
    /// Weight multiset over all x in GF(q)* (each codeword repeated kernel_size times).
    std::map<std::uint64_t, std::uint64_t> element_histogram() const {
        std::map<std::uint64_t, std::uint64_t> h;
        for (auto [w, a] : counts) h[w] = a * kernel_size;
        h[0] -= 1;
        if (h[0] == 0) h.erase(0);
        return h;
    }

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// "1+12z^2+8z^3+6z^4".
inline std::string to_polynomial(const std::map<std::uint64_t, std::uint64_t>& counts) {
    std::ostringstream os;
    bool first = true;
    for (auto [w, a] : counts) {
        if (a == 0) continue;
        if (!first) os << "+";
        first = false;
        if (w == 0)
            os << a;
        else
            os << (a == 1 ? "" : std::to_string(a)) << "z^" << w;
    }
    return os.str();
}

inline std::vector<std::uint32_t> codeword(const DefiningSetCode& C, Elem x) {
    const Field& F = C.field();
    std::vector<std::uint32_t> c;
    c.reserve(C.length());
    for (auto d : C.defining_set().elems) c.push_back(F.trace(F.mul(x, d)));
    return c;
}

inline std::uint64_t hamming_weight(const std::vector<std::uint32_t>& c) {
    return static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [](auto v) { return v != 0; }));
}

/// Generator matrix: row i is the codeword of alpha^i, i < m.
inline std::vector<std::vector<std::uint32_t>> generator_matrix(const DefiningSetCode& C) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (unsigned i = 0; i < C.field().m(); ++i) rows.push_back(codeword(C, C.field().alpha_pow(i)));
    return rows;
}

inline unsigned generator_rank(const DefiningSetCode& C) { return rank_mod_p(generator_matrix(C), C.field().p()); }

namespace detail {

inline WeightEnumerator finish_enumerator(const DefiningSetCode& C, std::vector<std::uint64_t> hist) {
    const Field& F = C.field();
    WeightEnumerator E;
    E.p = F.p();
    E.m = F.m();
    E.n = C.length();
    const std::uint64_t kernel = hist[0];
    if (kernel == 0 || F.q() % kernel != 0) throw std::logic_error("zero-weight count does not divide q");
    unsigned k = 0;
    if (!exact_log(F.q() / kernel, F.p(), k)) throw std::logic_error("number of distinct codewords is not a power of p");
    const unsigned rank = generator_rank(C);
    if (rank != k)
        throw std::logic_error("dimension mismatch: distinct codewords give " + std::to_string(k) +
                               ", generator rank gives " + std::to_string(rank));
    E.k = k;
    E.kernel_size = kernel;
    for (std::uint64_t w = 0; w < hist.size(); ++w) {
        if (hist[w] == 0) continue;
        if (hist[w] % kernel != 0) throw std::logic_error("weight count not divisible by the kernel size");
        E.counts[w] = hist[w] / kernel;
    }
    return E;
}

}  // namespace detail

/// Exact weight enumerator. Codeword weights are counted for every x via the
/// trace-by-logarithm table: Tr(alpha^s d) = T[(s + log d) mod (q-1)].
inline WeightEnumerator weight_enumerator(const DefiningSetCode& C, CodeLimits limits = {}) {
    const Field& F = C.field();
    const std::uint64_t n = C.length();
    if (std::uint64_t{F.q()} * n > limits.max_work)
        throw Error(ErrorCode::SizeLimit, "q * n = " + std::to_string(std::uint64_t{F.q()} * n) +
                                              " exceeds the work budget " + std::to_string(limits.max_work));
    const std::uint32_t order = F.q() - 1;
    const auto& T = F.trace_by_log();
    std::vector<std::uint32_t> logs;
    logs.reserve(n);
    for (auto d : C.defining_set().elems)
        if (!d.is_zero()) logs.push_back(static_cast<std::uint32_t>(F.dlog(d)));

    unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, order / 1024)));
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 1, 0));
    auto work = [&](unsigned id) {
        auto& h = partial[id];
        const std::uint64_t begin = order * std::uint64_t{id} / threads;
        const std::uint64_t end = order * std::uint64_t{id + 1} / threads;
        for (std::uint64_t s = begin; s < end; ++s) {
            std::uint64_t w = 0;
            for (auto t : logs) {
                std::uint64_t idx = s + t;
                if (idx >= order) idx -= order;
                w += T[idx] != 0;
            }
            ++h[w];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
        for (auto& t : pool) t.join();
    }
    std::vector<std::uint64_t> hist(n + 1, 0);
    hist[0] = 1;  // x = 0
    for (const auto& h : partial)
        for (std::uint64_t w = 0; w <= n; ++w) hist[w] += h[w];
    return detail::finish_enumerator(C, std::move(hist));
}

/// Straight from the definition: every codeword built coordinate by
/// coordinate. Slow; used to cross-check the fast kernel.
inline WeightEnumerator weight_enumerator_reference(const DefiningSetCode& C) {
    const Field& F = C.field();
    std::vector<std::uint64_t> hist(C.length() + 1, 0);
    for (std::uint32_t x = 0; x < F.q(); ++x) ++hist[hamming_weight(codeword(C, Elem(x)))];
    return detail::finish_enumerator(C, std::move(hist));
}

/// ((p-1) n - sum_{y in GF(p)*} chi_1(y x D)) / p, evaluated exactly.
inline std::uint64_t weight_via_charsum(const DefiningSetCode& C, Elem x) {
    const Field& F = C.field();
    const auto& elems = C.defining_set().elems;
    const CycInt g = galois_char_sum(F, elems, x);
    const auto s = g.to_integer();
    if (!s) throw Error(ErrorCode::NonRationalSum, "Galois orbit sum is not rational: " + g.to_string());
    const BigInt num = BigInt(F.p() - 1) * C.length() - *s;
    if (num % F.p() != 0) throw Error(ErrorCode::NonIntegralWeight, "weight numerator not divisible by p");
    return static_cast<std::uint64_t>(num / F.p());
}

inline std::uint64_t minimum_distance(const WeightEnumerator& E) {
    if (E.k == 0) throw Error(ErrorCode::ZeroDimensional, "zero-dimensional code has no minimum distance");
    for (auto [w, a] : E.counts)
        if (w > 0 && a > 0) return w;
    throw Error(ErrorCode::ZeroDimensional, "no nonzero codeword");
}

enum class GriesmerStatus { Meets, Satisfies, Violates };

inline std::string to_string(GriesmerStatus s) {
    switch (s) {
        case GriesmerStatus::Meets: return "meets";
        case GriesmerStatus::Satisfies: return "satisfies";
        case GriesmerStatus::Violates: return "violates";
    }
    return "?";
}

/// sum_{i<k} ceil(d / p^i).
inline std::uint64_t griesmer_bound(unsigned k, std::uint64_t d, std::uint32_t p) {
    std::uint64_t g = 0, pi = 1;
    for (unsigned i = 0; i < k; ++i) {
        g += (d + pi - 1) / pi;
        if (pi <= d) pi *= p;  // past d every further term is 1
    }
    return g;
}

inline GriesmerStatus griesmer_check(std::uint64_t n, unsigned k, std::uint64_t d, std::uint32_t p) {
    if (k < 1) throw Error(ErrorCode::ZeroDimensional, "Griesmer bound needs k >= 1");
    const std::uint64_t g = griesmer_bound(k, d, p);
    if (n == g) return GriesmerStatus::Meets;
    return n > g ? GriesmerStatus::Satisfies : GriesmerStatus::Violates;
}

struct DualDistanceWitness {
    bool at_least_2 = false;  ///< no zero coordinate
    bool at_least_3 = false;  ///< additionally no two GF(p)-proportional coordinates
};

inline DualDistanceWitness dual_distance_witness(const DefiningSetCode& C) {
    const Field& F = C.field();
    DualDistanceWitness w;
    if (C.defining_set().contains_zero()) return w;
    w.at_least_2 = true;
    // d and c d (c in GF(p)*) share dlog modulo (q-1)/(p-1).
    const std::uint64_t classes = (F.q() - 1) / (F.p() - 1);
    std::vector<char> seen(classes, 0);
    w.at_least_3 = true;
    for (auto d : C.defining_set().elems) {
        auto c = F.dlog(d) % classes;
        if (seen[c]) {
            w.at_least_3 = false;
            break;
        }
        seen[c] = 1;
    }
    return w;
}

struct PlessReport {
    bool count_ok = false;                ///< sum A_w = p^k
    std::optional<bool> first_moment;     ///< checked when dual distance >= 2
    std::optional<bool> second_moment;    ///< checked when dual distance >= 3
    bool ok() const { return count_ok && first_moment.value_or(true) && second_moment.value_or(true); }
};

inline PlessReport pless_moment_check(const WeightEnumerator& E, const DualDistanceWitness& W) {
    if (E.k < 1) throw Error(ErrorCode::ZeroDimensional, "moment identities need k >= 1");
    PlessReport r;
    BigInt s0 = 0, s1 = 0, s2 = 0;
    for (auto [w, a] : E.counts) {
        s0 += a;
        s1 += BigInt(w) * a;
        s2 += BigInt(w) * w * a;
    }
    const BigInt p = E.p, n = E.n;
    const BigInt pk = boost::multiprecision::pow(p, E.k);
    r.count_ok = s0 == pk;
    if (W.at_least_2) r.first_moment = s1 == n * (p - 1) * (pk / p);
    if (W.at_least_3 && E.k >= 2) {
        const BigInt pk2 = boost::multiprecision::pow(p, E.k - 2);
        r.second_moment = s2 == n * (p - 1) * pk2 * (n * (p - 1) + 1);
    }
    return r;
}

}  // namespace defset
