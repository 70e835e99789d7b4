#pragma once

// Difference functions, (almost) difference set classification and the
// defining-set families: Paley and skew sets, images of functions, the
// Maschietti hyperoval sets, the ternary HKM sets and Boolean supports.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "defset/error.hpp"
#include "defset/field.hpp"
#include "defset/funcspec.hpp"

namespace defset {

/// Either (GF(q), +) or Z_v. Elements are integers in [0, order); for the
/// additive group they are field element indices.
class AbelianGroup {
public:
    static AbelianGroup additive(const Field& F) { return AbelianGroup(F); }
    static AbelianGroup cyclic(std::uint64_t v) {
        if (v == 0) throw Error(ErrorCode::PreconditionFailed, "cyclic group of order 0");
        return AbelianGroup(v);
    }

    bool is_cyclic() const { return !field_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t identity() const { return 0; }
    bool contains(std::uint64_t x) const { return x < order_; }

    std::uint64_t op(std::uint64_t a, std::uint64_t b) const {
        if (field_) return field_->add(Elem(static_cast<std::uint32_t>(a)), Elem(static_cast<std::uint32_t>(b))).index;
        const std::uint64_t s = a + b;
        return s >= order_ ? s - order_ : s;
    }
    std::uint64_t neg(std::uint64_t a) const {
        if (field_) return field_->neg(Elem(static_cast<std::uint32_t>(a))).index;
        return a == 0 ? 0 : order_ - a;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return op(a, neg(b)); }

private:
    explicit AbelianGroup(const Field& F) : field_(F), order_(F.q()) {}
    explicit AbelianGroup(std::uint64_t v) : order_(v) {}

    std::optional<Field> field_;
    std::uint64_t order_;
};

struct DifferenceSetParams {
    std::uint64_t v, k, lambda;
    friend bool operator==(const DifferenceSetParams&, const DifferenceSetParams&) = default;
};

struct AlmostDifferenceSetParams {
    std::uint64_t v, k, lambda, t;
    friend bool operator==(const AlmostDifferenceSetParams&, const AlmostDifferenceSetParams&) = default;
};

struct IrregularDesign {
    std::uint64_t v, k;
    std::map<std::uint64_t, std::uint64_t> spectrum;  ///< diff value -> number of nonzero x
    friend bool operator==(const IrregularDesign&, const IrregularDesign&) = default;
};

using DesignClass = std::variant<DifferenceSetParams, AlmostDifferenceSetParams, IrregularDesign>;

inline std::string to_string(const DesignClass& c) {
    struct V {
        std::string operator()(const DifferenceSetParams& d) const {
            return "DifferenceSet(" + std::to_string(d.v) + "," + std::to_string(d.k) + "," +
                   std::to_string(d.lambda) + ")";
        }
        std::string operator()(const AlmostDifferenceSetParams& d) const {
            return "AlmostDifferenceSet(" + std::to_string(d.v) + "," + std::to_string(d.k) + "," +
                   std::to_string(d.lambda) + "," + std::to_string(d.t) + ")";
        }
        std::string operator()(const IrregularDesign& d) const {
            std::string s = "Irregular(v=" + std::to_string(d.v) + ",k=" + std::to_string(d.k) + ",{";
            bool first = true;
            for (auto [val, cnt] : d.spectrum) {
                if (!first) s += ",";
                first = false;
                s += std::to_string(val) + ":" + std::to_string(cnt);
            }
            return s + "})";
        }
    };
    return std::visit(V{}, c);
}

namespace detail {

inline std::vector<char> membership(const AbelianGroup& G, std::span<const std::uint64_t> D) {
    std::vector<char> in(G.order(), 0);
    for (auto d : D) {
        if (!G.contains(d))
            throw Error(ErrorCode::ElementNotInGroup, std::to_string(d) + " is not in the group");
        in[d] = 1;
    }
    return in;
}

}  // namespace detail

/// |D ∩ (D + x)|.
inline std::uint64_t difference_function(const AbelianGroup& G, std::span<const std::uint64_t> D, std::uint64_t x) {
    if (!G.contains(x)) throw Error(ErrorCode::ElementNotInGroup, std::to_string(x) + " is not in the group");
    const auto in = detail::membership(G, D);
    std::uint64_t count = 0;
    for (auto y : D)
        if (in[G.sub(y, x)]) ++count;
    return count;
}

/// diff_D(x) for every x, by counting ordered pairs (a, b) of D with a - b = x.
inline std::vector<std::uint64_t> difference_spectrum(const AbelianGroup& G, std::span<const std::uint64_t> D) {
    detail::membership(G, D);
    std::vector<std::uint64_t> diff(G.order(), 0);
    for (auto a : D)
        for (auto b : D) ++diff[G.sub(a, b)];
    return diff;
}

inline DesignClass classify_design(const AbelianGroup& G, std::span<const std::uint64_t> D) {
    if (D.empty()) throw Error(ErrorCode::EmptySet, "cannot classify an empty set");
    std::vector<std::uint64_t> sorted(D.begin(), D.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::DuplicateElement, "set has repeated elements");

    const auto diff = difference_spectrum(G, D);
    std::map<std::uint64_t, std::uint64_t> spectrum;
    for (std::uint64_t x = 1; x < G.order(); ++x) ++spectrum[diff[x]];
    const std::uint64_t v = G.order(), k = D.size();
    if (spectrum.size() == 1) return DifferenceSetParams{v, k, spectrum.begin()->first};
    if (spectrum.size() == 2) {
        auto lo = *spectrum.begin();
        auto hi = *spectrum.rbegin();
        if (hi.first == lo.first + 1) return AlmostDifferenceSetParams{v, k, lo.first, lo.second};
    }
    return IrregularDesign{v, k, std::move(spectrum)};
}

inline std::vector<std::uint64_t> complement(const AbelianGroup& G, std::span<const std::uint64_t> D) {
    const auto in = detail::membership(G, D);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < G.order(); ++x)
        if (!in[x]) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------
// Defining sets

struct DefiningSet {
    Field field;
    std::vector<Elem> elems;
    std::string family = "custom";

    std::size_t size() const { return elems.size(); }
    bool contains_zero() const { return std::find(elems.begin(), elems.end(), Elem(0)) != elems.end(); }

    /// Element indices, as members of the additive group of the field.
    std::vector<std::uint64_t> indices() const {
        std::vector<std::uint64_t> out;
        out.reserve(elems.size());
        for (auto e : elems) out.push_back(e.index);
        return out;
    }
};

/// Sorts ascending and rejects repeated elements.
inline DefiningSet make_defining_set(const Field& F, std::vector<Elem> elems, std::string family = "custom") {
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw Error(ErrorCode::DuplicateElement, "defining set has repeated elements");
    for (auto e : elems)
        if (e.index >= F.q()) throw Error(ErrorCode::ElementNotInGroup, "element outside the field");
    return DefiningSet{F, std::move(elems), std::move(family)};
}

/// Maps nonzero field elements to dlog(x) mod n, i.e. into the cyclic quotient
/// GF(q)* / <alpha^n>. Elements that collide in the quotient are rejected.
inline std::vector<std::uint64_t> to_cyclic(const Field& F, std::span<const Elem> elems, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    out.reserve(elems.size());
    for (auto e : elems) out.push_back(F.dlog(e) % n);
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::DuplicateElement, "elements collide in the cyclic quotient");
    return out;
}

inline DefiningSet paley_set(const Field& F) {
    if (F.p() == 2) throw Error(ErrorCode::EvenCharacteristic, "the Paley set needs odd characteristic");
    std::vector<Elem> out;
    for (std::uint32_t i = 1; i < F.q(); ++i)
        if (F.is_square(Elem(i))) out.push_back(Elem(i));
    return make_defining_set(F, std::move(out), "paley");
}

/// True iff D, -D and {0} partition GF(q).
inline bool is_skew_set(const Field& F, std::span<const Elem> D) {
    std::vector<int> hits(F.q(), 0);
    hits[0] = 1;
    for (auto d : D) {
        ++hits[d.index];
        ++hits[F.neg(d).index];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

/// {f(x) : x in GF(q)} \ {0}.
inline DefiningSet image_set(const Field& F, const FuncSpec& f, std::string family = "qf-image") {
    if (f.target != FuncTarget::Self)
        throw Error(ErrorCode::PreconditionFailed, "image_set needs a GF(q)-valued function");
    const auto values = tabulate(F, f);
    std::vector<char> seen(F.q(), 0);
    std::vector<Elem> out;
    for (auto v : values)
        if (v != 0 && !seen[v]) {
            seen[v] = 1;
            out.push_back(Elem(v));
        }
    return make_defining_set(F, std::move(out), std::move(family));
}

/// e if f(0) = 0, f has no other zeros, and every value of f on GF(q)* has
/// exactly e preimages.
inline std::optional<std::uint64_t> eto1_check(const Field& F, const FuncSpec& f) {
    if (f.target != FuncTarget::Self)
        throw Error(ErrorCode::PreconditionFailed, "eto1_check needs a GF(q)-valued function");
    const auto values = tabulate(F, f);
    if (values[0] != 0) return std::nullopt;
    std::vector<std::uint64_t> count(F.q(), 0);
    for (std::uint32_t x = 1; x < F.q(); ++x) {
        if (values[x] == 0) return std::nullopt;
        ++count[values[x]];
    }
    std::uint64_t e = 0;
    for (auto c : count) {
        if (c == 0) continue;
        if (e == 0) e = c;
        if (c != e) return std::nullopt;
    }
    return e;
}

enum class HyperovalCase { Singer, Segre, GlynnI, GlynnII };

inline std::string to_string(HyperovalCase c) {
    switch (c) {
        case HyperovalCase::Singer: return "singer";
        case HyperovalCase::Segre: return "segre";
        case HyperovalCase::GlynnI: return "glynn1";
        case HyperovalCase::GlynnII: return "glynn2";
    }
    return "?";
}

/// The exponent pair (i, j) with rho = 2^i + 2^j for the quadratic cases
/// (Segre and Glynn I); Glynn I uses sigma = (m+1)/2 and 4 pi = 1 (mod m).
inline std::pair<unsigned, unsigned> hyperoval_exponent_pair(unsigned m, HyperovalCase c) {
    if (m % 2 == 0) throw Error(ErrorCode::EvenDegree, "hyperoval sets need odd m");
    switch (c) {
        case HyperovalCase::Segre: return {1, 2};
        case HyperovalCase::GlynnI: {
            const unsigned sigma = (m + 1) / 2;
            unsigned pi = 0;
            while ((4 * pi) % m != 1 % m) ++pi;
            return {std::min(sigma, pi), std::max(sigma, pi)};
        }
        default: throw Error(ErrorCode::PreconditionFailed, to_string(c) + " exponent is not of the form 2^i + 2^j");
    }
}

inline std::uint64_t hyperoval_rho(unsigned m, HyperovalCase c) {
    if (m % 2 == 0) throw Error(ErrorCode::EvenDegree, "hyperoval sets need odd m");
    const unsigned sigma = (m + 1) / 2;
    switch (c) {
        case HyperovalCase::Singer: return 2;
        case HyperovalCase::Segre: return 6;
        case HyperovalCase::GlynnI: {
            auto [i, j] = hyperoval_exponent_pair(m, c);
            return (std::uint64_t{1} << i) + (std::uint64_t{1} << j);
        }
        case HyperovalCase::GlynnII: return 3 * (std::uint64_t{1} << sigma) + 4;
    }
    return 0;
}

/// Gamma_rho(x) = x^rho + x as a function spec.
inline FuncSpec gamma_function(const Field& F, std::uint64_t rho) {
    return FuncSpec{{{F.one(), rho}, {F.one(), 1}}, FuncTarget::Self};
}

/// True iff every value of the tabulated map has exactly two preimages.
inline bool is_two_to_one(std::span<const std::uint32_t> values, std::uint32_t q) {
    std::vector<std::uint32_t> count(q, 0);
    for (auto v : values) ++count[v];
    return std::all_of(count.begin(), count.end(), [](auto c) { return c == 0 || c == 2; });
}

/// {x^rho + x : x in GF(2^m)} \ {0} for the four hyperoval exponents.
inline DefiningSet maschietti_set(const Field& F, HyperovalCase c) {
    if (F.p() != 2) throw Error(ErrorCode::PreconditionFailed, "hyperoval sets live in characteristic 2");
    const std::uint64_t rho = hyperoval_rho(F.m(), c);
    const auto values = tabulate(F, gamma_function(F, rho));
    if (!is_two_to_one(values, F.q()))
        throw Error(ErrorCode::NotTwoToOne, "x^" + std::to_string(rho) + " + x is not two-to-one");
    std::vector<char> seen(F.q(), 0);
    std::vector<Elem> out;
    for (auto v : values)
        if (v != 0 && !seen[v]) {
            seen[v] = 1;
            out.push_back(Elem(v));
        }
    return make_defining_set(F, std::move(out), "maschietti-" + to_string(c));
}

/// l = 3^{2h} - 3^h + 1.
inline std::uint64_t hkm_exponent(unsigned h) { return ipow(3, 2 * h) - ipow(3, h) + 1; }

/// Tr(x + x^l) on GF(3^{3h}).
inline FuncSpec hkm_function(const Field& F, unsigned h) {
    return FuncSpec{{{F.one(), 1}, {F.one(), hkm_exponent(h)}}, FuncTarget::Trace};
}

/// {alpha^t : Tr(alpha^t + alpha^{t l}) = 0, 0 <= t < (3^m - 1)/2}, m = 3h.
inline DefiningSet hkm_set(const Field& F, unsigned h) {
    if (h == 0 || F.p() != 3 || F.m() != 3 * h)
        throw Error(ErrorCode::PreconditionFailed, "hkm_set needs GF(3^{3h})");
    const std::uint64_t ell = hkm_exponent(h);
    const std::uint64_t n = (std::uint64_t{F.q()} - 1) / 2;
    std::vector<Elem> out;
    for (std::uint64_t t = 0; t < n; ++t) {
        const Elem x = F.alpha_pow(t);
        if (F.trace(F.add(x, F.pow(x, ell))) == 0) out.push_back(x);
    }
    return make_defining_set(F, std::move(out), "hkm");
}

inline DefiningSet hkm_set(unsigned h, FieldLimits limits = {}) {
    if (h == 0) throw Error(ErrorCode::PreconditionFailed, "h must be positive");
    return hkm_set(Field(3, 3 * h, std::nullopt, limits), h);
}

/// {x : f(x) = 1} for a Boolean function given in trace form.
inline DefiningSet boolean_support(const Field& F, const FuncSpec& f) {
    if (F.p() != 2) throw Error(ErrorCode::PreconditionFailed, "Boolean supports live in characteristic 2");
    if (f.target != FuncTarget::Trace) throw Error(ErrorCode::PreconditionFailed, "Boolean function must be trace-valued");
    const auto values = tabulate(F, f);
    std::vector<Elem> out;
    for (std::uint32_t x = 0; x < F.q(); ++x)
        if (values[x] == 1) out.push_back(Elem(x));
    return make_defining_set(F, std::move(out), "bool-support");
}

/// Support of an arbitrary tabulated Boolean function.
inline DefiningSet support_of(const Field& F, std::span<const std::uint8_t> truth_table) {
    std::vector<Elem> out;
    for (std::uint32_t x = 0; x < F.q(); ++x)
        if (truth_table[x]) out.push_back(Elem(x));
    return make_defining_set(F, std::move(out), "bool-support");
}

/// Counts of x with f(x) = 0, split by Tr(bx) = a, for f in trace form.
inline std::vector<std::uint64_t> joint_counts(const Field& F, std::span<const Elem> zeros_of_f, Elem b) {
    std::vector<std::uint64_t> out(F.p(), 0);
    for (auto x : zeros_of_f) ++out[F.trace(F.mul(b, x))];
    return out;
}

inline std::vector<Elem> zero_set(const Field& F, const FuncSpec& f) {
    if (f.target != FuncTarget::Trace) throw Error(ErrorCode::PreconditionFailed, "zero_set needs a GF(p)-valued function");
    const auto values = tabulate(F, f);
    std::vector<Elem> out;
    for (std::uint32_t x = 0; x < F.q(); ++x)
        if (values[x] == 0) out.push_back(Elem(x));
    return out;
}

inline std::vector<std::uint64_t> joint_counts(const Field& F, const FuncSpec& f, Elem b) {
    const auto zeros = zero_set(F, f);
    return joint_counts(F, zeros, b);
}

}  // namespace defset
