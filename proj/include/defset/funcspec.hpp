#pragma once

// Polynomial functions x -> sum c_i x^{e_i} on GF(q), optionally followed by
// the absolute trace, and the textual term syntax used on the command line.

#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "defset/error.hpp"
#include "defset/field.hpp"

namespace defset {

enum class FuncTarget {
    Self,   ///< GF(q) -> GF(q)
    Trace,  ///< GF(q) -> GF(p), x -> Tr(sum c_i x^{e_i})
};

struct Term {
    Elem coeff;
    std::uint64_t exponent = 1;
};

struct FuncSpec {
    std::vector<Term> terms;
    FuncTarget target = FuncTarget::Self;

    static FuncSpec monomial(Elem c, std::uint64_t e, FuncTarget t = FuncTarget::Self) { return {{{c, e}}, t}; }

    FuncSpec with_target(FuncTarget t) const {
        FuncSpec r = *this;
        r.target = t;
        return r;
    }

    void validate() const {
        if (terms.empty()) throw Error(ErrorCode::PreconditionFailed, "function has no terms");
        std::set<std::uint64_t> seen;
        for (const auto& t : terms) {
            if (t.exponent == 0) throw Error(ErrorCode::PreconditionFailed, "exponents must be positive");
            if (!seen.insert(t.exponent).second)
                throw Error(ErrorCode::PreconditionFailed, "repeated exponent " + std::to_string(t.exponent));
        }
    }
};

/// sum c_i x^{e_i}, ignoring the target.
inline Elem eval_poly(const Field& F, const FuncSpec& f, Elem x) {
    Elem acc = F.zero();
    if (x.is_zero()) return acc;
    for (const auto& t : f.terms) acc = F.add(acc, F.mul(t.coeff, F.pow(x, t.exponent)));
    return acc;
}

/// Evaluates f; for a trace target the GF(p) value is returned embedded as
/// a prime-subfield element.
inline Elem eval(const Field& F, const FuncSpec& f, Elem x) {
    const Elem v = eval_poly(F, f, x);
    return f.target == FuncTarget::Trace ? F.from_int(F.trace(v)) : v;
}

/// Values of f over the whole field, by element index. Trace targets yield
/// integers in [0, p), Self targets yield element indices.
inline std::vector<std::uint32_t> tabulate(const Field& F, const FuncSpec& f) {
    f.validate();
    std::vector<std::uint32_t> out(F.q());
    for (std::uint32_t i = 0; i < F.q(); ++i) {
        const Elem v = eval_poly(F, f, Elem(i));
        out[i] = f.target == FuncTarget::Trace ? F.trace(v) : v.index;
    }
    return out;
}

namespace detail {

class TermParser {
public:
    TermParser(const Field& F, std::string_view src, std::optional<Elem> u) : F_(F), s_(src), u_(u) {}

    std::vector<Term> parse_terms() {
        std::vector<Term> out;
        skip_ws();
        while (true) {
            Elem c = parse_coeff();
            expect('@');
            std::uint64_t e = parse_uint();
            out.push_back({c, e});
            skip_ws();
            if (pos_ == s_.size()) break;
            expect(',');
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, "in term list '" + std::string(s_) + "' at " + std::to_string(pos_) +
                                               ": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::uint64_t parse_uint() {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }
    Elem parse_factor() {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return F_.from_int(static_cast<std::int64_t>(parse_uint() % F_.p()));
        if (accept('a')) {
            std::uint64_t k = accept('^') ? parse_uint() : 1;
            return F_.alpha_pow(k);
        }
        if (accept('u')) {
            if (!u_) fail("'u' used but no value for u was supplied");
            std::uint64_t k = accept('^') ? parse_uint() : 1;
            return F_.pow(*u_, k);
        }
        fail("expected an integer, 'a' or 'u'");
    }
    Elem parse_coeff() {
        const bool negative = accept('-');
        Elem c = parse_factor();
        while (accept('*')) c = F_.mul(c, parse_factor());
        return negative ? F_.neg(c) : c;
    }

    const Field& F_;
    std::string_view s_;
    std::optional<Elem> u_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "c@e,c@e,..." where each coefficient is a product of integers,
/// alpha powers `a^k` and powers of the parameter `u^k`, optionally negated:
/// "1@3" is x^3, "1@10,-1*u@6,-1*u^2@2" is x^10 - u x^6 - u^2 x^2.
inline FuncSpec parse_funcspec(const Field& F, std::string_view expr, FuncTarget target,
                               std::optional<Elem> u = std::nullopt) {
    FuncSpec f{detail::TermParser(F, expr, u).parse_terms(), target};
    f.validate();
    return f;
}

/// Parses a single coefficient such as "a^5", "2" or "-a*2".
inline Elem parse_coefficient(const Field& F, std::string_view text) {
    const std::string probe = std::string(text) + "@1";
    return detail::TermParser(F, probe, std::nullopt).parse_terms().front().coeff;
}

inline std::string to_string(const Field& F, const FuncSpec& f) {
    std::string s = f.target == FuncTarget::Trace ? "Tr(" : "";
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) s += " + ";
        s += F.format(f.terms[i].coeff) + "*x^" + std::to_string(f.terms[i].exponent);
    }
    if (f.target == FuncTarget::Trace) s += ")";
    return s;
}

}  // namespace defset
