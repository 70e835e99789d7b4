#pragma once

// Family spec strings: paley, qf-image:EXPR, maschietti:CASE, hkm:h,
// bool:EXPR, custom:i,j,k (element indices).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defset/designs.hpp"
#include "defset/error.hpp"
#include "defset/field.hpp"
#include "defset/funcspec.hpp"

namespace defset {

struct FamilyOptions {
    std::optional<std::uint32_t> p;
    std::optional<unsigned> m;
    std::optional<std::vector<std::uint32_t>> modulus;
    std::optional<std::string> u;  ///< coefficient text for 'u' in EXPR
    FieldLimits limits;
};

struct Family {
    std::string kind;  ///< paley, qf-image, maschietti, hkm, bool, custom
    DefiningSet set;
    std::optional<FuncSpec> func;  ///< the function behind qf-image / bool / hkm
    std::optional<HyperovalCase> hyperoval;
    std::optional<unsigned> h;
};

inline HyperovalCase parse_hyperoval_case(std::string_view s) {
    if (s == "singer") return HyperovalCase::Singer;
    if (s == "segre") return HyperovalCase::Segre;
    if (s == "glynn1") return HyperovalCase::GlynnI;
    if (s == "glynn2") return HyperovalCase::GlynnII;
    throw Error(ErrorCode::UnknownKind, "unknown hyperoval case '" + std::string(s) + "'");
}

namespace detail {

inline Field family_field(const FamilyOptions& o, std::optional<std::uint32_t> p_default, const std::string& kind) {
    const auto p = o.p ? o.p : p_default;
    if (!p) throw Error(ErrorCode::PreconditionFailed, kind + " needs --p");
    if (!o.m) throw Error(ErrorCode::PreconditionFailed, kind + " needs --m");
    return Field(*p, *o.m, o.modulus, o.limits);
}

inline unsigned parse_unsigned(std::string_view s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos || s.size() > 9)
        throw Error(ErrorCode::ParseError, "bad " + what + " '" + std::string(s) + "'");
    return static_cast<unsigned>(std::stoul(std::string(s)));
}

}  // namespace detail

inline Family parse_family(std::string_view spec, const FamilyOptions& o) {
    const auto colon = spec.find(':');
    const std::string kind(spec.substr(0, colon));
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    struct {
        std::optional<DefiningSet> set;
        std::optional<FuncSpec> func;
        std::optional<HyperovalCase> hyperoval;
        std::optional<unsigned> h;
    } fam;
    if (kind == "paley") {
        const Field F = detail::family_field(o, std::nullopt, kind);
        fam.set = paley_set(F);
    } else if (kind == "qf-image") {
        const Field F = detail::family_field(o, std::nullopt, kind);
        std::optional<Elem> u;
        if (o.u) u = parse_coefficient(F, *o.u);
        fam.func = parse_funcspec(F, arg, FuncTarget::Self, u);
        fam.set = image_set(F, *fam.func);
    } else if (kind == "maschietti") {
        const Field F = detail::family_field(o, 2, kind);
        fam.hyperoval = parse_hyperoval_case(arg);
        fam.set = maschietti_set(F, *fam.hyperoval);
        fam.func = gamma_function(F, hyperoval_rho(F.m(), *fam.hyperoval));
    } else if (kind == "hkm") {
        fam.h = detail::parse_unsigned(arg, "h");
        if (*fam.h == 0) throw Error(ErrorCode::PreconditionFailed, "h must be positive");
        if (o.p && *o.p != 3) throw Error(ErrorCode::PreconditionFailed, "hkm lives over GF(3^{3h})");
        if (o.m && *o.m != 3 * *fam.h) throw Error(ErrorCode::PreconditionFailed, "hkm:h needs m = 3h");
        const Field F(3, 3 * *fam.h, o.modulus, o.limits);
        fam.set = hkm_set(F, *fam.h);
        fam.func = hkm_function(F, *fam.h);
    } else if (kind == "bool") {
        const Field F = detail::family_field(o, 2, kind);
        std::optional<Elem> u;
        if (o.u) u = parse_coefficient(F, *o.u);
        fam.func = parse_funcspec(F, arg, FuncTarget::Trace, u);
        fam.set = boolean_support(F, *fam.func);
    } else if (kind == "custom") {
        const Field F = detail::family_field(o, std::nullopt, kind);
        std::vector<Elem> elems;
        std::size_t pos = 0;
        while (pos <= arg.size() && !arg.empty()) {
            const auto next = arg.find(',', pos);
            const auto item = arg.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
            elems.push_back(Elem(detail::parse_unsigned(item, "element index")));
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        if (elems.empty()) throw Error(ErrorCode::EmptySet, "custom set has no elements");
        fam.set = make_defining_set(F, std::move(elems), "custom");
    } else {
        throw Error(ErrorCode::UnknownKind, "unknown family '" + kind + "'");
    }
    return Family{kind, std::move(*fam.set), std::move(fam.func), fam.hyperoval, fam.h};
}

}  // namespace defset
