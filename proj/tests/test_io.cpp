#include <gtest/gtest.h>

#include <sstream>

#include "defset/family.hpp"
#include "defset/io.hpp"

using namespace defset;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::ParseError;
}

}  // namespace

TEST(Json, Schema) {
    const auto E = weight_enumerator(DefiningSetCode(hkm_set(1)));
    EXPECT_EQ(to_json(E).dump(),
              R"({"p":3,"m":3,"n":4,"k":3,"weights":[{"w":0,"A":1},{"w":2,"A":12},{"w":3,"A":8},{"w":4,"A":6}]})");
}

TEST(Json, RoundTripIsByteIdentical) {
    for (const auto& D : {hkm_set(1), hkm_set(2), paley_set(Field(3, 3)), maschietti_set(Field(2, 7), HyperovalCase::GlynnI)}) {
        const auto E = weight_enumerator(DefiningSetCode(D));
        const std::string text = to_json(E).dump();
        const auto back = parse_enumerator(text);
        EXPECT_EQ(back, E);
        EXPECT_EQ(to_json(back).dump(), text);
        EXPECT_EQ(to_json(parse_enumerator(to_json(E).dump(2))).dump(), text);
    }
}

TEST(Json, ParseErrors) {
    EXPECT_EQ(code_of([] { parse_enumerator("{"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_enumerator(R"({"p":2})"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_enumerator(R"({"p":2,"m":3,"n":4,"k":"x","weights":[]})"); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_enumerator(R"({"p":2,"m":3,"n":4,"k":5,"weights":[]})"); }),
              ErrorCode::ParseError);
}

TEST(GeneratorMatrix, Format) {
    const Field F(2, 3);
    const DefiningSetCode C(make_defining_set(F, {Elem(1), Elem(2), Elem(4)}));
    std::ostringstream os;
    write_generator_matrix(os, C);
    EXPECT_EQ(os.str(), "2 3 3\n1 0 0\n0 0 1\n0 1 0\n");
}

TEST(GeneratorMatrix, RowsAreCodewordsOfBasis) {
    const DefiningSetCode C(hkm_set(1));
    const auto G = generator_matrix(C);
    ASSERT_EQ(G.size(), 3u);
    for (unsigned i = 0; i < 3; ++i) EXPECT_EQ(G[i], codeword(C, C.field().alpha_pow(i)));
}

TEST(Modulus, Parse) {
    EXPECT_EQ(parse_modulus("1,1,0,1"), (std::vector<std::uint32_t>{1, 1, 0, 1}));
    EXPECT_EQ(parse_modulus(" 1, 0 ,1 "), (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(format_modulus({1, 1, 0, 1}), "1,1,0,1");
    EXPECT_EQ(code_of([] { parse_modulus("1,x,1"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_modulus("1,,1"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_modulus("1"); }), ErrorCode::ParseError);
}

TEST(FuncSpec, Parse) {
    const Field F(3, 3);
    const auto f = parse_funcspec(F, "1@10,-1*u@6,-1*u^2@2", FuncTarget::Self, F.alpha());
    ASSERT_EQ(f.terms.size(), 3u);
    EXPECT_EQ(f.terms[1].coeff, F.neg(F.alpha()));
    EXPECT_EQ(f.terms[2].coeff, F.neg(F.pow(F.alpha(), 2)));
    EXPECT_EQ(parse_coefficient(F, "a^5"), F.alpha_pow(5));
    EXPECT_EQ(code_of([&] { parse_funcspec(F, "1@", FuncTarget::Self); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([&] { parse_funcspec(F, "1@2,1@2", FuncTarget::Self); }), ErrorCode::PreconditionFailed);
    EXPECT_EQ(code_of([&] { parse_funcspec(F, "u@2", FuncTarget::Self); }), ErrorCode::ParseError);
}

TEST(Family, Specs) {
    FamilyOptions o;
    o.p = 7;
    o.m = 1;
    EXPECT_EQ(parse_family("paley", o).set.indices(), (std::vector<std::uint64_t>{1, 2, 4}));
    EXPECT_EQ(parse_family("hkm:1", {}).set.size(), 4u);
    FamilyOptions b;
    b.m = 5;
    EXPECT_EQ(parse_family("maschietti:segre", b).set.size(), 15u);
    EXPECT_EQ(parse_family("bool:1@3", b).set.size(), 16u);
    FamilyOptions q;
    q.p = 3;
    q.m = 3;
    q.u = "a";
    const auto fam = parse_family("qf-image:1@10,-1*u@6,-1*u^2@2", q);
    EXPECT_EQ(fam.set.size(), 13u);
    EXPECT_TRUE(fam.func.has_value());
    EXPECT_EQ(parse_family("custom:1,2,5", q).set.size(), 3u);
    EXPECT_EQ(code_of([] { parse_family("nope", {}); }), ErrorCode::UnknownKind);
    EXPECT_EQ(code_of([&] { parse_family("maschietti:other", b); }), ErrorCode::UnknownKind);
    EXPECT_EQ(code_of([] { parse_family("paley", {}); }), ErrorCode::PreconditionFailed);
    EXPECT_EQ(code_of([] { parse_family("hkm:x", {}); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([&] { parse_family("custom:1,1", q); }), ErrorCode::DuplicateElement);
}
