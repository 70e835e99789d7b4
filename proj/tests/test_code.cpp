#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "defset/code.hpp"
#include "defset/predict.hpp"

using namespace defset;

namespace {

DefiningSet set_of(const Field& F, std::vector<std::uint32_t> idx) {
    std::vector<Elem> e;
    for (auto i : idx) e.push_back(Elem(i));
    return make_defining_set(F, e);
}

// Enumerates all x, computes every codeword coordinate by summing Frobenius powers directly.
std::map<std::uint64_t, std::uint64_t> brute_enumerator(const DefiningSet& D) {
    const Field& F = D.field;
    std::set<std::vector<std::uint32_t>> words;
    for (std::uint32_t x = 0; x < F.q(); ++x) {
        std::vector<std::uint32_t> c;
        for (auto d : D.elems) {
            Elem y = F.mul(Elem(x), d), s = F.zero();
            for (unsigned i = 0; i < F.m(); ++i, y = F.pow(y, F.p())) s = F.add(s, y);
            c.push_back(s.index);
        }
        words.insert(c);
    }
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& w : words) {
        std::uint64_t wt = 0;
        for (auto v : w) wt += v != 0;
        ++out[wt];
    }
    return out;
}

}  // namespace

TEST(Code, Codewords) {
    const Field F7(7, 1);
    const DefiningSetCode C(set_of(F7, {1, 2, 4}));
    EXPECT_EQ(codeword(C, F7.zero()), (std::vector<std::uint32_t>{0, 0, 0}));
    EXPECT_EQ(codeword(C, F7.one()), (std::vector<std::uint32_t>{1, 2, 4}));
    const Field F8(2, 3);
    const DefiningSetCode all(set_of(F8, {1, 2, 3, 4, 5, 6, 7}));
    EXPECT_EQ(hamming_weight(codeword(all, F8.one())), 4u);
    EXPECT_THROW(DefiningSetCode(DefiningSet{F8, {}, "empty"}), Error);
}

TEST(Code, SkewGF7) {
    const Field F(7, 1);
    const auto E = weight_enumerator(DefiningSetCode(set_of(F, {1, 2, 4})));
    EXPECT_EQ(E.n, 3u);
    EXPECT_EQ(E.k, 1u);
    EXPECT_EQ(to_polynomial(E.counts), "1+6z^3");
    EXPECT_EQ(minimum_distance(E), 3u);
    EXPECT_EQ(griesmer_check(3, 1, 3, 7), GriesmerStatus::Meets);
}

TEST(Code, HKMh1) {
    const DefiningSetCode C(hkm_set(1));
    const auto E = weight_enumerator(C);
    EXPECT_EQ(to_polynomial(E.counts), "1+12z^2+8z^3+6z^4");
    EXPECT_EQ(E.n, 4u);
    EXPECT_EQ(E.k, 3u);
    EXPECT_EQ(minimum_distance(E), 2u);
    const auto W = dual_distance_witness(C);
    EXPECT_TRUE(W.at_least_3);
    const auto P = pless_moment_check(E, W);
    EXPECT_TRUE(P.ok());
    EXPECT_EQ(P.second_moment, true);
}

TEST(Code, GlynnIIm5) {
    const Field F(2, 5);
    const auto E = weight_enumerator(DefiningSetCode(maschietti_set(F, HyperovalCase::GlynnII)));
    EXPECT_EQ(to_polynomial(E.counts), "1+10z^6+15z^8+6z^10");
    EXPECT_EQ(E.k, 5u);
}

TEST(Code, HKMh3) {
    const auto E = weight_enumerator(DefiningSetCode(hkm_set(3)));
    EXPECT_EQ(E.n, 3280u);
    EXPECT_EQ(E.k, 9u);
    EXPECT_EQ(minimum_distance(E), 2106u);
    EXPECT_EQ(to_polynomial(E.counts), "1+756z^2106+18224z^2187+702z^2268");
}

TEST(Code, EnumeratorAgainstBruteForce) {
    const std::vector<DefiningSet> sets{paley_set(Field(3, 2)), paley_set(Field(3, 3)), paley_set(Field(5, 2)),
                                        maschietti_set(Field(2, 5), HyperovalCase::Segre), hkm_set(1),
                                        boolean_support(Field(2, 6), FuncSpec::monomial(Elem(1), 3, FuncTarget::Trace)),
                                        set_of(Field(3, 2), {0, 1, 2, 5})};
    for (const auto& D : sets) {
        const DefiningSetCode C(D);
        const auto E = weight_enumerator(C);
        EXPECT_EQ(E.counts, brute_enumerator(D)) << D.family;
        EXPECT_EQ(E, weight_enumerator_reference(C)) << D.family;
        EXPECT_EQ(E.k, generator_rank(C));
        for (std::uint32_t x = 0; x < D.field.q(); ++x)
            EXPECT_EQ(weight_via_charsum(C, Elem(x)), hamming_weight(codeword(C, Elem(x))));
    }
}

TEST(Code, ThreadCountDoesNotMatter) {
    const DefiningSetCode C(maschietti_set(Field(2, 9), HyperovalCase::GlynnII));
    const auto one = weight_enumerator(C, {CodeLimits{}.max_work, 1});
    for (unsigned t : {2u, 3u, 7u, 16u}) EXPECT_EQ(weight_enumerator(C, {CodeLimits{}.max_work, t}), one);
}

TEST(Code, Degenerate) {
    // D inside GF(3) in GF(9): all codewords Tr(x d) = d Tr(x), so k = 1.
    const Field F(3, 2);
    const DefiningSetCode C(set_of(F, {1, 2}));
    const auto E = weight_enumerator(C);
    EXPECT_EQ(E.k, 1u);
    EXPECT_EQ(E.kernel_size, 3u);
    EXPECT_EQ(to_polynomial(E.counts), "1+2z^2");
    const auto h = E.element_histogram();
    EXPECT_EQ(h.at(0), 2u);
    EXPECT_EQ(h.at(2), 6u);
}

TEST(Code, WorkBudget) {
    try {
        weight_enumerator(DefiningSetCode(hkm_set(3)), {1000, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
    }
}

TEST(Code, ZeroInCharSumPath) {
    const Field F(7, 1);
    const DefiningSetCode C(set_of(F, {1, 2, 4}));
    EXPECT_EQ(weight_via_charsum(C, F.zero()), 0u);
    EXPECT_EQ(weight_via_charsum(C, F.one()), 3u);
    const DefiningSetCode Q(paley_set(Field(3, 2)));
    for (std::uint32_t x = 1; x < 9; ++x) {
        const auto w = weight_via_charsum(Q, Elem(x));
        EXPECT_TRUE(w == 2 || w == 4);
    }
}

TEST(Griesmer, Examples) {
    EXPECT_EQ(griesmer_bound(3, 9, 3), 13u);
    EXPECT_EQ(griesmer_check(13, 3, 9, 3), GriesmerStatus::Meets);
    EXPECT_EQ(griesmer_bound(6, 12, 2), 25u);
    EXPECT_EQ(griesmer_check(28, 6, 12, 2), GriesmerStatus::Satisfies);
    EXPECT_EQ(griesmer_check(20, 6, 12, 2), GriesmerStatus::Violates);
    EXPECT_EQ(to_string(GriesmerStatus::Meets), "meets");
}

TEST(DualDistance, Witness) {
    const Field F7(7, 1);
    const auto paley = dual_distance_witness(DefiningSetCode(set_of(F7, {1, 2, 4})));
    EXPECT_TRUE(paley.at_least_2);
    EXPECT_FALSE(paley.at_least_3);
    const auto with_zero = dual_distance_witness(DefiningSetCode(set_of(F7, {0, 1})));
    EXPECT_FALSE(with_zero.at_least_2);
}

TEST(Pless, DetectsCorruption) {
    const DefiningSetCode C(hkm_set(1));
    auto E = weight_enumerator(C);
    const auto W = dual_distance_witness(C);
    E.counts[2] -= 1;
    E.counts[3] += 1;
    const auto r = pless_moment_check(E, W);
    EXPECT_TRUE(r.count_ok);
    EXPECT_EQ(r.first_moment, false);
}

TEST(MinimumDistance, ZeroDimensional) {
    WeightEnumerator E;
    E.p = 2;
    E.counts[0] = 1;
    EXPECT_THROW(minimum_distance(E), Error);
}

TEST(Predict, ClosedForms) {
    const auto hkm = predict_hkm(3);
    EXPECT_EQ(to_string(hkm), "[3280,9,2106] 1+756z^2106+18224z^2187+702z^2268");
    EXPECT_EQ(to_string(predict_hyperoval(7)), "[63,7,28] 1+36z^28+63z^32+28z^36");
    EXPECT_EQ(to_string(predict_bent(6, 28)), "[28,6,12] 1+28z^12+35z^16");
    EXPECT_EQ(to_string(predict_skew(3, 3)), "[13,3,9] 1+26z^9");
    EXPECT_EQ(to_string(predict_quadratic_residue(3, 2)), "[4,2,2] 1+4z^2+4z^4");
    EXPECT_THROW(predict_skew(3, 2), Error);
    EXPECT_THROW(predict_bent(5, 16), Error);
}

TEST(Predict, Dispatch) {
    PredictionParams q;
    q.h = 1;
    const auto P = predicted_enumerator("thm-HKMcodes", q);
    EXPECT_TRUE(P.matches(weight_enumerator(DefiningSetCode(hkm_set(1)))));
    try {
        predicted_enumerator("thm-nope", q);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownKind);
    }
    try {
        predicted_enumerator("thm-bentcodes", q);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    }
}

TEST(Predict, Glynn2Conjecture) {
    const auto E = weight_enumerator(DefiningSetCode(maschietti_set(Field(2, 9), HyperovalCase::GlynnII)));
    EXPECT_EQ(to_polynomial(E.counts), "1+9z^112+108z^120+285z^128+108z^136+z^144");
    EXPECT_EQ(E.nonzero_weight_count(), 5u);
    EXPECT_TRUE(glynn2_conjecture(9).matches(E));
}
