#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "defset/boolfn.hpp"

using namespace defset;

namespace {

FuncSpec tr(const Field& F, std::string_view expr) { return parse_funcspec(F, expr, FuncTarget::Trace); }

// Direct sum over x for every w, no transform.
std::vector<std::int64_t> walsh_direct(const Field& F, const FuncSpec& f) {
    const auto tt = tabulate(F, f);
    std::vector<std::int64_t> out(F.q());
    for (std::uint32_t w = 0; w < F.q(); ++w) {
        std::int64_t s = 0;
        for (std::uint32_t x = 0; x < F.q(); ++x) s += ((tt[x] + F.trace(F.mul(Elem(w), Elem(x)))) & 1) ? -1 : 1;
        out[w] = s;
    }
    return out;
}

// Radical of B(x,y) = f(x+y) - f(x) - f(y) + f(0) by brute force.
unsigned brute_rank(const Field& F, const FuncSpec& f) {
    const auto v = tabulate(F, f);
    std::uint64_t radical = 0;
    for (std::uint32_t x = 0; x < F.q(); ++x) {
        bool in = true;
        for (std::uint32_t y = 0; y < F.q() && in; ++y)
            in = (v[F.add(Elem(x), Elem(y)).index] + 2 * F.p() - v[x] - v[y] + v[0]) % F.p() == 0;
        radical += in;
    }
    unsigned dim = 0;
    exact_log(radical, F.p(), dim);
    return F.m() - dim;
}

}  // namespace

TEST(Walsh, Trivial) {
    const Field F(2, 4);
    const FuncSpec zero{{{F.zero(), 1}}, FuncTarget::Trace};
    const auto s0 = walsh_transform(F, zero);
    EXPECT_EQ(s0.values[0], 16);
    for (std::uint32_t w = 1; w < 16; ++w) EXPECT_EQ(s0.values[w], 0);
    const auto s1 = walsh_transform(F, tr(F, "1@1"));
    for (std::uint32_t w = 0; w < 16; ++w) EXPECT_EQ(s1.values[w], w == 1 ? 16 : 0);
    const auto c = classify_spectrum(s1);
    EXPECT_EQ(c.kind, SpectralKind::Other);
    EXPECT_EQ(c.values, (std::set<std::int64_t>{0, 16}));
}

TEST(Walsh, MatchesDirectSum) {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        const Field F(2, m);
        for (const char* e : {"1@3", "1@5,a@1", "a^2@7,1@3", "1@11,a@9"}) {
            const auto f = tr(F, e);
            EXPECT_EQ(walsh_transform(F, f).values, walsh_direct(F, f)) << m << " " << e;
        }
    }
}

TEST(Walsh, ParsevalAndInverse) {
    const Field F(2, 7);
    const auto f = tr(F, "1@13,a@5,a^3@1");
    const auto s = walsh_transform(F, f);
    std::int64_t sq = 0;
    for (auto v : s.values) sq += v * v;
    EXPECT_EQ(sq, std::int64_t{1} << 14);
    const auto back = inverse_walsh(F, s);
    const auto tt = tabulate(F, f);
    for (std::uint32_t x = 0; x < F.q(); ++x) EXPECT_EQ(back[x], tt[x] ? -1 : 1);
}

TEST(Walsh, GoldM5) {
    const Field F(2, 5);
    const auto s = walsh_transform(F, tr(F, "1@3"));
    const auto h = s.histogram();
    EXPECT_EQ(h.at(0), 16u);
    EXPECT_EQ(h.at(8) + h.at(-8), 16u);
    // rank 4: +amp count 2^3 + 2^1, -amp count 2^3 - 2^1 (amplitude 2^{5-2} = 8)
    EXPECT_EQ(h.at(8), 10u);
    EXPECT_EQ(h.at(-8), 6u);
    EXPECT_EQ(classify_spectrum(s).kind, SpectralKind::Semibent);
}

TEST(Walsh, BentM4) {
    const Field F(2, 4);
    // Tr(a x^3) has rank 4 on GF(16).
    const auto f = tr(F, "a@3");
    ASSERT_EQ(brute_rank(F, f), 4u);
    const auto c = classify_spectrum(walsh_transform(F, f));
    EXPECT_EQ(c.kind, SpectralKind::Bent);
}

TEST(QuadraticRank, AgainstBruteForce) {
    for (auto [p, m] : {std::pair{2u, 4u}, std::pair{2u, 5u}, std::pair{2u, 6u}, std::pair{3u, 3u}, std::pair{3u, 4u}, std::pair{5u, 2u}}) {
        const Field F(p, m);
        const std::vector<std::string> exprs =
            p == 2 ? std::vector<std::string>{"1@3", "a@3,1@5", "1@2", "a@9,a^2@3", "1@5"}
                   : std::vector<std::string>{"1@2", "a@" + std::to_string(p + 1) + ",1@2", "1@" + std::to_string(p + 1), "a@" + std::to_string(2 * p)};
        for (const auto& e : exprs) {
            const auto f = tr(F, e);
            EXPECT_EQ(quadratic_rank(F, f).rank, brute_rank(F, f)) << p << "^" << m << " " << e;
        }
    }
}

TEST(QuadraticRank, Examples) {
    const Field F4(2, 4);
    EXPECT_EQ(quadratic_rank(F4, tr(F4, "1@2")).rank, 0u);
    EXPECT_EQ(quadratic_rank(F4, tr(F4, "1@3")).rank, 2u);
    const Field F27(3, 3);
    EXPECT_EQ(quadratic_rank(F27, tr(F27, "1@4,1@2")).rank, 3u);
    try {
        quadratic_rank(F4, tr(F4, "1@7"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotQuadraticForm);
    }
}

TEST(Lambda, Spectrum) {
    const Field F(2, 5);
    const auto g = FuncSpec::monomial(F.one(), 3);
    EXPECT_EQ(lambda_spectrum(F, g, F.zero(), F.zero()), 32);
    for (std::uint32_t b = 1; b < 32; ++b) EXPECT_EQ(lambda_spectrum(F, g, F.zero(), Elem(b)), 0);
    for (std::uint32_t a = 1; a < 32; a += 3)
        for (std::uint32_t b = 0; b < 32; b += 5) {
            const auto v = lambda_spectrum(F, g, Elem(a), Elem(b));
            EXPECT_TRUE(v == 0 || v == 8 || v == -8) << v;
        }
}

TEST(Lambda, AlmostBent) {
    const Field F5(2, 5);
    EXPECT_TRUE(is_almost_bent(F5, FuncSpec::monomial(F5.one(), 3)));
    EXPECT_FALSE(is_almost_bent(F5, FuncSpec::monomial(F5.one(), 1)));
    const Field F6(2, 6);
    try {
        is_almost_bent(F6, FuncSpec::monomial(F6.one(), 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EvenDegree);
    }
}

TEST(SupportSize, Predictions) {
    EXPECT_EQ(support_size_prediction(SupportKind::Bent, 6), (std::set<std::int64_t>{28, 36}));
    EXPECT_EQ(support_size_prediction(SupportKind::Semibent, 7, 16), (std::set<std::int64_t>{56}));
    EXPECT_EQ(support_size_prediction(SupportKind::Semibent, 7), (std::set<std::int64_t>{56, 64, 72}));
    EXPECT_EQ(support_size_prediction(SupportKind::Quadratic, 6, 0, 4), (std::set<std::int64_t>{32}));
    EXPECT_THROW(support_size_prediction(SupportKind::Bent, 5), Error);
    EXPECT_THROW(support_size_prediction(SupportKind::Semibent, 7, 4), Error);
}

TEST(SupportSize, MatchesEnumeration) {
    const Field F(2, 5);
    const auto f = tr(F, "1@3");
    const auto s = walsh_transform(F, f);
    std::int64_t ones = 0;
    for (auto v : tabulate(F, f)) ones += v;
    EXPECT_EQ(support_size_prediction(SupportKind::Semibent, 5, s.values[0]), (std::set<std::int64_t>{ones}));
}

TEST(Hyperoval, SpectrumCheck) {
    for (unsigned m : {5u, 7u}) {
        const Field F(2, m);
        const auto r = hyperoval_spectrum_check(F, 1, 2);
        EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
    }
    for (unsigned m : {5u, 7u, 9u, 11u, 13u}) {
        const unsigned k = glynn_kappa(m);
        EXPECT_EQ(std::gcd(ipow(2, k) + 1, ipow(2, m) - 1), 1u) << m;
    }
}
