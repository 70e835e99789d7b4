#include <gtest/gtest.h>

#include <complex>
#include <cmath>
#include <numbers>
#include <vector>

#include "defset/cyclotomic.hpp"

using namespace defset;

namespace {

CycInt from_coeffs(std::uint32_t p, std::vector<int> c) {
    CycInt r(p);
    for (std::uint32_t k = 1; k < p; ++k) r += CycInt::root_power(p, k) * CycInt::integer(p, c[k - 1]);
    return r;
}

std::vector<int> coeffs(const CycInt& a) {
    std::vector<int> out;
    for (const auto& c : a.coeffs()) out.push_back(static_cast<int>(c));
    return out;
}

// Complex embedding zeta -> exp(2 pi i / p).
std::complex<double> embed(const CycInt& a) {
    std::complex<double> s = 0;
    for (std::uint32_t k = 1; k < a.prime(); ++k)
        s += static_cast<double>(a.coeff(k)) * std::polar(1.0, 2 * std::numbers::pi * k / a.prime());
    return s;
}

}  // namespace

TEST(CycInt, RootPowers) {
    EXPECT_EQ(coeffs(cyc_root_power(5, 0)), (std::vector<int>{-1, -1, -1, -1}));
    EXPECT_EQ(coeffs(cyc_root_power(5, 2)), (std::vector<int>{0, 1, 0, 0}));
    EXPECT_EQ(coeffs(cyc_root_power(5, 7)), (std::vector<int>{0, 1, 0, 0}));
    EXPECT_EQ(is_rational(cyc_root_power(2, 1)), BigInt(-1));
    EXPECT_EQ(is_rational(cyc_root_power(5, 0)), BigInt(1));
    EXPECT_FALSE(is_rational(cyc_root_power(5, 1)));
}

TEST(CycInt, Arithmetic) {
    const auto z = [](std::int64_t k) { return cyc_root_power(5, k); };
    EXPECT_EQ(coeffs(cyc_add(z(1), z(4))), (std::vector<int>{1, 0, 0, 1}));
    EXPECT_EQ(is_rational(cyc_mul(z(1), z(4))), BigInt(1));
    const CycInt one3 = cyc_root_power(3, 0);
    EXPECT_EQ(is_rational((one3 + cyc_root_power(3, 1)) * (one3 + cyc_root_power(3, 2))), BigInt(1));
    EXPECT_THROW(z(1) + cyc_root_power(3, 1), Error);
    EXPECT_THROW(CycInt(9), Error);
}

TEST(CycInt, RingAxiomsAgainstComplexEmbedding) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        std::vector<CycInt> xs;
        for (int s = 0; s < 6; ++s) {
            std::vector<int> c(p - 1);
            for (std::uint32_t k = 0; k + 1 < p; ++k) c[k] = static_cast<int>((s * 7 + k * 3) % 5) - 2;
            xs.push_back(from_coeffs(p, c));
        }
        for (const auto& a : xs)
            for (const auto& b : xs) {
                EXPECT_LT(std::abs(embed(a * b) - embed(a) * embed(b)), 1e-9);
                EXPECT_LT(std::abs(embed(a + b) - embed(a) - embed(b)), 1e-9);
                EXPECT_EQ(a * b, b * a);
            }
    }
}

TEST(CharSum, Examples) {
    const Field F5(5, 1);
    std::vector<Elem> all;
    for (std::uint32_t i = 0; i < 5; ++i) all.push_back(Elem(i));
    EXPECT_EQ(is_rational(char_sum(F5, all, Elem(2))), BigInt(0));
    const std::vector<Elem> zero{Elem(0)};
    EXPECT_EQ(is_rational(char_sum(F5, zero, Elem(3))), BigInt(1));
    const std::vector<Elem> squares{Elem(1), Elem(4)};
    EXPECT_EQ(coeffs(char_sum(F5, squares, Elem(1))), (std::vector<int>{1, 0, 0, 1}));
}

TEST(CharSum, QuadraticFormGF9) {
    // f(x) = Tr(x^2) on GF(9), rank 2: sum over y in GF(3)*, x in GF(9) of zeta^{y f(x)}.
    const Field F(3, 2);
    std::vector<std::uint32_t> values;
    for (std::uint32_t x = 0; x < F.q(); ++x)
        for (std::uint32_t y = 1; y < 3; ++y) values.push_back((y * F.trace(F.mul(Elem(x), Elem(x)))) % 3);
    const auto v = is_rational(exponential_sum(3, values));
    ASSERT_TRUE(v);
    EXPECT_EQ(abs(*v), 6);
}

TEST(CharSum, GaloisSumIsRational) {
    const Field F(3, 3);
    std::vector<Elem> S;
    for (std::uint32_t x = 1; x < F.q(); x += 3) S.push_back(Elem(x));
    for (std::uint32_t b = 0; b < F.q(); ++b) {
        EXPECT_TRUE(is_rational(galois_char_sum(F, S, Elem(b))));
        // |S| + galois sum over b = p * #{s : Tr(bs) = 0}
        std::int64_t zeros = 0;
        for (auto s : S) zeros += F.trace(F.mul(Elem(b), s)) == 0;
        EXPECT_EQ(*is_rational(galois_char_sum(F, S, Elem(b))) + BigInt(S.size()), BigInt(3 * zeros));
    }
}
