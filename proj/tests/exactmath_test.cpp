// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "braidkl/exactmath.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"

namespace braidkl {
namespace {

TEST(IntPolynomialTest, StripsTrailingZerosAndReportsDegree) {
  EXPECT_EQ(IntPolynomial({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(IntPolynomial({0, 0}).degree(), -1);
  EXPECT_TRUE(IntPolynomial().is_zero());
  EXPECT_EQ(IntPolynomial({3}).coeff(5), 0);
}

TEST(IntPolynomialTest, ArithmeticMatchesHandExpansion) {
  const IntPolynomial a{1, 1};
  const IntPolynomial b{1, -1};
  EXPECT_EQ(a * b, IntPolynomial({1, 0, -1}));
  EXPECT_EQ(a + b, IntPolynomial({2}));
  EXPECT_EQ(a - a, IntPolynomial());
  EXPECT_EQ(BigInt(3) * a, IntPolynomial({3, 3}));
  EXPECT_EQ(a.shifted(2), IntPolynomial({0, 0, 1, 1}));
  EXPECT_EQ(IntPolynomial({1, 2}).reversed(3), IntPolynomial({0, 0, 2, 1}));
  EXPECT_EQ(IntPolynomial({1, 7, 7, 1}).evaluate(1), 16);
}

TEST(IntPolynomialTest, RendersHumanReadableForm) {
  EXPECT_EQ(IntPolynomial({1, 7, 7, 1}).to_string("t"), "1 + 7t + 7t^2 + t^3");
  EXPECT_EQ(IntPolynomial({1}).to_string("t"), "1");
  EXPECT_EQ(IntPolynomial().to_string("t"), "0");
  EXPECT_EQ(IntPolynomial({1, 1}).to_string("t"), "1 + t");
}

TEST(IntPolynomialTest, PalindromeAndUnimodalityPredicates) {
  EXPECT_TRUE(poly_is_palindromic(IntPolynomial({1, 7, 7, 1}), 3));
  EXPECT_FALSE(poly_is_palindromic(IntPolynomial({1, 7, 7, 1}), 2));
  EXPECT_TRUE(poly_is_palindromic(IntPolynomial({0, 1}), 2));
  EXPECT_FALSE(poly_is_palindromic(IntPolynomial({1, 2}), 1));
  EXPECT_TRUE(poly_is_unimodal(IntPolynomial({1, 3, 3, 1})));
  EXPECT_FALSE(poly_is_unimodal(IntPolynomial({2, 1, 2})));
  EXPECT_TRUE(poly_has_nonnegative_coefficients(IntPolynomial({1, 0, 2})));
  EXPECT_FALSE(poly_has_nonnegative_coefficients(IntPolynomial({1, -1})));
}

TEST(IntPolynomialTest, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coeff(-50, 50);
  auto random_poly = [&] {
    std::vector<BigInt> c(static_cast<std::size_t>(rng() % 6));
    for (auto& x : c) x = coeff(rng);
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).evaluate(3), a.evaluate(3) * b.evaluate(3));
  }
}

TEST(CombinatoricsTest, StirlingMatchesListing) {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), oracle::stirling2_by_listing(n, k)) << n << "," << k;
  }
  EXPECT_EQ(stirling2(3, 5), 0);
}

TEST(CombinatoricsTest, BinomialAndBellNumbers) {
  for (int n = 0; n <= 20; ++n) {
    BigInt bell = 0;
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(binomial(n, k), oracle::binomial_pascal(n, k));
      bell += stirling2(n, k);
    }
    EXPECT_EQ(bell_number(n), bell);
  }
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(CombinatoricsTest, DoubleFactorialConventions) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  for (int m = 1; m <= 21; ++m) EXPECT_EQ(double_factorial(m), oracle::double_factorial_loop(m));
  EXPECT_THROW(double_factorial(-3), std::domain_error);
}

TEST(CombinatoricsTest, IntegerPowerConventions) {
  EXPECT_EQ(int_power(1, -1), 1);
  EXPECT_EQ(int_power(1, -5), 1);
  EXPECT_EQ(int_power(7, 2), 49);
  EXPECT_EQ(int_power(3, 0), 1);
  EXPECT_THROW(int_power(3, -1), std::domain_error);
}

TEST(RationalTest, MakeRationalCanonicalises) {
  const BigRational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace braidkl
