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

#ifndef BRAIDKL_EXACTMATH_HPP_
#define BRAIDKL_EXACTMATH_HPP_

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace braidkl {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with a positive denominator as long as every value built from
// a raw numerator/denominator pair goes through make_rational().
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// Dense univariate polynomial over Z, coefficient i is the coefficient of t^i.
// Trailing zeros are stripped on construction, so the zero polynomial has an
// empty coefficient list and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  // c * t^k
  static IntPolynomial monomial(const BigInt& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of t^i; zero outside the stored range.
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial shifted(int k) const;  // multiply by t^k
  // Coefficients of t^d f(1/t). Requires d >= degree().
  IntPolynomial reversed(int d) const;
  BigInt evaluate(const BigInt& t) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form such as "1 + 7t + 7t^2 + t^3".
  std::string to_string(std::string_view var = "t") const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

// True iff coefficient i equals coefficient d - i for all 0 <= i <= d.
// A polynomial of degree greater than d is never palindromic of degree d.
bool poly_is_palindromic(const IntPolynomial& p, int d);

// Weakly increasing then weakly decreasing coefficient sequence.
bool poly_is_unimodal(const IntPolynomial& p);

bool poly_has_nonnegative_coefficients(const IntPolynomial& p);

// Partitions of an n-set into k nonempty blocks.
BigInt stirling2(int n, int k);

// m(m-2)(m-4)..., with (-1)!! = 0!! = 1. Throws std::domain_error for m < -1.
BigInt double_factorial(int m);

BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt bell_number(int n);

// base^exp with the convention that 1^e = 1 for negative e. Any other base
// with a negative exponent throws std::domain_error.
BigInt int_power(const BigInt& base, int exp);

}  // namespace braidkl

#endif  // BRAIDKL_EXACTMATH_HPP_
