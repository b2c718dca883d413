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

// Truncated bivariate exponential generating functions.
//
// A BivariateSeries is a power series in x truncated after x^N whose
// coefficients are polynomials in y over Q. The series C, A and S built here
// count labelled series-parallel, quasi series-parallel and simple quasi
// series-parallel matroids: n! [x^n y^k] is the number of such matroids on
// [n] of rank k.
//
// C(x, y) = x (y + 1) + y * Integral( phi^<-1> dx ),
//   phi(x, y) = (1/y) log(1 + x y) + log(1 + x) - x,
// A(x, y) = exp(C(x, y)),
// S(x, y) = A(log(1 + x), y) / (1 + x) - 1.
//
// Everything is exact; y is only ever a polynomial variable, never inverted.

#ifndef BRAIDKL_GFSERIES_HPP_
#define BRAIDKL_GFSERIES_HPP_

#include <stdexcept>
#include <vector>

#include "braidkl/exactmath.hpp"

namespace braidkl {

inline constexpr int kDefaultSeriesOrder = 12;

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense polynomial in y with rational coefficients. No trailing zeros.
class YPolynomial {
 public:
  YPolynomial() = default;
  explicit YPolynomial(std::vector<BigRational> coeffs);
  YPolynomial(const BigRational& c);  // NOLINT: constants convert implicitly

  static YPolynomial monomial(const BigRational& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  BigRational coeff(int k) const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  YPolynomial& operator+=(const YPolynomial& o);
  YPolynomial& operator-=(const YPolynomial& o);
  YPolynomial& operator*=(const BigRational& c);
  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
  friend YPolynomial operator*(YPolynomial a, const BigRational& c) { return a *= c; }
  friend bool operator==(const YPolynomial& a, const YPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::vector<BigRational> coeffs_;
};

class BivariateSeries {
 public:
  // The zero series truncated after x^order.
  explicit BivariateSeries(int order);
  BivariateSeries(int order, std::vector<YPolynomial> coeffs);

  static BivariateSeries one(int order);
  static BivariateSeries x(int order);

  int order() const { return order_; }
  // Coefficient of x^n as a polynomial in y; zero beyond the order.
  const YPolynomial& coeff(int n) const;
  void set_coeff(int n, YPolynomial c);
  // [x^n y^k]
  BigRational coeff(int n, int k) const { return coeff(n).coeff(k); }

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) {
    return a += b;
  }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) {
    return a -= b;
  }
  // Multiplies every x-coefficient by a polynomial in y.
  friend BivariateSeries operator*(const YPolynomial& c, BivariateSeries f);
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  std::vector<YPolynomial> coeffs_;  // size order_ + 1
};

// Product truncated at the common order. Throws SeriesError on mismatched
// orders.
BivariateSeries series_mul(const BivariateSeries& f, const BivariateSeries& g);

// 1 / f. The x^0 coefficient must be a nonzero constant (no y).
BivariateSeries series_reciprocal(const BivariateSeries& f);

// exp(f) via n h_n = sum_k k f_k h_{n-k}. Requires f(0, y) = 0.
BivariateSeries series_exp(const BivariateSeries& f);

// log(1 + g) = sum_{m >= 1} (-1)^{m+1} g^m / m. Requires g(0, y) = 0.
BivariateSeries log_one_plus(const BivariateSeries& g);

BivariateSeries derivative_x(const BivariateSeries& f);

// Termwise antiderivative with zero constant term. The result keeps the
// input's order, so the x^order term of f (which would land at x^{order+1})
// is dropped.
BivariateSeries integrate_x(const BivariateSeries& f);

// f(g(x, y), y). Requires g(0, y) = 0.
BivariateSeries compose_x(const BivariateSeries& f, const BivariateSeries& g);

// The series g with f(g) = x = g(f), y held as a parameter. Requires
// f(0, y) = 0 and [x^1] f = 1. Uses Newton iteration g <- g - (f(g) - x) / f'(g),
// which doubles the number of correct coefficients per step.
BivariateSeries compositional_inverse_x(const BivariateSeries& f);

// phi(x, y) = (1/y) log(1 + x y) + log(1 + x) - x, with the first log
// expanded termwise as sum (-1)^{m+1} y^{m-1} x^m / m.
BivariateSeries build_phi(int order);

BivariateSeries build_C(int order = kDefaultSeriesOrder);
BivariateSeries build_A(int order = kDefaultSeriesOrder);
// Throws SeriesError if some n! [x^n y^k] is not a nonnegative integer.
BivariateSeries build_S(int order = kDefaultSeriesOrder);
BivariateSeries build_S_from_A(const BivariateSeries& A);

// n! [x^n] f as an integer polynomial in y; throws SeriesError if some
// coefficient is not an integer.
IntPolynomial scaled_coefficient(const BivariateSeries& f, int n);

// Z of the braid matroid on n + 1 vertices: n! [x^n] A(x, y).
IntPolynomial z_poly_from_A(const BivariateSeries& A, int n);

// P of the braid matroid on n + 1 vertices, recovered from n! [x^n] S by
// reversing in degree n. For n = 0 this returns 1: S has no constant term
// because the empty matroid is subtracted off.
IntPolynomial kl_poly_from_S(const BivariateSeries& S, int n);

// Count n! [x^n y^k] f as an exact integer; throws SeriesError otherwise.
BigInt labelled_count(const BivariateSeries& f, int n, int k);

}  // namespace braidkl

#endif  // BRAIDKL_GFSERIES_HPP_
