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

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidkl {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int k) {
  if (k < 0) throw std::domain_error("negative monomial degree");
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw std::domain_error("negative shift");
  std::vector<BigInt> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed(int d) const {
  if (d < degree()) throw std::domain_error("reversal degree below degree");
  std::vector<BigInt> v(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(d - i)] = coeff(i);
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    BigInt mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool poly_is_palindromic(const IntPolynomial& p, int d) {
  if (p.is_zero()) return true;
  if (d < p.degree()) return false;
  for (int i = 0; i <= d; ++i) {
    if (p.coeff(i) != p.coeff(d - i)) return false;
  }
  return true;
}

bool poly_is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool poly_has_nonnegative_coefficients(const IntPolynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const BigInt& c) { return c >= 0; });
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling2: negative argument");
  if (k > n) return 0;
  // Row-by-row S(m, j) = j S(m-1, j) + S(m-1, j-1), S(0, 0) = 1.
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt double_factorial(int m) {
  if (m < -1) throw std::domain_error("double_factorial: argument below -1");
  BigInt acc = 1;
  for (int x = m; x > 1; x -= 2) acc *= x;
  return acc;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt bell_number(int n) {
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += stirling2(n, k);
  return total;
}

BigInt int_power(const BigInt& base, int exp) {
  if (exp < 0) {
    if (base == 1) return 1;
    throw std::domain_error("int_power: negative exponent of non-unit base");
  }
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace braidkl
