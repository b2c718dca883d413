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

#include "braidkl/gfseries.hpp"

#include <string>
#include <utility>

namespace braidkl {

// ---------------------------------------------------------------------------
// YPolynomial

YPolynomial::YPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

YPolynomial::YPolynomial(const BigRational& c) : coeffs_{c} { normalize(); }

YPolynomial YPolynomial::monomial(const BigRational& c, int k) {
  std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return YPolynomial(std::move(v));
}

void YPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational YPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

YPolynomial& YPolynomial::operator*=(const BigRational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return YPolynomial(std::move(v));
}

// ---------------------------------------------------------------------------
// BivariateSeries

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw SeriesError("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BivariateSeries::BivariateSeries(int order, std::vector<YPolynomial> coeffs)
    : BivariateSeries(order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

BivariateSeries BivariateSeries::one(int order) {
  BivariateSeries s(order);
  s.coeffs_[0] = BigRational(1);
  return s;
}

BivariateSeries BivariateSeries::x(int order) {
  BivariateSeries s(order);
  if (order >= 1) s.coeffs_[1] = BigRational(1);
  return s;
}

const YPolynomial& BivariateSeries::coeff(int n) const {
  static const YPolynomial kZero;
  if (n < 0 || n > order_) return kZero;
  return coeffs_[static_cast<std::size_t>(n)];
}

void BivariateSeries::set_coeff(int n, YPolynomial c) {
  if (n < 0 || n > order_) throw SeriesError("coefficient index beyond truncation order");
  coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  if (o.order_ != order_) throw SeriesError("mismatched truncation orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  if (o.order_ != order_) throw SeriesError("mismatched truncation orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BivariateSeries operator*(const YPolynomial& c, BivariateSeries f) {
  for (auto& x : f.coeffs_) x = c * x;
  return f;
}

// ---------------------------------------------------------------------------
// Series operations

namespace {

void require_zero_constant(const BivariateSeries& f, const char* what) {
  if (!f.coeff(0).is_zero()) throw SeriesError(std::string(what) + ": nonzero constant term");
}

}  // namespace

BivariateSeries series_mul(const BivariateSeries& f, const BivariateSeries& g) {
  if (f.order() != g.order()) throw SeriesError("series_mul: mismatched truncation orders");
  const int N = f.order();
  BivariateSeries h(N);
  for (int n = 0; n <= N; ++n) {
    YPolynomial acc;
    for (int i = 0; i <= n; ++i) {
      if (f.coeff(i).is_zero() || g.coeff(n - i).is_zero()) continue;
      acc += f.coeff(i) * g.coeff(n - i);
    }
    h.set_coeff(n, std::move(acc));
  }
  return h;
}

BivariateSeries series_reciprocal(const BivariateSeries& f) {
  const YPolynomial& c0 = f.coeff(0);
  if (c0.is_zero() || !c0.is_constant()) {
    throw SeriesError("series_reciprocal: constant term must be a nonzero scalar");
  }
  const BigRational inv0 = 1 / c0.coeff(0);
  const int N = f.order();
  BivariateSeries h(N);
  h.set_coeff(0, YPolynomial(inv0));
  for (int n = 1; n <= N; ++n) {
    YPolynomial acc;
    for (int i = 1; i <= n; ++i) {
      if (f.coeff(i).is_zero() || h.coeff(n - i).is_zero()) continue;
      acc += f.coeff(i) * h.coeff(n - i);
    }
    h.set_coeff(n, acc * BigRational(-inv0));
  }
  return h;
}

BivariateSeries series_exp(const BivariateSeries& f) {
  require_zero_constant(f, "series_exp");
  const int N = f.order();
  BivariateSeries h = BivariateSeries::one(N);
  for (int n = 1; n <= N; ++n) {
    YPolynomial acc;
    for (int k = 1; k <= n; ++k) {
      if (f.coeff(k).is_zero() || h.coeff(n - k).is_zero()) continue;
      acc += (f.coeff(k) * h.coeff(n - k)) * BigRational(k);
    }
    h.set_coeff(n, acc * BigRational(1, n));
  }
  return h;
}

BivariateSeries log_one_plus(const BivariateSeries& g) {
  require_zero_constant(g, "log_one_plus");
  const int N = g.order();
  BivariateSeries result(N);
  BivariateSeries power = g;
  for (int m = 1; m <= N; ++m) {
    const BigRational c = make_rational(m % 2 == 1 ? 1 : -1, m);
    result += YPolynomial(c) * power;
    power = series_mul(power, g);
  }
  return result;
}

BivariateSeries derivative_x(const BivariateSeries& f) {
  BivariateSeries d(f.order());
  for (int n = 1; n <= f.order(); ++n) d.set_coeff(n - 1, f.coeff(n) * BigRational(n));
  return d;
}

BivariateSeries integrate_x(const BivariateSeries& f) {
  BivariateSeries r(f.order());
  for (int n = 1; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n - 1) * BigRational(1, n));
  return r;
}

BivariateSeries compose_x(const BivariateSeries& f, const BivariateSeries& g) {
  require_zero_constant(g, "compose_x");
  if (f.order() != g.order()) throw SeriesError("compose_x: mismatched truncation orders");
  const int N = f.order();
  // Horner: (((f_N) g + f_{N-1}) g + ...) g + f_0
  BivariateSeries acc(N);
  for (int k = N; k >= 0; --k) {
    acc = series_mul(acc, g);
    BivariateSeries term(N);
    term.set_coeff(0, f.coeff(k));
    acc += term;
  }
  return acc;
}

BivariateSeries compositional_inverse_x(const BivariateSeries& f) {
  require_zero_constant(f, "compositional_inverse_x");
  if (!(f.coeff(1) == YPolynomial(BigRational(1)))) {
    throw SeriesError("compositional_inverse_x: linear coefficient must be 1");
  }
  const int N = f.order();
  const BivariateSeries x = BivariateSeries::x(N);
  const BivariateSeries df = derivative_x(f);
  BivariateSeries g = x;
  // g agrees with the inverse modulo x^{correct}.
  int correct = 2;
  while (correct <= N) {
    BivariateSeries residual = compose_x(f, g) - x;
    BivariateSeries slope = compose_x(df, g);
    g -= series_mul(residual, series_reciprocal(slope));
    correct *= 2;
  }
  if (!(compose_x(f, g) == x)) throw SeriesError("compositional_inverse_x: Newton iteration failed");
  return g;
}

BivariateSeries build_phi(int order) {
  BivariateSeries phi(order);
  for (int m = 1; m <= order; ++m) {
    const BigRational c = make_rational(m % 2 == 1 ? 1 : -1, m);
    // (1/y) log(1 + x y) contributes c y^{m-1}; log(1 + x) contributes c.
    YPolynomial coeff = YPolynomial::monomial(c, m - 1) + YPolynomial(c);
    if (m == 1) coeff -= YPolynomial(BigRational(1));
    phi.set_coeff(m, std::move(coeff));
  }
  return phi;
}

BivariateSeries build_C(int order) {
  if (order < 1) throw SeriesError("build_C: order must be at least 1");
  const BivariateSeries inverse = compositional_inverse_x(build_phi(order));
  const YPolynomial y = YPolynomial::monomial(1, 1);
  BivariateSeries C = y * integrate_x(inverse);
  C.set_coeff(1, C.coeff(1) + y + YPolynomial(BigRational(1)));
  return C;
}

BivariateSeries build_A(int order) {
  if (order < 1) throw SeriesError("build_A: order must be at least 1");
  return series_exp(build_C(order));
}

BivariateSeries build_S_from_A(const BivariateSeries& A) {
  const int N = A.order();
  BivariateSeries x = BivariateSeries::x(N);
  BivariateSeries log1px = log_one_plus(x);
  BivariateSeries geometric(N);  // 1 / (1 + x)
  for (int n = 0; n <= N; ++n) geometric.set_coeff(n, YPolynomial(BigRational(n % 2 == 0 ? 1 : -1)));
  BivariateSeries S = series_mul(geometric, compose_x(A, log1px)) - BivariateSeries::one(N);
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= S.coeff(n).degree(); ++k) {
      BigInt count = labelled_count(S, n, k);
      if (count < 0) {
        throw SeriesError("build_S: negative count at n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
      }
    }
  }
  return S;
}

BivariateSeries build_S(int order) {
  if (order < 1) throw SeriesError("build_S: order must be at least 1");
  return build_S_from_A(build_A(order));
}

BigInt labelled_count(const BivariateSeries& f, int n, int k) {
  BigRational v = f.coeff(n, k) * BigRational(factorial(n));
  if (v.get_den() != 1) {
    throw SeriesError("non-integral coefficient at n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  return v.get_num();
}

IntPolynomial scaled_coefficient(const BivariateSeries& f, int n) {
  if (n < 0 || n > f.order()) throw SeriesError("coefficient index beyond truncation order");
  std::vector<BigInt> v;
  for (int k = 0; k <= f.coeff(n).degree(); ++k) v.push_back(labelled_count(f, n, k));
  return IntPolynomial(std::move(v));
}

IntPolynomial z_poly_from_A(const BivariateSeries& A, int n) {
  return scaled_coefficient(A, n);
}

IntPolynomial kl_poly_from_S(const BivariateSeries& S, int n) {
  if (n == 0) return IntPolynomial{1};
  return scaled_coefficient(S, n).reversed(n);
}

}  // namespace braidkl
