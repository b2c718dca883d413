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


// Acceptance runner: one PASS/FAIL line per criterion with its wall time and
// pinned time limit. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braidkl/cacti.hpp"
#include "braidkl/equivariant.hpp"
#include "braidkl/gfseries.hpp"
#include "braidkl/klcalc.hpp"
#include "braidkl/matroid.hpp"
#include "braidkl/spenum.hpp"
#include "reference_tables.hpp"

namespace {

using namespace braidkl;
namespace ref = braidkl::testing;

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitBraidTables = 1.0;
constexpr double kLimitEngines = 30.0;
constexpr double kLimitEnumeration = 600.0;
constexpr double kLimitSeries = 5.0;
constexpr double kLimitCacti = 60.0;
constexpr double kLimitOddCase = 120.0;
constexpr double kLimitAxioms = 300.0;
constexpr double kLimitOrbits = 120.0;
constexpr double kLimitEquivariant = 300.0;
constexpr double kLimitDuality = 60.0;

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  template <typename A, typename B>
  void equal(const A& lhs, const B& rhs, const std::string& what) {
    if (lhs == rhs) return;
    std::ostringstream s;
    s << what << ": " << lhs << " != " << rhs;
    expect(false, s.str());
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const { return notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

std::string poly_str(const IntPolynomial& p) { return p.to_string("t"); }

// Counts shared between the enumeration, odd-case and duality criteria.
struct EnumeratedTables {
  std::map<int, CountTable> sp, qsp, simple;
};
EnumeratedTables& tables() {
  static EnumeratedTables t;
  return t;
}

void criterion_braid_tables(Check& c) {
  for (int n = 2; n <= 9; ++n) {
    const KLResult r = braid_kl(n);
    const int m = n - 1;
    for (int i = 0; i <= m; ++i) {
      const std::string at = "K" + std::to_string(n) + " t^" + std::to_string(i);
      c.equal(r.p.coeff(i), BigInt(ref::table_entry(ref::kSimpleQuasiSeriesParallel, m, m - i)), at + " P");
      if (m <= 7) c.equal(r.z.coeff(i), BigInt(ref::table_entry(ref::kQuasiSeriesParallel, m, m - i)), at + " Z");
    }
  }
  c.equal(poly_str(braid_kl(6).p), std::string("1 + 16t + 15t^2"), "P of K6");
  c.equal(poly_str(braid_kl(4).z), std::string("1 + 7t + 7t^2 + t^3"), "Z of K4");
  c.equal(braid_kl(8).p.coeff(3), BigInt(735), "leading P of K8");
}

void criterion_engines(Check& c) {
  for (int n = 2; n <= 7; ++n) {
    const KLResult generic = n <= 6 ? kl_generic(braid(n)) : kl_generic_braid(n);
    c.expect(generic == braid_kl(n), "generic vs recursion at K" + std::to_string(n));
  }
  const BivariateSeries A = build_A(12);
  const BivariateSeries S = build_S_from_A(A);
  for (int n = 2; n <= 13; ++n) {
    const KLResult r = braid_kl(n);
    c.expect(z_poly_from_A(A, n - 1) == r.z, "series Z vs recursion at K" + std::to_string(n));
    c.expect(kl_poly_from_S(S, n - 1) == r.p, "series P vs recursion at K" + std::to_string(n));
  }
}

void criterion_enumeration(Check& c) {
  EnumeratedTables& t = tables();
  for (int n = 1; n <= 7; ++n) {
    t.sp[n] = count_family(enum_series_parallel(n), n);
    t.qsp[n] = count_family(enum_qsp(n), n);
    t.simple[n] = count_family(enum_simple_qsp(n), n);
    for (int k = 0; k <= n; ++k) {
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      c.equal(t.sp[n].at(k), BigInt(ref::table_entry(ref::kSeriesParallel, n, k)), "SP" + at);
      c.equal(t.qsp[n].at(k), BigInt(ref::table_entry(ref::kQuasiSeriesParallel, n, k)), "QSP" + at);
      c.equal(t.simple[n].at(k), BigInt(ref::table_entry(ref::kSimpleQuasiSeriesParallel, n, k)), "simple" + at);
    }
  }
  c.equal(t.sp[6].at(3), BigInt(290), "SP(6,3)");
  c.equal(t.qsp[7].at(3), BigInt(10941), "QSP(7,3)");
  EnumerationOptions extended;
  extended.extended = true;
  t.simple[8] = count_family(enum_simple_qsp(8, extended), 8);
  for (int k = 0; k <= 8; ++k) {
    c.equal(t.simple[8].at(k), BigInt(ref::table_entry(ref::kSimpleQuasiSeriesParallel, 8, k)),
            "simple(8," + std::to_string(k) + ")");
  }
  c.equal(t.simple[8].at(5), BigInt(16065), "simple(8,5)");
}

void criterion_series(Check& c) {
  const BivariateSeries C = build_C(4);
  c.equal(labelled_count(C, 4, 2), BigInt(6), "4! [x^4 y^2] C");
  const BivariateSeries g = compositional_inverse_x(build_phi(6));
  const YPolynomial expected =
      YPolynomial(std::vector<BigRational>{1, 25, 25, 1}) * BigRational(1, 120);
  c.expect(integrate_x(g).coeff(5) == expected, "x^5 coefficient (y^3 + 25y^2 + 25y + 1)/5!");
  const BivariateSeries A = build_A(12);
  const BivariateSeries S = build_S_from_A(A);
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      c.equal(labelled_count(A, n, k), labelled_count(A, n, n - k), "A palindromic " + at);
      try {
        c.expect(labelled_count(S, n, k) >= 0, "S nonnegative " + at);
      } catch (const SeriesError& e) {
        c.expect(false, "S integral " + at + ": " + e.what());
      }
    }
  }
}

void criterion_cacti(Check& c) {
  const std::map<int, long> expected{{2, 1}, {3, 15}, {4, 735}};
  for (const auto& [k, count] : expected) {
    const auto cacti = enum_triangular_cacti(2 * k - 1);
    c.equal(BigInt(cacti.size()), cacti_count_formula(k), "formula k=" + std::to_string(k));
    c.equal(BigInt(cacti.size()), BigInt(count), "count k=" + std::to_string(k));
  }
  const auto cacti = enum_triangular_cacti(7);
  for (const auto& g : cacti) c.expect(matroid_to_cactus(cactus_to_matroid(g)) == g, "cactus roundtrip");
  const std::vector<Matroid> simple = enum_simple_qsp(7)[4];
  c.equal(simple.size(), std::size_t{735}, "|S(7,4)|");
  for (const Matroid& m : simple) c.expect(cactus_to_matroid(matroid_to_cactus(m)) == m, "matroid roundtrip");
}

void criterion_odd_case(Check& c) {
  const std::map<int, long> expected{{1, 1}, {2, 5}, {3, 175}};
  for (const auto& [k, value] : expected) {
    const BigInt e = compute_E(k);
    const CountTable s = count_family(enum_simple_qsp(2 * k), 2 * k);
    c.equal(odd_case_count(k, e), s.at(k + 1), "k=" + std::to_string(k));
    c.equal(s.at(k + 1), BigInt(value), "|S(2k,k+1)| k=" + std::to_string(k));
  }
  // k = 4 against the extended count on [8].
  EnumerationOptions extended;
  extended.extended = true;
  const CountTable eight = count_family(enum_simple_qsp(8, extended), 8);
  c.equal(odd_case_count(4, compute_E(4)), eight.at(5), "k=4");
}

void check_axioms(Check& c, const KLResult& r, const std::string& what) {
  for (const std::string& v : kl_axiom_violations(r)) c.expect(false, what + ": " + v);
  c.expect(poly_is_unimodal(r.z), what + ": Z not unimodal");
}

void criterion_axioms(Check& c) {
  for (int n = 2; n <= 9; ++n) check_axioms(c, braid_kl(n), "K" + std::to_string(n));
  KLMemo memo;
  std::size_t checked = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& level : enum_qsp(n)) {
      for (const Matroid& m : level) {
        if (m.loops() != 0) continue;
        const KLResult r = kl_generic(m, memo);
        std::ostringstream name;
        name << m;
        check_axioms(c, r, name.str());
        if (m.rank() <= 2 || m.rank() == m.ground_size()) c.expect(r.p == IntPolynomial{1}, name.str() + ": P != 1");
        ++checked;
      }
    }
  }
  c.expect(checked > 0, "no matroids checked");
}

std::vector<std::size_t> sorted_sizes(const std::vector<Matroid>& family) {
  std::vector<std::size_t> sizes = isomorphism_class_sizes(family);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "" : "+") + std::to_string(x);
  return out;
}

void criterion_orbits(Check& c) {
  const std::vector<std::size_t> sp{20, 45, 45, 180};
  const std::vector<std::size_t> qsp{3, 4, 4, 6, 6, 12};
  const std::vector<std::size_t> simple{105, 630};
  c.equal(join(sorted_sizes(enum_series_parallel(6)[3])), join(sp), "SP(6,3) orbits");
  c.equal(join(sorted_sizes(enum_qsp(4)[2])), join(qsp), "QSP(4,2) orbits");
  c.equal(join(sorted_sizes(enum_simple_qsp(7)[4])), join(simple), "simple(7,4) orbits");
}

void criterion_equivariant(Check& c) {
  for (int n = 3; n <= 6; ++n) {
    const VerificationReport r = verify_theorem_equivariant(n);
    c.expect(!r.checks.empty(), "empty report at n=" + std::to_string(n));
    if (auto f = r.first_failure()) c.expect(false, f->name + ": " + f->lhs + " vs " + f->rhs);
  }
}

void criterion_duality(Check& c) {
  EnumeratedTables& t = tables();
  for (int n = 1; n <= 7; ++n) {
    if (!t.qsp.count(n)) t.qsp[n] = count_family(enum_qsp(n), n);
    for (int k = 0; k <= n; ++k) {
      c.equal(t.qsp[n].at(k), t.qsp[n].at(n - k), "A(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  const VerificationReport r = relation_checks(7);
  c.expect(!r.checks.empty(), "no relation checks");
  if (auto f = r.first_failure()) c.expect(false, f->name + ": " + f->lhs + " vs " + f->rhs);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "braid polynomials match the reference tables", kLimitBraidTables, criterion_braid_tables},
      {2, "generic, recursion and series engines agree", kLimitEngines, criterion_engines},
      {3, "enumeration reproduces the count tables", kLimitEnumeration, criterion_enumeration},
      {4, "generating-function coefficients", kLimitSeries, criterion_series},
      {5, "triangular cacti counts and bijection", kLimitCacti, criterion_cacti},
      {6, "odd ground size identity", kLimitOddCase, criterion_odd_case},
      {7, "KL axiom property suite", kLimitAxioms, criterion_axioms},
      {8, "isomorphism orbit partitions", kLimitOrbits, criterion_orbits},
      {9, "equivariant coefficients equal permutation characters", kLimitEquivariant, criterion_equivariant},
      {10, "duality and binomial/Stirling relations", kLimitDuality, criterion_duality},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < cr.limit_seconds, "time limit exceeded");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, cr.limit_seconds);
    std::cout << (check.ok() ? "PASS" : "FAIL") << " C" << cr.id << " " << cr.title << " (" << timing << ")";
    if (!check.ok()) {
      std::cout << ": " << check.notes();
      ++failed;
    }
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
