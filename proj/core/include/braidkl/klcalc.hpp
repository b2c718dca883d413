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

// Kazhdan-Lusztig and Z-polynomials of loopless matroids.
//
// P_M is characterised by P = 1 in rank 0, deg P < rk/2 in positive rank,
// and palindromicity of Z_M(t) = sum_F t^{rk F} P_{M/F}(t) in degree rk M.
// Writing Z = P + tail, where the tail sums over the flats above the bottom,
// palindromicity pins down p_i = tail_{d-i} - tail_i for i < d/2.
//
// Three engines live here:
//  * kl_generic: recursion over the flats of an explicit matroid, through the
//    simplified contractions M/F, memoised on the simplification.
//  * kl_of_lattice: the same recursion on an explicit ranked lattice; used
//    for braid matroids too large for a bases list (via the partition
//    lattice).
//  * braid_kl: the braid-only recursion through Stirling numbers, since a
//    flat of K_n with k blocks has rank n - k and contraction simplifying to
//    K_k.

#ifndef BRAIDKL_KLCALC_HPP_
#define BRAIDKL_KLCALC_HPP_

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidkl/exactmath.hpp"
#include "braidkl/matroid.hpp"
#include "braidkl/report.hpp"

namespace braidkl {

// Raised when a computed polynomial breaks the degree or sign constraints;
// always an upstream bug, never a property of the input.
class KLValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KLResult {
  IntPolynomial p;
  IntPolynomial z;
  int rank = 0;

  friend bool operator==(const KLResult&, const KLResult&) = default;
};

// The unique P with deg P < d/2 making tail + P palindromic of degree d.
// For d = 0 returns 1. Throws KLValidationError if the result would have a
// negative coefficient or the tail does not fit degree d.
IntPolynomial palindromic_complete(const IntPolynomial& tail, int d);

// P from palindromic_complete and Z = P + tail.
KLResult kl_from_tail(const IntPolynomial& tail, int d);

// Lists every violated constraint (empty when all hold): Z palindromic of
// degree rank, deg P < rank/2 (P = 1 in rank 0), nonnegative coefficients.
std::vector<std::string> kl_axiom_violations(const KLResult& r);

// Thread-safe memo from simplified matroids to their results. Concurrent
// inserts of the same key store equal values, so losing a race is harmless.
class KLMemo {
 public:
  bool lookup(const Matroid& key, KLResult& out) const;
  void insert(const Matroid& key, const KLResult& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Matroid, KLResult, MatroidHash> table_;
};

// Throws MatroidError for matroids with loops.
KLResult kl_generic(const Matroid& m, KLMemo& memo);
KLResult kl_generic(const Matroid& m);

// A finite ranked lattice given explicitly. Element 0 is the bottom; above[i]
// lists the elements strictly greater than i.
struct RankedLattice {
  std::vector<int> rank;
  std::vector<std::vector<int>> above;

  std::size_t size() const { return rank.size(); }
  int top_rank() const;
};

RankedLattice lattice_from_flats(const FlatLattice& flats);
// Set partitions of [n] ordered by coarsening; rank = n - #blocks.
RankedLattice partition_lattice(int n);

// P and Z of the bottom element's upper interval (the whole lattice).
KLResult kl_of_lattice(const RankedLattice& lattice);

// kl_generic on braid(n) for n <= 6; on the partition lattice for 7 <= n <= 8.
KLResult kl_generic_braid(int n);

// Braid matroid K_n via Z_{K_n} = sum_k S(n, k) t^{n-k} P_{K_k}; n >= 1.
KLResult braid_kl(int n);

// Compares [t^i] P_{K_n} with |S(n-1, n-1-i)| and [t^i] Z_{K_n} with
// |A(n-1, n-1-i)|, the tables being counts for ground size n - 1.
VerificationReport verify_theorem_main(int n, const CountTable& counts_simple,
                                       const CountTable& counts_all);

}  // namespace braidkl

#endif  // BRAIDKL_KLCALC_HPP_
