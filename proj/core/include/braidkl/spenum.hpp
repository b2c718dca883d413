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

// Labelled enumeration of series-parallel (SP), quasi series-parallel (QSP)
// and simple QSP matroids on [n].
//
// SP matroids on two or more elements are grown breadth-first from U_{1,2}:
// every SP matroid on s+1 elements is a series or parallel extension of an SP
// matroid on the other s labels, so extending every level-s matroid at every
// element, with every possible new label, and deduplicating reaches exactly
// the next level. QSP matroids are direct sums of SP matroids over the blocks
// of a set partition of [n].

#ifndef BRAIDKL_SPENUM_HPP_
#define BRAIDKL_SPENUM_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "braidkl/exactmath.hpp"
#include "braidkl/matroid.hpp"
#include "braidkl/report.hpp"

namespace braidkl {

inline constexpr int kMaxEnumerationSize = 8;
inline constexpr int kMaxQspSize = 7;

// family[k] holds the rank-k members, sorted.
using RankedFamily = std::vector<std::vector<Matroid>>;

struct EnumerationOptions {
  int jobs = 1;
  // Nonzero: process each frontier in a shuffled order (for order
  // independence checks).
  std::uint64_t shuffle_seed = 0;
  // Allows enum_qsp at n = 8.
  bool extended = false;
};

// All SP matroids on exactly [s], sorted. Levels are computed once and shared
// by all callers; options only affect how a missing level is built.
const std::vector<Matroid>& series_parallel_level(int s, const EnumerationOptions& options = {});

// Builds the levels 1..n from scratch without touching the shared cache.
std::vector<std::vector<Matroid>> build_series_parallel_levels(int n,
                                                               const EnumerationOptions& options);

RankedFamily enum_series_parallel(int n, const EnumerationOptions& options = {});
RankedFamily enum_qsp(int n, const EnumerationOptions& options = {});
// Simple QSP matroids; assembled from simple components only, which is the
// same set as filtering enum_qsp by is_simple.
RankedFamily enum_simple_qsp(int n, const EnumerationOptions& options = {});

// Calls visit on every QSP matroid on [n] (simple ones only if simple_only).
void for_each_qsp(int n, bool simple_only, const std::function<void(const Matroid&)>& visit,
                  const EnumerationOptions& options = {});

RankedFamily filter_family(const RankedFamily& family,
                           const std::function<bool(const Matroid&)>& keep);
CountTable count_family(const RankedFamily& family, int n);
std::size_t family_size(const RankedFamily& family);

// Rows are ranks 0..max n, columns are n; entries with k > n are left blank.
std::string tables_to_csv(const std::vector<CountTable>& tables);

// Number of simple connected SP matroids of rank k + 1 on [2k].
BigInt compute_E(int k, const EnumerationOptions& options = {});

// E_k + 1/2 sum_{a=0}^{k-1} C(2k, 2a+1) (2a-1)!! (2k-2a-3)!! (2a+1)^{a-1}
// (2k-2a-1)^{k-a-2}: the number of simple QSP matroids of rank k + 1 on [2k].
BigInt odd_case_count(int k, const BigInt& E_k);

// Checks, for every n' <= n and rank k,
//   |A(n', k)|      = sum_i C(n', i) |A_loopless(i, k)|
//   |A_loopless(n', k)| = sum_i S(n', i) |S(i, k)|
// on enumerated families.
VerificationReport relation_checks(int n, const EnumerationOptions& options = {});

}  // namespace braidkl

#endif  // BRAIDKL_SPENUM_HPP_
