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

#ifndef BRAIDKL_REPORT_HPP_
#define BRAIDKL_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "braidkl/exactmath.hpp"

namespace braidkl {

// Exact counts of labelled matroids on [n], indexed by rank 0..n.
struct CountTable {
  int n = 0;
  std::vector<BigInt> by_rank;

  CountTable() = default;
  explicit CountTable(int ground_size)
      : n(ground_size), by_rank(static_cast<std::size_t>(ground_size) + 1, 0) {}

  BigInt at(int rank) const {
    if (rank < 0 || rank > n) return 0;
    return by_rank[static_cast<std::size_t>(rank)];
  }
  BigInt total() const;
  friend bool operator==(const CountTable&, const CountTable&) = default;
};

// One checked identity: both sides as they were computed.
struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<IdentityCheck> checks;

  void add(std::string name, const BigInt& lhs, const BigInt& rhs);
  void add(std::string name, std::string lhs, std::string rhs, bool ok);
  void append(const VerificationReport& other);

  bool all_ok() const;
  std::optional<IdentityCheck> first_failure() const;
};

}  // namespace braidkl

#endif  // BRAIDKL_REPORT_HPP_
