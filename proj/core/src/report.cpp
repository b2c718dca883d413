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

#include "braidkl/report.hpp"

#include <algorithm>
#include <utility>

namespace braidkl {

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& c : by_rank) sum += c;
  return sum;
}

void VerificationReport::add(std::string name, const BigInt& lhs, const BigInt& rhs) {
  checks.push_back({std::move(name), lhs.get_str(), rhs.get_str(), lhs == rhs});
}

void VerificationReport::add(std::string name, std::string lhs, std::string rhs, bool ok) {
  checks.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });
}

std::optional<IdentityCheck> VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.ok) return c;
  }
  return std::nullopt;
}

}  // namespace braidkl
