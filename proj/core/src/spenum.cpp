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

#include "braidkl/spenum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace braidkl {

namespace {

using MatroidSet = std::unordered_set<Matroid, MatroidHash>;

void extend_into(const Matroid& m, MatroidSet& out) {
  const int s = m.ground_size();
  for (int label = 0; label <= s; ++label) {
    for (int e = 0; e < s; ++e) {
      out.insert(parallel_extension(m, e, label));
      out.insert(series_extension(m, e, label));
    }
  }
}

std::vector<Matroid> next_level(const std::vector<Matroid>& level,
                                const EnumerationOptions& options) {
  std::vector<const Matroid*> order;
  order.reserve(level.size());
  for (const Matroid& m : level) order.push_back(&m);
  if (options.shuffle_seed != 0) {
    std::mt19937_64 rng(options.shuffle_seed + level.size());
    std::shuffle(order.begin(), order.end(), rng);
  }
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(order.size())));
  std::vector<MatroidSet> partial(static_cast<std::size_t>(jobs));
  auto work = [&](int worker) {
    for (std::size_t i = static_cast<std::size_t>(worker); i < order.size();
         i += static_cast<std::size_t>(jobs)) {
      extend_into(*order[i], partial[static_cast<std::size_t>(worker)]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  MatroidSet merged = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w) merged.insert(partial[w].begin(), partial[w].end());
  std::vector<Matroid> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end());
  return out;
}

void check_size(int n, int limit, const char* what) {
  if (n < 0 || n > limit) {
    throw std::invalid_argument(std::string(what) + ": n must be between 0 and " +
                                std::to_string(limit));
  }
}

RankedFamily group_by_rank(std::vector<Matroid> items, int n) {
  RankedFamily family(static_cast<std::size_t>(n) + 1);
  for (Matroid& m : items) family[static_cast<std::size_t>(m.rank())].push_back(std::move(m));
  for (auto& level : family) std::sort(level.begin(), level.end());
  return family;
}

}  // namespace

std::vector<std::vector<Matroid>> build_series_parallel_levels(int n,
                                                               const EnumerationOptions& options) {
  check_size(n, kMaxEnumerationSize, "series-parallel enumeration");
  std::vector<std::vector<Matroid>> levels(static_cast<std::size_t>(n) + 1);
  if (n >= 1) levels[1] = {single_loop(), single_coloop()};
  if (n >= 2) levels[2] = {uniform_matroid(1, 2)};
  for (int s = 2; s < n; ++s) {
    levels[static_cast<std::size_t>(s) + 1] = next_level(levels[static_cast<std::size_t>(s)], options);
  }
  return levels;
}

const std::vector<Matroid>& series_parallel_level(int s, const EnumerationOptions& options) {
  check_size(s, kMaxEnumerationSize, "series-parallel enumeration");
  static std::mutex mutex;
  static std::vector<std::vector<Matroid>> levels;
  static std::vector<bool> ready;
  std::lock_guard lock(mutex);
  if (levels.empty()) {
    levels.resize(kMaxEnumerationSize + 1);
    ready.assign(kMaxEnumerationSize + 1, false);
    levels[1] = {single_loop(), single_coloop()};
    levels[2] = {uniform_matroid(1, 2)};
    ready[0] = ready[1] = ready[2] = true;
  }
  for (int t = 3; t <= s; ++t) {
    if (ready[static_cast<std::size_t>(t)]) continue;
    levels[static_cast<std::size_t>(t)] = next_level(levels[static_cast<std::size_t>(t) - 1], options);
    ready[static_cast<std::size_t>(t)] = true;
  }
  return levels[static_cast<std::size_t>(s)];
}

RankedFamily enum_series_parallel(int n, const EnumerationOptions& options) {
  return group_by_rank(series_parallel_level(n, options), n);
}

void for_each_qsp(int n, bool simple_only, const std::function<void(const Matroid&)>& visit,
                  const EnumerationOptions& options) {
  check_size(n, kMaxEnumerationSize, "quasi series-parallel enumeration");
  // Components available for a block of each size.
  std::vector<std::vector<Matroid>> components(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) {
    for (const Matroid& m : series_parallel_level(s, options)) {
      if (!simple_only || is_simple(m)) components[static_cast<std::size_t>(s)].push_back(m);
    }
  }
  std::vector<Subset> seed{0};
  auto rec = [&](auto&& self, Subset remaining, const std::vector<Subset>& acc) -> void {
    if (remaining == 0) {
      visit(Matroid(n, acc));
      return;
    }
    const int first = std::countr_zero(static_cast<unsigned>(remaining));
    const auto rest = static_cast<Subset>(remaining & ~singleton(first));
    for (Subset sub = rest;; sub = static_cast<Subset>((sub - 1) & rest)) {
      const auto block = static_cast<Subset>(sub | singleton(first));
      const std::vector<int> members = elements_of(block);
      const int size = static_cast<int>(members.size());
      std::array<Subset, 256> spread{};
      for (unsigned mask = 0; mask < (1u << size); ++mask) {
        Subset out = 0;
        for (int i = 0; i < size; ++i) {
          if ((mask >> i) & 1u) out = static_cast<Subset>(out | singleton(members[static_cast<std::size_t>(i)]));
        }
        spread[mask] = out;
      }
      for (const Matroid& part : components[static_cast<std::size_t>(size)]) {
        std::vector<Subset> next;
        next.reserve(acc.size() * part.bases().size());
        for (Subset a : acc) {
          for (Subset b : part.bases()) next.push_back(static_cast<Subset>(a | spread[b]));
        }
        self(self, static_cast<Subset>(remaining & ~block), next);
      }
      if (sub == 0) break;
    }
  };
  rec(rec, full_set(n), seed);
}

RankedFamily enum_qsp(int n, const EnumerationOptions& options) {
  check_size(n, options.extended ? kMaxEnumerationSize : kMaxQspSize,
             "quasi series-parallel enumeration");
  std::vector<Matroid> all;
  for_each_qsp(n, false, [&](const Matroid& m) { all.push_back(m); }, options);
  return group_by_rank(std::move(all), n);
}

RankedFamily enum_simple_qsp(int n, const EnumerationOptions& options) {
  check_size(n, kMaxEnumerationSize, "simple quasi series-parallel enumeration");
  std::vector<Matroid> all;
  for_each_qsp(n, true, [&](const Matroid& m) { all.push_back(m); }, options);
  return group_by_rank(std::move(all), n);
}

RankedFamily filter_family(const RankedFamily& family,
                           const std::function<bool(const Matroid&)>& keep) {
  RankedFamily out(family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (const Matroid& m : family[k]) {
      if (keep(m)) out[k].push_back(m);
    }
  }
  return out;
}

CountTable count_family(const RankedFamily& family, int n) {
  CountTable t(n);
  for (std::size_t k = 0; k < family.size() && k <= static_cast<std::size_t>(n); ++k) {
    t.by_rank[k] = static_cast<unsigned long>(family[k].size());
  }
  return t;
}

std::size_t family_size(const RankedFamily& family) {
  std::size_t total = 0;
  for (const auto& level : family) total += level.size();
  return total;
}

std::string tables_to_csv(const std::vector<CountTable>& tables) {
  int max_n = 0;
  for (const auto& t : tables) max_n = std::max(max_n, t.n);
  std::ostringstream os;
  os << "k\\n";
  for (const auto& t : tables) os << "," << t.n;
  os << "\n";
  for (int k = 0; k <= max_n; ++k) {
    os << k;
    for (const auto& t : tables) {
      os << ",";
      if (k <= t.n) os << t.at(k).get_str();
    }
    os << "\n";
  }
  return os.str();
}

BigInt compute_E(int k, const EnumerationOptions& options) {
  if (k < 1 || 2 * k > kMaxEnumerationSize) {
    throw std::invalid_argument("compute_E: k must be between 1 and 4");
  }
  BigInt count = 0;
  for (const Matroid& m : series_parallel_level(2 * k, options)) {
    if (m.rank() == k + 1 && is_simple(m)) ++count;
  }
  return count;
}

BigInt odd_case_count(int k, const BigInt& E_k) {
  if (k < 1) throw std::invalid_argument("odd_case_count: k must be positive");
  BigInt sum = 0;
  for (int a = 0; a <= k - 1; ++a) {
    sum += binomial(2 * k, 2 * a + 1) * double_factorial(2 * a - 1) *
           double_factorial(2 * k - 2 * a - 3) * int_power(2 * a + 1, a - 1) *
           int_power(2 * k - 2 * a - 1, k - a - 2);
  }
  if (sum % 2 != 0) throw std::logic_error("odd_case_count: odd two-component sum");
  return E_k + sum / 2;
}

VerificationReport relation_checks(int n, const EnumerationOptions& options) {
  check_size(n, kMaxQspSize, "relation_checks");
  VerificationReport report;
  report.suite = "relations";
  std::vector<CountTable> all, loopless, simple;
  for (int m = 0; m <= n; ++m) {
    RankedFamily a = enum_qsp(m, options);
    all.push_back(count_family(a, m));
    loopless.push_back(count_family(filter_family(a, [](const Matroid& x) { return x.loops() == 0; }), m));
    simple.push_back(count_family(enum_simple_qsp(m, options), m));
  }
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= m; ++k) {
      BigInt loops_rhs = 0;
      BigInt stirling_rhs = 0;
      for (int i = k; i <= m; ++i) {
        loops_rhs += binomial(m, i) * loopless[static_cast<std::size_t>(i)].at(k);
        stirling_rhs += stirling2(m, i) * simple[static_cast<std::size_t>(i)].at(k);
      }
      const std::string at = "(" + std::to_string(m) + "," + std::to_string(k) + ")";
      report.add("|A" + at + "| = sum_i C(n,i) |A_loopless(i,k)|", all[static_cast<std::size_t>(m)].at(k),
                 loops_rhs);
      report.add("|A_loopless" + at + "| = sum_i S(n,i) |S(i,k)|",
                 loopless[static_cast<std::size_t>(m)].at(k), stirling_rhs);
    }
  }
  return report;
}

}  // namespace braidkl
