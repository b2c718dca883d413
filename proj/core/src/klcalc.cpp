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

#include "braidkl/klcalc.hpp"

#include <algorithm>
#include <map>

namespace braidkl {

IntPolynomial palindromic_complete(const IntPolynomial& tail, int d) {
  if (d < 0) throw KLValidationError("negative rank");
  if (tail.degree() > d) throw KLValidationError("tail degree exceeds rank");
  if (d == 0) {
    if (!tail.is_zero()) throw KLValidationError("rank 0 matroid with a nonzero tail");
    return IntPolynomial{1};
  }
  std::vector<BigInt> p;
  for (int i = 0; 2 * i < d; ++i) {
    BigInt c = tail.coeff(d - i) - tail.coeff(i);
    if (c < 0) {
      throw KLValidationError("negative coefficient " + c.get_str() + " at t^" + std::to_string(i));
    }
    p.push_back(c);
  }
  return IntPolynomial(std::move(p));
}

KLResult kl_from_tail(const IntPolynomial& tail, int d) {
  KLResult r;
  r.rank = d;
  r.p = palindromic_complete(tail, d);
  r.z = r.p + tail;
  return r;
}

std::vector<std::string> kl_axiom_violations(const KLResult& r) {
  std::vector<std::string> out;
  if (r.rank == 0) {
    if (!(r.p == IntPolynomial{1})) out.push_back("P != 1 in rank 0");
  } else if (2 * r.p.degree() >= r.rank) {
    out.push_back("deg P >= rank/2");
  }
  if (r.z.degree() != r.rank || !poly_is_palindromic(r.z, r.rank)) {
    out.push_back("Z not palindromic of degree rank");
  }
  if (!poly_has_nonnegative_coefficients(r.p)) out.push_back("negative coefficient in P");
  if (!poly_has_nonnegative_coefficients(r.z)) out.push_back("negative coefficient in Z");
  return out;
}

// ---------------------------------------------------------------------------
// Memo

bool KLMemo::lookup(const Matroid& key, KLResult& out) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void KLMemo::insert(const Matroid& key, const KLResult& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t KLMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

// ---------------------------------------------------------------------------
// Generic engine over an explicit matroid

namespace {

KLResult kl_simple(const Matroid& m, KLMemo& memo) {
  KLResult cached;
  if (memo.lookup(m, cached)) return cached;
  if (m.rank() == 0) {
    KLResult r{IntPolynomial{1}, IntPolynomial{1}, 0};
    memo.insert(m, r);
    return r;
  }
  const FlatLattice flats = flats_lattice(m);
  IntPolynomial tail;
  for (int r = 1; r <= m.rank(); ++r) {
    for (Subset f : flats.by_rank[static_cast<std::size_t>(r)]) {
      // M/F is loopless because F is a flat; its simplification has the same
      // lattice of flats.
      const Matroid contraction = simplify(contract_set(m, f)).matroid;
      tail += kl_simple(contraction, memo).p.shifted(r);
    }
  }
  KLResult result = kl_from_tail(tail, m.rank());
  memo.insert(m, result);
  return result;
}

}  // namespace

KLResult kl_generic(const Matroid& m, KLMemo& memo) {
  if (m.loops() != 0) throw MatroidError("kl_generic: matroid has a loop");
  // Simplification does not change the lattice of flats.
  return kl_simple(simplify(m).matroid, memo);
}

KLResult kl_generic(const Matroid& m) {
  KLMemo memo;
  return kl_generic(m, memo);
}

// ---------------------------------------------------------------------------
// Lattice engine

int RankedLattice::top_rank() const {
  return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
}

RankedLattice lattice_from_flats(const FlatLattice& flats) {
  RankedLattice lattice;
  std::vector<Subset> all;
  for (std::size_t r = 0; r < flats.by_rank.size(); ++r) {
    for (Subset f : flats.by_rank[r]) {
      all.push_back(f);
      lattice.rank.push_back(static_cast<int>(r));
    }
  }
  lattice.above.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i != j && (all[i] & all[j]) == all[i]) lattice.above[i].push_back(static_cast<int>(j));
    }
  }
  return lattice;
}

RankedLattice partition_lattice(int n) {
  if (n < 1) throw std::invalid_argument("partition_lattice: n must be positive");
  // Restricted growth strings, finest partition first.
  std::vector<std::vector<int>> parts;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      parts.push_back(rgs);
      return;
    }
    for (int b = blocks; b >= 0; --b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  auto block_count = [](const std::vector<int>& p) {
    return *std::max_element(p.begin(), p.end()) + 1;
  };
  std::stable_sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
    return block_count(a) > block_count(b);
  });
  RankedLattice lattice;
  for (const auto& p : parts) lattice.rank.push_back(n - block_count(p));
  lattice.above.resize(parts.size());
  // q <= r iff every block of q sits inside a block of r.
  auto finer = [n](const std::vector<int>& q, const std::vector<int>& r) {
    std::vector<int> target(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      int& t = target[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])];
      if (t == -1) t = r[static_cast<std::size_t>(i)];
      else if (t != r[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (lattice.rank[j] > lattice.rank[i] && finer(parts[i], parts[j])) {
        lattice.above[i].push_back(static_cast<int>(j));
      }
    }
  }
  return lattice;
}

KLResult kl_of_lattice(const RankedLattice& lattice) {
  const std::size_t size = lattice.size();
  if (size == 0) throw std::invalid_argument("kl_of_lattice: empty lattice");
  const int top = lattice.top_rank();
  std::vector<std::size_t> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.rank[a] > lattice.rank[b];
  });
  std::vector<IntPolynomial> p(size);
  KLResult bottom;
  for (std::size_t i : order) {
    IntPolynomial tail;
    for (int j : lattice.above[i]) {
      tail += p[static_cast<std::size_t>(j)].shifted(lattice.rank[static_cast<std::size_t>(j)] -
                                                     lattice.rank[i]);
    }
    KLResult r = kl_from_tail(tail, top - lattice.rank[i]);
    p[i] = r.p;
    if (i == 0) bottom = r;
  }
  return bottom;
}

KLResult kl_generic_braid(int n) {
  if (n >= 2 && n <= 6) return kl_generic(braid(n));
  if (n == 1 || (n >= 7 && n <= 8)) return kl_of_lattice(partition_lattice(n));
  throw std::invalid_argument("kl_generic_braid: n must be between 1 and 8");
}

// ---------------------------------------------------------------------------
// Braid recursion

KLResult braid_kl(int n) {
  if (n < 1) throw std::invalid_argument("braid_kl: n must be at least 1");
  static std::mutex mutex;
  static std::vector<KLResult> cache;  // cache[k] = K_{k+1}
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) < n) {
    const int m = static_cast<int>(cache.size()) + 1;
    IntPolynomial tail;
    // Partitions with k < m blocks: rank m - k flats whose contractions
    // simplify to K_k.
    for (int k = 1; k < m; ++k) {
      tail += stirling2(m, k) * cache[static_cast<std::size_t>(k - 1)].p.shifted(m - k);
    }
    cache.push_back(kl_from_tail(tail, m - 1));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

VerificationReport verify_theorem_main(int n, const CountTable& counts_simple,
                                       const CountTable& counts_all) {
  VerificationReport report;
  report.suite = "main";
  const KLResult kl = braid_kl(n);
  const int m = n - 1;
  if (counts_simple.n != m || counts_all.n != m) {
    report.add("ground size of supplied tables for n=" + std::to_string(n),
               std::to_string(counts_simple.n) + "," + std::to_string(counts_all.n),
               std::to_string(m), false);
    return report;
  }
  for (int i = 0; i <= m; ++i) {
    const std::string tag = "K" + std::to_string(n) + " [t^" + std::to_string(i) + "]";
    report.add(tag + " P = |S(" + std::to_string(m) + "," + std::to_string(m - i) + ")|",
               kl.p.coeff(i), counts_simple.at(m - i));
    report.add(tag + " Z = |A(" + std::to_string(m) + "," + std::to_string(m - i) + ")|",
               kl.z.coeff(i), counts_all.at(m - i));
  }
  return report;
}

}  // namespace braidkl
