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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>

#include "braidkl/cacti.hpp"
#include "braidkl/equivariant.hpp"
#include "braidkl/gfseries.hpp"
#include "braidkl/klcalc.hpp"
#include "braidkl/matroid.hpp"
#include "braidkl/spenum.hpp"

namespace braidkl::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for out-of-range parameters; maps to exit code 2.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxKlN = 13;
inline constexpr int kMaxGenericN = 8;
inline constexpr int kMaxEquivariantN = 6;

struct RunConfig {
  int n = 4;
  int max_n = 0;  // 0: subcommand default
  int order = kDefaultSeriesOrder;
  std::string family = "sp";
  std::string suite = "all";
  std::string engine = "all";
  std::string format;  // empty: subcommand default
  int jobs = 1;
  bool extended = false;
  std::string graph;
};

Json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json poly_to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(big_to_json(c));
  if (arr.empty()) arr.push_back(0);
  return arr;
}

Json rational_to_json(const BigRational& v) {
  if (v.get_den() == 1) return big_to_json(v.get_num());
  return Json(v.get_str());
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const IdentityCheck& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}});
  }
  Json out{{"suite", r.suite}, {"ok", r.all_ok()}, {"checks", std::move(checks)}};
  if (auto f = r.first_failure()) out["first_failure"] = f->name;
  return out;
}

// ---------------------------------------------------------------------------
// kl

int cmd_kl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = cfg.format.empty() ? "plain" : cfg.format;
  if (format == "csv") throw LimitError("kl supports --format plain or json");
  std::vector<std::string> engines;
  std::optional<KLResult> result;
  bool agree = true;
  auto record = [&](const std::string& name, const KLResult& r) {
    engines.push_back(name);
    if (!result) result = r;
    else if (!(r == *result)) agree = false;
  };

  if (!cfg.graph.empty()) {
    std::ifstream in(cfg.graph);
    if (!in) throw LimitError("cannot open graph file " + cfg.graph);
    const Matroid m = from_graph(Multigraph::parse(in));
    record("generic", kl_generic(m));
  } else {
    const int n = cfg.n;
    if (n < 1 || n > kMaxKlN) throw LimitError("kl: --n must be between 1 and " + std::to_string(kMaxKlN));
    const bool all = cfg.engine == "all";
    if (cfg.engine == "generic" && n > kMaxGenericN) {
      throw LimitError("kl: the generic engine supports n <= " + std::to_string(kMaxGenericN));
    }
    if (cfg.engine == "genfun" || all) {
      if (cfg.order < n - 1) throw LimitError("kl: --order must be at least n - 1");
    }
    if (cfg.engine == "generic" || (all && n <= kMaxGenericN)) record("generic", kl_generic_braid(n));
    if (cfg.engine == "stirling" || all) record("stirling", braid_kl(n));
    if (cfg.engine == "genfun" || all) {
      const int order = std::max(cfg.order, 1);
      const BivariateSeries A = build_A(order);
      const BivariateSeries S = build_S_from_A(A);
      KLResult r;
      r.rank = n - 1;
      r.p = kl_poly_from_S(S, n - 1);
      r.z = z_poly_from_A(A, n - 1);
      record("genfun", r);
    }
  }
  if (!result) throw LimitError("kl: unknown engine " + cfg.engine);

  if (format == "json") {
    Json j;
    if (cfg.graph.empty()) j["n"] = cfg.n;
    else j["graph"] = cfg.graph;
    j["P"] = poly_to_json(result->p);
    j["Z"] = poly_to_json(result->z);
    j["engines"] = engines;
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else {
    out << "P = " << result->p.to_string("t") << "; Z = " << result->z.to_string("t") << "\n";
    std::string joined;
    for (const auto& e : engines) joined += (joined.empty() ? "" : ", ") + e;
    out << "engines: " << joined << "; agreement: " << (agree ? "yes" : "NO") << "\n";
  }
  if (!agree) {
    err << "engines disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  const int max_n = cfg.max_n == 0 ? 7 : cfg.max_n;
  const int limit = cfg.extended ? kMaxEnumerationSize : kMaxQspSize;
  if (max_n < 1 || max_n > limit) {
    throw LimitError("tables: --max-n must be between 1 and " + std::to_string(limit) +
                     (cfg.extended ? "" : " (use --extended for 8)"));
  }
  EnumerationOptions opts;
  opts.jobs = cfg.jobs;
  opts.extended = cfg.extended;
  std::vector<CountTable> tables;
  for (int n = 1; n <= max_n; ++n) {
    err << "enumerating " << cfg.family << " n=" << n << "\n";
    RankedFamily family;
    if (cfg.family == "sp") family = enum_series_parallel(n, opts);
    else if (cfg.family == "qsp") family = enum_qsp(n, opts);
    else if (cfg.family == "simple-qsp") family = enum_simple_qsp(n, opts);
    else throw LimitError("tables: unknown family " + cfg.family);
    tables.push_back(count_family(family, n));
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const CountTable& t : tables) {
      Json counts = Json::array();
      for (const BigInt& c : t.by_rank) counts.push_back(big_to_json(c));
      arr.push_back(Json{{"n", t.n}, {"counts_by_rank", std::move(counts)}});
    }
    out << Json{{"family", cfg.family}, {"tables", std::move(arr)}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << tables_to_csv(tables);
  } else {
    // Plain: the CSV grid with aligned columns.
    out << "k\\n";
    for (const CountTable& t : tables) out << "\t" << t.n;
    out << "\n";
    for (int k = 0; k <= max_n; ++k) {
      out << k;
      for (const CountTable& t : tables) out << "\t" << (k <= t.n ? t.at(k).get_str() : "");
      out << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport suite_main(const RunConfig& cfg, std::ostream& err) {
  const int limit = cfg.extended ? kMaxEnumerationSize + 1 : kMaxQspSize + 1;
  const int max_n = cfg.max_n == 0 ? std::min(7, limit) : cfg.max_n;
  if (max_n < 2 || max_n > limit) {
    throw LimitError("verify main: --max-n must be between 2 and " + std::to_string(limit));
  }
  EnumerationOptions opts;
  opts.jobs = cfg.jobs;
  opts.extended = cfg.extended;
  VerificationReport report;
  report.suite = "main";
  for (int n = 2; n <= max_n; ++n) {
    err << "main: K" << n << "\n";
    const int m = n - 1;
    const CountTable simple = count_family(enum_simple_qsp(m, opts), m);
    const CountTable all = count_family(enum_qsp(m, opts), m);
    report.append(verify_theorem_main(n, simple, all));
  }
  return report;
}

VerificationReport suite_equivariant(const RunConfig& cfg, std::ostream& err, Json* tables_out) {
  const int max_n = cfg.max_n == 0 ? 5 : cfg.max_n;
  if (max_n < 3 || max_n > kMaxEquivariantN) {
    throw LimitError("verify equivariant: --max-n must be between 3 and " + std::to_string(kMaxEquivariantN));
  }
  VerificationReport report;
  report.suite = "equivariant";
  Json tables = Json::array();
  for (int n = 3; n <= max_n; ++n) {
    err << "equivariant: K" << n << "\n";
    report.append(verify_theorem_equivariant(n));
    const EquivariantBraidTables t = braid_equivariant_tables(n);
    auto rows = [&](const std::vector<std::vector<BigRational>>& data) {
      Json arr = Json::array();
      for (const auto& row : data) {
        Json obj = Json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[t.class_labels[c]] = rational_to_json(row[c]);
        arr.push_back(std::move(obj));
      }
      return arr;
    };
    Json classes = Json::array();
    for (std::size_t c = 0; c < t.class_labels.size(); ++c) {
      classes.push_back(Json{{"cycle_type", t.class_labels[c]}, {"size", t.class_sizes[c]}});
    }
    tables.push_back(Json{{"n", n},
                          {"classes", std::move(classes)},
                          {"P", rows(t.p)},
                          {"Z", rows(t.z)},
                          {"P_expected", rows(t.p_expected)},
                          {"Z_expected", rows(t.z_expected)}});
  }
  if (tables_out) *tables_out = std::move(tables);
  report.suite = "equivariant";
  return report;
}

VerificationReport suite_genfun(const RunConfig& cfg, std::ostream& err) {
  const int order = cfg.order;
  if (order < 1 || order > 16) throw LimitError("verify genfun: --order must be between 1 and 16");
  err << "genfun: order " << order << "\n";
  VerificationReport report;
  report.suite = "genfun";
  const BivariateSeries A = build_A(order);
  const BivariateSeries S = build_S_from_A(A);
  for (int n = 1; n <= order + 1; ++n) {
    const KLResult r = braid_kl(n);
    const IntPolynomial z = z_poly_from_A(A, n - 1);
    const IntPolynomial p = kl_poly_from_S(S, n - 1);
    const std::string kn = "K" + std::to_string(n);
    report.add(kn + " Z series = recursion", z.to_string("t"), r.z.to_string("t"), z == r.z);
    report.add(kn + " P series = recursion", p.to_string("t"), r.p.to_string("t"), p == r.p);
    report.add(kn + " Z palindromic", z.to_string("t"), "palindromic", poly_is_palindromic(z, n - 1));
  }
  return report;
}

VerificationReport suite_cacti(std::ostream& err) {
  VerificationReport report;
  report.suite = "cacti";
  for (int k = 2; k <= 4; ++k) {
    err << "cacti: k=" << k << "\n";
    const auto cacti = enum_triangular_cacti(2 * k - 1);
    report.add("|cacti on " + std::to_string(2 * k - 1) + "| = (2k-3)!!(2k-1)^(k-2) for k=" + std::to_string(k),
               BigInt(cacti.size()), cacti_count_formula(k));
  }
  const auto cacti = enum_triangular_cacti(7);
  std::size_t cactus_ok = 0;
  for (const auto& g : cacti) {
    if (matroid_to_cactus(cactus_to_matroid(g)) == g) ++cactus_ok;
  }
  report.add("cactus -> matroid -> cactus roundtrip", BigInt(cactus_ok), BigInt(cacti.size()));
  const std::vector<Matroid> simple = enum_simple_qsp(7)[4];
  std::size_t matroid_ok = 0;
  std::set<TriangularCactus> images;
  for (const Matroid& m : simple) {
    const TriangularCactus g = matroid_to_cactus(m);
    images.insert(g);
    if (cactus_to_matroid(g) == m) ++matroid_ok;
  }
  report.add("matroid -> cactus -> matroid roundtrip", BigInt(matroid_ok), BigInt(simple.size()));
  report.add("|S(7,4)| = |cacti on 7|", BigInt(simple.size()), BigInt(cacti.size()));
  report.add("distinct cactus images", BigInt(images.size()), BigInt(cacti.size()));
  return report;
}

VerificationReport suite_relations(const RunConfig& cfg, std::ostream& err) {
  const int max_n = cfg.max_n == 0 ? 7 : cfg.max_n;
  if (max_n < 1 || max_n > kMaxQspSize) {
    throw LimitError("verify relations: --max-n must be between 1 and " + std::to_string(kMaxQspSize));
  }
  EnumerationOptions opts;
  opts.jobs = cfg.jobs;
  err << "relations: n<=" << max_n << "\n";
  VerificationReport report = relation_checks(max_n, opts);
  for (int n = 0; n <= max_n; ++n) {
    const CountTable a = count_family(enum_qsp(n, opts), n);
    for (int k = 0; k <= n; ++k) {
      report.add("|A(" + std::to_string(n) + "," + std::to_string(k) + ")| = |A(n,n-k)|", a.at(k), a.at(n - k));
    }
  }
  // The commonly listed sequence 0, 1, 75, 9345 admits two index readings;
  // report what each predicts next to the enumerated value.
  const std::vector<BigInt> listed{0, 1, 75, 9345};
  for (int k = 1; 2 * k <= max_n && k <= 3; ++k) {
    const CountTable s = count_family(enum_simple_qsp(2 * k, opts), 2 * k);
    const BigInt e = compute_E(k, opts);
    report.add("odd case k=" + std::to_string(k) + " (E=" + e.get_str() + ")", odd_case_count(k, e), s.at(k + 1));
    report.add("listed sequence read from E_1 at k=" + std::to_string(k), e, listed[static_cast<std::size_t>(k - 1)]);
    err << "relations: k=" << k << " reading from E_0 predicts "
        << odd_case_count(k, listed[static_cast<std::size_t>(k)]) << ", reading from E_1 predicts "
        << odd_case_count(k, listed[static_cast<std::size_t>(k - 1)]) << ", enumerated " << s.at(k + 1) << "\n";
  }
  report.suite = "relations";
  return report;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "csv") throw LimitError("verify supports --format json or plain");
  static const std::vector<std::string> kSuites{"main", "equivariant", "genfun", "cacti", "relations"};
  std::vector<std::string> suites;
  if (cfg.suite == "all") suites = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) != kSuites.end()) suites = {cfg.suite};
  else throw LimitError("verify: unknown suite " + cfg.suite);
  // --max-n applies to single suites; "all" uses each suite's default.
  RunConfig sub = cfg;
  if (cfg.suite == "all") sub.max_n = 0;

  std::vector<VerificationReport> reports;
  Json equivariant_tables;
  for (const std::string& s : suites) {
    if (s == "main") reports.push_back(suite_main(sub, err));
    else if (s == "equivariant") reports.push_back(suite_equivariant(sub, err, &equivariant_tables));
    else if (s == "genfun") reports.push_back(suite_genfun(sub, err));
    else if (s == "cacti") reports.push_back(suite_cacti(err));
    else reports.push_back(suite_relations(sub, err));
  }
  bool ok = true;
  std::optional<IdentityCheck> first;
  for (const auto& r : reports) {
    if (!r.all_ok()) {
      ok = false;
      if (!first) first = r.first_failure();
    }
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json j = report_to_json(r);
      if (r.suite == "equivariant" && !equivariant_tables.is_null()) j["tables"] = equivariant_tables;
      arr.push_back(std::move(j));
    }
    out << Json{{"ok", ok}, {"reports", std::move(arr)}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const IdentityCheck& c : r.checks) {
        out << (c.ok ? "OK   " : "FAIL ") << "[" << r.suite << "] " << c.name << ": " << c.lhs << " = " << c.rhs << "\n";
      }
    }
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  if (!ok) {
    err << "first failing identity: " << first->name << " (" << first->lhs << " vs " << first->rhs << ")\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.jobs = default_jobs();
  CLI::App app{"Kazhdan-Lusztig polynomials of braid matroids and series-parallel enumeration", "braidkl"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "plain"};

  auto* kl = app.add_subcommand("kl", "Print P and Z of the braid matroid K_n");
  kl->add_option("--n", cfg.n, "Number of vertices (1..13)");
  kl->add_option("--engine", cfg.engine, "generic | stirling | genfun | all")
      ->check(CLI::IsMember({"generic", "stirling", "genfun", "all"}));
  kl->add_option("--order", cfg.order, "Series truncation order for the genfun engine");
  kl->add_option("--graph", cfg.graph, "Compute P and Z of a multigraph file instead");

  auto* tables = app.add_subcommand("tables", "Count labelled matroids by rank as CSV");
  tables->add_option("--family", cfg.family, "sp | qsp | simple-qsp")
      ->check(CLI::IsMember({"sp", "qsp", "simple-qsp"}));
  tables->add_option("--max-n", cfg.max_n, "Largest ground set size");

  auto* verify = app.add_subcommand("verify", "Check identities and report both sides");
  verify->add_option("--suite", cfg.suite, "main | equivariant | genfun | cacti | relations | all")
      ->check(CLI::IsMember({"main", "equivariant", "genfun", "cacti", "relations", "all"}));
  verify->add_option("--max-n", cfg.max_n, "Largest n checked by the suite");
  verify->add_option("--order", cfg.order, "Series truncation order");

  for (auto* sub : {kl, tables, verify}) {
    sub->add_option("--format", cfg.format, "json | csv | plain")->check(CLI::IsMember(formats));
    sub->add_option("--jobs", cfg.jobs, std::string("Worker threads (default from ") + kJobsEnv + ")")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--extended", cfg.extended, "Allow enumeration at n = 8");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (kl->parsed()) return cmd_kl(cfg, out, err);
    if (tables->parsed()) return cmd_tables(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace braidkl::cli
