#pragma once

// Command-line front end. Kept in a header so the test suite can drive
// `run()` with in-memory streams.
//
// Exit codes: 0 success, 1 usage, 2 domain (k or theorem hypothesis),
// 3 verification found violations, 4 inconclusive oracle scan.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kramanujan/exact_rational.hpp"
#include "kramanujan/gap_theorem.hpp"
#include "kramanujan/gap_verify.hpp"
#include "kramanujan/prime_store.hpp"
#include "kramanujan/ramanujan.hpp"

namespace kramanujan::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kViolations = 3, kInconclusive = 4 };

inline constexpr const char* kTableCsvHeader = "n,a,prime,prev_prime,ratio_num,ratio_den";

struct TheoremArgs {
  std::string name = "axler";
  std::optional<std::uint64_t> x0;
  std::optional<std::string> c;
  std::optional<unsigned> e;

  void attach(CLI::App& cmd) {
    cmd.add_option("--theorem", name, "axler, dusart, trudgian or custom")
        ->check(CLI::IsMember({"axler", "dusart", "trudgian", "custom"}));
    cmd.add_option("--x0", x0, "custom theorem: validity threshold");
    cmd.add_option("--c", c, "custom theorem: constant, decimal or p/q");
    cmd.add_option("--e", e, "custom theorem: log exponent");
  }

  GapTheorem resolve() const {
    if (name != "custom") {
      if (x0 || c || e) throw parse_error("--x0/--c/--e only apply to --theorem custom");
      return theorems::by_name(name);
    }
    if (!x0 || !c || !e) throw parse_error("--theorem custom needs --x0, --c and --e");
    return GapTheorem::make("custom", *x0, ExactRational::parse(*c), *e);
  }
};

inline Json theorem_json(const GapTheorem& thm) {
  Json j;
  j["name"] = thm.name;
  j["x0"] = thm.x0;
  j["c"] = thm.c.to_string();
  j["e"] = thm.e;
  return j;
}

inline std::string decimal(double v, int digits = 17) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

/// Smallest limit whose store holds at least n primes.
inline std::uint64_t limit_for_index(std::uint64_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

struct ComputeArgs {
  std::string k;
  std::uint64_t n = 1;
  std::string method = "auto";
  std::optional<std::uint64_t> scan_limit;
};

inline int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  const ExactRatio k = parse_k(args.k);
  if (args.n < 1) throw parse_error("--n must be at least 1");

  Json j;
  j["schema"] = "kramanujan.compute/1";
  j["k"] = k.value().to_string();
  j["n"] = args.n;

  if (args.n >= 2 || args.method == "oracle") {
    if (!args.scan_limit)
      throw parse_error(args.n >= 2 ? "--n >= 2 is answered by the oracle and needs --scan-limit"
                                    : "--method oracle needs --scan-limit");
    const BruteForceResult r = brute_force_R(k, args.n, *args.scan_limit);
    j["prime"] = r.prime;
    j["index"] = r.index;
    j["method"] = to_string(Method::oracle);
    j["verified_up_to"] = r.scan_limit;
    if (args.n == 1) {
      try {
        const Certificate cert = certify(k);
        j["certified_bound"] = cert.bound;
      } catch (const unsupported_range_error&) {
        j["certified_bound"] = nullptr;
      }
    } else {
      j["caveat"] = "no a priori bound exists for n >= 2; result verified up to scan limit " +
                    std::to_string(r.scan_limit);
    }
  } else {
    const FirstRamanujan r =
        args.method == "table" ? first_k_from_table(k) : first_k_ramanujan(k);
    j["prime"] = r.prime;
    j["index"] = r.index;
    j["method"] = to_string(r.certificate.method);
    j["certified_bound"] = r.certificate.bound;
    if (!r.certificate.theorem.empty()) j["theorem"] = r.certificate.theorem;
    j["k_on_breakpoint"] = r.on_breakpoint;
    if (r.on_breakpoint)
      err << "note: k equals a consecutive-prime ratio; it is the closed end of a table "
             "interval\n";
  }
  j["k_decimal"] = decimal(k.value().to_double());
  out << j.dump(2) << '\n';
  return kOk;
}

inline int cmd_bound(const std::string& k_text, const TheoremArgs& thm_args, std::ostream& out) {
  const ExactRatio k = parse_k(k_text);
  const GapTheorem thm = thm_args.resolve();
  const std::uint64_t bound = cor_bound(k, thm);
  Json j;
  j["schema"] = "kramanujan.bound/1";
  j["k"] = k.value().to_string();
  j["theorem"] = theorem_json(thm);
  j["bound"] = bound;
  j["k_max_decimal"] = decimal(thm.k_max());
  out << j.dump(2) << '\n';
  return kOk;
}

struct TableArgs {
  std::string k_min = "1.0008968291";
  std::uint64_t index_limit = kReferenceIndex;
  std::string format = "csv";
};

inline int cmd_table(const TableArgs& args, std::ostream& out) {
  const ExactRatio k_min = parse_k(args.k_min);
  if (args.index_limit < 2) throw parse_error("--index-limit must be at least 2");
  const PrimeStore store(limit_for_index(args.index_limit));
  const auto rows = breakpoints(k_min, args.index_limit, store);

  if (args.format == "csv") {
    out << kTableCsvHeader << '\n';
    std::uint64_t n = 0;
    for (const auto& r : rows)
      out << ++n << ',' << r.index << ',' << r.prime << ',' << r.prev_prime << ','
          << r.ratio.num() << ',' << r.ratio.den() << '\n';
    return kOk;
  }
  Json j;
  j["schema"] = "kramanujan.table/1";
  j["k_min"] = k_min.value().to_string();
  j["index_limit"] = args.index_limit;
  j["rows"] = Json::array();
  std::uint64_t n = 0;
  for (const auto& r : rows) {
    Json row;
    row["n"] = ++n;
    row["a"] = r.index;
    row["prime"] = r.prime;
    row["prev_prime"] = r.prev_prime;
    row["ratio"] = r.ratio.to_string();
    j["rows"].push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
  return kOk;
}

struct VerifyArgs {
  TheoremArgs theorem;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  unsigned jobs = 1;
  bool explore = false;
};

inline int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const GapTheorem thm = args.theorem.resolve();
  if (args.from > args.to)
    throw range_error("--from " + std::to_string(args.from) + " exceeds --to " +
                      std::to_string(args.to));
  // Successor of the last prime <= to; prime gaps below 2^32 are < 400.
  const PrimeStore store(args.to + 1000);
  const VerificationReport rep =
      verify_theorem(thm, args.from, args.to, store, {args.jobs, args.explore});

  Json j;
  j["schema"] = "kramanujan.verify/1";
  j["theorem"] = theorem_json(thm);
  j["from"] = rep.lo;
  j["to"] = rep.hi;
  j["pairs_checked"] = rep.pairs_checked;
  j["last_checked_start"] = rep.last_checked_start;
  j["violation_count"] = rep.violations.size();
  j["violations"] = Json::array();
  for (const auto& v : rep.violations) {
    Json row;
    row["prime"] = v.prime;
    row["next_prime"] = v.next_prime;
    row["x_decimal"] = decimal(v.x);
    row["threshold_decimal"] = decimal(v.threshold);
    j["violations"].push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
  err << "verified " << rep.pairs_checked << " gaps in "
      << std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count() << " ms\n";
  return rep.holds() ? kOk : kViolations;
}

/// Parses argv and runs one subcommand; every path returns one of the
/// ExitCode values.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First and n-th k-Ramanujan primes, explicit bounds, and short-interval checks",
               "kramanujan"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "compute R_n^(k)");
  c->add_option("--k", compute.k, "threshold k > 1, decimal or p/q")->required();
  c->add_option("--n", compute.n, "Ramanujan index (default 1)");
  c->add_option("--method", compute.method, "auto, table or oracle")
      ->check(CLI::IsMember({"auto", "table", "oracle"}));
  c->add_option("--scan-limit", compute.scan_limit, "oracle scan horizon");

  std::string bound_k;
  TheoremArgs bound_thm;
  auto* b = app.add_subcommand("bound", "explicit upper bound for R_1^(k)");
  b->add_option("--k", bound_k, "threshold k > 1, decimal or p/q")->required();
  bound_thm.attach(*b);

  TableArgs table;
  auto* t = app.add_subcommand("table", "k-interval breakpoint table");
  t->add_option("--k-min", table.k_min, "smallest k covered");
  t->add_option("--index-limit", table.index_limit, "largest prime index scanned");
  t->add_option("--format", table.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "scan prime gaps against a short-interval theorem");
  verify.theorem.attach(*v);
  v->add_option("--from", verify.from, "lower end of the range")->required();
  v->add_option("--to", verify.to, "upper end of the range")->required();
  v->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);
  v->add_flag("--explore", verify.explore, "allow --from below the theorem's x0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return cmd_compute(compute, out, err);
    if (*b) return cmd_bound(bound_k, bound_thm, out);
    if (*t) return cmd_table(table, out);
    if (*v) return cmd_verify(verify, out, err);
    return kUsage;
  } catch (const parse_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const range_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const inconclusive_error& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace kramanujan::cli
