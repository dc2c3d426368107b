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

// nashdiv: Nash-social-welfare solvers for indivisible goods.
//
// Exit codes: 0 success / property holds; 1 invalid input (including bad
// documents and blown oracle budgets); 2 infeasible instance (no allocation
// with positive welfare); 3 checked property violated.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nashdiv/nashdiv.hpp"

namespace {

using namespace nashdiv;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 3;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string agents_1indexed(const std::vector<int>& agents) {
  std::string out;
  for (size_t i = 0; i < agents.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(agents[i] + 1);
  }
  return out;
}

// Splits an exact rational into decimal numerator/denominator strings.
std::pair<std::string, std::string> product_parts(const Rational& r) {
  return {boost::multiprecision::numerator(r).str(),
          boost::multiprecision::denominator(r).str()};
}

struct SolveArgs {
  std::string input;
  std::string algo;
  std::string start;
  std::string trace;
  std::string output;
  bool use_caps = false;
  bool use_concave = false;
  bool quiet = false;
};

struct CheckArgs {
  std::string input;
  std::string allocation;
  std::string property;
  bool use_caps = false;
  bool use_concave = false;
};

struct GenArgs {
  std::string family;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double density = -1.0;
  std::int64_t max_value = -1;
  std::string output;
};

struct OracleArgs {
  std::string input;
  std::uint64_t budget = kDefaultOracleBudget;
  bool use_caps = false;
  bool use_concave = false;
  std::string output;
};

struct BenchArgs {
  std::string suite;
  int count = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultOracleBudget;
  int max_m = 40;
  std::string output;
};

// Resolves the --caps/--concave toggles against what the document carries.
std::optional<ConcaveProfile> select_profile(const InstanceDocument& doc,
                                             bool use_caps, bool use_concave) {
  if (use_caps && use_concave)
    throw validation_error("--caps and --concave are mutually exclusive");
  if (use_caps) {
    if (!doc.caps)
      throw validation_error("instance document carries no \"caps\"");
    return caps_profile(doc.instance, *doc.caps);
  }
  if (use_concave) {
    if (!doc.concave)
      throw validation_error("instance document carries no \"concave\"");
    return doc.concave;
  }
  return std::nullopt;
}

void write_trace_csv(const std::string& path, const BinarySolution& sol) {
  std::ostringstream csv;
  csv << "iteration,from_agent,to_agent,path_len,zeros,product_num,"
         "product_den\n";
  for (const TraceRow& row : sol.trace) {
    auto [num, den] = product_parts(row.value.positive_product);
    csv << row.iteration << ',' << row.from_agent + 1 << ','
        << row.to_agent + 1 << ',' << row.path_len << ','
        << row.value.zero_count << ',' << num << ',' << den << '\n';
  }
  write_file(path, csv.str());
}

int cmd_solve(const SolveArgs& args) {
  InstanceDocument doc = load_instance(args.input);
  InstanceClass cls = classify(doc.instance);
  std::optional<ConcaveProfile> profile =
      select_profile(doc, args.use_caps, args.use_concave);

  Allocation result;
  if (args.algo == "identical") {
    if (!cls.is_identical)
      throw validation_error("instance is not identical");
    if (profile)
      throw validation_error(
          "--caps/--concave require --algo binary");
    if (!args.start.empty())
      throw validation_error("--start requires --algo binary");
    if (!args.trace.empty())
      throw validation_error("--trace requires --algo binary");
    result = solve_identical(doc.instance);
    if (!args.quiet)
      std::cout << nsw(doc.instance, result).render() << "\n";
  } else {
    if (!cls.is_binary) throw validation_error("instance is not binary");
    std::optional<Allocation> start;
    if (!args.start.empty())
      start = parse_allocation(read_file(args.start), doc.instance.num_agents,
                               doc.instance.num_goods);
    BinarySolution sol =
        solve_binary(doc.instance, start ? &*start : nullptr,
                     profile ? &*profile : nullptr);
    if (!args.trace.empty()) write_trace_csv(args.trace, sol);
    if (!sol.stabilized)
      std::cerr << "warning: iteration cap (" << sol.cap
                << ") reached before stabilization\n";
    if (!args.quiet) {
      NswValue value = profile
                           ? nsw_concave(doc.instance, *profile, sol.allocation)
                           : nsw(doc.instance, sol.allocation);
      std::cout << value.render() << "\n";
      std::cout << "iterations = " << sol.trace.size() << " (cap = " << sol.cap
                << "), stabilized = " << (sol.stabilized ? "true" : "false")
                << "\n";
    }
    result = std::move(sol.allocation);
  }
  if (!args.output.empty())
    write_file(args.output, serialize_allocation(result));
  return kExitOk;
}

int cmd_check(const CheckArgs& args) {
  InstanceDocument doc = load_instance(args.input);
  Allocation alloc =
      parse_allocation(read_file(args.allocation), doc.instance.num_agents,
                       doc.instance.num_goods);
  validate_allocation(doc.instance, alloc);
  std::optional<ConcaveProfile> profile =
      select_profile(doc, args.use_caps, args.use_concave);

  if (args.property == "nsw") {
    NswValue value = profile ? nsw_concave(doc.instance, *profile, alloc)
                             : nsw(doc.instance, alloc);
    std::cout << value.render() << "\n";
    return kExitOk;
  }
  if (profile)
    throw validation_error("--caps/--concave only apply to --property nsw");
  if (args.property == "ef") {
    if (auto w = check_ef(doc.instance, alloc)) {
      std::cout << "EF violation: agent " << w->envier + 1 << " envies agent "
                << w->envied + 1 << "\n";
      return kExitViolation;
    }
    std::cout << "EF: pass\n";
    return kExitOk;
  }
  // efx
  if (auto w = check_efx(doc.instance, alloc)) {
    std::cout << "EFx violation: agent " << w->envier + 1 << " envies agent "
              << w->envied + 1 << " after dropping good "
              << *w->dropped_good + 1 << "\n";
    return kExitViolation;
  }
  std::cout << "EFx: pass\n";
  return kExitOk;
}

int cmd_gen(const GenArgs& args) {
  InstanceDocument doc;
  GenInfo gen;
  gen.family = args.family;
  if (args.family == "random-binary") {
    if (args.n < 1 || args.m < 1)
      throw validation_error("random-binary needs --n and --m");
    if (args.max_value >= 0)
      throw validation_error("--max-value does not apply to random-binary");
    double density = args.density < 0 ? 0.5 : args.density;
    doc.instance = gen_random_binary(args.n, args.m, density, args.seed);
    gen.generator = kGeneratorId;
    gen.seed = args.seed;
    gen.density = density;
  } else if (args.family == "random-identical") {
    if (args.n < 1 || args.m < 1)
      throw validation_error("random-identical needs --n and --m");
    if (args.density >= 0)
      throw validation_error("--density does not apply to random-identical");
    std::int64_t max_value = args.max_value < 0 ? 10 : args.max_value;
    doc.instance = gen_random_identical(args.n, args.m, max_value, args.seed);
    gen.generator = kGeneratorId;
    gen.seed = args.seed;
    gen.max_value = max_value;
  } else {  // tight-efx
    if (args.m < 1) throw validation_error("tight-efx needs --m");
    if (args.n != 0 && args.n != 2)
      throw validation_error("tight-efx instances always have 2 agents");
    if (args.density >= 0 || args.max_value >= 0 || args.seed_given)
      throw validation_error(
          "tight-efx is deterministic: only --m applies");
    doc.instance = gen_tight_example(args.m);
  }
  doc.gen = std::move(gen);
  write_file(args.output, serialize_instance(doc));
  std::cout << "wrote " << args.output
            << " (agents = " << doc.instance.num_agents
            << ", goods = " << doc.instance.num_goods
            << ", family = " << args.family << ")\n";
  return kExitOk;
}

int cmd_oracle(const OracleArgs& args) {
  InstanceDocument doc = load_instance(args.input);
  std::optional<ConcaveProfile> profile =
      select_profile(doc, args.use_caps, args.use_concave);
  OracleResult r =
      brute_force(doc.instance, profile ? &*profile : nullptr, args.budget);
  std::cout << r.value.render() << "\n";
  std::cout << "explored = " << r.explored << " assignments\n";
  if (!args.output.empty())
    write_file(args.output, serialize_allocation(r.best));
  return kExitOk;
}

// One line of a benchmark CSV. Empty optionals print as empty cells.
struct BenchRow {
  std::string instance_id;
  std::optional<int> n, m;
  std::optional<std::uint64_t> seed;
  std::string algo;
  std::optional<double> nsw_algo, nsw_opt, ratio;
  std::optional<bool> exact_ratio_ok, efx_ok;
  std::optional<long long> iterations;
  std::optional<int> algo_zeros, opt_zeros;
  std::optional<Rational> algo_product, opt_product;

  static std::string header() {
    return "instance_id,n,m,seed,algo,nsw_algo,nsw_opt,ratio,exact_ratio_ok,"
           "efx_ok,iterations,algo_zeros,algo_product_num,algo_product_den,"
           "opt_zeros,opt_product_num,opt_product_den";
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << instance_id << ',';
    if (n) out << *n;
    out << ',';
    if (m) out << *m;
    out << ',';
    if (seed) out << *seed;
    out << ',' << algo << ',';
    if (nsw_algo) out << fmt_double(*nsw_algo);
    out << ',';
    if (nsw_opt) out << fmt_double(*nsw_opt);
    out << ',';
    if (ratio) out << fmt_double(*ratio);
    out << ',';
    if (exact_ratio_ok) out << (*exact_ratio_ok ? "true" : "false");
    out << ',';
    if (efx_ok) out << (*efx_ok ? "true" : "false");
    out << ',';
    if (iterations) out << *iterations;
    out << ',';
    if (algo_zeros) out << *algo_zeros;
    out << ',';
    if (algo_product) {
      auto [num, den] = product_parts(*algo_product);
      out << num << ',' << den;
    } else {
      out << ',';
    }
    out << ',';
    if (opt_zeros) out << *opt_zeros;
    out << ',';
    if (opt_product) {
      auto [num, den] = product_parts(*opt_product);
      out << num << ',' << den;
    } else {
      out << ',';
    }
    return std::move(out).str();
  }
};

// Largest m <= hard_cap with n^m <= budget, at least 2: keeps sampled
// instances inside the oracle budget.
int max_goods_within(int n, std::uint64_t budget, int hard_cap) {
  int m = 0;
  BigInt total = 1;
  while (m < hard_cap) {
    total *= n;
    if (total > budget) break;
    ++m;
  }
  return std::max(m, 2);
}

// product_a * 10000^n >= product_o * 9422^n, in exact integers.
bool ratio_at_least_9422(const Rational& prod_a, const Rational& prod_o,
                         int n) {
  BigInt lhs = boost::multiprecision::numerator(prod_a) *
               boost::multiprecision::denominator(prod_o);
  BigInt rhs = boost::multiprecision::numerator(prod_o) *
               boost::multiprecision::denominator(prod_a);
  for (int i = 0; i < n; ++i) {
    lhs *= 10000;
    rhs *= 9422;
  }
  return lhs >= rhs;
}

int cmd_bench(const BenchArgs& args) {
  std::vector<BenchRow> rows;
  SplitMix64 seeder(args.seed);

  if (args.suite == "identical-ratio") {
    double min_ratio = 2.0;
    bool all_exact = true, all_efx = true;
    for (int k = 0; k < args.count; ++k) {
      int n = 2 + static_cast<int>(seeder.next_below(5));
      int top_m = max_goods_within(n, args.budget, 12);
      int m = 2 + static_cast<int>(seeder.next_below(
                      static_cast<std::uint64_t>(top_m - 1)));
      std::int64_t maxv = 1 + static_cast<std::int64_t>(seeder.next_below(20));
      std::uint64_t seed = seeder.next();
      Instance inst = gen_random_identical(n, m, maxv, seed);
      Allocation greedy = solve_identical(inst);
      OracleResult opt = brute_force(inst, nullptr, args.budget);
      NswValue g = nsw(inst, greedy);
      BenchRow row;
      row.instance_id = "identical-" + std::to_string(k);
      row.n = n;
      row.m = m;
      row.seed = seed;
      row.algo = "identical";
      row.nsw_algo = g.to_double();
      row.nsw_opt = opt.value.to_double();
      row.ratio = opt.value.zero_count > 0
                      ? 1.0
                      : g.to_double() / opt.value.to_double();
      if (opt.value.zero_count == 0 && g.zero_count == 0)
        row.exact_ratio_ok = ratio_at_least_9422(g.positive_product,
                                                 opt.value.positive_product, n);
      else
        row.exact_ratio_ok = g.zero_count == opt.value.zero_count;
      row.efx_ok = !check_efx(inst, greedy).has_value();
      row.algo_zeros = g.zero_count;
      row.algo_product = g.positive_product;
      row.opt_zeros = opt.value.zero_count;
      row.opt_product = opt.value.positive_product;
      min_ratio = std::min(min_ratio, *row.ratio);
      all_exact = all_exact && *row.exact_ratio_ok;
      all_efx = all_efx && *row.efx_ok;
      rows.push_back(std::move(row));
    }
    BenchRow summary;
    summary.instance_id = "min-ratio-summary";
    summary.algo = "identical";
    summary.ratio = min_ratio;
    summary.exact_ratio_ok = all_exact;
    summary.efx_ok = all_efx;
    rows.push_back(std::move(summary));
  } else if (args.suite == "binary-exact" || args.suite == "concave-exact") {
    const bool concave = args.suite == "concave-exact";
    const double densities[] = {0.3, 0.6, 1.0};
    for (int k = 0; k < args.count; ++k) {
      int n = 2 + static_cast<int>(seeder.next_below(concave ? 2 : 3));
      int m = 2 + static_cast<int>(seeder.next_below(concave ? 6 : 7));
      double density = densities[seeder.next_below(3)];
      std::uint64_t seed = seeder.next();
      std::uint64_t profile_seed = seeder.next();
      Instance inst = gen_random_binary(n, m, density, seed);
      std::optional<ConcaveProfile> profile;
      if (concave)
        profile = (k % 2 == 0)
                      ? caps_profile(inst, gen_random_caps(n, 3, profile_seed))
                      : gen_random_concave(inst, profile_seed);
      OracleResult opt = brute_force(inst, profile ? &*profile : nullptr,
                                     args.budget);
      BenchRow row;
      row.instance_id =
          (concave ? "concave-" : "binary-") + std::to_string(k);
      row.n = n;
      row.m = m;
      row.seed = seed;
      row.algo = "binary";
      row.nsw_opt = opt.value.to_double();
      row.opt_zeros = opt.value.zero_count;
      row.opt_product = opt.value.positive_product;
      try {
        BinarySolution sol = solve_binary(inst, nullptr,
                                          profile ? &*profile : nullptr);
        NswValue v = profile ? nsw_concave(inst, *profile, sol.allocation)
                             : nsw(inst, sol.allocation);
        row.nsw_algo = v.to_double();
        row.ratio = opt.value.zero_count > 0
                        ? 1.0
                        : v.to_double() / opt.value.to_double();
        row.exact_ratio_ok =
            compare(v, opt.value) == std::strong_ordering::equal;
        row.efx_ok = !check_efx(inst, sol.allocation).has_value();
        row.iterations = static_cast<long long>(sol.trace.size());
        row.algo_zeros = v.zero_count;
        row.algo_product = v.positive_product;
      } catch (const infeasible_error&) {
        row.ratio = 1.0;
        row.exact_ratio_ok = opt.value.zero_count > 0;
        row.iterations = 0;
      }
      rows.push_back(std::move(row));
    }
  } else {  // tightness-sweep
    if (args.max_m < 4)
      throw validation_error("tightness-sweep needs --max-m >= 4");
    for (int m = 4; m <= args.max_m; m += 2) {
      Instance inst = gen_tight_example(m);
      Allocation designated = tight_example_allocation(m);
      NswValue d = nsw(inst, designated);
      // Small members get the honest exhaustive optimum; larger ones the
      // even split, which is optimal because the total value is even.
      NswValue opt;
      if ((BigInt(1) << m) <= args.budget) {
        opt = brute_force(inst, nullptr, args.budget).value;
      } else {
        Rational half(3 * (static_cast<std::int64_t>(m) - 2), 2);
        opt = NswValue{2, 0, half * half};
      }
      BenchRow row;
      row.instance_id = "tight-" + std::to_string(m);
      row.n = 2;
      row.m = m;
      row.algo = "tight-efx";
      row.nsw_algo = d.to_double();
      row.nsw_opt = opt.to_double();
      row.ratio = d.to_double() / opt.to_double();
      row.exact_ratio_ok =
          d.positive_product * 9 == opt.positive_product * 8;
      row.efx_ok = !check_efx(inst, designated).has_value();
      row.algo_zeros = d.zero_count;
      row.algo_product = d.positive_product;
      row.opt_zeros = opt.zero_count;
      row.opt_product = opt.positive_product;
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream csv;
  csv << BenchRow::header() << '\n';
  for (const BenchRow& row : rows) csv << row.to_csv() << '\n';
  write_file(args.output, csv.str());
  std::cout << "wrote " << args.output << " (" << rows.size() << " rows)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nashdiv: exact and approximate Nash-social-welfare allocation"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "Allocate goods with the greedy solvers");
  solve->add_option("--input", solve_args.input, "instance document (JSON)")
      ->required();
  solve->add_option("--algo", solve_args.algo, "identical or binary")
      ->required()
      ->check(CLI::IsMember({"identical", "binary"}));
  solve->add_option("--start", solve_args.start,
                    "starting allocation (binary only)");
  solve->add_option("--trace", solve_args.trace,
                    "write the improvement trace CSV here (binary only)");
  solve->add_option("--output", solve_args.output,
                    "write the allocation document here");
  solve->add_flag("--caps", solve_args.use_caps,
                  "use the document's saturation caps");
  solve->add_flag("--concave", solve_args.use_concave,
                  "use the document's concave tables");
  solve->add_flag("--quiet", solve_args.quiet, "suppress the report");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check a fairness property");
  check->add_option("--input", check_args.input, "instance document (JSON)")
      ->required();
  check->add_option("--allocation", check_args.allocation,
                    "allocation document (JSON)")
      ->required();
  check->add_option("--property", check_args.property, "ef, efx, or nsw")
      ->required()
      ->check(CLI::IsMember({"ef", "efx", "nsw"}));
  check->add_flag("--caps", check_args.use_caps,
                  "use the document's saturation caps (nsw)");
  check->add_flag("--concave", check_args.use_concave,
                  "use the document's concave tables (nsw)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance document");
  gen->add_option("--family", gen_args.family,
                  "random-binary, random-identical, or tight-efx")
      ->required()
      ->check(CLI::IsMember(
          {"random-binary", "random-identical", "tight-efx"}));
  gen->add_option("--n", gen_args.n, "number of agents");
  gen->add_option("--m", gen_args.m, "number of goods")->required();
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--density", gen_args.density,
                  "Bernoulli density (random-binary)");
  gen->add_option("--max-value", gen_args.max_value,
                  "maximum value (random-identical)");
  gen->add_option("--output", gen_args.output, "where to write the document")
      ->required();

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustively find the optimal allocation");
  oracle->add_option("--input", oracle_args.input, "instance document (JSON)")
      ->required();
  oracle->add_option("--budget", oracle_args.budget,
                     "max assignments to enumerate");
  oracle->add_flag("--caps", oracle_args.use_caps,
                   "use the document's saturation caps");
  oracle->add_flag("--concave", oracle_args.use_concave,
                   "use the document's concave tables");
  oracle->add_option("--output", oracle_args.output,
                     "write the optimal allocation here");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite to CSV");
  bench->add_option("--suite", bench_args.suite,
                    "identical-ratio, binary-exact, concave-exact, or "
                    "tightness-sweep")
      ->required()
      ->check(CLI::IsMember({"identical-ratio", "binary-exact",
                             "concave-exact", "tightness-sweep"}));
  bench->add_option("--count", bench_args.count, "instances to sample");
  bench->add_option("--seed", bench_args.seed, "suite seed");
  bench->add_option("--budget", bench_args.budget, "oracle budget");
  bench->add_option("--max-m", bench_args.max_m,
                    "largest family member (tightness-sweep)");
  bench->add_option("--output", bench_args.output, "where to write the CSV")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  gen_args.seed_given = gen->count("--seed") > 0;

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (check->parsed()) return cmd_check(check_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (oracle->parsed()) return cmd_oracle(oracle_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const infeasible_error& e) {
    std::cout << "infeasible: " << e.what() << " (agents "
              << agents_1indexed(e.unsatisfiable_agents) << ")\n";
    return kExitInfeasible;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;  // no subcommand parsed (unreachable)
}
