#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsw/baselines.hpp"
#include "nsw/const_agents.hpp"
#include "nsw/exact.hpp"
#include "nsw/fairness.hpp"
#include "nsw/generators.hpp"
#include "nsw/io.hpp"
#include "nsw/reprematch.hpp"
#include "nsw/rng.hpp"
#include "nsw/smatch.hpp"

namespace {

using nlohmann::json;

constexpr int kExitIo = 1;
constexpr int kExitIncompatible = 2;
constexpr int kExitOracleLimit = 3;

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

nsw::Allocation run_algo(const nsw::Instance& inst, const std::string& algo,
                         double delta, double beta, std::uint64_t seed) {
  if (algo == "smatch") return nsw::smatch(inst, nsw::SmatchVariant::kAdditive);
  if (algo == "smatch-marginal") {
    return nsw::smatch(inst, nsw::SmatchVariant::kMarginal);
  }
  if (algo == "smatch-restricted") {
    return nsw::smatch(inst, nsw::SmatchVariant::kRestricted);
  }
  if (algo == "reprematch") return nsw::reprematch(inst);
  if (algo == "single-matching") return nsw::single_matching_fill(inst);
  if (algo == "naive-rm") return nsw::naive_repeated_matching(inst);
  if (algo == "exact") return nsw::exact_opt(inst).best;
  if (algo == "const-agents") {
    nsw::GridSearchConfig cfg;
    cfg.delta = delta;
    cfg.beta = beta;
    cfg.seed = seed;
    return nsw::const_agents_solve(inst, cfg);
  }
  throw std::invalid_argument("unknown algorithm: " + algo);
}

json allocation_to_json(const nsw::Instance& inst,
                        const nsw::Allocation& alloc) {
  json bundles = json::array();
  for (const auto& b : alloc.bundles) bundles.push_back(b);
  json out;
  out["bundles"] = bundles;
  // SPLC instances run over the expanded copy space; also report per-agent
  // (original item, copy count) pairs.
  if (!inst.valuations.empty() &&
      inst.valuations.front().family == nsw::Family::kSplc) {
    json folded = json::array();
    for (const auto& b : alloc.bundles) {
      std::map<int, int> counts;
      for (int j : b) counts[inst.valuations.front().item_of_virtual[j]]++;
      json row = json::array();
      for (const auto& [item, count] : counts) {
        row.push_back({{"item", item}, {"copies", count}});
      }
      folded.push_back(row);
    }
    out["splc_folded"] = folded;
  }
  return out;
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << report.dump(2) << "\n";
}

int cmd_solve(const std::string& input, const std::string& algo,
              bool with_exact, bool check_fairness, std::uint64_t seed,
              double delta, double beta, const std::string& out_path) {
  nsw::Instance inst;
  try {
    inst = nsw::load_instance(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  json report;
  report["schema_version"] = 1;
  report["algorithm"] = algo;
  report["seed"] = seed;
  report["instance"] = {{"n", inst.agents()}, {"m", inst.items()}};
  if (!inst.meta.family.empty()) {
    report["instance"]["family"] = inst.meta.family;
  }

  try {
    const double t0 = now_ms();
    const nsw::Allocation alloc = run_algo(inst, algo, delta, beta, seed);
    const double t1 = now_ms();
    const nsw::NswValue val = nsw::nsw_value(inst, alloc);

    report["allocation"] = allocation_to_json(inst, alloc);
    json values = json::array();
    for (int i = 0; i < inst.agents(); ++i) {
      values.push_back(inst.valuations[i].value(alloc.bundles[i]));
    }
    report["agent_values"] = values;
    report["nsw"] = val.nsw;
    report["log_nsw"] = val.log_nsw;
    report["wall_time_ms"] = t1 - t0;

    if (with_exact) {
      const nsw::OptResult opt = nsw::exact_opt(inst);
      report["opt_nsw"] = opt.opt_nsw;
      if (val.nsw > 0.0) {
        report["ratio"] = opt.opt_nsw / val.nsw;
      } else if (opt.opt_nsw > 0.0) {
        report["ratio"] = nullptr;  // unbounded
      } else {
        report["ratio"] = 1.0;
      }
    }
    if (check_fairness) {
      const nsw::FairnessReport fair = nsw::fairness_report(inst, alloc);
      report["fairness"] = {{"ef1", fair.ef1},
                            {"strong_ef1", fair.strong_ef1}};
    }

    // Self-audit: the reported nsw must be recomputable from the
    // allocation.
    if (std::fabs(nsw::nsw_value(inst, alloc).nsw - val.nsw) > 1e-12) {
      throw std::logic_error("self-audit failed: nsw not reproducible");
    }
    emit(report, out_path);
    return 0;
  } catch (const nsw::OracleLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIncompatible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

struct GenParams {
  std::map<std::string, double> values;
};

int cmd_gen(const std::string& family, const GenParams& params,
            std::uint64_t seed, const std::string& out_path) {
  try {
    const nsw::Instance inst = nsw::generate(family, params.values, seed);
    if (out_path.empty()) {
      std::cout << nsw::instance_to_json(inst);
    } else {
      nsw::save_instance(inst, out_path);
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIncompatible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

struct BenchRow {
  std::string instance;
  std::string algo;
  double nsw = 0.0;
  std::optional<double> ratio;
  std::optional<double> bound;
  std::optional<bool> bound_ok;
  double ms = 0.0;
};

BenchRow bench_cell(const nsw::Instance& inst, const std::string& label,
                    const std::string& algo, std::optional<double> opt,
                    std::optional<double> bound, std::uint64_t seed) {
  BenchRow row;
  row.instance = label;
  row.algo = algo;
  const double t0 = now_ms();
  const nsw::Allocation alloc = run_algo(inst, algo, 0.05, 0.0, seed);
  row.ms = now_ms() - t0;
  row.nsw = nsw::nsw_value(inst, alloc).nsw;
  if (opt && row.nsw > 0.0) {
    row.ratio = *opt / row.nsw;
    if (bound) {
      row.bound = bound;
      row.bound_ok = *row.ratio <= *bound + 1e-9;
    }
  } else if (opt && *opt > 0.0 && bound) {
    row.bound = bound;
    row.bound_ok = false;
  }
  return row;
}

double smatch_bound(int n) { return 2.0 * n; }
double reprematch_bound(int n) {
  return 2.0 * n * (std::log2(std::max(2, n)) + 2.0);
}

int cmd_bench(const std::string& suite, int trials, std::uint64_t seed,
              const std::string& out_path) {
  std::vector<BenchRow> rows;
  try {
    if (suite == "paper") {
      {
        const nsw::Instance inst = nsw::gen_example1(20, 20.0);
        const double opt = nsw::exact_opt(inst).opt_nsw;
        for (const char* algo : {"smatch", "naive-rm", "single-matching"}) {
          rows.push_back(bench_cell(inst, "example1", algo, opt,
                                    smatch_bound(2), seed));
        }
      }
      {
        const nsw::Instance inst = nsw::gen_subadditive_gap(8, 10.0);
        const double opt = nsw::exact_opt(inst).opt_nsw;
        rows.push_back(
            bench_cell(inst, "subadditive_gap", "reprematch", opt, {}, seed));
      }
      {
        const nsw::Instance inst = nsw::gen_xos_gap(10, 100.0, 0.1);
        rows.push_back(bench_cell(inst, "xos_gap", "reprematch",
                                  inst.meta.known_opt_nsw, {}, seed));
      }
      {
        const nsw::Instance inst = nsw::gen_asym_tight(4, 3, 100.0, 10.0);
        rows.push_back(bench_cell(inst, "asym_tight", "smatch",
                                  inst.meta.known_opt_nsw, smatch_bound(4),
                                  seed));
      }
      {
        const nsw::Instance inst = nsw::gen_po_gap(0.01);
        const double opt = nsw::exact_opt(inst).opt_nsw;
        rows.push_back(
            bench_cell(inst, "po_gap", "smatch", opt, smatch_bound(2), seed));
      }
    } else if (suite == "random") {
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + t;
        nsw::Rng rng(s * 2654435761u + 17);
        const int n = 2 + rng.uniform_int(3);
        const int m = 4 + rng.uniform_int(5);
        {
          const nsw::Instance inst = nsw::gen_random_additive(n, m, s);
          const double opt = nsw::exact_opt(inst).opt_nsw;
          rows.push_back(bench_cell(inst, "random_additive/" + std::to_string(t),
                                    "smatch", opt, smatch_bound(n), s));
        }
        {
          const int nc = 2 + rng.uniform_int(2);
          const int mc = 4 + rng.uniform_int(4);
          const nsw::Instance inst = nsw::gen_random_coverage(nc, mc, s);
          const double opt = nsw::exact_opt(inst).opt_nsw;
          rows.push_back(bench_cell(inst, "random_coverage/" + std::to_string(t),
                                    "reprematch", opt, reprematch_bound(nc), s));
        }
      }
    } else {
      std::cerr << "error: unknown suite '" << suite << "'\n";
      return kExitIncompatible;
    }
  } catch (const nsw::OracleLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  std::printf("%-24s %-16s %12s %10s %8s %8s %9s\n", "instance", "algorithm",
              "nsw", "ratio", "bound", "ok", "time_ms");
  bool violated = false;
  json jrows = json::array();
  for (const BenchRow& r : rows) {
    const std::string ratio_s =
        r.ratio ? std::to_string(*r.ratio).substr(0, 8) : "-";
    const std::string bound_s =
        r.bound ? std::to_string(*r.bound).substr(0, 6) : "-";
    std::printf("%-24s %-16s %12.4f %10s %8s %8s %9.2f\n", r.instance.c_str(),
                r.algo.c_str(), r.nsw, ratio_s.c_str(), bound_s.c_str(),
                r.bound_ok ? (*r.bound_ok ? "yes" : "NO") : "-", r.ms);
    if (r.bound_ok && !*r.bound_ok) violated = true;
    json jr = {{"instance", r.instance},
               {"algorithm", r.algo},
               {"nsw", r.nsw},
               {"time_ms", r.ms}};
    if (r.ratio) jr["ratio"] = *r.ratio;
    if (r.bound) jr["bound"] = *r.bound;
    if (r.bound_ok) jr["bound_satisfied"] = *r.bound_ok;
    jrows.push_back(jr);
  }
  if (!out_path.empty()) {
    json report = {{"schema_version", 1}, {"seed", seed}, {"rows", jrows}};
    emit(report, out_path);
  }
  return violated ? kExitIncompatible : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash social welfare solvers and benchmarks"};
  app.require_subcommand(1);

  // solve
  std::string in_path, algo = "smatch", out_path;
  bool with_exact = false, check_fairness = false;
  std::uint64_t seed = 0;
  double delta = 0.05, beta = 0.0;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("input", in_path, "instance JSON path")->required();
  solve->add_option("--algo", algo, "algorithm")
      ->check(CLI::IsMember({"smatch", "smatch-marginal", "smatch-restricted",
                             "reprematch", "single-matching", "naive-rm",
                             "exact", "const-agents"}));
  solve->add_flag("--with-exact", with_exact, "also compute the exact optimum");
  solve->add_flag("--check-fairness", check_fairness, "run EF1 checks");
  solve->add_option("--seed", seed, "seed for randomized components");
  solve->add_option("--delta", delta, "grid ratio for const-agents");
  solve->add_option("--beta", beta, "convergence pad for const-agents");
  solve->add_option("--out", out_path, "write the report here (default stdout)");

  // gen
  std::string family;
  GenParams gp;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--family", family, "generator family")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");
  for (const char* key :
       {"n", "m", "M", "k", "W", "eps", "eps_bar", "sets", "p", "lo", "hi",
        "universe", "covers_per_item", "max_copies", "symmetric"}) {
    gen->add_option_function<double>(
        std::string("--") + key,
        [&gp, key = std::string(key)](double v) { gp.values[key] = v; }, key);
  }

  // bench
  std::string suite = "paper", bench_out;
  int trials = 20;
  std::uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", suite, "paper or random")
      ->check(CLI::IsMember({"paper", "random"}));
  bench->add_option("--trials", trials, "random-suite trial count");
  bench->add_option("--seed", bench_seed, "suite seed");
  bench->add_option("--out", bench_out, "write JSON rows here");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    return cmd_solve(in_path, algo, with_exact, check_fairness, seed, delta,
                     beta, out_path);
  }
  if (gen->parsed()) return cmd_gen(family, gp, gen_seed, gen_out);
  return cmd_bench(suite, trials, bench_seed, bench_out);
}
