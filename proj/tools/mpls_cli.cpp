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

// mpls: solve, benchmark and audit matroid k-parity instances.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 an invariant
// check failed during the run.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpls/mpls.hpp"

namespace {

using nlohmann::json;
using namespace mpls;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

// Raised when an invariant check fails but output should still be written.
struct InvariantFailure {
  std::string message;
};

// ---------------------------------------------------------------------------
// Options

struct SourceOptions {
  std::string instance;
  std::string family;
  std::size_t k = 3;
  std::size_t n = 8;
  std::size_t vertices = 0;
  std::size_t blocks = 0;
  std::size_t capacity = 1;
  std::string rho = "0.1";
  std::uint64_t gen_seed = 0;
};

struct SolverOptionsCli {
  std::string epsilon = "0.3873";
  std::string delta = "0.0001";
  std::string gamma = "0.2253";
  std::uint64_t seed = 0;
  std::size_t runs = 1;
  bool scale = true;
  std::string scale_epsilon = "0.1";
  std::string swap_rule = "first-lex";
  std::size_t exact_limit = 0;
  std::size_t threads = 0;
};

void add_source_options(CLI::App* cmd, SourceOptions& s) {
  cmd->add_option("--instance", s.instance, "Instance JSON file");
  cmd->add_option("--gen", s.family,
                  "Generator family: random-k-set-packing, random-k-mi-partition, graphic-parity, greedy-trap");
  cmd->add_option("--k", s.k, "Arity bound for generated instances");
  cmd->add_option("--n", s.n, "Edges (k-MI: ground elements) for generated instances");
  cmd->add_option("--vertices", s.vertices, "Vertex pool / graph vertices (0: default)");
  cmd->add_option("--blocks", s.blocks, "k-MI partition blocks (0: default)");
  cmd->add_option("--capacity", s.capacity, "k-MI maximum block capacity");
  cmd->add_option("--rho", s.rho, "greedy-trap light-edge deficit");
  cmd->add_option("--gen-seed", s.gen_seed, "Generator seed");
}

void add_solver_options(CLI::App* cmd, SolverOptionsCli& o) {
  cmd->add_option("--epsilon", o.epsilon, "Interval ratio parameter in (0, 1/2)");
  cmd->add_option("--delta", o.delta, "Tail parameter in (0, 1)");
  cmd->add_option("--seed", o.seed, "Solver seed");
  cmd->add_option("--runs", o.runs, "Independent runs per solve (best is kept)");
  cmd->add_flag("--scale,!--no-scale", o.scale, "Round weights to integers before searching (default on)");
  cmd->add_option("--scale-epsilon", o.scale_epsilon, "Scaling loss parameter in (0, 1)");
  cmd->add_option("--swap-rule", o.swap_rule, "first-lex or best-gain");
  cmd->add_option("--exact-limit", o.exact_limit, "Largest edge count handed to the exact solver");
  cmd->add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");
}

GenParams gen_params(const SourceOptions& s) {
  GenParams p;
  p.family = parse_family(s.family);
  p.k = s.k;
  p.n = s.n;
  p.vertices = s.vertices;
  p.blocks = s.blocks;
  p.capacity = s.capacity;
  p.rho = parse_rational(s.rho);
  return p;
}

struct LoadedInstance {
  std::string id;
  ParityInstance instance;
};

LoadedInstance load_source(const SourceOptions& s, std::uint64_t gen_seed) {
  if (!s.instance.empty() && !s.family.empty()) throw ConstructionError("give either --instance or --gen, not both");
  if (!s.instance.empty()) {
    return {std::filesystem::path(s.instance).stem().string(), load_instance(s.instance)};
  }
  if (s.family.empty()) throw ConstructionError("an instance source is required (--instance or --gen)");
  GenParams p = gen_params(s);
  std::string id = s.family + "-k" + std::to_string(p.k);
  if (p.family != Family::greedy_trap) id += "-n" + std::to_string(p.n) + "-s" + std::to_string(gen_seed);
  return {id, make_disjoint(generate(p, gen_seed))};
}

SlidingConfig sliding_config(const SolverOptionsCli& o) {
  SlidingConfig c;
  c.epsilon = parse_rational(o.epsilon);
  c.delta = parse_rational(o.delta);
  c.seed = o.seed;
  c.runs = o.runs;
  c.scale = o.scale;
  c.scale_epsilon = parse_rational(o.scale_epsilon);
  c.options.rule = parse_swap_rule(o.swap_rule);
  c.threads = o.threads;
  if (!(c.epsilon > 0 && c.epsilon < Rational(1, 2))) throw PreconditionError("--epsilon must lie in (0, 1/2)");
  if (!(c.delta > 0 && c.delta < 1)) throw PreconditionError("--delta must lie in (0, 1)");
  if (c.runs < 1) throw PreconditionError("--runs must be at least 1");
  return c;
}

ExactOptions exact_options(const SolverOptionsCli& o) {
  ExactOptions e;
  if (o.exact_limit > 0) e.limit = o.exact_limit;
  return e;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Records

struct Floors {
  double k;
  double nine_tenths;
  double two_ln2;
};

Floors floors_for(std::size_t k) {
  const double kk = static_cast<double>(k);
  return {1.0 / kk, 10.0 / (9.0 * (kk + 1.0)), 2.0 * std::log(2.0) / (kk + 1.0)};
}

/// Lowest ratio an algorithm may report without breaking its guarantee:
/// 1/k, or (1 - eps_scale)/k when the search ran on rounded weights.
Rational hard_floor(std::size_t k, bool scaled, const Rational& scale_epsilon) {
  Rational f(1, static_cast<long>(k));
  if (scaled) f *= 1 - scale_epsilon;
  return f;
}

json record(const std::string& id, const std::string& algo, const ParityInstance& inst, const Solution& sol,
            const std::optional<Solution>& optimum) {
  json r;
  r["instance"] = id;
  r["algo"] = algo;
  r["k"] = inst.k();
  r["edges"] = sol.edges;
  r["weight"] = format_rational(sol.weight);
  if (optimum) {
    r["optimum"] = format_rational(optimum->weight);
    if (optimum->weight > 0) {
      Rational ratio = sol.weight / optimum->weight;
      r["ratio"] = to_double(ratio);
      r["ratio_exact"] = format_rational(ratio);
    } else {
      r["ratio"] = 1.0;
      r["ratio_exact"] = "1";
    }
  } else {
    r["optimum"] = nullptr;
    r["ratio"] = nullptr;
  }
  return r;
}

std::optional<Rational> ratio_of(const Solution& sol, const std::optional<Solution>& optimum) {
  if (!optimum) return std::nullopt;
  if (optimum->weight == 0) return Rational(1);
  return sol.weight / optimum->weight;
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& prefix) {
    if (prefix.empty()) return;
    jsonl_.open(prefix + ".jsonl", std::ios::binary | std::ios::trunc);
    csv_.open(prefix + ".csv", std::ios::binary | std::ios::trunc);
    if (!jsonl_ || !csv_) throw ConstructionError("cannot write output files with prefix '" + prefix + "'");
  }

  void emit(const json& r) {
    std::lock_guard lock(mutex_);
    const std::string line = r.dump();
    std::cout << line << '\n';
    if (jsonl_.is_open()) jsonl_ << line << '\n';
  }

  void csv(const std::string& text) {
    std::lock_guard lock(mutex_);
    if (csv_.is_open()) csv_ << text;
  }

 private:
  std::mutex mutex_;
  std::ofstream jsonl_;
  std::ofstream csv_;
};

constexpr const char* kCsvHeader = "instance,algo,mean_ratio,min_ratio,max_ratio,floor_k,floor_910,floor_2ln2\n";

std::string csv_row(const std::string& id, const std::string& algo, const std::vector<double>& ratios,
                    std::size_t k) {
  const Floors f = floors_for(k);
  char buf[512];
  if (ratios.empty()) {
    std::snprintf(buf, sizeof buf, "%s,%s,,,,%.6f,%.6f,%.6f\n", id.c_str(), algo.c_str(), f.k, f.nine_tenths,
                  f.two_ln2);
  } else {
    double sum = 0, lo = ratios.front(), hi = ratios.front();
    for (double r : ratios) {
      sum += r;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    std::snprintf(buf, sizeof buf, "%s,%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", id.c_str(), algo.c_str(),
                  sum / static_cast<double>(ratios.size()), lo, hi, f.k, f.nine_tenths, f.two_ln2);
  }
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const SourceOptions& s, const std::string& out) {
  if (s.family.empty()) throw ConstructionError("gen needs --gen FAMILY");
  ParityInstance inst = generate(gen_params(s), s.gen_seed);
  if (out.empty()) {
    std::cout << instance_to_json(inst).dump(2) << '\n';
  } else {
    save_instance(out, inst);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const SourceOptions& s, const SolverOptionsCli& o, const std::string& algos, const std::string& out,
              bool timing) {
  const SlidingConfig config = sliding_config(o);
  const LoadedInstance loaded = load_source(s, s.gen_seed);
  const ParityInstance& inst = loaded.instance;
  auto list = split_list(algos);
  if (list.empty()) throw ConstructionError("--algo lists no algorithm");
  for (const auto& a : list) {
    if (a != "sliding" && a != "greedy" && a != "exact") throw ConstructionError("unknown algorithm '" + a + "'");
  }

  OutputSink sink(out);
  sink.csv(kCsvHeader);

  // The optimum is needed for every ratio, so exact runs first when requested.
  std::optional<Solution> optimum;
  const bool want_exact = std::find(list.begin(), list.end(), "exact") != list.end();
  std::optional<json> exact_record;
  if (want_exact) {
    auto start = std::chrono::steady_clock::now();
    try {
      ExactResult res = brute_force_optimum(inst, exact_options(o));
      optimum = res.optimum;
      json r = record(loaded.id, "exact", inst, res.optimum, optimum);
      r["method"] = exact_method_name(res.method);
      r["explored"] = res.explored;
      r["status"] = "ok";
      if (timing) r["wall_ms"] = elapsed_ms(start);
      exact_record = r;
    } catch (const SizeLimitError& ex) {
      exact_record = json{{"instance", loaded.id}, {"algo", "exact"}, {"status", "skipped"}, {"reason", ex.what()}};
    }
  }

  std::vector<std::string> failures;
  for (const auto& algo : list) {
    if (algo == "exact") {
      sink.emit(*exact_record);
      if (optimum) sink.csv(csv_row(loaded.id, "exact", {1.0}, inst.k()));
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    json r;
    Solution sol;
    bool scaled = false;
    if (algo == "sliding") {
      SlidingReport rep = solve_sliding(inst, config);
      sol = rep.solution;
      scaled = rep.scaled;
      r = record(loaded.id, algo, inst, sol, optimum);
      r["seed"] = config.seed;
      r["runs"] = config.runs;
      r["tau"] = format_rational(rep.tau);
      r["swaps"] = rep.swaps;
      r["oracle_calls"] = rep.detail.oracle_calls;
      r["scaled"] = rep.scaled;
      r["swap_rule"] = swap_rule_name(config.options.rule);
    } else {
      const std::uint64_t before = inst.matroid().calls();
      sol = greedy(inst);
      r = record(loaded.id, algo, inst, sol, optimum);
      r["oracle_calls"] = inst.matroid().calls() - before;
    }
    r["status"] = "ok";
    if (timing) r["wall_ms"] = elapsed_ms(start);
    sink.emit(r);
    auto ratio = ratio_of(sol, optimum);
    sink.csv(csv_row(loaded.id, algo, ratio ? std::vector<double>{to_double(*ratio)} : std::vector<double>{},
                     inst.k()));
    if (ratio && *ratio < hard_floor(inst.k(), scaled, config.scale_epsilon)) {
      failures.push_back(algo + " ratio " + format_rational(*ratio) + " is below its guaranteed floor");
    }
  }
  if (!failures.empty()) throw InvariantFailure{failures.front()};
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchCell {
  std::size_t instance = 0;
  std::size_t sample = 0;
  Solution solution;
  Rational tau;
  bool scaled = false;
  std::size_t swaps = 0;
  std::uint64_t oracle_calls = 0;
};

int cmd_bench(const SourceOptions& s, const SolverOptionsCli& o, const std::vector<std::string>& files,
              std::size_t instances, std::size_t tau_samples, const std::string& algos, const std::string& out) {
  SlidingConfig config = sliding_config(o);
  if (tau_samples < 1) throw PreconditionError("--tau-samples must be at least 1");
  auto list = split_list(algos);
  const bool run_greedy = std::find(list.begin(), list.end(), "greedy") != list.end();
  const bool run_sliding = std::find(list.begin(), list.end(), "sliding") != list.end();
  for (const auto& a : list) {
    if (a != "sliding" && a != "greedy" && a != "exact") throw ConstructionError("unknown algorithm '" + a + "'");
  }

  std::vector<LoadedInstance> pool;
  if (!files.empty()) {
    for (const auto& f : files) {
      SourceOptions one = s;
      one.instance = f;
      one.family.clear();
      pool.push_back(load_source(one, 0));
    }
  } else {
    for (std::size_t i = 0; i < instances; ++i) {
      pool.push_back(load_source(s, derive_seed(s.gen_seed, i)));
      if (instances > 1) pool.back().id += "-i" + std::to_string(i);
    }
  }

  std::vector<std::optional<Solution>> optimum(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    try {
      optimum[i] = brute_force_optimum(pool[i].instance, exact_options(o)).optimum;
    } catch (const SizeLimitError&) {
    }
  }

  // Fan out (instance, sample) cells; results are written afterwards in order.
  std::vector<BenchCell> cells;
  if (run_sliding) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < tau_samples; ++j) cells.push_back(BenchCell{i, j, {}, 0, false, 0, 0});
    }
  }
  std::size_t threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::max<std::size_t>(1, std::min(threads, cells.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      try {
        BenchCell& cell = cells[c];
        SlidingConfig cfg = config;
        cfg.seed = derive_seed(config.seed, cell.sample);
        cfg.threads = 1;
        SlidingReport rep = solve_sliding(pool[cell.instance].instance, cfg);
        cell.solution = rep.solution;
        cell.tau = rep.tau;
        cell.scaled = rep.scaled;
        cell.swaps = rep.swaps;
        cell.oracle_calls = rep.detail.oracle_calls;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 1; t < threads; ++t) workers.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  OutputSink sink(out);
  sink.csv(kCsvHeader);
  std::vector<std::string> failures;
  std::ostringstream table;
  table << kCsvHeader;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& inst = pool[i].instance;
    std::vector<double> sliding_ratios;
    for (const auto& cell : cells) {
      if (cell.instance != i) continue;
      json r = record(pool[i].id, "sliding", inst, cell.solution, optimum[i]);
      r["seed"] = derive_seed(config.seed, cell.sample);
      r["tau"] = format_rational(cell.tau);
      r["swaps"] = cell.swaps;
      r["oracle_calls"] = cell.oracle_calls;
      r["scaled"] = cell.scaled;
      sink.emit(r);
      if (auto ratio = ratio_of(cell.solution, optimum[i])) {
        sliding_ratios.push_back(to_double(*ratio));
        if (*ratio < hard_floor(inst.k(), cell.scaled, config.scale_epsilon)) {
          failures.push_back(pool[i].id + ": sliding ratio below its guaranteed floor");
        }
      }
    }
    std::string rows;
    if (run_sliding) rows += csv_row(pool[i].id, "sliding", sliding_ratios, inst.k());
    if (run_greedy) {
      Solution g = greedy(inst);
      sink.emit(record(pool[i].id, "greedy", inst, g, optimum[i]));
      auto ratio = ratio_of(g, optimum[i]);
      rows += csv_row(pool[i].id, "greedy", ratio ? std::vector<double>{to_double(*ratio)} : std::vector<double>{},
                      inst.k());
      if (ratio && *ratio < hard_floor(inst.k(), false, 0)) {
        failures.push_back(pool[i].id + ": greedy ratio below 1/k");
      }
    }
    sink.csv(rows);
    table << rows;
  }
  std::cerr << table.str();
  if (!failures.empty()) throw InvariantFailure{failures.front()};
  return kExitOk;
}

// ---------------------------------------------------------------------------
// exact

int cmd_exact(const SourceOptions& s, const SolverOptionsCli& o, const std::string& method, const std::string& out,
              bool timing) {
  const LoadedInstance loaded = load_source(s, s.gen_seed);
  ExactOptions opts = exact_options(o);
  if (method == "subset-enum") {
    opts.method = ExactMethod::subset_enum;
  } else if (method != "branch-and-bound") {
    throw ConstructionError("unknown exact method '" + method + "'");
  }
  auto start = std::chrono::steady_clock::now();
  ExactResult res = brute_force_optimum(loaded.instance, opts);
  json r = record(loaded.id, "exact", loaded.instance, res.optimum, res.optimum);
  r["method"] = exact_method_name(res.method);
  r["explored"] = res.explored;
  r["status"] = "ok";
  if (timing) r["wall_ms"] = elapsed_ms(start);
  OutputSink sink(out);
  sink.emit(r);
  sink.csv(std::string(kCsvHeader) + csv_row(loaded.id, "exact", {1.0}, loaded.instance.k()));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

constexpr MatroidFamily kExchangeFamilies[] = {MatroidFamily::uniform, MatroidFamily::partition,
                                               MatroidFamily::graphic, MatroidFamily::linear};

int verify_exchanges(bool laminar, std::size_t cases, std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  json by_family = json::object();
  std::size_t passed = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const MatroidFamily family = kExchangeFamilies[c % 4];
    ExchangeCase ec = random_exchange_case(rng, family, rng.between(1, max_n));
    bool ok;
    if (laminar) {
      ElementSet S;
      for (const auto& p : ec.parts) S = set_union(S, p);
      auto whole = find_rota_exchange(ec.matroid, {S}, ec.T);
      ok = whole && verify_exchange(refine_laminar(ec.matroid, ec.parts, ec.T, whole->t_parts[0]));
    } else {
      auto cert = find_rota_exchange(ec.matroid, ec.parts, ec.T);
      ok = cert && verify_exchange(*cert);
    }
    auto& slot = by_family[matroid_family_name(family)];
    if (slot.is_null()) slot = json{{"cases", 0}, {"passed", 0}};
    slot["cases"] = slot["cases"].get<std::size_t>() + 1;
    if (ok) {
      slot["passed"] = slot["passed"].get<std::size_t>() + 1;
      ++passed;
    }
  }
  json report{{"check", laminar ? "laminar" : "rota"},
              {"cases", cases},
              {"passed", passed},
              {"ok", passed == cases},
              {"seed", seed},
              {"by_family", by_family}};
  std::cout << report.dump() << '\n';
  if (passed != cases) throw InvariantFailure{"an exchange search failed"};
  return kExitOk;
}

int verify_trace(const SourceOptions& s, const SolverOptionsCli& o) {
  const SlidingConfig config = sliding_config(o);
  const LoadedInstance loaded = load_source(s, s.gen_seed);
  const ParityInstance& inst = loaded.instance;
  const Rational gamma = parse_rational(o.gamma);
  SlidingResult run = sliding_local_search(inst, config.epsilon, config.delta, config.seed, config.options);
  ExactResult exact = brute_force_optimum(inst, exact_options(o));
  json report{{"instance", loaded.id}, {"check", "trace"}, {"seed", config.seed}};
  report["solution_weight"] = format_rational(run.solution.weight);
  report["optimum_weight"] = format_rational(exact.optimum.weight);
  report["local_optimum"] = verify_local_optimum(inst, run.trace);
  if (!run.trace.scheme) {
    report["degenerate"] = true;
    std::cout << report.dump() << '\n';
    return kExitOk;
  }
  ConflictTrace ct = build_conflict_trace(inst, run.trace, exact.optimum, gamma);
  ConflictCheck check = verify_conflict_trace(ct);
  json t_sizes = json::array();
  for (const auto& T : ct.T) t_sizes.push_back(T.size());
  json edges = json::array();
  for (const auto& r : ct.edges) {
    edges.push_back({{"edge", r.edge},
                     {"weight", format_rational(r.weight)},
                     {"interval", r.interval},
                     {"first_block", r.first_block ? json(*r.first_block) : json(nullptr)},
                     {"conflicts", r.conflicts},
                     {"class", conflict_class_name(r.cls)},
                     {"closest_marker", format_rational(r.closest_marker)},
                     {"bad", r.bad}});
  }
  report["tau"] = format_rational(ct.scheme.tau);
  report["L"] = ct.scheme.L;
  report["padding_edges"] = ct.padding_edges;
  report["t_sizes"] = t_sizes;
  report["optimum_edges"] = edges;
  report["singles_weight"] = format_rational(singles_weight(ct));
  report["checks"] = {{"nested", check.nested},       {"independent", check.independent},
                      {"growth", check.growth},       {"blocking", check.blocking},
                      {"partition", check.partition}, {"singles_bound", check.singles_bound}};
  report["ok"] = check.ok() && report["local_optimum"].get<bool>();
  std::cout << report.dump() << '\n';
  if (!report["ok"].get<bool>()) throw InvariantFailure{"conflict trace invariants failed"};
  return kExitOk;
}

int verify_badprob(const SourceOptions& s, const SolverOptionsCli& o, std::size_t samples) {
  const LoadedInstance loaded = load_source(s, s.gen_seed);
  const Rational epsilon = parse_rational(o.epsilon);
  const Rational gamma = parse_rational(o.gamma);
  const Rational delta = parse_rational(o.delta);
  ExactResult exact = brute_force_optimum(loaded.instance, exact_options(o));
  auto freqs = estimate_bad_probability(loaded.instance, exact.optimum, epsilon, gamma, samples, o.seed, delta);
  const double bound = to_double(bad_probability_bound(epsilon, gamma));
  const double sigma = std::sqrt(bound * (1 - bound) / static_cast<double>(std::max<std::size_t>(samples, 1)));
  json edges = json::array();
  bool ok = true;
  for (const auto& f : freqs) {
    const bool pass = f.frequency() <= bound + 3 * sigma;
    ok = ok && pass;
    edges.push_back({{"edge", f.edge}, {"weight", format_rational(f.weight)}, {"hits", f.hits},
                     {"frequency", f.frequency()}, {"pass", pass}});
  }
  json report{{"instance", loaded.id}, {"check", "badprob"}, {"samples", samples}, {"bound", bound},
              {"margin", 3 * sigma},    {"edges", edges},      {"ok", ok}};
  std::cout << report.dump() << '\n';
  if (!ok) throw InvariantFailure{"bad-marker frequency above its bound"};
  return kExitOk;
}

int verify_k4() {
  K4Witness w = k4_non_composability_witness();
  auto applied = [&](const SwapMove& m) {
    EdgeSet out;
    std::set_difference(w.base.edges.begin(), w.base.edges.end(), m.remove.begin(), m.remove.end(),
                        std::back_inserter(out));
    out.insert(out.end(), m.add.begin(), m.add.end());
    return out;
  };
  SwapMove both{set_union(w.first.add, w.second.add), set_union(w.first.remove, w.second.remove), 0};
  const bool first_ok = is_feasible(w.instance, applied(w.first));
  const bool second_ok = is_feasible(w.instance, applied(w.second));
  const bool union_ok = is_feasible(w.instance, applied(both));
  auto move_json = [](const SwapMove& m) { return json{{"add", m.add}, {"remove", m.remove}}; };
  json report{{"check", "k4"},
              {"base", w.base.edges},
              {"first", move_json(w.first)},
              {"second", move_json(w.second)},
              {"first_feasible", first_ok},
              {"second_feasible", second_ok},
              {"union_feasible", union_ok},
              {"instance", instance_to_json(w.instance)}};
  report["ok"] = first_ok && second_ok && !union_ok;
  std::cout << report.dump() << '\n';
  if (!report["ok"].get<bool>()) throw InvariantFailure{"K4 witness did not verify"};
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding local search for weighted matroid k-parity and k-matroid intersection"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  SourceOptions source;
  SolverOptionsCli solver;
  std::string out;
  std::string algos = "sliding";
  bool timing = false;

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  add_source_options(gen, source);
  gen->add_option("--seed", source.gen_seed, "Generator seed");
  gen->add_option("--out", out, "Output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "Run algorithms on one instance");
  add_source_options(solve, source);
  add_solver_options(solve, solver);
  solve->add_option("--algo", algos, "Comma-separated subset of sliding,greedy,exact");
  solve->add_option("--out", out, "Write PREFIX.jsonl and PREFIX.csv");
  solve->add_flag("--timing", timing, "Include wall-clock time in records");

  std::vector<std::string> bench_files;
  std::size_t bench_instances = 10;
  std::size_t tau_samples = 50;
  auto* bench = app.add_subcommand("bench", "Ratio statistics over many seeds");
  add_source_options(bench, source);
  bench->remove_option(bench->get_option("--instance"));
  bench->add_option("--instance", bench_files, "Instance files (repeatable)");
  add_solver_options(bench, solver);
  bench->add_option("--instances", bench_instances, "Generated instances when no file is given");
  bench->add_option("--tau-samples", tau_samples, "Solver seeds per instance");
  bench->add_option("--algo", algos, "Comma-separated subset of sliding,greedy")->default_val("sliding,greedy");
  bench->add_option("--out", out, "Write PREFIX.jsonl and PREFIX.csv");

  std::string method = "branch-and-bound";
  auto* exact = app.add_subcommand("exact", "Exhaustive optimum");
  add_source_options(exact, source);
  exact->add_option("--method", method, "branch-and-bound or subset-enum");
  exact->add_option("--exact-limit", solver.exact_limit, "Largest edge count accepted");
  exact->add_option("--out", out, "Write PREFIX.jsonl and PREFIX.csv");
  exact->add_flag("--timing", timing, "Include wall-clock time in the record");

  auto* verify = app.add_subcommand("verify", "Exhaustive structural checks");
  verify->require_subcommand(1);
  std::size_t cases = 500;
  std::size_t max_n = 7;
  std::uint64_t verify_seed = 0;
  std::size_t bad_samples = 10000;
  auto* v_rota = verify->add_subcommand("rota", "Random exchange searches");
  auto* v_laminar = verify->add_subcommand("laminar", "Random laminar refinements");
  for (auto* v : {v_rota, v_laminar}) {
    v->add_option("--cases", cases, "Number of random cases");
    v->add_option("--n", max_n, "Largest ground set");
    v->add_option("--seed", verify_seed, "Case generator seed");
  }
  auto* v_trace = verify->add_subcommand("trace", "Conflict sets of one solver run");
  add_source_options(v_trace, source);
  add_solver_options(v_trace, solver);
  v_trace->add_option("--gamma", solver.gamma, "Marker proximity parameter");
  auto* v_bad = verify->add_subcommand("badprob", "Marker proximity frequencies");
  add_source_options(v_bad, source);
  v_bad->add_option("--epsilon", solver.epsilon, "Interval ratio parameter");
  v_bad->add_option("--delta", solver.delta, "Tail parameter");
  v_bad->add_option("--gamma", solver.gamma, "Marker proximity parameter");
  v_bad->add_option("--tau-samples", bad_samples, "Number of tau draws");
  v_bad->add_option("--seed", solver.seed, "Sampling seed");
  v_bad->add_option("--exact-limit", solver.exact_limit, "Largest edge count accepted");
  auto* v_k4 = verify->add_subcommand("k4", "Non-composable swaps on K4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(source, out);
    if (*solve) return cmd_solve(source, solver, algos, out, timing);
    if (*bench) return cmd_bench(source, solver, bench_files, bench_instances, tau_samples, algos, out);
    if (*exact) return cmd_exact(source, solver, method, out, timing);
    if (*v_rota) return verify_exchanges(false, cases, max_n, verify_seed);
    if (*v_laminar) return verify_exchanges(true, cases, max_n, verify_seed);
    if (*v_trace) return verify_trace(source, solver);
    if (*v_bad) return verify_badprob(source, solver, bad_samples);
    if (*v_k4) return verify_k4();
  } catch (const InvariantFailure& f) {
    std::cerr << "mpls: invariant violated: " << f.message << '\n';
    return kExitInvariant;
  } catch (const InvariantViolation& ex) {
    std::cerr << "mpls: invariant violated: " << ex.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& ex) {
    std::cerr << "mpls: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
