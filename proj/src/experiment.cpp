// Copyright 2026 The hamprobe Authors
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

#include "hamprobe/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hamprobe/channel.hpp"
#include "hamprobe/error.hpp"
#include "hamprobe/hashing.hpp"
#include "hamprobe/instances.hpp"
#include "hamprobe/learners.hpp"
#include "hamprobe/serialize.hpp"
#include "hamprobe/testers.hpp"

namespace hamprobe {

const std::vector<std::string>& experiment_protocols() {
  static const std::vector<std::string> names = {
      "test-locality",        "test-support",           "test-sparsity", "test-junta",
      "test-channel-sparsity", "test-ham-sparsity-nomem", "learn-local",   "learn-sparse",
      "learn-local-sparse"};
  return names;
}

// --- config text ------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(d)) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParameterError("config: '" + key + "' expects a number, got '" + v + "'");
  }
}

int64_t parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    long long d = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParameterError("config: '" + key + "' expects an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ParameterError("config: '" + key + "' expects true or false, got '" + v + "'");
}

void set_field(ExperimentConfig& c, const std::string& key, const std::string& v) {
  if (key == "protocol") c.protocol = v;
  else if (key == "n") c.n = static_cast<int>(parse_int(key, v));
  else if (key == "k") c.k = static_cast<int>(parse_int(key, v));
  else if (key == "s") c.s = parse_int(key, v);
  else if (key == "eps1") c.eps1 = parse_double(key, v);
  else if (key == "eps2") c.eps2 = parse_double(key, v);
  else if (key == "eps") c.eps = parse_double(key, v);
  else if (key == "delta") c.delta = parse_double(key, v);
  else if (key == "mode") c.mode = v;
  else if (key == "seed_start") c.seed_start = static_cast<uint64_t>(parse_int(key, v));
  else if (key == "seed_count") c.seed_count = static_cast<uint64_t>(parse_int(key, v));
  else if (key == "instance") c.instance = v;
  else if (key == "memory") c.memory = parse_bool(key, v);
  else if (key == "c_T") c.c_T = parse_double(key, v);
  else if (key == "c_t") c.c_t = parse_double(key, v);
  else if (key == "C_BH") c.C_BH = parse_double(key, v);
  else if (key == "taylor_c") c.taylor_c = parse_double(key, v);
  else if (key == "c") c.c = parse_double(key, v);
  else if (key == "max_shots") c.max_shots = parse_double(key, v);
  else if (key == "workers") c.workers = static_cast<int>(parse_int(key, v));
  else if (key == "csv") c.csv_path = v;
  else if (key == "json") c.json_path = v;
  else throw ParameterError("config: unknown key '" + key + "'");
}

void validate(const ExperimentConfig& c) {
  const auto& names = experiment_protocols();
  if (std::find(names.begin(), names.end(), c.protocol) == names.end()) {
    throw ParameterError("config: unknown protocol '" + c.protocol + "'");
  }
  if (c.mode != "exact" && c.mode != "shots") throw ParameterError("config: mode must be exact or shots");
  if (c.instance != "close" && c.instance != "far" && c.instance != "alternate") {
    throw ParameterError("config: instance must be close, far or alternate");
  }
  if (c.n < 1) throw ParameterError("config: n must be positive");
  if (c.workers < 1) throw ParameterError("config: workers must be positive");
  if (!(c.max_shots >= 1)) throw ParameterError("config: max_shots must be at least 1");
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParameterError("config line " + std::to_string(lineno) + ": expected key = value");
    set_field(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  return parse_config(in);
}

namespace {

// Shortest text that parses back to the same double.
std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "protocol = " << c.protocol << "\n"
     << "n = " << c.n << "\n"
     << "k = " << c.k << "\n"
     << "s = " << c.s << "\n"
     << "eps1 = " << shortest(c.eps1) << "\n"
     << "eps2 = " << shortest(c.eps2) << "\n"
     << "eps = " << shortest(c.eps) << "\n"
     << "delta = " << shortest(c.delta) << "\n"
     << "mode = " << c.mode << "\n"
     << "seed_start = " << c.seed_start << "\n"
     << "seed_count = " << c.seed_count << "\n"
     << "instance = " << c.instance << "\n"
     << "memory = " << (c.memory ? "true" : "false") << "\n"
     << "c_T = " << shortest(c.c_T) << "\n"
     << "c_t = " << shortest(c.c_t) << "  # negative: protocol default\n"
     << "C_BH = " << shortest(c.C_BH) << "\n"
     << "taylor_c = " << shortest(c.taylor_c) << "\n"
     << "c = " << shortest(c.c) << "\n"
     << "max_shots = " << shortest(c.max_shots) << "\n"
     << "workers = " << c.workers << "\n"
     << "csv = " << c.csv_path << "\n"
     << "json = " << c.json_path << "\n";
  return os.str();
}

// --- junta instances ----------------------------------------------------------

Hamiltonian generate_junta_instance(bool close, int n, int k, double eps, double t, Rng& rng) {
  if (k < 0 || k >= n) throw GenerationError("junta instance: need 0 <= k < n");
  if (!(eps > 0 && eps <= 1)) throw ParameterError("junta instance: eps must lie in (0, 1]");
  // a random k-set K and a structured part supported inside it
  std::vector<int> qubits(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) qubits[static_cast<size_t>(q)] = q;
  std::shuffle(qubits.begin(), qubits.end(), rng);
  uint64_t kmask = 0;
  for (int i = 0; i < k; ++i) kmask |= uint64_t{1} << qubits[static_cast<size_t>(i)];
  auto inside = [kmask](const PauliString& x) { return (x.support_mask() & ~kmask) == 0; };
  Hamiltonian p(n);
  if (k > 0) {
    int m = static_cast<int>(std::min<uint64_t>(count_weight_at_most(k, k) - 1, 4));
    for (const auto& x : random_distinct_strings(n, m, inside, rng)) {
      p.set_term(x, (rng() & 1 ? 1.0 : -1.0) * (0.3 + 0.7 * uniform01(rng)));
    }
  }
  Hamiltonian r(n);
  if (close) {
    for (const auto& x : random_distinct_strings(n, 2 * n, [&](const PauliString& x) { return !inside(x); }, rng)) {
      r.set_term(x, (rng() & 1 ? 1.0 : -1.0) * (0.3 + 0.7 * uniform01(rng)));
    }
  } else {
    uint64_t full = (uint64_t{1} << n) - 1;
    auto fam = random_distinct_strings(n, 1, [full](const PauliString& x) { return x.support_mask() == full; }, rng);
    r.set_term(fam[0], 1.0);
  }
  auto normalize = [](Hamiltonian h) {
    double norm = h.size() ? operator_norm(h) : 0.0;
    return norm > 1.0 ? h.scaled(1.0 / norm) : h;
  };
  if (p.size()) p = p.scaled(1.0 / operator_norm(p));
  if (r.size()) r = r.scaled(1.0 / operator_norm(r));
  auto best_weight = [&](const Hamiltonian& h) {
    return junta_best_weight(evolution_spectrum(h, t).probabilities(), {}, n, k);
  };
  if (close) {
    double b = eps * (0.3 + 0.6 * uniform01(rng)) / std::max(t, 1e-9);
    for (int m = 0; m < 60; ++m, b *= 0.7) {
      Hamiltonian h = p.scaled(0.6);
      for (const auto& [x, v] : r.terms()) h.add_term(x, b * v);
      h = normalize(h);
      if (best_weight(h) >= 1.0 - eps * eps) return h;
    }
    throw GenerationError("junta instance: could not certify closeness");
  }
  const double target = 1.0 - eps * eps / 4.0;
  for (double a : {0.6, 0.3, 0.0}) {
    for (int m = 0; m <= 40; ++m) {
      double b = 0.05 * std::pow(1.1, m);
      if (b > 1.0) break;
      Hamiltonian h = p.scaled(a);
      for (const auto& [x, v] : r.terms()) h.add_term(x, b * v);
      h = normalize(h);
      if (best_weight(h) <= target) return h;
    }
  }
  throw GenerationError("junta instance: eps too large for evolution time " + std::to_string(t));
}

// --- running ------------------------------------------------------------------

namespace {

struct Truth {
  double distance = 0.0;
  std::string expected;
};

std::string expect(double d, double e1, double e2) {
  if (d <= e1 + 1e-12) return "close";
  if (d >= e2 - 1e-12) return "far";
  return "none";
}

ExperimentRow run_seed(const ExperimentConfig& cfg, uint64_t seed) {
  ExperimentRow row;
  row.seed = seed;
  const bool want_close =
      cfg.instance == "close" || (cfg.instance == "alternate" && seed % 2 == 0);
  Rng inst_rng(derive_seed(seed, 1));
  Rng run_rng(derive_seed(seed, 3));
  const uint64_t oracle_seed = derive_seed(seed, 2);
  OracleOptions opts;
  opts.mode = cfg.mode == "exact" ? OracleMode::exact : OracleMode::shot_noise;
  opts.max_shots = static_cast<uint64_t>(cfg.max_shots);
  const std::string& proto = cfg.protocol;
  const int n = cfg.n;

  auto fill = [&](const Decision& d) {
    row.verdict = to_string(d.verdict);
    row.gamma = d.gamma;
    row.queries = d.ledger.queries;
    row.evolution_time = d.ledger.evolution_time;
    row.clamped = d.budget_clamped;
  };

  try {
    if (proto == "test-channel-sparsity") {
      PauliChannel ch = generate_channel(want_close ? ChannelKind::close_to_sparse : ChannelKind::far_from_sparse,
                                         n, cfg.s, want_close ? cfg.eps1 : cfg.eps2, inst_rng);
      row.exact_distance = distance_to_sparse_channel(ch, cfg.s);
      row.expected = expect(row.exact_distance, cfg.eps1, cfg.eps2);
      ChannelOracle oracle(ch, oracle_seed, opts);
      HashingConstants hc;
      hc.c = cfg.c;
      fill(test_channel_sparsity(oracle, cfg.s, cfg.eps1, cfg.eps2, cfg.delta, run_rng, hc));
      row.success = row.verdict == row.expected;
      return row;
    }

    if (proto.rfind("learn", 0) == 0) {
      InstanceParams p;
      p.k = cfg.k;
      p.s = cfg.s;
      InstanceKind kind = proto == "learn-local"    ? InstanceKind::k_local
                          : proto == "learn-sparse" ? InstanceKind::s_sparse
                                                    : InstanceKind::k_local_s_sparse;
      Hamiltonian h = generate_instance(kind, n, p, inst_rng);
      EvolutionOracle oracle(h, oracle_seed, opts);
      LearnerConstants lc;
      lc.c_T = cfg.c_T;
      lc.C_BH = cfg.C_BH;
      if (cfg.c_t > 0) lc.c_t = cfg.c_t;
      LearnReport r = proto == "learn-local"    ? learn_local(oracle, cfg.k, cfg.eps, cfg.delta, cfg.memory, lc)
                      : proto == "learn-sparse" ? learn_sparse(oracle, cfg.s, cfg.eps, cfg.delta, cfg.memory, lc)
                                                : learn_local_sparse(oracle, cfg.k, cfg.s, cfg.eps, cfg.delta,
                                                                     cfg.memory, lc);
      row.err = (h - r.learned).norm2();
      row.queries = r.ledger.queries;
      row.evolution_time = r.ledger.evolution_time;
      row.clamped = r.budget_clamped;
      row.success = row.err <= cfg.eps;
      return row;
    }

    TesterConstants tc;
    tc.c_T = cfg.c_T;
    tc.taylor_c = cfg.taylor_c;
    if (cfg.c_t > 0) tc.c_t = cfg.c_t;

    if (proto == "test-junta") {
      const double t = 1.0;
      Hamiltonian h = generate_junta_instance(want_close, n, cfg.k, want_close ? cfg.eps1 : cfg.eps2, t, inst_rng);
      double best = junta_best_weight(evolution_spectrum(h, t).probabilities(), {}, n, cfg.k);
      row.exact_distance = 1.0 - best;
      row.expected = best >= 1.0 - cfg.eps1 * cfg.eps1        ? "close"
                     : best <= 1.0 - cfg.eps2 * cfg.eps2 / 4.0 ? "far"
                                                               : "none";
      EvolutionOracle oracle(h, oracle_seed, opts);
      fill(test_junta(oracle, cfg.k, cfg.eps1, cfg.eps2, cfg.delta, cfg.memory, run_rng, tc, t));
      row.success = row.verdict == row.expected;
      return row;
    }

    const bool sparse = proto == "test-sparsity" || proto == "test-ham-sparsity-nomem";
    InstanceParams p;
    p.k = cfg.k;
    p.s = cfg.s;
    p.eps = want_close ? cfg.eps1 : cfg.eps2;
    InstanceKind kind = sparse ? (want_close ? InstanceKind::close_to_s_sparse : InstanceKind::far_from_s_sparse)
                               : (want_close ? InstanceKind::close_to_k_local : InstanceKind::far_from_k_local);
    Hamiltonian h = generate_instance(kind, n, p, inst_rng);
    row.exact_distance = sparse ? distance_to_sparse(h, cfg.s) : distance_to_local(h, cfg.k);
    row.expected = expect(row.exact_distance, cfg.eps1, cfg.eps2);
    EvolutionOracle oracle(h, oracle_seed, opts);

    if (proto == "test-locality") {
      fill(test_locality(oracle, cfg.k, cfg.eps1, cfg.eps2, cfg.delta, run_rng, tc));
    } else if (proto == "test-sparsity") {
      fill(test_sparsity(oracle, cfg.s, cfg.eps1, cfg.eps2, cfg.delta, run_rng, tc));
    } else if (proto == "test-ham-sparsity-nomem") {
      HashingConstants hc;
      hc.c = cfg.c;
      if (cfg.c_t > 0) hc.c_t = cfg.c_t;
      fill(test_hamiltonian_sparsity_memoryless(oracle, cfg.s, cfg.eps1, cfg.eps2, cfg.delta, run_rng, hc));
    } else {
      // test-support: nested weight supports k, k+1, ..., n
      std::vector<Support> supports;
      for (int j = cfg.k; j <= n; ++j) supports.push_back(weight_support(j));
      auto ds = test_support(oracle, supports, cfg.eps1, cfg.eps2, cfg.delta, run_rng, tc);
      fill(ds.front());
      row.success = true;
      std::string joined;
      for (size_t i = 0; i < ds.size(); ++i) {
        if (i) joined += '|';
        joined += to_string(ds[i].verdict);
        std::string truth = expect(distance_to_local(h, cfg.k + static_cast<int>(i)), cfg.eps1, cfg.eps2);
        if (truth != "none" && truth != to_string(ds[i].verdict)) row.success = false;
        row.clamped = row.clamped || ds[i].budget_clamped;
      }
      row.verdict = joined;
      return row;
    }
    row.success = row.verdict == row.expected;
  } catch (const Error& e) {
    row.error = e.what();
    row.verdict = "error";
    row.success = false;
  }
  return row;
}

json row_json(const ExperimentRow& r, bool learner) {
  json j = {{"seed", r.seed},       {"exact_distance", r.exact_distance},
            {"queries", r.queries}, {"evolution_time", r.evolution_time},
            {"clamped", r.clamped}, {"success", r.success}};
  if (learner) {
    j["err"] = r.err;
  } else {
    j["verdict"] = r.verdict;
    j["gamma"] = r.gamma;
    j["expected"] = r.expected;
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json config_json(const ExperimentConfig& c) {
  return {{"protocol", c.protocol}, {"n", c.n},
          {"k", c.k},               {"s", c.s},
          {"eps1", c.eps1},         {"eps2", c.eps2},
          {"eps", c.eps},           {"delta", c.delta},
          {"mode", c.mode},         {"seed_start", c.seed_start},
          {"seed_count", c.seed_count}, {"instance", c.instance},
          {"memory", c.memory},     {"c_T", c.c_T},
          {"c_t", c.c_t},           {"C_BH", c.C_BH},
          {"taylor_c", c.taylor_c}, {"c", c.c},
          {"max_shots", c.max_shots}, {"workers", c.workers}};
}

}  // namespace

void write_experiment_csv(std::ostream& out, const ExperimentReport& report) {
  const bool learner = report.config.protocol.rfind("learn", 0) == 0;
  out << "seed," << (learner ? "err" : "verdict") << ",gamma,exact_distance,queries,evolution_time,clamped\n";
  out << std::setprecision(17);
  for (const auto& r : report.rows) {
    out << r.seed << ',';
    if (!r.error.empty()) out << "error";
    else if (learner) out << r.err;
    else out << r.verdict;
    out << ',';
    if (!learner) out << r.gamma;
    out << ',' << r.exact_distance << ',' << r.queries << ',' << r.evolution_time << ',' << (r.clamped ? 1 : 0)
        << '\n';
  }
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentReport report;
  report.config = cfg;
  report.rows.resize(cfg.seed_count);
  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    for (uint64_t i = next++; i < cfg.seed_count; i = next++) report.rows[i] = run_seed(cfg, cfg.seed_start + i);
  };
  const int nthreads = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(cfg.workers), std::max<uint64_t>(cfg.seed_count, 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < nthreads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) { return a.seed < b.seed; });

  for (const auto& r : report.rows) {
    if (!r.error.empty()) ++report.errors;
    else if (r.expected == "none") continue;
    else if (r.success) ++report.successes;
    else ++report.failures;
  }
  const uint64_t judged = report.successes + report.failures;
  report.success_rate = judged ? static_cast<double>(report.successes) / static_cast<double>(judged) : 1.0;

  if (!cfg.csv_path.empty()) {
    std::ofstream out(cfg.csv_path);
    if (!out) throw IoError("cannot write CSV '" + cfg.csv_path + "'");
    write_experiment_csv(out, report);
  }
  if (!cfg.json_path.empty()) {
    std::ofstream out(cfg.json_path);
    if (!out) throw IoError("cannot write JSON '" + cfg.json_path + "'");
    const bool learner = cfg.protocol.rfind("learn", 0) == 0;
    json rows = json::array();
    for (const auto& r : report.rows) rows.push_back(row_json(r, learner));
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    json j = {{"config", config_json(cfg)}, {"success_rate", report.success_rate},
              {"successes", report.successes}, {"failures", report.failures},
              {"errors", report.errors},     {"rows", rows},
              {"timestamp", ts.str()}};
    out << j.dump(2) << '\n';
  }
  return report;
}

}  // namespace hamprobe
