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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hamprobe/channel.hpp"
#include "hamprobe/error.hpp"
#include "hamprobe/experiment.hpp"
#include "hamprobe/hashing.hpp"
#include "hamprobe/instances.hpp"
#include "hamprobe/learners.hpp"
#include "hamprobe/lemmas.hpp"
#include "hamprobe/serialize.hpp"
#include "hamprobe/testers.hpp"

using namespace hamprobe;

namespace {

struct Common {
  int n = 4;
  int k = 1;
  int64_t s = 1;
  double eps1 = 0.05;
  double eps2 = 0.5;
  double eps = 0.15;
  double delta = 0.1;
  uint64_t seed = 1;
  std::string mode = "shots";
  bool memory = true;
  std::string instance = "close";
  std::string hamiltonian;
  std::string channel;
  double c_T = 1.0;
  double c_t = -1.0;
  double C_BH = 2.0;
  double taylor_c = 1.0;
  double c = 1.0;
  double max_shots = 1e10;
  double time = 1.0;
  std::vector<std::string> supports;
  std::string out_hamiltonian;
};

void add_target(CLI::App* app, Common& o) {
  app->add_option("--n", o.n, "Qubit count of generated instances");
  app->add_option("--seed", o.seed, "Seed for the instance, the oracle and the protocol");
  app->add_option("--mode", o.mode, "exact or shots")->check(CLI::IsMember({"exact", "shots"}));
  app->add_option("--delta", o.delta, "Failure probability");
  app->add_option("--hamiltonian", o.hamiltonian, "Hamiltonian file (text or .json); overrides --instance");
  app->add_option("--instance", o.instance, "close, far, or an instance kind such as k_local");
  app->add_option("--c-T", o.c_T, "Leading constant of sample counts");
  app->add_option("--max-shots", o.max_shots, "Per-call cap on samples");
}

void add_gap(CLI::App* app, Common& o) {
  app->add_option("--eps1", o.eps1, "Closeness parameter");
  app->add_option("--eps2", o.eps2, "Farness parameter");
}

OracleOptions oracle_options(const Common& o) {
  OracleOptions opts;
  opts.mode = o.mode == "exact" ? OracleMode::exact : OracleMode::shot_noise;
  opts.max_shots = static_cast<uint64_t>(o.max_shots);
  return opts;
}

Hamiltonian load_any(const std::string& path) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
      return hamiltonian_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
      throw IoError(path + ": " + e.what());
    }
  }
  return load_hamiltonian(path);
}

// "close" and "far" map to the structure the protocol tests; anything else is an instance kind.
Hamiltonian target(const Common& o, InstanceKind close_kind, InstanceKind far_kind) {
  if (!o.hamiltonian.empty()) return load_any(o.hamiltonian);
  Rng rng(derive_seed(o.seed, 1));
  InstanceParams p;
  p.k = o.k;
  p.s = o.s;
  if (o.instance == "close") {
    p.eps = o.eps1;
    return generate_instance(close_kind, o.n, p, rng);
  }
  if (o.instance == "far") {
    p.eps = o.eps2;
    return generate_instance(far_kind, o.n, p, rng);
  }
  p.eps = o.eps;
  return generate_instance(parse_instance_kind(o.instance), o.n, p, rng);
}

json instance_json(const Hamiltonian& h, int k, int64_t s) {
  auto rep = structure_report(h, k, s);
  return {{"hamiltonian", hamiltonian_to_json(h)},
          {"norm2", rep.norm2},
          {"distance_to_k_local", rep.distance_to_k_local},
          {"distance_to_s_sparse", rep.distance_to_s_sparse}};
}

TesterConstants tester_constants(const Common& o) {
  TesterConstants tc;
  tc.c_T = o.c_T;
  tc.taylor_c = o.taylor_c;
  if (o.c_t > 0) tc.c_t = o.c_t;
  return tc;
}

void print(const json& j) { std::cout << j.dump(2) << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Testers and learners for structured Hamiltonians and Pauli channels"};
  app.require_subcommand(1);
  Common o;
  int status = 0;

  auto* loc = app.add_subcommand("test-locality", "Tolerant k-locality tester");
  add_target(loc, o);
  add_gap(loc, o);
  loc->add_option("--k", o.k, "Locality");
  loc->add_option("--taylor-c", o.taylor_c, "Taylor remainder constant");
  loc->callback([&] {
    Hamiltonian h = target(o, InstanceKind::close_to_k_local, InstanceKind::far_from_k_local);
    EvolutionOracle oracle(h, derive_seed(o.seed, 2), oracle_options(o));
    Rng rng(derive_seed(o.seed, 3));
    Decision d = test_locality(oracle, o.k, o.eps1, o.eps2, o.delta, rng, tester_constants(o));
    print({{"decision", to_json(d)}, {"instance", instance_json(h, o.k, o.s)}});
  });

  auto* sup = app.add_subcommand("test-support", "Tolerant support tester for several candidate supports");
  add_target(sup, o);
  add_gap(sup, o);
  sup->add_option("--k", o.k, "Smallest weight support when no --support is given");
  sup->add_option("--support", o.supports, "Comma-separated Pauli labels forming one support (repeatable)");
  sup->add_option("--taylor-c", o.taylor_c, "Taylor remainder constant");
  sup->callback([&] {
    Hamiltonian h = target(o, InstanceKind::close_to_k_local, InstanceKind::far_from_k_local);
    std::vector<Support> supports;
    json truth = json::array();
    if (o.supports.empty()) {
      for (int j = o.k; j <= h.num_qubits(); ++j) {
        supports.push_back(weight_support(j));
        truth.push_back(distance_to_local(h, j));
      }
    } else {
      for (const auto& spec : o.supports) {
        std::vector<PauliString> strings;
        std::stringstream ss(spec);
        std::string label;
        while (std::getline(ss, label, ',')) strings.push_back(PauliString::from_label(label));
        supports.push_back(explicit_support(spec, strings));
        truth.push_back(distance_to_support(h, strings));
      }
    }
    EvolutionOracle oracle(h, derive_seed(o.seed, 2), oracle_options(o));
    Rng rng(derive_seed(o.seed, 3));
    auto ds = test_support(oracle, supports, o.eps1, o.eps2, o.delta, rng, tester_constants(o));
    json out = json::array();
    for (const auto& d : ds) out.push_back(to_json(d));
    print({{"decisions", out}, {"exact_distances", truth}, {"instance", instance_json(h, o.k, o.s)}});
  });

  auto* spa = app.add_subcommand("test-sparsity", "Tolerant s-sparsity tester with Bell sampling");
  add_target(spa, o);
  add_gap(spa, o);
  spa->add_option("--s", o.s, "Sparsity");
  spa->add_option("--c-t", o.c_t, "Evolution-time constant");
  spa->callback([&] {
    Hamiltonian h = target(o, InstanceKind::close_to_s_sparse, InstanceKind::far_from_s_sparse);
    EvolutionOracle oracle(h, derive_seed(o.seed, 2), oracle_options(o));
    Rng rng(derive_seed(o.seed, 3));
    Decision d = test_sparsity(oracle, o.s, o.eps1, o.eps2, o.delta, rng, tester_constants(o));
    print({{"decision", to_json(d)}, {"instance", instance_json(h, o.k, o.s)}});
  });

  auto* jun = app.add_subcommand("test-junta", "k-junta tester for exp(-iHt)");
  add_target(jun, o);
  add_gap(jun, o);
  jun->add_option("--k", o.k, "Junta size");
  jun->add_option("--memory", o.memory, "Use Bell sampling (true) or single-copy MUB sampling (false)");
  jun->add_option("--time", o.time, "Evolution time of the tested unitary");
  jun->callback([&] {
    Hamiltonian h = o.hamiltonian.empty()
                        ? [&] {
                            Rng rng(derive_seed(o.seed, 1));
                            bool close = o.instance != "far";
                            return generate_junta_instance(close, o.n, o.k, close ? o.eps1 : o.eps2, o.time, rng);
                          }()
                        : load_any(o.hamiltonian);
    EvolutionOracle oracle(h, derive_seed(o.seed, 2), oracle_options(o));
    Rng rng(derive_seed(o.seed, 3));
    Decision d = test_junta(oracle, o.k, o.eps1, o.eps2, o.delta, o.memory, rng, tester_constants(o), o.time);
    double best = junta_best_weight(evolution_spectrum(h, o.time).probabilities(), {}, h.num_qubits(), o.k);
    print({{"decision", to_json(d)}, {"exact_best_weight", best}, {"instance", instance_json(h, o.k, o.s)}});
  });

  auto* chs = app.add_subcommand("test-channel-sparsity", "Tolerant s-sparsity tester for Pauli channels");
  chs->add_option("--n", o.n, "Qubit count of generated channels");
  chs->add_option("--s", o.s, "Sparsity");
  add_gap(chs, o);
  chs->add_option("--delta", o.delta, "Failure probability of the energy estimates");
  chs->add_option("--seed", o.seed, "Seed");
  chs->add_option("--mode", o.mode, "exact or shots")->check(CLI::IsMember({"exact", "shots"}));
  chs->add_option("--channel", o.channel, "Channel file (LABEL probability per line)");
  chs->add_option("--instance", o.instance, "close, far or depolarizing")
      ->check(CLI::IsMember({"close", "far", "depolarizing"}));
  chs->add_option("--c", o.c, "Leading constant of the shot count");
  chs->add_option("--max-shots", o.max_shots, "Per-call cap on shots");
  chs->callback([&] {
    bool renormalized = false;
    PauliChannel ch = [&] {
      if (!o.channel.empty()) {
        auto loaded = load_channel(o.channel);
        renormalized = loaded.renormalized;
        return loaded.channel;
      }
      Rng rng(derive_seed(o.seed, 1));
      if (o.instance == "far") return generate_channel(ChannelKind::far_from_sparse, o.n, o.s, o.eps2, rng);
      if (o.instance == "depolarizing") return generate_channel(ChannelKind::depolarizing, o.n, o.s, o.eps2, rng);
      return generate_channel(ChannelKind::close_to_sparse, o.n, o.s, o.eps1, rng);
    }();
    ChannelOracle oracle(ch, derive_seed(o.seed, 2), oracle_options(o));
    Rng rng(derive_seed(o.seed, 3));
    HashingConstants hc;
    hc.c = o.c;
    Decision d = test_channel_sparsity(oracle, o.s, o.eps1, o.eps2, o.delta, rng, hc);
    print({{"decision", to_json(d)},
           {"exact_distance", distance_to_sparse_channel(ch, o.s)},
           {"renormalized", renormalized}});
  });

  auto* hsn = app.add_subcommand("test-ham-sparsity-nomem", "Memory-less s-sparsity tester via Pauli twirling");
  add_target(hsn, o);
  add_gap(hsn, o);
  hsn->add_option("--s", o.s, "Sparsity");
  hsn->add_option("--c", o.c, "Leading constant of the shot count");
  hsn->add_option("--c-t", o.c_t, "Evolution-time constant");
  hsn->callback([&] {
    Hamiltonian h = target(o, InstanceKind::close_to_s_sparse, InstanceKind::far_from_s_sparse);
    EvolutionOracle oracle(h, derive_seed(o.seed, 2), oracle_options(o));
    Rng rng(derive_seed(o.seed, 3));
    HashingConstants hc;
    hc.c = o.c;
    if (o.c_t > 0) hc.c_t = o.c_t;
    Decision d = test_hamiltonian_sparsity_memoryless(oracle, o.s, o.eps1, o.eps2, o.delta, rng, hc);
    print({{"decision", to_json(d)}, {"instance", instance_json(h, o.k, o.s)}});
  });

  auto learner = [&](const std::string& name, const std::string& help, InstanceKind kind) {
    auto* l = app.add_subcommand(name, help);
    add_target(l, o);
    l->add_option("--k", o.k, "Locality");
    l->add_option("--s", o.s, "Sparsity");
    l->add_option("--eps", o.eps, "Target error in normalized Frobenius norm");
    l->add_option("--memory", o.memory, "Use quantum memory (true) or single-copy access (false)");
    l->add_option("--C-BH", o.C_BH, "Bohnenblust-Hille constant of the local learner");
    l->add_option("--c-t", o.c_t, "Evolution-time constant of the sparse learner");
    l->add_option("--out-hamiltonian", o.out_hamiltonian, "Write the learned Hamiltonian in text format");
    l->callback([&, name, kind] {
      if (o.hamiltonian.empty() && o.instance == "close") o.instance = to_string(kind);
      Hamiltonian h = target(o, kind, kind);
      EvolutionOracle oracle(h, derive_seed(o.seed, 2), oracle_options(o));
      LearnerConstants lc;
      lc.c_T = o.c_T;
      lc.C_BH = o.C_BH;
      if (o.c_t > 0) lc.c_t = o.c_t;
      LearnReport r = name == "learn-local"    ? learn_local(oracle, o.k, o.eps, o.delta, o.memory, lc)
                      : name == "learn-sparse" ? learn_sparse(oracle, o.s, o.eps, o.delta, o.memory, lc)
                                               : learn_local_sparse(oracle, o.k, o.s, o.eps, o.delta, o.memory, lc);
      r.achieved_error = (h - r.learned).norm2();
      if (!o.out_hamiltonian.empty()) save_hamiltonian(r.learned, o.out_hamiltonian);
      json j = to_json(r);
      j["learned_text"] = format_hamiltonian_text(r.learned);
      print({{"report", j}, {"instance", instance_json(h, o.k, o.s)}});
    });
  };
  learner("learn-local", "Two-stage learner for k-local Hamiltonians", InstanceKind::k_local);
  learner("learn-sparse", "Two-stage learner for s-sparse Hamiltonians", InstanceKind::s_sparse);
  learner("learn-local-sparse", "Dispatches to the cheaper of the two learners", InstanceKind::k_local_s_sparse);

  std::string suite = "all";
  auto* lem = app.add_subcommand("verify-lemmas", "Run structural verification suites");
  lem->add_option("--suite", suite, "Suite name or 'all'");
  lem->add_option("--seed", o.seed, "Seed");
  lem->callback([&] {
    std::vector<std::string> names = suite == "all" ? lemma_suites() : std::vector<std::string>{suite};
    json out = json::array();
    for (const auto& name : names) {
      SuiteReport r = verify_lemmas(name, o.seed);
      out.push_back({{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks},
                     {"first_violation", r.first_violation}, {"metrics", r.metrics}});
      if (!r.passed) {
        std::cerr << name << ": " << r.first_violation << '\n';
        status = 1;
      }
    }
    print(out);
  });

  bool defaults = false;
  auto* cfg = app.add_subcommand("config", "Print the experiment configuration format");
  cfg->add_flag("--defaults", defaults, "Print every key with its default value");
  cfg->callback([&] {
    if (!defaults) throw CLI::ValidationError("config", "use --defaults");
    std::cout << format_config(ExperimentConfig{});
  });

  std::string config_path, csv, json_out;
  auto* exp = app.add_subcommand("experiment", "Run a seed grid from a config file");
  exp->add_option("--config", config_path, "Config file")->required();
  exp->add_option("--csv", csv, "Override the CSV path");
  exp->add_option("--json", json_out, "Override the JSON path");
  exp->callback([&] {
    ExperimentConfig c = load_config(config_path);
    if (!csv.empty()) c.csv_path = csv;
    if (!json_out.empty()) c.json_path = json_out;
    ExperimentReport r = run_experiment(c);
    if (c.csv_path.empty()) write_experiment_csv(std::cout, r);
    std::cerr << "success_rate " << r.success_rate << " (" << r.successes << "/" << (r.successes + r.failures)
              << ", " << r.errors << " errors)\n";
  });

  auto* spe = app.add_subcommand("spectrum", "Pauli spectrum of exp(-iHt) as CSV");
  spe->add_option("--hamiltonian", o.hamiltonian, "Hamiltonian file")->required();
  spe->add_option("--time", o.time, "Evolution time");
  spe->callback([&] { write_spectrum_csv(std::cout, evolution_spectrum(load_any(o.hamiltonian), o.time)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
