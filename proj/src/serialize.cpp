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

#include "hamprobe/serialize.hpp"

#include <cmath>
#include <ostream>
#include <set>

#include "hamprobe/error.hpp"

namespace hamprobe {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::close: return "close";
    case Verdict::far: return "far";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

Verdict parse_verdict(const std::string& name) {
  if (name == "close") return Verdict::close;
  if (name == "far") return Verdict::far;
  if (name == "undecided") return Verdict::undecided;
  throw ParameterError("unknown verdict '" + name + "'");
}

json to_json(const QueryLedger& ledger) {
  return {{"queries", ledger.queries}, {"evolution_time", ledger.evolution_time}};
}

json to_json(const Decision& d) {
  json gens = json::array();
  for (const auto& g : d.generators) gens.push_back(g.hex());
  return {{"protocol", d.protocol},
          {"verdict", to_string(d.verdict)},
          {"gamma", d.gamma},
          {"thresholds", d.thresholds},
          {"generators", gens},
          {"ledger", to_json(d.ledger)},
          {"seed", d.seed},
          {"budget_clamped", d.budget_clamped},
          {"samples", d.samples},
          {"evolution_time", d.evolution_time}};
}

json to_json(const LearnReport& r) {
  json detected = json::array();
  for (const auto& x : r.detected) detected.push_back(x.label());
  json out = {{"protocol", r.protocol},
              {"branch", r.branch},
              {"target_eps", r.target_eps},
              {"learned", hamiltonian_to_json(r.learned)},
              {"detected", detected},
              {"ledger", to_json(r.ledger)},
              {"budget_clamped", r.budget_clamped},
              {"evolution_time", r.evolution_time},
              {"stage1_samples", r.stage1_samples},
              {"stage2_shots", r.stage2_shots}};
  out["achieved_error"] = r.achieved_error ? json(*r.achieved_error) : json(nullptr);
  return out;
}

json hamiltonian_to_json(const Hamiltonian& h) {
  json terms = json::array();
  for (const auto& [x, v] : h.terms()) terms.push_back({{"label", x.label()}, {"coef", v}});
  return {{"n", h.num_qubits()}, {"terms", terms}};
}

Hamiltonian hamiltonian_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    Hamiltonian h(n);
    std::set<std::string> seen;
    for (const auto& t : j.at("terms")) {
      const auto label = t.at("label").get<std::string>();
      const double coef = t.at("coef").get<double>();
      if (!seen.insert(label).second) throw ValidationError("duplicate label " + label);
      if (!std::isfinite(coef)) throw ValidationError("non-finite coefficient for " + label);
      const auto x = PauliString::from_label(label);
      if (x.num_qubits() != n) throw ValidationError("label " + label + " does not have n qubits");
      h.set_term(x, coef);
    }
    return h;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed Hamiltonian JSON: ") + e.what());
  }
}

void write_spectrum_csv(std::ostream& out, const UnitarySpectrum& spec, bool include_zero) {
  const int n = spec.num_qubits();
  const auto& c = spec.coefficients();
  out << "pauli_label,re,im,prob\n";
  out.precision(17);
  for (uint64_t i = 0; i < c.size(); ++i) {
    const double p = std::norm(c[i]);
    if (!include_zero && p == 0.0) continue;
    out << PauliString::from_index(n, i).label() << ',' << c[i].real() << ',' << c[i].imag() << ',' << p
        << '\n';
  }
}

}  // namespace hamprobe
