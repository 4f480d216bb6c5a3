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

#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "hamprobe/decision.hpp"
#include "hamprobe/evolution.hpp"
#include "hamprobe/hamiltonian.hpp"
#include "hamprobe/learners.hpp"

namespace hamprobe {

using json = nlohmann::json;

Verdict parse_verdict(const std::string& name);

json to_json(const QueryLedger& ledger);
/// Fields: protocol, verdict, gamma, thresholds, generators (hex), ledger, seed,
/// budget_clamped, samples, evolution_time.
json to_json(const Decision& d);
json to_json(const LearnReport& r);

/// {"n": n, "terms": [{"label": ..., "coef": ...}, ...]}
json hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const json& j);

/// CSV with header pauli_label,re,im,prob and one row per nonzero coefficient
/// (all rows when `include_zero`).
void write_spectrum_csv(std::ostream& out, const UnitarySpectrum& spec, bool include_zero = false);

}  // namespace hamprobe
