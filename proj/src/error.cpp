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

#include "hamprobe/error.hpp"

#include <cstdlib>
#include <string>

namespace hamprobe {

int dense_cap() {
  static const int cap = [] {
    const char* env = std::getenv("HAMPROBE_DENSE_CAP");
    if (env == nullptr || *env == '\0') return 12;
    try {
      int v = std::stoi(env);
      return v > 0 ? v : 12;
    } catch (const std::exception&) {
      return 12;
    }
  }();
  return cap;
}

void require_dense(int n, const char* what) {
  if (n > dense_cap()) {
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) +
                        " exceeds dense cap " + std::to_string(dense_cap()));
  }
}

}  // namespace hamprobe
