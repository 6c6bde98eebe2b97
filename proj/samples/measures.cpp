// Copyright 2026 The entcon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Pure-state measures for the four-qubit test states.

#include <iostream>

#include "entcon/entcon.hpp"

int main() {
  using namespace entcon;
  for (const char* name : {"GHZ4", "BP4", "F4", "W4"}) {
    const PureState psi = catalog_pure(name);
    std::cout << name << "  ent " << ent(psi) << "  GM_2 " << gm_k_ent(psi, 2) << "  FSM "
              << aggregate_ent(psi, Family::SM).value << "  FDM " << aggregate_ent(psi, Family::DM).value << "\n";
  }

  const auto report = aggregate_ent(catalog_pure("BP4"), Family::DM);
  for (const auto& pv : report.per_partition) std::cout << "  (" << pv.partition.str() << ") " << pv.value << "\n";

  const auto p = ModePartition::parse("1,3|2,4");
  std::cout << "BP4 (" << p.str() << ") " << partitional_ent(catalog_pure("BP4"), p) << "\n";
}
