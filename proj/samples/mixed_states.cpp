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

// Convex-roof estimates and the ent-concurrence array of mixed states.

#include <iostream>

#include "entcon/entcon.hpp"

int main() {
  using namespace entcon;
  CreOptions options;
  options.budget = 900;
  options.seed = 7;

  const DensityMatrix sep = catalog("2SEP");
  std::cout << "2SEP  hatted GM_2 " << hatted_k_ent(sep, Family::GM, 2, options).value << "  SGM_2 "
            << sgm_k(sep, 2, options).value << "\n";

  options.polish = true;
  std::cout << "2SEP  hatted GM_2 with polish " << hatted_k_ent(sep, Family::GM, 2, options).value << "\n";
  options.polish = false;

  const auto array = ent_concurrence_array(catalog("W4"), options);
  for (const auto& row : array.rows)
    for (const auto& v : row) {
      std::cout << "(" << reduction_str(v.reduction) << ")";
      for (const auto& r : v.rows)
        for (const auto& e : r) std::cout << "  " << e.partition.str() << "=" << e.value;
      std::cout << "\n";
    }
  std::cout << "absolute ent-concurrence " << array.sum() << "\n";

  std::cout << io::to_json(catalog_pure("BELL")).dump() << "\n";
}
