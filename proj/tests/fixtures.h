// Copyright 2026 The SCIG Authors
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

#ifndef SCIG_TESTS_FIXTURES_H_
#define SCIG_TESTS_FIXTURES_H_

#include <algorithm>
#include <random>

#include "scig/core.h"

namespace scig::fixtures {

// Four candidates over three skills: S1={e1,e2}, S2={e2,e3}, S3={e3},
// S4={e1}.
inline JointStrategy Hiring() {
  return JointStrategy(Universe(3),
                       {ElementSet::Of({0, 1}), ElementSet::Of({1, 2}),
                        ElementSet::Of({2}), ElementSet::Of({0})});
}

inline JointStrategy AllEmpty(int n, int m) {
  return JointStrategy(Universe(n), std::vector<ElementSet>(m));
}

inline JointStrategy RandomProfile(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << n) - 1);
  std::vector<ElementSet> s(m);
  for (auto& x : s) x = ElementSet(pick(rng));
  return JointStrategy(Universe(n), std::move(s));
}

inline std::vector<int> RandomRelabeling(std::mt19937_64& rng, int m) {
  std::vector<int> sigma(m);
  for (int i = 0; i < m; ++i) sigma[i] = i;
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

}  // namespace scig::fixtures

#endif  // SCIG_TESTS_FIXTURES_H_
