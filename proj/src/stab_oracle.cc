// Copyright 2026 The randcluster Authors
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

#include "randcluster/stab_oracle.h"

#include <cmath>

#include "randcluster/errors.h"

namespace randcluster {

BinaryMatrix cut_matrix(const GraphInstance& g, const QubitSet& sigma) {
  if (sigma.empty() || sigma.max_label() > g.n() ||
      sigma.size() >= static_cast<std::size_t>(g.n())) {
    throw InvalidInput("cut_matrix: sigma must be a non-empty proper subset of the vertices");
  }
  const QubitSet rest = sigma.complement(g.n());
  BinaryMatrix m(sigma.size(), rest.size());
  for (std::size_t r = 0; r < sigma.size(); ++r)
    for (std::size_t c = 0; c < rest.size(); ++c)
      if (g.has_edge(sigma.labels()[r], rest.labels()[c])) m.set(r, c, true);
  return m;
}

std::size_t cut_rank(const GraphInstance& g, const QubitSet& sigma) {
  return gf2_rank(cut_matrix(g, sigma));
}

double oracle_purity(const GraphInstance& g, const QubitSet& sigma) {
  return std::ldexp(1.0, -static_cast<int>(cut_rank(g, sigma)));
}

double oracle_pure_negativity(const GraphInstance& g, const QubitSet& sigma) {
  return std::ldexp(1.0, static_cast<int>(cut_rank(g, sigma))) - 1.0;
}

}  // namespace randcluster
