// Copyright 2026 The photonc authors
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

#ifndef PHOTONC_DECOMPOSE_HPP
#define PHOTONC_DECOMPOSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "photonc/mgraph.hpp"

namespace photonc {

enum class SubgraphKind { kGhz, kLinear };

// GHZ: root first, then leaves ascending. LINEAR: endpoint-to-endpoint walk
// order; a broken cycle repeats its break node at both ends; a degenerate
// 1-node entry is a single unentangled photon.
struct Subgraph {
  SubgraphKind kind;
  std::vector<std::uint32_t> nodes;
};

// Photons are node occurrences; occurrence 0 always survives its fusions.
struct Fusion {
  std::uint32_t node;
  std::size_t occ_a;  // surviving occurrence (always 0)
  std::size_t occ_b;  // consumed occurrence
};

struct DecompositionPlan {
  std::vector<Subgraph> subgraphs;
  std::vector<Fusion> fusions;
  std::size_t photon_count = 0;  // sum of node occurrences
  std::size_t fusion_count = 0;

  std::size_t ghz_count() const;
  std::size_t linear_count() const;
};

// GHZ/linear extraction: repeatedly root the graph at the node with the
// most remaining edges (>2, ties by ascending id) and strip its star; the
// leftover degree-<=2 edges split into maximal paths (lowest-id endpoint
// first, cycles broken at their lowest-id node). Repeated node ids across
// subgraphs become Type-1 fusions.
DecompositionPlan decompose(const MGraph& m);

// Edge-multiset reconstruction check, plus (for graphs of at most
// `sim_node_cap` nodes) a state-vector simulation of the plan's sources and
// fusions against the target graph state, fidelity >= 1 - 1e-9.
bool verify_plan(const DecompositionPlan& plan, const MGraph& m,
                 std::size_t sim_node_cap = 12);

std::string plan_to_json(const DecompositionPlan& plan);

}  // namespace photonc

#endif  // PHOTONC_DECOMPOSE_HPP
