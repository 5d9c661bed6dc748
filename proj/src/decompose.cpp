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

#include "photonc/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "photonc/statevector.hpp"

namespace photonc {

using json = nlohmann::ordered_json;

std::size_t DecompositionPlan::ghz_count() const {
  std::size_t n = 0;
  for (const Subgraph& s : subgraphs)
    if (s.kind == SubgraphKind::kGhz) ++n;
  return n;
}

std::size_t DecompositionPlan::linear_count() const {
  return subgraphs.size() - ghz_count();
}

namespace {

using EdgeSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

std::size_t deg_in(const EdgeSet& edges, std::uint32_t v) {
  std::size_t d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<std::uint32_t> nbrs_in(const EdgeSet& edges, std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void drop_edge(EdgeSet& edges, std::uint32_t a, std::uint32_t b) {
  edges.erase({std::min(a, b), std::max(a, b)});
}

}  // namespace

DecompositionPlan decompose(const MGraph& m) {
  DecompositionPlan plan;
  EdgeSet edges = m.edges;

  // Step 1+2: extract GHZ stars while any node keeps more than two edges.
  // Root order is recomputed after every extraction.
  for (;;) {
    std::uint32_t root = 0;
    std::size_t best = 0;
    for (const auto& [id, v] : m.vertices) {
      const std::size_t d = deg_in(edges, id);
      if (d > best) {
        best = d;
        root = id;
      }
    }
    if (best <= 2) break;
    Subgraph g;
    g.kind = SubgraphKind::kGhz;
    g.nodes.push_back(root);
    for (std::uint32_t w : nbrs_in(edges, root)) {
      g.nodes.push_back(w);
      drop_edge(edges, root, w);
    }
    plan.subgraphs.push_back(std::move(g));
  }

  // Step 3: what remains has maximum degree 2 and splits into maximal
  // paths; cycles are broken at their lowest-id node.
  while (!edges.empty()) {
    std::uint32_t start = 0;
    bool have_endpoint = false;
    for (const auto& [id, v] : m.vertices) {
      if (deg_in(edges, id) == 1) {
        start = id;
        have_endpoint = true;
        break;
      }
    }
    if (!have_endpoint) {
      for (const auto& [id, v] : m.vertices)
        if (deg_in(edges, id) > 0) {
          start = id;  // cycle: break at lowest id
          break;
        }
    }
    Subgraph g;
    g.kind = SubgraphKind::kLinear;
    g.nodes.push_back(start);
    std::uint32_t cur = start;
    for (;;) {
      const std::vector<std::uint32_t> next = nbrs_in(edges, cur);
      if (next.empty()) break;
      const std::uint32_t w = next.front();
      drop_edge(edges, cur, w);
      g.nodes.push_back(w);
      cur = w;
    }
    plan.subgraphs.push_back(std::move(g));
  }

  // Originally isolated vertices still need a source and a measurement.
  for (const auto& [id, v] : m.vertices)
    if (m.degree(id) == 0)
      plan.subgraphs.push_back(Subgraph{SubgraphKind::kLinear, {id}});

  // Fusions: every occurrence after the first fuses with the survivor.
  std::map<std::uint32_t, std::size_t> occurrences;
  for (const Subgraph& g : plan.subgraphs) {
    for (std::uint32_t node : g.nodes) {
      std::size_t& k = occurrences[node];
      if (k > 0) plan.fusions.push_back(Fusion{node, 0, k});
      ++k;
      ++plan.photon_count;
    }
  }
  plan.fusion_count = plan.fusions.size();
  return plan;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> subgraph_local_edges(
    const Subgraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (g.kind == SubgraphKind::kGhz) {
    for (std::size_t i = 1; i < g.nodes.size(); ++i) out.push_back({0, i});
  } else {
    for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i)
      out.push_back({i, i + 1});
  }
  return out;
}

}  // namespace

bool verify_plan(const DecompositionPlan& plan, const MGraph& m,
                 std::size_t sim_node_cap) {
  // Edge reconstruction: the subgraph edges, with fused occurrences
  // identified by node id, must reproduce the original edge set exactly.
  std::multiset<std::pair<std::uint32_t, std::uint32_t>> rebuilt;
  for (const Subgraph& g : plan.subgraphs) {
    for (const auto& [i, j] : subgraph_local_edges(g)) {
      const std::uint32_t a = g.nodes[i];
      const std::uint32_t b = g.nodes[j];
      if (a == b) return false;
      rebuilt.insert({std::min(a, b), std::max(a, b)});
    }
    for (std::uint32_t node : g.nodes)
      if (!m.vertices.count(node)) return false;
  }
  if (rebuilt.size() != m.edges.size()) return false;
  for (const auto& e : m.edges)
    if (rebuilt.count(e) != 1) return false;

  // Occurrence/fusion consistency.
  std::map<std::uint32_t, std::size_t> occurrences;
  for (const Subgraph& g : plan.subgraphs)
    for (std::uint32_t node : g.nodes) ++occurrences[node];
  std::map<std::uint32_t, std::size_t> fusions_per_node;
  for (const Fusion& f : plan.fusions) {
    if (f.occ_a != 0 || f.occ_b == 0 || f.occ_b >= occurrences[f.node])
      return false;
    ++fusions_per_node[f.node];
  }
  std::size_t photons = 0;
  for (const auto& [node, k] : occurrences) {
    photons += k;
    const std::size_t fused =
        fusions_per_node.count(node) ? fusions_per_node[node] : 0;
    if (fused != k - 1) return false;
  }
  if (photons != plan.photon_count || plan.fusions.size() != plan.fusion_count)
    return false;
  for (const auto& [id, v] : m.vertices)
    if (!occurrences.count(id)) return false;

  if (m.vertices.size() > sim_node_cap) return true;

  // Fusion simulation: build each subgraph's graph state, fusing repeated
  // nodes into their earlier occurrence as we go.
  StateVector acc;  // 0 qubits
  std::vector<std::uint32_t> slots;  // register position -> node id
  std::set<std::uint32_t> present;
  for (const Subgraph& g : plan.subgraphs) {
    if (slots.size() + g.nodes.size() > 22)
      throw SizeCapError("verify_plan: fusion simulation register too large");
    std::vector<std::pair<std::size_t, std::size_t>> edges =
        subgraph_local_edges(g);
    StateVector piece = graph_state(edges, g.nodes.size(), 22);
    acc = StateVector::tensor(acc, piece);
    const std::size_t base = slots.size();
    for (std::uint32_t node : g.nodes) slots.push_back(node);
    // Fuse fresh occurrences of already-present nodes (descending position
    // so earlier positions stay valid).
    for (std::size_t i = g.nodes.size(); i-- > 0;) {
      const std::size_t pos = base + i;
      const std::uint32_t node = g.nodes[i];
      std::size_t first = 0;
      bool seen = false;
      for (std::size_t p = 0; p < pos; ++p)
        if (slots[p] == node) {
          first = p;
          seen = true;
          break;
        }
      if (!seen) {
        present.insert(node);
        continue;
      }
      try {
        acc = fuse_type1(acc, first, pos);
      } catch (const ZeroBranchError&) {
        return false;
      }
      slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }
  if (slots.size() != m.vertices.size()) return false;

  // Compare with the target graph state, vertices in ascending id order.
  std::vector<std::uint32_t> target_order;
  for (const auto& [id, v] : m.vertices) target_order.push_back(id);
  std::vector<std::size_t> perm;
  for (std::uint32_t id : target_order) {
    auto it = std::find(slots.begin(), slots.end(), id);
    if (it == slots.end()) return false;
    perm.push_back(static_cast<std::size_t>(it - slots.begin()));
  }
  acc = permute_qubits(acc, perm);

  std::vector<std::pair<std::size_t, std::size_t>> target_edges;
  std::map<std::uint32_t, std::size_t> idx;
  for (std::size_t i = 0; i < target_order.size(); ++i)
    idx[target_order[i]] = i;
  for (const auto& [a, b] : m.edges) target_edges.push_back({idx[a], idx[b]});
  StateVector target = graph_state(target_edges, target_order.size(), 22);

  return StateVector::fidelity(acc, target) >= 1.0 - 1e-9;
}

std::string plan_to_json(const DecompositionPlan& plan) {
  json j;
  j["subgraphs"] = json::array();
  for (const Subgraph& g : plan.subgraphs) {
    json jg;
    jg["kind"] = g.kind == SubgraphKind::kGhz ? "GHZ" : "LINEAR";
    jg["nodes"] = g.nodes;
    j["subgraphs"].push_back(jg);
  }
  j["fusions"] = json::array();
  for (const Fusion& f : plan.fusions) {
    json jf;
    jf["node"] = f.node;
    jf["occurrences"] = {f.occ_a, f.occ_b};
    j["fusions"].push_back(jf);
  }
  j["photon_count"] = plan.photon_count;
  j["fusion_count"] = plan.fusion_count;
  return j.dump(2) + "\n";
}

}  // namespace photonc
