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

#include "photonc/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "photonc/linear_map.hpp"

namespace photonc {

namespace {

using Id = ZXDiagram::Id;

bool is_internal(const ZXDiagram& d, Id v) {
  return d.is_spider(v) && !d.touches_boundary(v);
}

// Gadget leaf: internal degree-1 spider (its single edge is Hadamard in
// graph-like form).
bool is_leaf(const ZXDiagram& d, Id v) {
  return is_internal(d, v) && d.degree(v) == 1;
}

// Gadget hub: internal spider with at least one leaf neighbor.
bool is_hub(const ZXDiagram& d, Id v) {
  if (!is_internal(d, v)) return false;
  for (Id w : d.neighbors(v))
    if (is_leaf(d, w)) return true;
  return false;
}

// Single Hadamard edge, no plain edges.
bool simply_h_adjacent(const ZXDiagram& d, Id a, Id b) {
  ZXDiagram::EdgeCount c = d.edge_count(a, b);
  return c.had == 1 && c.plain == 0;
}

// All of v's incident edges are single Hadamard wires to spiders.
bool graph_like_at(const ZXDiagram& d, Id v) {
  if (d.edge_count(v, v).total() > 0) return false;
  for (Id w : d.neighbors(v)) {
    if (!d.is_spider(w)) {
      if (d.edge_count(v, w).total() != 1) return false;
      continue;
    }
    if (!simply_h_adjacent(d, v, w)) return false;
  }
  return true;
}

// Toggle bookkeeping: each pair toggled an odd number of times flips its
// Hadamard edge; the scalar gains sqrt(2)^(added - removed).
class ToggleSet {
 public:
  void add(Id a, Id b) {
    if (a == b) return;
    parity_[{std::min(a, b), std::max(a, b)}] ^= 1;
  }
  void add_cross(const std::vector<Id>& xs, const std::vector<Id>& ys) {
    for (Id x : xs)
      for (Id y : ys) add(x, y);
  }
  void add_pairs(const std::vector<Id>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) add(xs[i], xs[j]);
  }
  // Applies to the diagram; returns (#edges added - #edges removed).
  int apply(ZXDiagram& d) const {
    int delta = 0;
    for (const auto& [pair, p] : parity_) {
      if (!p) continue;
      if (d.has_hadamard(pair.first, pair.second)) {
        d.remove_edge(pair.first, pair.second, EdgeType::kHadamard);
        --delta;
      } else {
        d.add_edge(pair.first, pair.second, EdgeType::kHadamard);
        ++delta;
      }
    }
    return delta;
  }

 private:
  std::map<std::pair<Id, Id>, int> parity_;
};

void add_phase(ZXDiagram& d, Id v, const Angle& a) {
  d.vertex(v).phase = d.vertex(v).phase + a;
}

// --- gadget bookkeeping -----------------------------------------------

struct GadgetInfo {
  Id hub;
  Id leaf;
  std::vector<Id> key;  // hub neighbors without the leaf, ascending
  Angle eff;            // effective phase with a pi hub folded in
  c64 sigma;            // scalar carried by a pi hub
};

std::optional<GadgetInfo> gadget_at(const ZXDiagram& d, Id hub) {
  if (!is_internal(d, hub) || !d.vertex(hub).phase.is_pauli())
    return std::nullopt;
  Id leaf = 0;
  bool found = false;
  for (Id w : d.neighbors(hub)) {
    if (is_leaf(d, w)) {
      leaf = w;
      found = true;
      break;  // ascending order: lowest-id leaf is canonical
    }
  }
  if (!found) return std::nullopt;
  GadgetInfo g;
  g.hub = hub;
  g.leaf = leaf;
  for (Id w : d.neighbors(hub))
    if (w != leaf) g.key.push_back(w);
  const Angle theta = d.vertex(leaf).phase;
  if (d.vertex(hub).phase.is_zero()) {
    g.eff = theta;
    g.sigma = c64{1.0, 0.0};
  } else {
    g.eff = -theta;
    g.sigma = std::polar(1.0, theta.radians());
  }
  return g;
}

}  // namespace

// --- public rules --------------------------------------------------------

bool fuse_spiders(ZXDiagram& d, Id u, Id v) {
  if (u == v || !d.has_vertex(u) || !d.has_vertex(v)) return false;
  if (!d.is_spider(u) || !d.is_spider(v)) return false;
  if (d.edge_count(u, v).plain <= 0) return false;
  d.fuse_into(u, v);
  // Normalize what the merge may have created: self-loops and parallel
  // Hadamard edges.
  ZXDiagram::EdgeCount loops = d.edge_count(u, u);
  if (loops.plain > 0) d.remove_edge(u, u, EdgeType::kPlain, loops.plain);
  if (loops.had > 0) {
    d.remove_edge(u, u, EdgeType::kHadamard, loops.had);
    if (loops.had % 2 == 1) d.vertex(u).phase = d.vertex(u).phase.plus_pi();
    d.scalar_mul_sqrt2_pow(-loops.had);
  }
  for (Id w : d.neighbors(u)) {
    if (!d.is_spider(w)) continue;
    const int h = d.edge_count(u, w).had;
    if (h >= 2) {
      const int pairs = h / 2;
      d.remove_edge(u, w, EdgeType::kHadamard, 2 * pairs);
      d.scalar_mul_sqrt2_pow(-2 * pairs);
    }
  }
  return true;
}

bool local_complementation(ZXDiagram& d, Id v) {
  if (!d.has_vertex(v) || !d.is_spider(v)) return false;
  if (!is_internal(d, v)) return false;
  if (!d.vertex(v).phase.is_proper_clifford()) return false;
  if (!graph_like_at(d, v)) return false;

  const std::vector<Id> nbrs = d.neighbors(v);
  const Angle eps = d.vertex(v).phase;

  ToggleSet toggles;
  toggles.add_pairs(nbrs);
  d.remove_vertex(v);
  const int delta = toggles.apply(d);
  for (Id w : nbrs) add_phase(d, w, -eps);

  // (1 + e^{i eps}) * sqrt(2)^(toggle delta - degree)
  d.scalar_mul(c64{1.0, 0.0} + std::polar(1.0, eps.radians()));
  d.scalar_mul_sqrt2_pow(delta - static_cast<int>(nbrs.size()));
  return true;
}

namespace {

// Shared engine for pivot and its boundary/gadget variants: eliminates the
// internal Pauli spider u together with its partner v. v may carry any
// phase (non-Pauli phases are unfused into a phase gadget over u's side of
// the neighborhood) and may touch boundaries (each boundary wire is handed
// to a fresh spider that inherits the complemented connections).
bool pivot_general(ZXDiagram& d, Id u, Id v) {
  if (u == v || !d.has_vertex(u) || !d.has_vertex(v)) return false;
  if (!d.is_spider(u) || !d.is_spider(v)) return false;
  if (!is_internal(d, u)) return false;
  if (!d.vertex(u).phase.is_pauli()) return false;
  if (!simply_h_adjacent(d, u, v)) return false;
  if (!graph_like_at(d, u) || !graph_like_at(d, v)) return false;

  const Angle a = d.vertex(u).phase;
  const Angle phi = d.vertex(v).phase;
  const bool a_pi = !a.is_zero();

  std::vector<Id> nu, nv_sp;
  for (Id w : d.neighbors(u))
    if (w != v) nu.push_back(w);
  std::vector<std::pair<Id, EdgeType>> v_boundaries;
  for (Id w : d.neighbors(v)) {
    if (w == u) continue;
    if (d.is_spider(w)) {
      nv_sp.push_back(w);
    } else {
      v_boundaries.push_back(
          {w, d.edge_count(v, w).plain > 0 ? EdgeType::kPlain
                                           : EdgeType::kHadamard});
    }
  }
  std::vector<Id> setA, setB, setC;
  for (Id w : nu) {
    if (std::find(nv_sp.begin(), nv_sp.end(), w) != nv_sp.end())
      setC.push_back(w);
    else
      setA.push_back(w);
  }
  for (Id w : nv_sp)
    if (std::find(setC.begin(), setC.end(), w) == setC.end())
      setB.push_back(w);
  std::vector<Id> setW = setA;
  setW.insert(setW.end(), setC.begin(), setC.end());
  std::sort(setW.begin(), setW.end());

  int s2 = 2 - 1 - static_cast<int>(setA.size()) -
           static_cast<int>(setB.size()) - 2 * static_cast<int>(setC.size());
  c64 ph{1.0, 0.0};

  ToggleSet toggles;
  toggles.add_cross(setA, setB);
  toggles.add_cross(setA, setC);
  toggles.add_cross(setB, setC);

  // Phase shifts from eliminating u: B and C gain a, C additionally pi.
  for (Id w : setB) add_phase(d, w, a);
  for (Id w : setC) add_phase(d, w, a.plus_pi());

  // v's phase lands on W = A + C, with the exact mechanism set by its class.
  if (phi.is_pauli()) {
    if (!phi.is_zero()) {
      for (Id w : setW) add_phase(d, w, Angle::pi());
      if (a_pi) ph *= -1.0;
    }
  } else if (phi.is_proper_clifford()) {
    const Angle eff = a_pi ? -phi : phi;
    for (Id w : setW) add_phase(d, w, eff);
    if (a_pi) ph *= std::polar(1.0, phi.radians());
    toggles.add_pairs(setW);
  } else {
    // Unfuse into a phase gadget attached to W.
    const Angle eff = a_pi ? -phi : phi;
    Id hub = d.add_spider(SpiderColor::kZ, Angle::zero());
    Id leaf = d.add_spider(SpiderColor::kZ, eff);
    d.add_edge(hub, leaf, EdgeType::kHadamard);
    for (Id w : setW) d.add_edge(hub, w, EdgeType::kHadamard);
    s2 += static_cast<int>(setW.size()) - 1;
    if (a_pi) ph *= std::polar(1.0, phi.radians());
  }

  // Each boundary wire of v is taken over by a fresh spider of phase a,
  // connected to all of W, with the wire type flipped.
  for (const auto& [b, t] : v_boundaries) {
    Id nb = d.add_spider(SpiderColor::kZ, a);
    for (Id w : setW) d.add_edge(nb, w, EdgeType::kHadamard);
    d.add_edge(nb, b,
               t == EdgeType::kPlain ? EdgeType::kHadamard : EdgeType::kPlain);
    s2 += static_cast<int>(setW.size()) - 1;
  }

  d.remove_vertex(u);
  d.remove_vertex(v);
  s2 += toggles.apply(d);
  d.scalar_mul_sqrt2_pow(s2);
  d.scalar_mul(ph);
  return true;
}

}  // namespace

bool pivot(ZXDiagram& d, Id u, Id v) {
  if (!d.has_vertex(u) || !d.has_vertex(v)) return false;
  if (!d.is_spider(u) || !d.is_spider(v)) return false;
  if (!is_internal(d, u) || !is_internal(d, v)) return false;
  if (!d.vertex(u).phase.is_pauli() || !d.vertex(v).phase.is_pauli())
    return false;
  return pivot_general(d, u, v);
}

namespace {

// Deletes the gadget at `hub` when its effective phase is exactly zero.
bool gadget_delete_at(ZXDiagram& d, Id hub) {
  auto g = gadget_at(d, hub);
  if (!g || !g->eff.is_zero()) return false;
  const int w = static_cast<int>(g->key.size());
  d.remove_vertex(g->leaf);
  d.remove_vertex(g->hub);
  d.scalar_mul_sqrt2_pow(1 - w);
  d.scalar_mul(g->sigma);
  return true;
}

// Folds gadget g2 into g1 (same hub neighborhood): effective phases add.
void gadget_merge_pair(ZXDiagram& d, const GadgetInfo& g1,
                       const GadgetInfo& g2) {
  const Angle eff = g1.eff + g2.eff;
  const int w = static_cast<int>(g1.key.size());
  c64 sigma1_new{1.0, 0.0};
  if (d.vertex(g1.hub).phase.is_zero()) {
    d.vertex(g1.leaf).phase = eff;
  } else {
    d.vertex(g1.leaf).phase = -eff;
    sigma1_new = std::polar(1.0, (-eff).radians());
  }
  d.remove_vertex(g2.leaf);
  d.remove_vertex(g2.hub);
  d.scalar_mul_sqrt2_pow(1 - w);
  d.scalar_mul(g1.sigma * g2.sigma / sigma1_new);
}

// First mergeable gadget pair in deterministic scan order.
std::optional<std::pair<GadgetInfo, GadgetInfo>> find_gadget_merge(
    const ZXDiagram& d) {
  std::map<std::vector<Id>, GadgetInfo> by_key;
  for (Id hub : d.spider_ids()) {
    auto g = gadget_at(d, hub);
    if (!g) continue;
    auto [it, inserted] = by_key.insert({g->key, *g});
    if (!inserted) return std::make_pair(it->second, *g);
  }
  return std::nullopt;
}

}  // namespace

std::size_t fuse_phase_gadgets(ZXDiagram& d) {
  std::size_t fired = 0;
  for (;;) {
    bool deleted = false;
    for (Id hub : d.spider_ids()) {
      if (d.has_vertex(hub) && gadget_delete_at(d, hub)) {
        ++fired;
        deleted = true;
        break;
      }
    }
    if (deleted) continue;
    auto match = find_gadget_merge(d);
    if (!match) return fired;
    gadget_merge_pair(d, match->first, match->second);
    ++fired;
  }
}

// --- driver ----------------------------------------------------------------

namespace {

long clifford_mass(const ZXDiagram& d) {
  long p = 0;
  for (Id v : d.spider_ids())
    if (is_internal(d, v) && d.vertex(v).phase.is_clifford() && !is_hub(d, v))
      ++p;
  return p;
}

std::string phase_list(const ZXDiagram& d, const std::vector<Id>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) os << ",";
    os << (d.has_vertex(ids[i]) ? d.vertex(ids[i]).phase.str() : "_");
  }
  return os.str();
}

struct Candidate {
  std::string rule;
  std::vector<Id> spiders;
  std::function<bool()> fire;
  bool relaxed_measure = false;  // multi-boundary gadget unfuse
};

}  // namespace

std::array<long, 3> termination_measure(const ZXDiagram& d) {
  const long s = static_cast<long>(d.num_spiders());
  const long p = clifford_mass(d);
  const long e = static_cast<long>(d.hadamard_edge_count());
  return {s + p, p, e};
}

bool is_fully_simplified(const ZXDiagram& d) {
  for (Id v : d.spider_ids())
    if (is_internal(d, v) && d.vertex(v).phase.is_clifford() && !is_hub(d, v))
      return false;
  return true;
}

SimplifyResult simplify(ZXDiagram& d, const SimplifyOptions& opts) {
  SimplifyResult result;
  std::string last_rule = "(none)";

  auto next_candidate = [&]() -> std::optional<Candidate> {
    // 1. Plain-edge fusion (not expected on graph-like input, kept for
    //    robustness on caller-built diagrams).
    for (Id u : d.spider_ids())
      for (Id w : d.neighbors(u)) {
        if (w <= u || !d.is_spider(w)) continue;
        if (d.edge_count(u, w).plain > 0)
          return Candidate{"fuse", {u, w}, [&d, u, w] {
                             return fuse_spiders(d, u, w);
                           }};
      }
    // 2. Isolated spiders are pure scalars.
    for (Id v : d.spider_ids())
      if (d.degree(v) == 0) {
        return Candidate{"isolated", {v}, [&d, v] {
                           const double r = d.vertex(v).phase.radians();
                           d.scalar_mul(c64{1.0, 0.0} + std::polar(1.0, r));
                           d.remove_vertex(v);
                           return true;
                         }};
      }
    // 3. Identity spiders: phase 0, exactly two single wires.
    for (Id v : d.spider_ids()) {
      if (!d.vertex(v).phase.is_zero() || d.degree(v) != 2) continue;
      if (d.edge_count(v, v).total() > 0) continue;
      const std::vector<Id> nbrs = d.neighbors(v);
      int htype = 0;
      std::vector<std::pair<Id, EdgeType>> ends;
      for (Id w : nbrs) {
        ZXDiagram::EdgeCount c = d.edge_count(v, w);
        for (int i = 0; i < c.plain; ++i) ends.push_back({w, EdgeType::kPlain});
        for (int i = 0; i < c.had; ++i) {
          ends.push_back({w, EdgeType::kHadamard});
          ++htype;
        }
      }
      if (ends.size() != 2) continue;
      return Candidate{
          "id", {v}, [&d, v, ends, htype] {
            const Id a = ends[0].first;
            const Id b = ends[1].first;
            const EdgeType t =
                htype % 2 == 1 ? EdgeType::kHadamard : EdgeType::kPlain;
            d.remove_vertex(v);
            if (a == b) {
              if (t == EdgeType::kHadamard) {
                d.vertex(a).phase = d.vertex(a).phase.plus_pi();
                d.scalar_mul_sqrt2_pow(-1);
              }
              return true;
            }
            if (t == EdgeType::kPlain && d.is_spider(a) && d.is_spider(b)) {
              d.add_edge(a, b, EdgeType::kPlain);
              return fuse_spiders(d, std::min(a, b), std::max(a, b));
            }
            if (t == EdgeType::kHadamard && d.is_spider(a) && d.is_spider(b) &&
                d.has_hadamard(a, b)) {
              d.remove_edge(a, b, EdgeType::kHadamard);
              d.scalar_mul_sqrt2_pow(-2);
              return true;
            }
            d.add_edge(a, b, t);
            return true;
          }};
    }
    // 4. Local complementation on internal proper-Clifford spiders.
    for (Id v : d.spider_ids())
      if (is_internal(d, v) && d.vertex(v).phase.is_proper_clifford() &&
          graph_like_at(d, v))
        return Candidate{"lcomp", {v}, [&d, v] {
                           return local_complementation(d, v);
                         }};
    // 5. Plain pivot on adjacent internal Pauli pairs, ascending edge order.
    for (Id u : d.spider_ids()) {
      if (!is_internal(d, u) || !d.vertex(u).phase.is_pauli()) continue;
      for (Id w : d.neighbors(u)) {
        if (w <= u) continue;
        if (!d.is_spider(w) || !is_internal(d, w)) continue;
        if (!d.vertex(w).phase.is_pauli()) continue;
        if (!simply_h_adjacent(d, u, w)) continue;
        return Candidate{"pivot", {u, w}, [&d, u, w] {
                           return pivot(d, u, w);
                         }};
      }
    }
    // 6-8. Remaining internal Pauli non-hub spiders: partner preference is
    // boundary Pauli, boundary Clifford, interior non-Clifford (gadget),
    // boundary non-Clifford.
    for (Id u : d.spider_ids()) {
      if (!is_internal(d, u) || !d.vertex(u).phase.is_pauli()) continue;
      if (is_hub(d, u)) continue;
      std::vector<Id> b_pauli, b_cliff, i_gadget, b_gadget1, b_gadgetk;
      for (Id w : d.neighbors(u)) {
        if (!d.is_spider(w) || !simply_h_adjacent(d, u, w)) continue;
        const Angle& phi = d.vertex(w).phase;
        if (d.touches_boundary(w)) {
          if (phi.is_pauli())
            b_pauli.push_back(w);
          else if (phi.is_proper_clifford())
            b_cliff.push_back(w);
          else if (d.boundary_edge_count(w) == 1)
            b_gadget1.push_back(w);
          else
            b_gadgetk.push_back(w);
        } else if (!phi.is_clifford()) {
          i_gadget.push_back(w);
        }
      }
      auto pick = [&](const std::vector<Id>& c, const char* rule,
                      bool relaxed) -> std::optional<Candidate> {
        if (c.empty()) return std::nullopt;
        const Id w = c.front();
        return Candidate{rule, {u, w},
                         [&d, u, w] { return pivot_general(d, u, w); },
                         relaxed};
      };
      if (auto c = pick(b_pauli, "pivot_boundary", false)) return c;
      if (auto c = pick(b_cliff, "pivot_boundary", false)) return c;
      if (auto c = pick(i_gadget, "pivot_gadget", false)) return c;
      if (auto c = pick(b_gadget1, "pivot_gadget", false)) return c;
      if (auto c = pick(b_gadgetk, "pivot_gadget", true)) return c;
    }
    // 9. Gadget fusion: zero-phase deletion, then same-neighborhood merge.
    for (Id hub : d.spider_ids()) {
      auto g = gadget_at(d, hub);
      if (g && g->eff.is_zero())
        return Candidate{"gadget_delete", {hub, g->leaf}, [&d, hub] {
                           return gadget_delete_at(d, hub);
                         }};
    }
    if (auto match = find_gadget_merge(d)) {
      const GadgetInfo g1 = match->first;
      const GadgetInfo g2 = match->second;
      return Candidate{"gadget_merge", {g1.hub, g2.hub}, [&d, g1, g2] {
                         gadget_merge_pair(d, g1, g2);
                         return true;
                       }};
    }
    return std::nullopt;
  };

  for (;;) {
    auto cand = next_candidate();
    if (!cand) break;
    if (result.firings >= opts.max_firings)
      throw InvariantError("simplify: firing cap " +
                           std::to_string(opts.max_firings) +
                           " exceeded; last rule was " + last_rule);
    const std::array<long, 3> before = termination_measure(d);
    RuleFiring firing{cand->rule, cand->spiders,
                      phase_list(d, cand->spiders)};
    if (!cand->fire())
      throw InvariantError("simplify: rule " + cand->rule +
                           " failed its own preconditions");
    const std::array<long, 3> after = termination_measure(d);
    const bool decreased =
        cand->relaxed_measure ? after[1] < before[1] : after < before;
    if (!decreased)
      throw InvariantError("simplify: termination measure did not decrease "
                           "on rule " +
                           cand->rule);
    ++result.firings;
    last_rule = cand->rule;
    if (opts.collect_trace) result.trace.push_back(firing);
    if (opts.on_firing) opts.on_firing(d, firing);
  }
  return result;
}

}  // namespace photonc
