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

#include "photonc/zx_eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "photonc/kernels/kernels.hpp"

namespace photonc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::size_t kRankCap = 26;

struct Tensor {
  std::vector<int> legs;  // distinct labels; legs[0] is the index MSB
  std::vector<c64> data;  // 2^rank entries

  std::size_t rank() const { return legs.size(); }
};

Tensor h_connector(int la, int lb) {
  Tensor t;
  t.legs = {la, lb};
  t.data = {c64{kInvSqrt2, 0.0}, c64{kInvSqrt2, 0.0}, c64{kInvSqrt2, 0.0},
            c64{-kInvSqrt2, 0.0}};
  return t;
}

Tensor delta_connector(int la, int lb) {
  Tensor t;
  t.legs = {la, lb};
  t.data = {c64{1.0, 0.0}, c64{0.0, 0.0}, c64{0.0, 0.0}, c64{1.0, 0.0}};
  return t;
}

Tensor spider_tensor(const ZXVertex& v, const std::vector<int>& legs) {
  Tensor t;
  t.legs = legs;
  const std::size_t dim = std::size_t{1} << legs.size();
  t.data.assign(dim, c64{0.0, 0.0});
  const c64 ph = std::polar(1.0, v.phase.radians());
  if (v.color == SpiderColor::kZ) {
    // += so the 0-leg spider correctly sums both branches (1 + e^{ia}).
    t.data[0] = c64{1.0, 0.0};
    t.data[dim - 1] += ph;
  } else {
    // X_k(a)[s] = (1/sqrt2)^k (1 + e^{ia} (-1)^popcount(s))
    const double norm = std::pow(kInvSqrt2, static_cast<double>(legs.size()));
    for (std::size_t s = 0; s < dim; ++s) {
      const double sign = (__builtin_popcountll(s) & 1) ? -1.0 : 1.0;
      t.data[s] = norm * (c64{1.0, 0.0} + ph * sign);
    }
  }
  return t;
}

// Reorders legs; new_legs must be a permutation of t.legs.
Tensor permuted(const Tensor& t, const std::vector<int>& new_legs) {
  if (new_legs == t.legs) return t;
  const std::size_t r = t.rank();
  std::vector<std::size_t> old_bit(r);  // bit position in old index per new leg
  for (std::size_t i = 0; i < r; ++i) {
    auto it = std::find(t.legs.begin(), t.legs.end(), new_legs[i]);
    if (it == t.legs.end()) throw std::logic_error("permuted: leg mismatch");
    const std::size_t old_pos = static_cast<std::size_t>(it - t.legs.begin());
    old_bit[i] = r - 1 - old_pos;
  }
  Tensor out;
  out.legs = new_legs;
  out.data.assign(t.data.size(), c64{0.0, 0.0});
  for (std::size_t idx = 0; idx < out.data.size(); ++idx) {
    std::size_t src = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t bit = (idx >> (r - 1 - i)) & 1;
      src |= bit << old_bit[i];
    }
    out.data[idx] = t.data[src];
  }
  return out;
}

Tensor contract(const Tensor& a, const Tensor& b) {
  std::vector<int> shared;
  for (int l : a.legs)
    if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end())
      shared.push_back(l);
  std::vector<int> keep_a, keep_b;
  for (int l : a.legs)
    if (std::find(shared.begin(), shared.end(), l) == shared.end())
      keep_a.push_back(l);
  for (int l : b.legs)
    if (std::find(shared.begin(), shared.end(), l) == shared.end())
      keep_b.push_back(l);
  if (keep_a.size() + keep_b.size() > kRankCap)
    throw SizeCapError("evaluate: contraction rank exceeds cap " +
                       std::to_string(kRankCap));

  std::vector<int> order_a = keep_a;
  order_a.insert(order_a.end(), shared.begin(), shared.end());
  std::vector<int> order_b = shared;
  order_b.insert(order_b.end(), keep_b.begin(), keep_b.end());
  Tensor pa = permuted(a, order_a);
  Tensor pb = permuted(b, order_b);

  const std::size_t m = std::size_t{1} << keep_a.size();
  const std::size_t k = std::size_t{1} << shared.size();
  const std::size_t n = std::size_t{1} << keep_b.size();
  Tensor out;
  out.legs = keep_a;
  out.legs.insert(out.legs.end(), keep_b.begin(), keep_b.end());
  out.data.assign(m * n, c64{0.0, 0.0});
  kernels::active().matmul_acc(pa.data.data(), pb.data.data(),
                               out.data.data(), m, k, n, k, n, n);
  return out;
}

}  // namespace

LinearMap evaluate(const ZXDiagram& d, std::size_t vertex_cap) {
  if (d.num_vertices() > vertex_cap)
    throw SizeCapError("evaluate: diagram has " +
                       std::to_string(d.num_vertices()) +
                       " vertices, cap is " + std::to_string(vertex_cap));

  // Label every edge occurrence. Plain edges share one label between their
  // endpoints; Hadamard edges get a label per side plus an H connector.
  // Boundary-boundary plain wires get an explicit delta connector so both
  // free legs exist.
  std::vector<Tensor> tensors;
  std::map<ZXDiagram::Id, std::vector<int>> vertex_legs;
  std::map<ZXDiagram::Id, int> boundary_leg;
  int next_label = 0;

  const std::vector<ZXDiagram::Id> ids = d.vertex_ids();
  for (ZXDiagram::Id a : ids) {
    for (ZXDiagram::Id b : ids) {
      if (b < a) continue;
      ZXDiagram::EdgeCount c = d.edge_count(a, b);
      if (c.total() == 0) continue;
      const bool a_spider = d.is_spider(a);
      const bool b_spider = d.is_spider(b);
      for (int i = 0; i < c.plain; ++i) {
        if (a == b) continue;  // plain self-loop contributes a factor 1
        if (!a_spider && !b_spider) {
          const int la = next_label++;
          const int lb = next_label++;
          tensors.push_back(delta_connector(la, lb));
          boundary_leg[a] = la;
          boundary_leg[b] = lb;
        } else {
          const int l = next_label++;
          if (a_spider)
            vertex_legs[a].push_back(l);
          else
            boundary_leg[a] = l;
          if (b_spider)
            vertex_legs[b].push_back(l);
          else
            boundary_leg[b] = l;
        }
      }
      for (int i = 0; i < c.had; ++i) {
        const int la = next_label++;
        const int lb = next_label++;
        tensors.push_back(h_connector(la, lb));
        if (a_spider)
          vertex_legs[a].push_back(la);
        else
          boundary_leg[a] = la;
        // For a Hadamard self-loop (a == b) this adds the second leg to the
        // same spider.
        if (b_spider)
          vertex_legs[b].push_back(lb);
        else
          boundary_leg[b] = lb;
      }
    }
  }

  for (ZXDiagram::Id v : ids) {
    if (!d.is_spider(v)) {
      if (d.degree(v) != 1)
        throw std::runtime_error("evaluate: boundary vertex " +
                                 std::to_string(v) + " has degree " +
                                 std::to_string(d.degree(v)));
      continue;
    }
    tensors.push_back(spider_tensor(d.vertex(v), vertex_legs[v]));
  }

  // Greedy pairwise contraction, smallest resulting rank first.
  std::vector<bool> alive(tensors.size(), true);
  auto result_rank = [&](std::size_t i, std::size_t j) {
    std::size_t sh = 0;
    for (int l : tensors[i].legs)
      if (std::find(tensors[j].legs.begin(), tensors[j].legs.end(), l) !=
          tensors[j].legs.end())
        ++sh;
    return tensors[i].rank() + tensors[j].rank() - 2 * sh;
  };
  for (;;) {
    // Find the best pair sharing at least one label.
    std::size_t best_i = 0, best_j = 0;
    std::size_t best_rank = kRankCap + 1;
    bool found = false;
    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < tensors.size(); ++i)
      if (alive[i])
        for (int l : tensors[i].legs) by_label[l].push_back(i);
    for (const auto& [l, owners] : by_label) {
      if (owners.size() != 2) continue;
      const std::size_t i = owners[0], j = owners[1];
      if (i == j) continue;
      const std::size_t r = result_rank(i, j);
      if (!found || r < best_rank ||
          (r == best_rank && std::make_pair(i, j) <
                                 std::make_pair(best_i, best_j))) {
        best_i = i;
        best_j = j;
        best_rank = r;
        found = true;
      }
    }
    if (!found) break;
    tensors.push_back(contract(tensors[best_i], tensors[best_j]));
    alive[best_i] = alive[best_j] = false;
    alive.push_back(true);
  }

  // Outer product of the remaining disconnected pieces.
  Tensor acc;
  acc.data = {c64{1.0, 0.0}};
  for (std::size_t i = 0; i < tensors.size(); ++i)
    if (alive[i]) acc = contract(acc, tensors[i]);

  // Arrange free legs as [outputs..., inputs...].
  std::vector<int> final_legs;
  for (ZXDiagram::Id v : d.outputs()) {
    auto it = boundary_leg.find(v);
    if (it == boundary_leg.end())
      throw std::runtime_error("evaluate: output boundary has no edge");
    final_legs.push_back(it->second);
  }
  for (ZXDiagram::Id v : d.inputs()) {
    auto it = boundary_leg.find(v);
    if (it == boundary_leg.end())
      throw std::runtime_error("evaluate: input boundary has no edge");
    final_legs.push_back(it->second);
  }
  if (final_legs.size() != acc.rank())
    throw std::logic_error("evaluate: free legs do not match boundaries");
  acc = permuted(acc, final_legs);

  LinearMap out(std::size_t{1} << d.outputs().size(),
                std::size_t{1} << d.inputs().size());
  out.a = acc.data;
  out.scalar = d.scalar();
  return out;
}

}  // namespace photonc
