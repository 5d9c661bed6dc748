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

#ifndef PHOTONC_ZX_HPP
#define PHOTONC_ZX_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "photonc/angle.hpp"
#include "photonc/circuit.hpp"

namespace photonc {

enum class SpiderColor { kZ, kX };
enum class EdgeType { kPlain, kHadamard };
enum class VKind { kBoundary, kSpider };

struct ZXVertex {
  VKind kind = VKind::kSpider;
  SpiderColor color = SpiderColor::kZ;
  Angle phase;
};

// Open ZX diagram: phased spiders plus boundary vertices, edges as a
// multiset of plain/Hadamard wires (parallel edges and self-loops are legal
// until graph-like normalization), ordered input/output boundary lists, and
// an explicit global scalar that every rewrite keeps up to date.
class ZXDiagram {
 public:
  using Id = std::uint32_t;

  struct EdgeCount {
    int plain = 0;
    int had = 0;
    int total() const { return plain + had; }
  };

  Id add_spider(SpiderColor color, Angle phase);
  Id add_boundary();
  void remove_vertex(Id v);
  bool has_vertex(Id v) const { return verts_.count(v) != 0; }
  const ZXVertex& vertex(Id v) const { return verts_.at(v); }
  ZXVertex& vertex(Id v) { return verts_.at(v); }
  bool is_spider(Id v) const { return vertex(v).kind == VKind::kSpider; }

  std::vector<Id> vertex_ids() const;  // ascending
  std::vector<Id> spider_ids() const;  // ascending

  // Edge multiset. Self-loops are stored once per occurrence.
  void add_edge(Id a, Id b, EdgeType t, int count = 1);
  void remove_edge(Id a, Id b, EdgeType t, int count = 1);
  EdgeCount edge_count(Id a, Id b) const;
  bool has_hadamard(Id a, Id b) const {
    return edge_count(a, b).had > 0;
  }
  // Simple-graph Hadamard toggle used by the graph rewrites.
  void toggle_hadamard(Id a, Id b);

  std::vector<Id> neighbors(Id v) const;  // ascending, self excluded
  // Incident edge occurrences; a self-loop counts twice.
  std::size_t degree(Id v) const;

  std::vector<Id>& inputs() { return inputs_; }
  const std::vector<Id>& inputs() const { return inputs_; }
  std::vector<Id>& outputs() { return outputs_; }
  const std::vector<Id>& outputs() const { return outputs_; }

  // Number of edges from spider v to boundary vertices.
  std::size_t boundary_edge_count(Id v) const;
  bool touches_boundary(Id v) const { return boundary_edge_count(v) > 0; }

  std::complex<double> scalar() const { return scalar_; }
  void set_scalar(std::complex<double> s) { scalar_ = s; }
  void scalar_mul(std::complex<double> f) { scalar_ *= f; }
  void scalar_mul_sqrt2_pow(int k);
  void scalar_mul_phase(double radians);

  std::size_t num_vertices() const { return verts_.size(); }
  std::size_t num_spiders() const;
  std::size_t hadamard_edge_count() const;

  // Fuses spider `v` into spider `u` along one shared plain edge: phases
  // add, v's remaining edges move to u (shared extras become self-loops).
  void fuse_into(Id u, Id v);

 private:
  std::map<Id, ZXVertex> verts_;
  std::map<Id, std::map<Id, EdgeCount>> adj_;
  std::vector<Id> inputs_, outputs_;
  std::complex<double> scalar_{1.0, 0.0};
  Id next_id_ = 0;
};

// Builds the diagram of a native sequence: per qubit an input-attached
// frontier spider; HRZ(q, t) adds t to the frontier phase and extends the
// chain with a fresh phase-0 spider over a Hadamard edge; CZ links the two
// frontiers with a Hadamard edge.
ZXDiagram native_to_diagram(const NativeSeq& s);

// In-place graph-like normalization: X spiders recolored, plain spider
// edges fused away, self-loops and parallel Hadamard pairs reduced with
// exact scalar bookkeeping.
void make_graph_like(ZXDiagram& d);
ZXDiagram to_graph_like(const ZXDiagram& d);

// Checks the graph-like invariants; optionally reports the first violation.
bool is_graph_like(const ZXDiagram& d, std::string* why = nullptr);

// GraphViz dump (phases as "kpi/d", dashed = Hadamard).
std::string to_dot(const ZXDiagram& d);

}  // namespace photonc

#endif  // PHOTONC_ZX_HPP
