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

#include "photonc/zx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace photonc {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
}  // namespace

ZXDiagram::Id ZXDiagram::add_spider(SpiderColor color, Angle phase) {
  Id id = next_id_++;
  verts_[id] = ZXVertex{VKind::kSpider, color, phase};
  return id;
}

ZXDiagram::Id ZXDiagram::add_boundary() {
  Id id = next_id_++;
  verts_[id] = ZXVertex{VKind::kBoundary, SpiderColor::kZ, Angle::zero()};
  return id;
}

void ZXDiagram::remove_vertex(Id v) {
  auto it = adj_.find(v);
  if (it != adj_.end()) {
    for (const auto& [w, cnt] : it->second)
      if (w != v) adj_[w].erase(v);
    adj_.erase(it);
  }
  verts_.erase(v);
}

std::vector<ZXDiagram::Id> ZXDiagram::vertex_ids() const {
  std::vector<Id> out;
  out.reserve(verts_.size());
  for (const auto& [id, v] : verts_) out.push_back(id);
  return out;
}

std::vector<ZXDiagram::Id> ZXDiagram::spider_ids() const {
  std::vector<Id> out;
  for (const auto& [id, v] : verts_)
    if (v.kind == VKind::kSpider) out.push_back(id);
  return out;
}

void ZXDiagram::add_edge(Id a, Id b, EdgeType t, int count) {
  if (count <= 0) return;
  EdgeCount& c = adj_[a][b];
  (t == EdgeType::kPlain ? c.plain : c.had) += count;
  if (a != b) adj_[b][a] = c;
}

void ZXDiagram::remove_edge(Id a, Id b, EdgeType t, int count) {
  auto ita = adj_.find(a);
  if (ita == adj_.end()) return;
  auto itb = ita->second.find(b);
  if (itb == ita->second.end()) return;
  EdgeCount& c = itb->second;
  int& slot = (t == EdgeType::kPlain ? c.plain : c.had);
  slot -= count;
  if (slot < 0) throw std::logic_error("remove_edge: count underflow");
  if (c.total() == 0) {
    ita->second.erase(itb);
    if (a != b) adj_[b].erase(a);
  } else if (a != b) {
    adj_[b][a] = c;
  }
}

ZXDiagram::EdgeCount ZXDiagram::edge_count(Id a, Id b) const {
  auto ita = adj_.find(a);
  if (ita == adj_.end()) return {};
  auto itb = ita->second.find(b);
  if (itb == ita->second.end()) return {};
  return itb->second;
}

void ZXDiagram::toggle_hadamard(Id a, Id b) {
  if (edge_count(a, b).had > 0)
    remove_edge(a, b, EdgeType::kHadamard);
  else
    add_edge(a, b, EdgeType::kHadamard);
}

std::vector<ZXDiagram::Id> ZXDiagram::neighbors(Id v) const {
  std::vector<Id> out;
  auto it = adj_.find(v);
  if (it == adj_.end()) return out;
  for (const auto& [w, cnt] : it->second)
    if (w != v && cnt.total() > 0) out.push_back(w);
  return out;
}

std::size_t ZXDiagram::degree(Id v) const {
  std::size_t d = 0;
  auto it = adj_.find(v);
  if (it == adj_.end()) return 0;
  for (const auto& [w, cnt] : it->second)
    d += static_cast<std::size_t>(cnt.total()) * (w == v ? 2 : 1);
  return d;
}

std::size_t ZXDiagram::boundary_edge_count(Id v) const {
  std::size_t n = 0;
  auto it = adj_.find(v);
  if (it == adj_.end()) return 0;
  for (const auto& [w, cnt] : it->second)
    if (w != v && vertex(w).kind == VKind::kBoundary)
      n += static_cast<std::size_t>(cnt.total());
  return n;
}

void ZXDiagram::scalar_mul_sqrt2_pow(int k) {
  scalar_ *= std::pow(kSqrt2, static_cast<double>(k));
}

void ZXDiagram::scalar_mul_phase(double radians) {
  scalar_ *= std::polar(1.0, radians);
}

std::size_t ZXDiagram::num_spiders() const {
  std::size_t n = 0;
  for (const auto& [id, v] : verts_)
    if (v.kind == VKind::kSpider) ++n;
  return n;
}

std::size_t ZXDiagram::hadamard_edge_count() const {
  std::size_t n = 0;
  for (const auto& [a, nbrs] : adj_)
    for (const auto& [b, cnt] : nbrs)
      if (b >= a) n += static_cast<std::size_t>(cnt.had);
  return n;
}

void ZXDiagram::fuse_into(Id u, Id v) {
  if (u == v) throw std::logic_error("fuse_into: same vertex");
  if (edge_count(u, v).plain <= 0)
    throw std::logic_error("fuse_into: no plain edge");
  remove_edge(u, v, EdgeType::kPlain);
  vertex(u).phase = vertex(u).phase + vertex(v).phase;

  // Remaining u-v edges become self-loops on u.
  EdgeCount shared = edge_count(u, v);
  if (shared.total() > 0) {
    remove_edge(u, v, EdgeType::kPlain, shared.plain);
    remove_edge(u, v, EdgeType::kHadamard, shared.had);
    add_edge(u, u, EdgeType::kPlain, shared.plain);
    add_edge(u, u, EdgeType::kHadamard, shared.had);
  }
  // v's remaining edges (including its own self-loops) move to u.
  auto itv = adj_.find(v);
  if (itv != adj_.end()) {
    std::vector<std::pair<Id, EdgeCount>> moved(itv->second.begin(),
                                                itv->second.end());
    for (const auto& [w, cnt] : moved) {
      Id tgt = (w == v) ? u : w;
      if (cnt.plain > 0) {
        remove_edge(v, w, EdgeType::kPlain, cnt.plain);
        add_edge(u, tgt, EdgeType::kPlain, cnt.plain);
      }
      if (cnt.had > 0) {
        remove_edge(v, w, EdgeType::kHadamard, cnt.had);
        add_edge(u, tgt, EdgeType::kHadamard, cnt.had);
      }
    }
  }
  remove_vertex(v);
}

ZXDiagram native_to_diagram(const NativeSeq& s) {
  ZXDiagram d;
  std::vector<ZXDiagram::Id> frontier(s.num_qubits);
  for (std::size_t q = 0; q < s.num_qubits; ++q) {
    ZXDiagram::Id in = d.add_boundary();
    d.inputs().push_back(in);
    frontier[q] = d.add_spider(SpiderColor::kZ, Angle::zero());
    d.add_edge(in, frontier[q], EdgeType::kPlain);
  }
  for (const NativeOp& op : s.ops) {
    if (op.kind == NativeOp::kHrz) {
      ZXDiagram::Id f = frontier[op.a];
      d.vertex(f).phase = d.vertex(f).phase + op.theta;
      ZXDiagram::Id next = d.add_spider(SpiderColor::kZ, Angle::zero());
      d.add_edge(f, next, EdgeType::kHadamard);
      frontier[op.a] = next;
    } else {
      d.add_edge(frontier[op.a], frontier[op.b], EdgeType::kHadamard);
    }
  }
  for (std::size_t q = 0; q < s.num_qubits; ++q) {
    ZXDiagram::Id out = d.add_boundary();
    d.outputs().push_back(out);
    d.add_edge(frontier[q], out, EdgeType::kPlain);
  }
  return d;
}

namespace {

// Removes self-loops on spider v: plain loops vanish (factor 1), each
// Hadamard loop adds pi to the phase and a 1/sqrt(2) scalar.
void clear_self_loops(ZXDiagram& d, ZXDiagram::Id v) {
  ZXDiagram::EdgeCount loops = d.edge_count(v, v);
  if (loops.plain > 0) d.remove_edge(v, v, EdgeType::kPlain, loops.plain);
  if (loops.had > 0) {
    d.remove_edge(v, v, EdgeType::kHadamard, loops.had);
    if (loops.had % 2 == 1)
      d.vertex(v).phase = d.vertex(v).phase.plus_pi();
    d.scalar_mul_sqrt2_pow(-loops.had);
  }
}

}  // namespace

void make_graph_like(ZXDiagram& d) {
  // 1. Recolor X spiders, toggling every incident edge type. Edges between
  //    two X spiders toggle twice and stay as they are.
  for (ZXDiagram::Id v : d.spider_ids()) {
    if (d.vertex(v).color != SpiderColor::kX) continue;
    for (ZXDiagram::Id w : d.neighbors(v)) {
      ZXDiagram::EdgeCount c = d.edge_count(v, w);
      d.remove_edge(v, w, EdgeType::kPlain, c.plain);
      d.remove_edge(v, w, EdgeType::kHadamard, c.had);
      d.add_edge(v, w, EdgeType::kPlain, c.had);
      d.add_edge(v, w, EdgeType::kHadamard, c.plain);
    }
    d.vertex(v).color = SpiderColor::kZ;
  }

  // 2. Fuse along plain spider-spider edges until none remain, clearing
  //    self-loops as they appear.
  for (ZXDiagram::Id v : d.spider_ids())
    if (d.has_vertex(v)) clear_self_loops(d, v);
  for (;;) {
    bool fused = false;
    for (ZXDiagram::Id u : d.spider_ids()) {
      if (!d.has_vertex(u)) continue;
      for (ZXDiagram::Id w : d.neighbors(u)) {
        if (w <= u || !d.is_spider(w)) continue;
        if (d.edge_count(u, w).plain > 0) {
          d.fuse_into(u, w);
          clear_self_loops(d, u);
          fused = true;
          break;
        }
      }
      if (fused) break;
    }
    if (!fused) break;
  }

  // 3. Parallel Hadamard edges cancel in pairs, each pair costing 1/2.
  for (ZXDiagram::Id u : d.spider_ids()) {
    for (ZXDiagram::Id w : d.neighbors(u)) {
      if (w <= u || !d.is_spider(w)) continue;
      int h = d.edge_count(u, w).had;
      if (h >= 2) {
        int pairs = h / 2;
        d.remove_edge(u, w, EdgeType::kHadamard, 2 * pairs);
        d.scalar_mul_sqrt2_pow(-2 * pairs);
      }
    }
  }
}

ZXDiagram to_graph_like(const ZXDiagram& d) {
  ZXDiagram out = d;
  make_graph_like(out);
  return out;
}

bool is_graph_like(const ZXDiagram& d, std::string* why) {
  auto report = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  for (ZXDiagram::Id v : d.vertex_ids()) {
    const ZXVertex& vert = d.vertex(v);
    if (vert.kind == VKind::kSpider) {
      if (vert.color != SpiderColor::kZ)
        return report("spider " + std::to_string(v) + " is not Z-colored");
      if (d.edge_count(v, v).total() > 0)
        return report("spider " + std::to_string(v) + " has a self-loop");
      for (ZXDiagram::Id w : d.neighbors(v)) {
        ZXDiagram::EdgeCount c = d.edge_count(v, w);
        if (d.is_spider(w)) {
          if (c.plain > 0)
            return report("plain edge between spiders " + std::to_string(v) +
                          "," + std::to_string(w));
          if (c.had > 1)
            return report("parallel Hadamard edges between " +
                          std::to_string(v) + "," + std::to_string(w));
        }
      }
    } else {
      if (d.degree(v) != 1)
        return report("boundary " + std::to_string(v) + " has degree " +
                      std::to_string(d.degree(v)));
      bool in_inputs =
          std::count(d.inputs().begin(), d.inputs().end(), v) == 1;
      bool in_outputs =
          std::count(d.outputs().begin(), d.outputs().end(), v) == 1;
      if (in_inputs == in_outputs)
        return report("boundary " + std::to_string(v) +
                      " not listed exactly once as input or output");
    }
  }
  for (ZXDiagram::Id v : d.inputs())
    if (!d.has_vertex(v) || d.is_spider(v))
      return report("input list entry is not a boundary vertex");
  for (ZXDiagram::Id v : d.outputs())
    if (!d.has_vertex(v) || d.is_spider(v))
      return report("output list entry is not a boundary vertex");
  return true;
}

std::string to_dot(const ZXDiagram& d) {
  std::ostringstream os;
  os << "graph zx {\n  rankdir=LR;\n";
  for (ZXDiagram::Id v : d.vertex_ids()) {
    const ZXVertex& vert = d.vertex(v);
    if (vert.kind == VKind::kBoundary) {
      os << "  v" << v << " [shape=square,label=\"" << v << "\"];\n";
    } else {
      os << "  v" << v << " [shape=circle,style=filled,fillcolor=\""
         << (vert.color == SpiderColor::kZ ? "palegreen" : "lightcoral")
         << "\",label=\"" << v << ":" << vert.phase.str() << "\"];\n";
    }
  }
  for (ZXDiagram::Id a : d.vertex_ids()) {
    for (ZXDiagram::Id b : d.vertex_ids()) {
      if (b < a) continue;
      ZXDiagram::EdgeCount c = d.edge_count(a, b);
      for (int i = 0; i < c.plain; ++i) os << "  v" << a << " -- v" << b << ";\n";
      for (int i = 0; i < c.had; ++i)
        os << "  v" << a << " -- v" << b << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace photonc
