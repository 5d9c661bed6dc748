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

#include "photonc/mgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace photonc {

using json = nlohmann::ordered_json;

const char* mrole_name(MRole r) {
  switch (r) {
    case MRole::kInput: return "input";
    case MRole::kBody: return "body";
    case MRole::kOutput: return "output";
    case MRole::kInputOutput: return "input_output";
  }
  return "?";
}

void MGraph::add_edge(std::uint32_t a, std::uint32_t b) {
  if (a == b) throw std::invalid_argument("mgraph: self edge");
  edges.insert({std::min(a, b), std::max(a, b)});
}

void MGraph::toggle_edge(std::uint32_t a, std::uint32_t b) {
  const auto key = std::make_pair(std::min(a, b), std::max(a, b));
  if (!edges.erase(key)) edges.insert(key);
}

bool MGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) != 0;
}

std::vector<std::uint32_t> MGraph::neighbors(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MGraph::degree(std::uint32_t v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

namespace {

std::vector<std::uint32_t> by_row(const MGraph& m, bool want_input) {
  std::vector<std::uint32_t> ids;
  for (const auto& [id, v] : m.vertices) {
    const bool is_in =
        v.role == MRole::kInput || v.role == MRole::kInputOutput;
    const bool is_out =
        v.role == MRole::kOutput || v.role == MRole::kInputOutput;
    if (want_input ? is_in : is_out) ids.push_back(id);
  }
  std::stable_sort(ids.begin(), ids.end(), [&](std::uint32_t a,
                                               std::uint32_t b) {
    const int ra = m.vertices.at(a).row;
    const int rb = m.vertices.at(b).row;
    const long ka = ra < 0 ? std::numeric_limits<long>::max() : ra;
    const long kb = rb < 0 ? std::numeric_limits<long>::max() : rb;
    return ka != kb ? ka < kb : a < b;
  });
  return ids;
}

}  // namespace

std::vector<std::uint32_t> MGraph::inputs_by_row() const {
  return by_row(*this, true);
}

std::vector<std::uint32_t> MGraph::outputs_by_row() const {
  return by_row(*this, false);
}

std::string MGraph::canonical_string() const {
  std::map<std::uint32_t, std::size_t> dense;
  for (const auto& [id, v] : vertices) dense[id] = dense.size();
  std::ostringstream os;
  for (const auto& [id, v] : vertices) {
    os << "v" << dense[id] << ":" << mrole_name(v.role);
    if (v.angle.has_value()) os << ":" << v.angle->str();
    if (v.row >= 0) os << ":r" << v.row;
    os << ";";
  }
  os << "|";
  for (const auto& [a, b] : edges) os << dense[a] << "-" << dense[b] << ";";
  os << "|";
  for (std::uint32_t v : order) os << dense[v] << ",";
  return os.str();
}

MGraph build_mgraph(const NativeSeq& s) {
  MGraph m;
  std::uint32_t next = 0;
  std::vector<std::uint32_t> frontier(s.num_qubits);
  std::vector<int> col(s.num_qubits, 0);
  for (std::size_t q = 0; q < s.num_qubits; ++q) {
    frontier[q] = next++;
    m.vertices[frontier[q]] =
        MVertex{MRole::kInput, std::nullopt, static_cast<int>(q), 0};
  }
  for (const NativeOp& op : s.ops) {
    if (op.kind == NativeOp::kHrz) {
      std::uint32_t f = frontier[op.a];
      m.vertices[f].angle = -op.theta;
      std::uint32_t fresh = next++;
      ++col[op.a];
      m.vertices[fresh] = MVertex{MRole::kBody, std::nullopt,
                                  static_cast<int>(op.a), col[op.a]};
      m.add_edge(f, fresh);
      frontier[op.a] = fresh;
    } else {
      m.toggle_edge(frontier[op.a], frontier[op.b]);
    }
  }
  for (std::size_t q = 0; q < s.num_qubits; ++q) {
    MVertex& v = m.vertices[frontier[q]];
    v.role = v.role == MRole::kInput ? MRole::kInputOutput : MRole::kOutput;
  }
  // Execution order: left-to-right column position, rows as tie-break.
  std::vector<std::uint32_t> measured;
  for (const auto& [id, v] : m.vertices)
    if (m.is_measured(id)) measured.push_back(id);
  std::sort(measured.begin(), measured.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              const MVertex& va = m.vertices.at(a);
              const MVertex& vb = m.vertices.at(b);
              if (va.col != vb.col) return va.col < vb.col;
              return va.row < vb.row;
            });
  m.order = measured;
  return m;
}

ZXDiagram as_graph_like(const MGraph& m) {
  ZXDiagram d;
  std::map<std::uint32_t, ZXDiagram::Id> spider_of;
  for (const auto& [id, v] : m.vertices) {
    const Angle phase = v.angle.has_value() ? -*v.angle : Angle::zero();
    spider_of[id] = d.add_spider(SpiderColor::kZ, phase);
  }
  for (const auto& [a, b] : m.edges)
    d.add_edge(spider_of.at(a), spider_of.at(b), EdgeType::kHadamard);
  for (std::uint32_t v : m.inputs_by_row()) {
    ZXDiagram::Id b = d.add_boundary();
    d.inputs().push_back(b);
    d.add_edge(b, spider_of.at(v), EdgeType::kPlain);
  }
  for (std::uint32_t v : m.outputs_by_row()) {
    ZXDiagram::Id b = d.add_boundary();
    d.outputs().push_back(b);
    d.add_edge(b, spider_of.at(v), EdgeType::kPlain);
  }
  return d;
}

namespace {

// Gives boundary `b` a dedicated terminal spider reachable over a plain
// wire, inserting identity spiders where the existing attachment does not
// qualify. Exact rewrites only (scalar 1).
void normalize_boundary(ZXDiagram& d, ZXDiagram::Id b, bool is_output) {
  const std::vector<ZXDiagram::Id> nbrs = d.neighbors(b);
  if (nbrs.size() != 1 || d.degree(b) != 1)
    throw std::runtime_error("extract_pattern: boundary vertex " +
                             std::to_string(b) + " must have exactly one edge");
  const ZXDiagram::Id s = nbrs[0];
  const ZXDiagram::EdgeCount c = d.edge_count(b, s);
  const EdgeType t = c.plain > 0 ? EdgeType::kPlain : EdgeType::kHadamard;

  if (t == EdgeType::kPlain && d.is_spider(s)) {
    const std::size_t bcount = d.boundary_edge_count(s);
    const bool phase_ok = !is_output || d.vertex(s).phase.is_zero();
    if (bcount == 1 && phase_ok) return;  // s already qualifies
    // One input plus one output on a phase-free spider is the resident
    // entangled wire case; keep it as a shared input/output terminal.
    if (bcount == 2 && d.vertex(s).phase.is_zero()) {
      std::size_t ins = 0, outs = 0;
      for (ZXDiagram::Id w : d.neighbors(s)) {
        if (!d.is_spider(w)) {
          if (std::count(d.inputs().begin(), d.inputs().end(), w)) ++ins;
          if (std::count(d.outputs().begin(), d.outputs().end(), w)) ++outs;
        }
      }
      if (ins == 1 && outs == 1) return;
    }
  }

  d.remove_edge(b, s, t);
  if (t == EdgeType::kHadamard) {
    // b -PLAIN- n0(0) -H- s  ==  b -H- s
    ZXDiagram::Id n0 = d.add_spider(SpiderColor::kZ, Angle::zero());
    d.add_edge(b, n0, EdgeType::kPlain);
    d.add_edge(n0, s, EdgeType::kHadamard);
  } else {
    // b -PLAIN- n0(0) -H- n1(0) -H- s  ==  b -PLAIN- s
    ZXDiagram::Id n0 = d.add_spider(SpiderColor::kZ, Angle::zero());
    ZXDiagram::Id n1 = d.add_spider(SpiderColor::kZ, Angle::zero());
    d.add_edge(b, n0, EdgeType::kPlain);
    d.add_edge(n0, n1, EdgeType::kHadamard);
    d.add_edge(n1, s, EdgeType::kHadamard);
  }
}

}  // namespace

MGraph extract_pattern(const ZXDiagram& input) {
  std::string why;
  if (!is_graph_like(input, &why))
    throw std::runtime_error("extract_pattern: diagram not graph-like: " + why);

  ZXDiagram d = input;
  for (ZXDiagram::Id b : d.inputs()) normalize_boundary(d, b, false);
  for (ZXDiagram::Id b : d.outputs()) normalize_boundary(d, b, true);

  MGraph m;
  std::map<ZXDiagram::Id, std::uint32_t> vid;
  for (ZXDiagram::Id s : d.spider_ids()) {
    vid[s] = static_cast<std::uint32_t>(vid.size());
    m.vertices[vid[s]] = MVertex{};
  }
  for (ZXDiagram::Id s : d.spider_ids()) {
    MVertex& v = m.vertices[vid[s]];
    bool is_in = false, is_out = false;
    int row = -1;
    for (std::size_t i = 0; i < d.inputs().size(); ++i)
      if (d.edge_count(s, d.inputs()[i]).total() > 0) {
        is_in = true;
        row = static_cast<int>(i);
      }
    for (std::size_t i = 0; i < d.outputs().size(); ++i)
      if (d.edge_count(s, d.outputs()[i]).total() > 0) {
        is_out = true;
        if (row < 0) row = static_cast<int>(i);
      }
    v.row = row;
    if (is_in && is_out)
      v.role = MRole::kInputOutput;
    else if (is_in)
      v.role = MRole::kInput;
    else if (is_out)
      v.role = MRole::kOutput;
    else
      v.role = MRole::kBody;
    if (v.role == MRole::kOutput || v.role == MRole::kInputOutput)
      v.angle = std::nullopt;
    else
      v.angle = -d.vertex(s).phase;
    for (ZXDiagram::Id w : d.neighbors(s))
      if (d.is_spider(w)) m.add_edge(vid[s], vid[w]);
  }

  // Order: BFS distance from input vertices, ties by ascending id.
  std::map<std::uint32_t, std::size_t> dist;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v : m.inputs_by_row()) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : m.neighbors(v))
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  std::vector<std::uint32_t> measured;
  for (const auto& [id, v] : m.vertices)
    if (m.is_measured(id)) measured.push_back(id);
  std::sort(measured.begin(), measured.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              const std::size_t da =
                  dist.count(a) ? dist[a] : std::numeric_limits<std::size_t>::max();
              const std::size_t db =
                  dist.count(b) ? dist[b] : std::numeric_limits<std::size_t>::max();
              return da != db ? da < db : a < b;
            });
  m.order = measured;
  return m;
}

std::string mgraph_to_json(const MGraph& m) {
  json j;
  j["vertices"] = json::array();
  for (const auto& [id, v] : m.vertices) {
    json jv;
    jv["id"] = id;
    jv["role"] = mrole_name(v.role);
    if (v.angle.has_value()) {
      if (v.angle->is_exact()) {
        jv["angle_num"] = v.angle->num();
        jv["angle_den"] = v.angle->den();
      } else {
        jv["angle_rad"] = v.angle->radians();
      }
    }
    if (v.row >= 0) jv["row"] = v.row;
    j["vertices"].push_back(jv);
  }
  j["edges"] = json::array();
  for (const auto& [a, b] : m.edges) j["edges"].push_back({a, b});
  j["order"] = m.order;
  return j.dump(2) + "\n";
}

MGraph mgraph_from_json(const std::string& text) {
  json j = json::parse(text);
  MGraph m;
  for (const auto& jv : j.at("vertices")) {
    MVertex v;
    const std::string role = jv.at("role").get<std::string>();
    if (role == "input")
      v.role = MRole::kInput;
    else if (role == "body")
      v.role = MRole::kBody;
    else if (role == "output")
      v.role = MRole::kOutput;
    else if (role == "input_output")
      v.role = MRole::kInputOutput;
    else
      throw std::runtime_error("mgraph json: bad role '" + role + "'");
    if (jv.contains("angle_num"))
      v.angle = Angle::pi_frac(jv.at("angle_num").get<std::int64_t>(),
                               jv.at("angle_den").get<std::int64_t>());
    else if (jv.contains("angle_rad"))
      v.angle = Angle::radians(jv.at("angle_rad").get<double>());
    if (jv.contains("row")) v.row = jv.at("row").get<int>();
    m.vertices[jv.at("id").get<std::uint32_t>()] = v;
  }
  for (const auto& je : j.at("edges"))
    m.add_edge(je.at(0).get<std::uint32_t>(), je.at(1).get<std::uint32_t>());
  for (const auto& jo : j.at("order"))
    m.order.push_back(jo.get<std::uint32_t>());
  for (std::uint32_t v : m.order)
    if (!m.vertices.count(v))
      throw std::runtime_error("mgraph json: order references unknown vertex");
  return m;
}

}  // namespace photonc
