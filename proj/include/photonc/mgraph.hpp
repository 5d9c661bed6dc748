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

#ifndef PHOTONC_MGRAPH_HPP
#define PHOTONC_MGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "photonc/angle.hpp"
#include "photonc/circuit.hpp"
#include "photonc/zx.hpp"

namespace photonc {

enum class MRole { kInput, kBody, kOutput, kInputOutput };

const char* mrole_name(MRole r);

struct MVertex {
  MRole role = MRole::kBody;
  std::optional<Angle> angle;  // absent on (pure) outputs
  int row = -1;                // qubit row when known, -1 otherwise
  int col = -1;                // grid column when known
};

// Measurement graph: photons with equatorial measurement angles, edges as
// entanglement links, and a total execution order over measured vertices.
struct MGraph {
  std::map<std::uint32_t, MVertex> vertices;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;  // (a < b)
  std::vector<std::uint32_t> order;

  bool is_measured(std::uint32_t v) const {
    const MRole r = vertices.at(v).role;
    return r == MRole::kInput || r == MRole::kBody;
  }
  void add_edge(std::uint32_t a, std::uint32_t b);
  void toggle_edge(std::uint32_t a, std::uint32_t b);
  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  std::vector<std::uint32_t> neighbors(std::uint32_t v) const;
  std::size_t degree(std::uint32_t v) const;

  // Input/output vertices ordered by row (unknown rows last, by id).
  std::vector<std::uint32_t> inputs_by_row() const;
  std::vector<std::uint32_t> outputs_by_row() const;

  // Dense-relabeled textual form; equal strings mean equal graphs up to id
  // relabeling (relabeling by ascending id).
  std::string canonical_string() const;
};

// Step-3 construction: one row per qubit, each starting with a frontier
// vertex; HRZ(q, t) assigns measurement angle -t to the frontier and appends
// the next vertex over a horizontal edge; CZ toggles a vertical edge between
// the two frontiers. Rightmost vertices become outputs. Execution order is
// (column, row).
MGraph build_mgraph(const NativeSeq& s);

// Vertex with angle a -> Z spider with phase -a; edges -> Hadamard edges;
// inputs/outputs -> plain boundary wires.
ZXDiagram as_graph_like(const MGraph& m);

// Inverse direction for simplified diagrams: normalizes boundaries (dedicated
// plain-wire terminal spiders, phase-free on outputs, inserting identity
// spiders where needed), then reads spiders as vertices with angle = -phase.
// Execution order is breadth-first distance from the inputs, ties by id.
// Throws std::runtime_error if the diagram is not graph-like.
MGraph extract_pattern(const ZXDiagram& d);

std::string mgraph_to_json(const MGraph& m);
MGraph mgraph_from_json(const std::string& text);

}  // namespace photonc

#endif  // PHOTONC_MGRAPH_HPP
