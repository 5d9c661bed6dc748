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

#ifndef PHOTONC_SIMPLIFY_HPP
#define PHOTONC_SIMPLIFY_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "photonc/zx.hpp"

namespace photonc {

// Internal invariant breach (monotone measure violated, iteration cap hit).
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuleFiring {
  std::string rule;
  std::vector<ZXDiagram::Id> spiders;
  std::string detail;
};

struct SimplifyOptions {
  std::size_t max_firings = 10000;
  // Invoked after every firing with the mutated diagram.
  std::function<void(const ZXDiagram&, const RuleFiring&)> on_firing;
  bool collect_trace = false;
};

struct SimplifyResult {
  std::size_t firings = 0;
  std::vector<RuleFiring> trace;
};

// Individual rewrites. Each returns false (diagram untouched) when its
// preconditions do not hold, and preserves the diagram's linear map exactly
// (scalar included) when it fires.

// Plain-edge spider fusion: u absorbs v, phases add.
bool fuse_spiders(ZXDiagram& d, ZXDiagram::Id u, ZXDiagram::Id v);

// Deletes an internal +-pi/2 spider, complementing its neighborhood and
// subtracting its phase from every neighbor.
bool local_complementation(ZXDiagram& d, ZXDiagram::Id v);

// Deletes an adjacent internal Pauli pair, toggling edges between the
// neighbor classes and shifting phases.
bool pivot(ZXDiagram& d, ZXDiagram::Id u, ZXDiagram::Id v);

// Merges phase gadgets with identical hub neighborhoods, deletes gadgets
// whose effective phase is zero. Runs to its own fixpoint; returns the
// number of gadget rewrites applied.
std::size_t fuse_phase_gadgets(ZXDiagram& d);

// Fixpoint driver over {fusion, isolated/identity removal, local
// complementation, pivot and its boundary/gadget variants, gadget fusion}.
// Expects (and preserves) a graph-like diagram; asserts the termination
// measure decreases on every firing and stops with a diagnostic if the
// firing cap is exceeded.
SimplifyResult simplify(ZXDiagram& d, const SimplifyOptions& opts = {});

// (spiders + Clifford mass, Clifford mass, Hadamard edges); strictly
// decreasing across every simplify firing. Clifford mass counts internal
// non-hub spiders with exact Clifford phase.
std::array<long, 3> termination_measure(const ZXDiagram& d);

// True when every internal spider carries a non-Clifford phase or is a
// phase-gadget hub (the simplify postcondition).
bool is_fully_simplified(const ZXDiagram& d);

}  // namespace photonc

#endif  // PHOTONC_SIMPLIFY_HPP
