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

#ifndef PHOTONC_EMIT_HPP
#define PHOTONC_EMIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "photonc/decompose.hpp"
#include "photonc/mgraph.hpp"

namespace photonc {

// Wave-plate convention: the paper fixes the plate roles (QWP + HWP select
// the measurement basis) but not the angle formulas, so the mapping is a
// named, swappable table. The default measures B(alpha) with the HWP at
// 22.5 degrees and the QWP at alpha/2 from the fast-axis zero.
struct PlateConvention {
  double prep_hwp_deg = 22.5;      // |H> -> |D> = |+>
  double ghz_mode_hwp_deg = 22.5;  // mode HWP active
  double psi_mode_hwp_deg = 0.0;   // mode HWP deactivated
  double meas_hwp_deg = 22.5;

  double meas_qwp_deg(double alpha_rad) const;
  static const PlateConvention& standard();
};

struct PhotonSource {
  std::size_t photon;
  std::uint32_t node;
  std::size_t subgraph;
};

struct EntangleBlock {
  std::size_t subgraph;
  SubgraphKind mode;  // GHZ -> mode HWP active, LINEAR -> |psi> source
  double mode_hwp_deg;
  std::vector<std::pair<std::size_t, std::size_t>> pbs_links;
  std::vector<std::size_t> h_corrections;  // photons needing a local H
};

struct FusionOp {
  std::size_t photon_a;  // survives
  std::size_t photon_b;  // consumed
  std::size_t detector;
};

struct MeasureOp {
  std::size_t photon;
  std::uint32_t node;
  Angle alpha;
  double qwp_deg;
  double hwp_deg;
};

struct InstructionProgram {
  std::vector<PhotonSource> sources;
  std::vector<double> prep_hwp_deg;  // indexed by photon
  std::vector<EntangleBlock> entangle;
  std::vector<FusionOp> fusions;       // all fusions precede measurements
  std::vector<MeasureOp> measurements;  // in MGraph execution order
  std::vector<std::size_t> outputs;     // surviving unmeasured photons
  std::vector<std::size_t> postselect_detectors;  // require exactly 1 photon
};

// Lowers a verified plan to hardware instructions. Throws
// std::invalid_argument when plan and mgraph disagree on vertex ids.
InstructionProgram emit(const DecompositionPlan& plan, const MGraph& m,
                        const PlateConvention& plates =
                            PlateConvention::standard());

struct ComponentTally {
  std::size_t sources = 0;
  std::size_t hwp = 0;
  std::size_t qwp = 0;
  std::size_t pbs = 0;
  std::size_t detectors = 0;
  std::size_t total() const {
    return sources + hwp + qwp + pbs + detectors;
  }
};

// Deterministic optical component model: per photon 1 source + 1 prep HWP;
// per k-node subgraph (k-1) PBS plus a mode HWP when GHZ; per fusion
// 1 PBS + 1 HWP + 1 detector; per measurement 1 QWP + 1 HWP + 1 PBS +
// 2 detectors; per output a detector pair.
ComponentTally count_components(const InstructionProgram& prog);

struct StatsRow {
  std::string name;
  std::size_t ghz = 0;
  std::size_t linear = 0;
  std::size_t photons = 0;
  std::size_t components = 0;
  std::size_t nodes = 0;  // unique vertices, reported alongside photons
  bool ok = true;
  std::string error;
};

StatsRow stats(const InstructionProgram& prog, const DecompositionPlan& plan);

std::string stats_csv(const std::vector<StatsRow>& rows);
std::string stats_table(const std::vector<StatsRow>& rows);

std::string program_to_json(const InstructionProgram& prog);

}  // namespace photonc

#endif  // PHOTONC_EMIT_HPP
