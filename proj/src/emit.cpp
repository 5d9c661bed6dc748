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

#include "photonc/emit.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace photonc {

using json = nlohmann::ordered_json;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double PlateConvention::meas_qwp_deg(double alpha_rad) const {
  return alpha_rad * 180.0 / kPi / 2.0;
}

const PlateConvention& PlateConvention::standard() {
  static const PlateConvention conv;
  return conv;
}

InstructionProgram emit(const DecompositionPlan& plan, const MGraph& m,
                        const PlateConvention& plates) {
  InstructionProgram prog;

  // Photon ids are node occurrences numbered in plan order; the first
  // occurrence of a node survives all of its fusions.
  std::map<std::uint32_t, std::size_t> survivor;
  std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> photon_of_occ;
  std::map<std::uint32_t, std::size_t> occ_counter;
  std::size_t next_photon = 0;

  for (std::size_t gi = 0; gi < plan.subgraphs.size(); ++gi) {
    const Subgraph& g = plan.subgraphs[gi];
    EntangleBlock block;
    block.subgraph = gi;
    block.mode = g.kind;
    block.mode_hwp_deg = g.kind == SubgraphKind::kGhz
                             ? plates.ghz_mode_hwp_deg
                             : plates.psi_mode_hwp_deg;
    std::vector<std::size_t> photons;
    for (std::uint32_t node : g.nodes) {
      if (!m.vertices.count(node))
        throw std::invalid_argument("emit: plan node " + std::to_string(node) +
                                    " is not an mgraph vertex");
      const std::size_t occ = occ_counter[node]++;
      const std::size_t photon = next_photon++;
      photon_of_occ[{node, occ}] = photon;
      if (occ == 0) survivor[node] = photon;
      prog.sources.push_back(PhotonSource{photon, node, gi});
      prog.prep_hwp_deg.push_back(plates.prep_hwp_deg);
      photons.push_back(photon);
    }
    for (std::size_t i = 0; i + 1 < photons.size(); ++i)
      block.pbs_links.push_back({photons[i], photons[i + 1]});
    if (g.kind == SubgraphKind::kGhz) {
      for (std::size_t i = 1; i < photons.size(); ++i)
        block.h_corrections.push_back(photons[i]);
    } else {
      block.h_corrections.push_back(photons.front());
      if (photons.size() > 1) block.h_corrections.push_back(photons.back());
    }
    prog.entangle.push_back(std::move(block));
  }

  std::size_t detector = 0;
  for (const Fusion& f : plan.fusions) {
    const std::size_t pa = photon_of_occ.at({f.node, f.occ_a});
    const std::size_t pb = photon_of_occ.at({f.node, f.occ_b});
    prog.fusions.push_back(FusionOp{pa, pb, detector});
    prog.postselect_detectors.push_back(detector);
    ++detector;
  }

  for (std::uint32_t node : m.order) {
    auto it = survivor.find(node);
    if (it == survivor.end())
      throw std::invalid_argument("emit: measured vertex " +
                                  std::to_string(node) +
                                  " missing from the plan");
    const MVertex& v = m.vertices.at(node);
    if (!v.angle.has_value())
      throw std::invalid_argument("emit: measured vertex without angle");
    prog.measurements.push_back(
        MeasureOp{it->second, node, *v.angle,
                  plates.meas_qwp_deg(v.angle->radians()),
                  plates.meas_hwp_deg});
  }

  for (std::uint32_t node : m.outputs_by_row()) {
    auto it = survivor.find(node);
    if (it == survivor.end())
      throw std::invalid_argument("emit: output vertex missing from the plan");
    prog.outputs.push_back(it->second);
  }
  return prog;
}

ComponentTally count_components(const InstructionProgram& prog) {
  ComponentTally t;
  t.sources = prog.sources.size();
  t.hwp = prog.sources.size();  // one prep HWP per photon
  for (const EntangleBlock& b : prog.entangle) {
    t.pbs += b.pbs_links.size();
    if (b.mode == SubgraphKind::kGhz) t.hwp += 1;
  }
  t.pbs += prog.fusions.size();
  t.hwp += prog.fusions.size();
  t.detectors += prog.fusions.size();
  t.qwp += prog.measurements.size();
  t.hwp += prog.measurements.size();
  t.pbs += prog.measurements.size();
  t.detectors += 2 * prog.measurements.size();
  t.detectors += 2 * prog.outputs.size();
  return t;
}

StatsRow stats(const InstructionProgram& prog, const DecompositionPlan& plan) {
  StatsRow row;
  row.ghz = plan.ghz_count();
  row.linear = plan.linear_count();
  row.photons = plan.photon_count;
  row.components = count_components(prog).total();
  std::set<std::uint32_t> nodes;
  for (const Subgraph& g : plan.subgraphs)
    nodes.insert(g.nodes.begin(), g.nodes.end());
  row.nodes = nodes.size();
  return row;
}

std::string stats_csv(const std::vector<StatsRow>& rows) {
  std::ostringstream os;
  os << "circuit,ghz,linear,photons,components,nodes\n";
  for (const StatsRow& r : rows) {
    if (!r.ok) {
      os << r.name << ",error,,,,\n";
      continue;
    }
    os << r.name << "," << r.ghz << "," << r.linear << "," << r.photons << ","
       << r.components << "," << r.nodes << "\n";
  }
  return os.str();
}

std::string stats_table(const std::vector<StatsRow>& rows) {
  std::ostringstream os;
  std::size_t name_w = 12;
  for (const StatsRow& r : rows) name_w = std::max(name_w, r.name.size());
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 1, ' ');
  };
  os << pad("circuit", name_w + 2) << pad("GHZ", 6) << pad("Linear", 8)
     << pad("Photons", 9) << pad("Comp.", 7) << "Nodes\n";
  for (const StatsRow& r : rows) {
    if (!r.ok) {
      os << pad(r.name, name_w + 2) << "error: " << r.error << "\n";
      continue;
    }
    os << pad(r.name, name_w + 2) << pad(std::to_string(r.ghz), 6)
       << pad(std::to_string(r.linear), 8) << pad(std::to_string(r.photons), 9)
       << pad(std::to_string(r.components), 7) << r.nodes << "\n";
  }
  return os.str();
}

std::string program_to_json(const InstructionProgram& prog) {
  json j;
  j["sources"] = json::array();
  for (const PhotonSource& s : prog.sources)
    j["sources"].push_back(
        {{"photon", s.photon}, {"node", s.node}, {"subgraph", s.subgraph}});
  j["prep"] = json::array();
  for (std::size_t p = 0; p < prog.prep_hwp_deg.size(); ++p)
    j["prep"].push_back({{"photon", p}, {"hwp_deg", prog.prep_hwp_deg[p]}});
  j["entangle"] = json::array();
  for (const EntangleBlock& b : prog.entangle) {
    json jb;
    jb["subgraph"] = b.subgraph;
    jb["mode"] = b.mode == SubgraphKind::kGhz ? "GHZ" : "PSI";
    jb["mode_hwp_deg"] = b.mode_hwp_deg;
    jb["pbs_links"] = json::array();
    for (const auto& [a, bb] : b.pbs_links) jb["pbs_links"].push_back({a, bb});
    jb["h_corrections"] = b.h_corrections;
    j["entangle"].push_back(jb);
  }
  j["fusions"] = json::array();
  for (const FusionOp& f : prog.fusions)
    j["fusions"].push_back({{"photons", {f.photon_a, f.photon_b}},
                            {"detector", f.detector}});
  j["measurements"] = json::array();
  for (const MeasureOp& mo : prog.measurements) {
    json jm;
    jm["photon"] = mo.photon;
    jm["node"] = mo.node;
    if (mo.alpha.is_exact()) {
      jm["angle_num"] = mo.alpha.num();
      jm["angle_den"] = mo.alpha.den();
    } else {
      jm["angle_rad"] = mo.alpha.radians();
    }
    jm["qwp_deg"] = mo.qwp_deg;
    jm["hwp_deg"] = mo.hwp_deg;
    j["measurements"].push_back(jm);
  }
  j["outputs"] = prog.outputs;
  j["postselect"] = {
      {"fusion_detectors", prog.postselect_detectors},
      {"rule", "each fusion detector registers exactly one photon; all "
               "measurement outcomes are 0"}};
  return j.dump(2) + "\n";
}

}  // namespace photonc
