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

#include "photonc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace photonc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void apply_swap_bits(StateVector& s, std::size_t qa, std::size_t qb) {
  const std::size_t ba = s.bit_of(qa), bb = s.bit_of(qb);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::size_t va = (i >> ba) & 1, vb = (i >> bb) & 1;
    if (va == 1 && vb == 0) {
      const std::size_t j = (i & ~(std::size_t{1} << ba)) | (std::size_t{1} << bb);
      std::swap(s.amps[i], s.amps[j]);
    }
  }
}

void apply_cx(StateVector& s, std::size_t control, std::size_t target) {
  const std::size_t bc = s.bit_of(control), bt = s.bit_of(target);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (((i >> bc) & 1) && !((i >> bt) & 1))
      std::swap(s.amps[i], s.amps[i | (std::size_t{1} << bt)]);
}

void apply_ccx(StateVector& s, std::size_t c1, std::size_t c2,
               std::size_t target) {
  const std::size_t b1 = s.bit_of(c1), b2 = s.bit_of(c2), bt = s.bit_of(target);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (((i >> b1) & 1) && ((i >> b2) & 1) && !((i >> bt) & 1))
      std::swap(s.amps[i], s.amps[i | (std::size_t{1} << bt)]);
}

void gate1(StateVector& s, std::size_t q, c64 g00, c64 g01, c64 g10, c64 g11) {
  const c64 g[4] = {g00, g01, g10, g11};
  s.apply_gate1(q, g);
}

}  // namespace

void apply_gate(StateVector& s, const Gate& g) {
  const auto& q = g.qubits;
  auto angle = [&](std::size_t i) { return g.params[i].radians(); };
  switch (g.kind) {
    case GateKind::kH:
      s.apply_h(q[0]);
      break;
    case GateKind::kX:
      s.apply_x(q[0]);
      break;
    case GateKind::kY:
      gate1(s, q[0], {0, 0}, {0, -1}, {0, 1}, {0, 0});
      break;
    case GateKind::kZ:
      s.apply_z(q[0]);
      break;
    case GateKind::kS:
      s.apply_phase(q[0], c64{0, 1});
      break;
    case GateKind::kSdg:
      s.apply_phase(q[0], c64{0, -1});
      break;
    case GateKind::kT:
      s.apply_phase(q[0], std::polar(1.0, kPi / 4));
      break;
    case GateKind::kTdg:
      s.apply_phase(q[0], std::polar(1.0, -kPi / 4));
      break;
    case GateKind::kRx: {
      const double h = angle(0) / 2;
      gate1(s, q[0], {std::cos(h), 0}, {0, -std::sin(h)}, {0, -std::sin(h)},
            {std::cos(h), 0});
      break;
    }
    case GateKind::kRy: {
      const double h = angle(0) / 2;
      gate1(s, q[0], {std::cos(h), 0}, {-std::sin(h), 0}, {std::sin(h), 0},
            {std::cos(h), 0});
      break;
    }
    case GateKind::kRz:
    case GateKind::kU1:
      s.apply_phase(q[0], std::polar(1.0, angle(0)));
      break;
    case GateKind::kU2: {
      const double phi = angle(0), lam = angle(1);
      gate1(s, q[0], {kInvSqrt2, 0}, -kInvSqrt2 * std::polar(1.0, lam),
            kInvSqrt2 * std::polar(1.0, phi),
            kInvSqrt2 * std::polar(1.0, phi + lam));
      break;
    }
    case GateKind::kU3: {
      const double th = angle(0) / 2, phi = angle(1), lam = angle(2);
      gate1(s, q[0], {std::cos(th), 0}, -std::sin(th) * std::polar(1.0, lam),
            std::sin(th) * std::polar(1.0, phi),
            std::cos(th) * std::polar(1.0, phi + lam));
      break;
    }
    case GateKind::kCx:
      apply_cx(s, q[0], q[1]);
      break;
    case GateKind::kCz:
      s.apply_cz(q[0], q[1]);
      break;
    case GateKind::kCcx:
      apply_ccx(s, q[0], q[1], q[2]);
      break;
    case GateKind::kSwap:
      apply_swap_bits(s, q[0], q[1]);
      break;
  }
}

void apply_native_op(StateVector& s, const NativeOp& op) {
  if (op.kind == NativeOp::kHrz) {
    s.apply_phase(op.a, std::polar(1.0, op.theta.radians()));
    s.apply_h(op.a);
  } else {
    s.apply_cz(op.a, op.b);
  }
}

namespace {

template <typename Ops>
LinearMap unitary_by_columns(std::size_t n, std::size_t cap, const Ops& run) {
  if (n > cap)
    throw SizeCapError("unitary_of: " + std::to_string(n) +
                       " qubits exceeds cap " + std::to_string(cap));
  const std::size_t dim = std::size_t{1} << n;
  LinearMap u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(n, col);
    run(s);
    for (std::size_t row = 0; row < dim; ++row) u.at(row, col) = s.amps[row];
  }
  return u;
}

}  // namespace

LinearMap unitary_of(const Circuit& c, std::size_t cap) {
  return unitary_by_columns(c.num_qubits, cap, [&](StateVector& s) {
    for (const Gate& g : c.gates) apply_gate(s, g);
  });
}

LinearMap unitary_of(const NativeSeq& seq, std::size_t cap) {
  return unitary_by_columns(seq.num_qubits, cap, [&](StateVector& s) {
    for (const NativeOp& op : seq.ops) apply_native_op(s, op);
  });
}

LinearMap run_pattern_postselect(const MGraph& m, std::size_t vertex_cap) {
  const std::size_t v_count = m.vertices.size();
  if (v_count > vertex_cap)
    throw SizeCapError("run_pattern: " + std::to_string(v_count) +
                       " vertices exceeds cap " + std::to_string(vertex_cap));
  const std::vector<std::uint32_t> ins = m.inputs_by_row();
  const std::vector<std::uint32_t> outs = m.outputs_by_row();

  std::vector<std::uint32_t> reg;
  for (const auto& [id, v] : m.vertices) reg.push_back(id);
  auto pos_in = [](const std::vector<std::uint32_t>& vec, std::uint32_t id) {
    return static_cast<std::size_t>(
        std::find(vec.begin(), vec.end(), id) - vec.begin());
  };

  LinearMap map(std::size_t{1} << outs.size(), std::size_t{1} << ins.size());
  for (std::size_t b = 0; b < map.cols; ++b) {
    std::size_t basis_idx = 0;
    for (std::size_t i = 0; i < ins.size(); ++i) {
      const std::size_t bit = (b >> (ins.size() - 1 - i)) & 1;
      if (bit) {
        StateVector probe;  // only for bit_of arithmetic
        probe.num_qubits = v_count;
        basis_idx |= std::size_t{1} << probe.bit_of(pos_in(reg, ins[i]));
      }
    }
    StateVector st = StateVector::basis(v_count, basis_idx);
    for (std::size_t p = 0; p < reg.size(); ++p) {
      const MRole role = m.vertices.at(reg[p]).role;
      if (role != MRole::kInput && role != MRole::kInputOutput) st.apply_h(p);
    }
    for (const auto& [ea, eb] : m.edges)
      st.apply_cz(pos_in(reg, ea), pos_in(reg, eb));

    std::vector<std::uint32_t> live = reg;
    for (std::uint32_t v : m.order) {
      const MVertex& mv = m.vertices.at(v);
      if (!mv.angle.has_value())
        throw std::runtime_error("run_pattern: measured vertex " +
                                 std::to_string(v) + " carries no angle");
      const std::size_t p = pos_in(live, v);
      st = measure_equatorial(st, p, mv.angle->radians(), 0);
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(p));
    }
    if (live.size() != outs.size())
      throw std::runtime_error("run_pattern: leftover unmeasured vertices");
    std::vector<std::size_t> perm(outs.size());
    for (std::size_t i = 0; i < outs.size(); ++i)
      perm[i] = pos_in(live, outs[i]);
    st = permute_qubits(st, perm);
    for (std::size_t r = 0; r < map.rows; ++r) map.at(r, b) = st.amps[r];
  }
  return map;
}

StateVector run_chain_feedforward(const MGraph& m, std::size_t input_index,
                                  std::mt19937_64& rng) {
  // Chain validation: one input endpoint, one output endpoint, all degrees
  // at most 2, connected from input to output.
  const std::vector<std::uint32_t> ins = m.inputs_by_row();
  const std::vector<std::uint32_t> outs = m.outputs_by_row();
  const auto not_chain = [] {
    return std::invalid_argument(
        "feed-forward is supported for single-row chain patterns only");
  };
  if (ins.size() != 1 || outs.size() != 1) throw not_chain();
  if (m.degree(ins[0]) > 1) throw not_chain();

  std::vector<std::uint32_t> path{ins[0]};
  std::uint32_t prev = ins[0], cur = ins[0];
  for (;;) {
    const std::vector<std::uint32_t> nbrs = m.neighbors(cur);
    if (nbrs.size() > 2) throw not_chain();
    std::uint32_t next = cur;
    bool found = false;
    for (std::uint32_t w : nbrs)
      if (w != prev) {
        next = w;
        found = true;
        break;
      }
    if (!found) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
    if (path.size() > m.vertices.size()) throw not_chain();
  }
  if (cur != outs[0] || path.size() != m.vertices.size()) throw not_chain();

  // Register order = path order: path[i] is qubit i, qubit 0 is the fed
  // input photon, the rest start in |+> and are chained by CZ.
  const std::size_t n = m.vertices.size();
  StateVector st = StateVector::basis(n, 0);
  if (input_index & 1) st.apply_x(0);
  for (std::size_t q = 1; q < n; ++q) st.apply_h(q);
  for (std::size_t q = 0; q + 1 < n; ++q) st.apply_cz(q, q + 1);

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int x = 0, z = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const MVertex& mv = m.vertices.at(path[i]);
    if (!mv.angle.has_value())
      throw std::runtime_error("feed-forward: measured vertex has no angle");
    const double nominal = mv.angle->radians();
    const double adapted = (x & 1) ? -nominal : nominal;
    // Qubit 0 is always the current frontier: earlier ones are consumed.
    const double p0 = equatorial_prob0(st, 0, adapted);
    const int outcome = unif(rng) < p0 ? 0 : 1;
    st = measure_equatorial(st, 0, adapted, outcome);
    st.renormalize();
    const int nx = (outcome + z) & 1;
    z = x;
    x = nx;
  }
  if (x) st.apply_x(0);
  if (z) st.apply_z(0);
  return st;
}

}  // namespace photonc
