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

#include "photonc/transpile.hpp"

#include <stdexcept>

namespace photonc {

namespace {

void emit(Circuit& out, GateKind k, std::vector<std::size_t> qs,
          std::vector<Angle> ps = {}) {
  out.gates.push_back(Gate{k, std::move(qs), std::move(ps)});
}

// ry(t) = S rx(t) S^dag up to phase; S^dag acts first.
void emit_ry(Circuit& out, std::size_t q, const Angle& t) {
  emit(out, GateKind::kRz, {q}, {Angle::pi_frac(-1, 2)});
  emit(out, GateKind::kRx, {q}, {t});
  emit(out, GateKind::kRz, {q}, {Angle::pi_frac(1, 2)});
}

// u3(t, phi, lam) = rz(phi) ry(t) rz(lam) up to phase; rz(lam) acts first.
void emit_u3(Circuit& out, std::size_t q, const Angle& t, const Angle& phi,
             const Angle& lam) {
  emit(out, GateKind::kRz, {q}, {lam});
  emit_ry(out, q, t);
  emit(out, GateKind::kRz, {q}, {phi});
}

void emit_ccx(Circuit& out, std::size_t a, std::size_t b, std::size_t c) {
  const Angle t = Angle::pi_frac(1, 4);
  const Angle tdg = Angle::pi_frac(-1, 4);
  emit(out, GateKind::kH, {c});
  emit(out, GateKind::kCx, {b, c});
  emit(out, GateKind::kRz, {c}, {tdg});
  emit(out, GateKind::kCx, {a, c});
  emit(out, GateKind::kRz, {c}, {t});
  emit(out, GateKind::kCx, {b, c});
  emit(out, GateKind::kRz, {c}, {tdg});
  emit(out, GateKind::kCx, {a, c});
  emit(out, GateKind::kRz, {b}, {t});
  emit(out, GateKind::kRz, {c}, {t});
  emit(out, GateKind::kH, {c});
  emit(out, GateKind::kCx, {a, b});
  emit(out, GateKind::kRz, {a}, {t});
  emit(out, GateKind::kRz, {b}, {tdg});
  emit(out, GateKind::kCx, {a, b});
}

}  // namespace

Circuit transpile_to_basis(const Circuit& c) {
  Circuit out;
  out.num_qubits = c.num_qubits;
  out.measured_qubits = c.measured_qubits;
  for (const Gate& g : c.gates) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::kH:
        emit(out, GateKind::kH, {q[0]});
        break;
      case GateKind::kX:
        emit(out, GateKind::kRx, {q[0]}, {Angle::pi()});
        break;
      case GateKind::kY:
        emit(out, GateKind::kRz, {q[0]}, {Angle::pi()});
        emit(out, GateKind::kRx, {q[0]}, {Angle::pi()});
        break;
      case GateKind::kZ:
        emit(out, GateKind::kRz, {q[0]}, {Angle::pi()});
        break;
      case GateKind::kS:
        emit(out, GateKind::kRz, {q[0]}, {Angle::pi_frac(1, 2)});
        break;
      case GateKind::kSdg:
        emit(out, GateKind::kRz, {q[0]}, {Angle::pi_frac(-1, 2)});
        break;
      case GateKind::kT:
        emit(out, GateKind::kRz, {q[0]}, {Angle::pi_frac(1, 4)});
        break;
      case GateKind::kTdg:
        emit(out, GateKind::kRz, {q[0]}, {Angle::pi_frac(-1, 4)});
        break;
      case GateKind::kRx:
        emit(out, GateKind::kRx, {q[0]}, {g.params[0]});
        break;
      case GateKind::kRy:
        emit_ry(out, q[0], g.params[0]);
        break;
      case GateKind::kRz:
      case GateKind::kU1:
        emit(out, GateKind::kRz, {q[0]}, {g.params[0]});
        break;
      case GateKind::kU2:
        emit_u3(out, q[0], Angle::pi_frac(1, 2), g.params[0], g.params[1]);
        break;
      case GateKind::kU3:
        emit_u3(out, q[0], g.params[0], g.params[1], g.params[2]);
        break;
      case GateKind::kCx:
        emit(out, GateKind::kCx, {q[0], q[1]});
        break;
      case GateKind::kCz:
        emit(out, GateKind::kCz, {q[0], q[1]});
        break;
      case GateKind::kSwap:
        emit(out, GateKind::kCx, {q[0], q[1]});
        emit(out, GateKind::kCx, {q[1], q[0]});
        emit(out, GateKind::kCx, {q[0], q[1]});
        break;
      case GateKind::kCcx:
        emit_ccx(out, q[0], q[1], q[2]);
        break;
      default:
        throw std::runtime_error(std::string("no decomposition for gate '") +
                                 gate_name(g.kind) + "'");
    }
  }
  return out;
}

NativeSeq rewrite_to_native(const Circuit& c) {
  NativeSeq out;
  out.num_qubits = c.num_qubits;
  auto hrz = [&](std::size_t q, Angle t) {
    out.ops.push_back(NativeOp{NativeOp::kHrz, q, 0, t});
  };
  auto cz = [&](std::size_t a, std::size_t b) {
    out.ops.push_back(NativeOp{NativeOp::kCz, a, b, Angle::zero()});
  };
  for (const Gate& g : c.gates) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::kH:
        hrz(q[0], Angle::zero());
        break;
      case GateKind::kRz:
        hrz(q[0], g.params[0]);
        hrz(q[0], Angle::zero());
        break;
      case GateKind::kRx:
        hrz(q[0], Angle::zero());
        hrz(q[0], g.params[0]);
        break;
      case GateKind::kCx:
        hrz(q[1], Angle::zero());
        cz(q[0], q[1]);
        hrz(q[1], Angle::zero());
        break;
      case GateKind::kCz:
        cz(q[0], q[1]);
        break;
      default:
        throw std::runtime_error(
            std::string("rewrite_to_native: circuit not in Step-1 basis, "
                        "found '") +
            gate_name(g.kind) + "'");
    }
  }
  return out;
}

NativeSeq with_init_prefix(const NativeSeq& s) {
  NativeSeq out;
  out.num_qubits = s.num_qubits;
  out.ops.reserve(s.ops.size() + s.num_qubits);
  for (std::size_t q = 0; q < s.num_qubits; ++q)
    out.ops.push_back(NativeOp{NativeOp::kHrz, q, 0, Angle::zero()});
  out.ops.insert(out.ops.end(), s.ops.begin(), s.ops.end());
  return out;
}

}  // namespace photonc
