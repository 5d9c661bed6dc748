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

#ifndef PHOTONC_CIRCUIT_HPP
#define PHOTONC_CIRCUIT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "photonc/angle.hpp"

namespace photonc {

enum class GateKind {
  kH,
  kX,
  kY,
  kZ,
  kS,
  kSdg,
  kT,
  kTdg,
  kRx,
  kRy,
  kRz,
  kU1,
  kU2,
  kU3,
  kCx,
  kCz,
  kCcx,
  kSwap,
};

const char* gate_name(GateKind k);
bool gate_is_two_qubit(GateKind k);  // ccx counts as multi, not two

struct Gate {
  GateKind kind;
  std::vector<std::size_t> qubits;
  std::vector<Angle> params;
};

// A parsed circuit. Final measurement statements are recorded as output
// markers only; they never become gates.
struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;
  std::vector<std::size_t> measured_qubits;  // program order, deduplicated
};

// Program over the native set {H*Rz(theta), CZ}.
struct NativeOp {
  enum Kind { kHrz, kCz } kind;
  std::size_t a = 0;  // qubit (kHrz) or first qubit (kCz)
  std::size_t b = 0;  // second qubit (kCz)
  Angle theta;        // kHrz only
};

struct NativeSeq {
  std::size_t num_qubits = 0;
  std::vector<NativeOp> ops;

  std::size_t count_hrz() const;
  std::size_t count_cz() const;
};

}  // namespace photonc

#endif  // PHOTONC_CIRCUIT_HPP
