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

#ifndef PHOTONC_TRANSPILE_HPP
#define PHOTONC_TRANSPILE_HPP

#include "photonc/circuit.hpp"

namespace photonc {

// Lowers to the universal basis {Rx, Rz, H, CX, CZ}; the output unitary
// equals the input up to global phase.
Circuit transpile_to_basis(const Circuit& c);

// Rewrites a basis circuit as a sequence over {H*Rz(theta), CZ} using the
// four identities
//   Rz(t) = [H Rz(0)][H Rz(t)]      H = H Rz(0)
//   Rx(t) = [H Rz(t)][H Rz(0)]      CNOT = [I(x)H] CZ [I(x)H]
// with the rightmost bracket acting first.
NativeSeq rewrite_to_native(const Circuit& c);

// Prepends one HRZ(q, 0) per qubit: the compiled pattern then starts every
// row with a |+> vertex measured at angle 0, realizing |0>^n initialization.
NativeSeq with_init_prefix(const NativeSeq& s);

}  // namespace photonc

#endif  // PHOTONC_TRANSPILE_HPP
