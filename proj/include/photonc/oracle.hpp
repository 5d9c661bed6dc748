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

#ifndef PHOTONC_ORACLE_HPP
#define PHOTONC_ORACLE_HPP

#include <cstdint>
#include <random>

#include "photonc/circuit.hpp"
#include "photonc/linear_map.hpp"
#include "photonc/mgraph.hpp"
#include "photonc/statevector.hpp"

namespace photonc {

// Applies one gate (textbook matrices) to a dense state.
void apply_gate(StateVector& s, const Gate& g);
void apply_native_op(StateVector& s, const NativeOp& op);

// Dense 2^n x 2^n unitary by gate-by-gate application to basis columns.
// Throws SizeCapError above `cap` qubits.
LinearMap unitary_of(const Circuit& c, std::size_t cap = 7);
LinearMap unitary_of(const NativeSeq& s, std::size_t cap = 7);

// Runs a measurement pattern with all outcomes post-selected to 0. Input
// vertices are treated as open legs fed basis-by-basis; the result is the
// pattern's linear map from input vertices to output vertices (both ordered
// by row). Throws SizeCapError above `vertex_cap` vertices.
LinearMap run_pattern_postselect(const MGraph& m, std::size_t vertex_cap = 14);

// Samples a single-row chain pattern with random outcomes and Pauli
// feed-forward corrections, returning the resulting map column for input
// basis state `input_index`. Throws std::invalid_argument for non-chain
// patterns (documented limitation).
StateVector run_chain_feedforward(const MGraph& m, std::size_t input_index,
                                  std::mt19937_64& rng);

}  // namespace photonc

#endif  // PHOTONC_ORACLE_HPP
