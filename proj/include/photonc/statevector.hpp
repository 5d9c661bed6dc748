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

#ifndef PHOTONC_STATEVECTOR_HPP
#define PHOTONC_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "photonc/linear_map.hpp"

namespace photonc {

// Raised when a projective branch has probability zero.
struct ZeroBranchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a simulation exceeds its qubit cap.
struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense qubit-level state vector. Qubit 0 is the most significant bit of the
// amplitude index. Amplitudes are left unnormalized by projective operations;
// renormalization is explicit and records the dropped factor in `weight`.
struct StateVector {
  std::size_t num_qubits = 0;
  std::vector<c64> amps;
  c64 weight{1.0, 0.0};

  StateVector() : amps(1, c64{1.0, 0.0}) {}

  static StateVector all_plus(std::size_t n);
  static StateVector basis(std::size_t n, std::size_t index);

  std::size_t dim() const { return amps.size(); }
  std::size_t bit_of(std::size_t q) const { return num_qubits - 1 - q; }

  void apply_gate1(std::size_t q, const c64 g[4]);
  void apply_h(std::size_t q);
  void apply_x(std::size_t q);
  void apply_z(std::size_t q);
  void apply_phase(std::size_t q, c64 phase);  // diag(1, phase)
  void apply_cz(std::size_t qa, std::size_t qb);

  double norm_sq() const;
  // Divides amplitudes by their norm, multiplying the factor into `weight`.
  void renormalize();

  // |a> (x) |b>  — a's qubits become the high-order block.
  static StateVector tensor(const StateVector& a, const StateVector& b);

  // Fidelity |<a|b>|^2 / (|a|^2 |b|^2); weights are ignored.
  static double fidelity(const StateVector& a, const StateVector& b);
};

// Graph state over n qubits: CZ along every edge applied to |+>^n (Eq.-style
// construction). Caps at `cap` qubits.
StateVector graph_state(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        std::size_t n, std::size_t cap = 14);

// Projects qubit q onto the equatorial-basis outcome m in B(alpha) with
// |+alpha> = (|0> + e^{i alpha}|1>)/sqrt(2), removes the qubit, and keeps the
// branch weight in the (unnormalized) amplitudes. Throws ZeroBranchError on a
// probability-0 branch.
StateVector measure_equatorial(const StateVector& s, std::size_t q,
                               double alpha, int m);

// Probability of outcome m=0 for the above measurement on a normalized copy.
double equatorial_prob0(const StateVector& s, std::size_t q, double alpha);

// Type-1 fusion modeled as the Kraus operator |0><00| + |1><11| on (qa, qb);
// qb is removed. Throws ZeroBranchError if the success branch has zero norm.
StateVector fuse_type1(const StateVector& s, std::size_t qa, std::size_t qb);

// Reorders qubits: new qubit i is old qubit `perm[i]`.
StateVector permute_qubits(const StateVector& s,
                           const std::vector<std::size_t>& perm);

}  // namespace photonc

#endif  // PHOTONC_STATEVECTOR_HPP
