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

#include "photonc/statevector.hpp"

#include <cmath>

#include "photonc/kernels/kernels.hpp"

namespace photonc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
const kernels::Kernels& K() { return kernels::active(); }
}  // namespace

StateVector StateVector::all_plus(std::size_t n) {
  StateVector s;
  s.num_qubits = n;
  s.amps.assign(std::size_t{1} << n,
                c64{std::pow(kInvSqrt2, static_cast<double>(n)), 0.0});
  return s;
}

StateVector StateVector::basis(std::size_t n, std::size_t index) {
  StateVector s;
  s.num_qubits = n;
  s.amps.assign(std::size_t{1} << n, c64{0.0, 0.0});
  s.amps[index] = c64{1.0, 0.0};
  return s;
}

void StateVector::apply_gate1(std::size_t q, const c64 g[4]) {
  K().apply_gate1(amps.data(), num_qubits, bit_of(q), g);
}

void StateVector::apply_h(std::size_t q) {
  const c64 g[4] = {{kInvSqrt2, 0.0},
                    {kInvSqrt2, 0.0},
                    {kInvSqrt2, 0.0},
                    {-kInvSqrt2, 0.0}};
  apply_gate1(q, g);
}

void StateVector::apply_x(std::size_t q) {
  const c64 g[4] = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  apply_gate1(q, g);
}

void StateVector::apply_z(std::size_t q) {
  K().apply_phase1(amps.data(), num_qubits, bit_of(q), c64{-1.0, 0.0});
}

void StateVector::apply_phase(std::size_t q, c64 phase) {
  K().apply_phase1(amps.data(), num_qubits, bit_of(q), phase);
}

void StateVector::apply_cz(std::size_t qa, std::size_t qb) {
  K().apply_cz(amps.data(), num_qubits, bit_of(qa), bit_of(qb));
}

double StateVector::norm_sq() const {
  return K().norm_sq(amps.data(), amps.size());
}

void StateVector::renormalize() {
  const double n = std::sqrt(norm_sq());
  if (n == 0.0) throw ZeroBranchError("renormalize: zero state");
  K().scale(c64{1.0 / n, 0.0}, amps.data(), amps.size());
  weight *= n;
}

StateVector StateVector::tensor(const StateVector& a, const StateVector& b) {
  StateVector out;
  out.num_qubits = a.num_qubits + b.num_qubits;
  out.amps.assign(a.dim() * b.dim(), c64{0.0, 0.0});
  for (std::size_t i = 0; i < a.dim(); ++i)
    K().axpy(a.amps[i], b.amps.data(), out.amps.data() + i * b.dim(), b.dim());
  out.weight = a.weight * b.weight;
  return out;
}

double StateVector::fidelity(const StateVector& a, const StateVector& b) {
  const double na = a.norm_sq();
  const double nb = b.norm_sq();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const c64 ov = K().dot(a.amps.data(), b.amps.data(), a.amps.size());
  return std::norm(ov) / (na * nb);
}

StateVector graph_state(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::size_t n, std::size_t cap) {
  if (n > cap)
    throw SizeCapError("graph_state: " + std::to_string(n) +
                       " qubits exceeds cap " + std::to_string(cap));
  StateVector s = StateVector::all_plus(n);
  for (const auto& [a, b] : edges) s.apply_cz(a, b);
  return s;
}

StateVector measure_equatorial(const StateVector& s, std::size_t q,
                               double alpha, int m) {
  const std::size_t bit = s.bit_of(q);
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  const c64 coef0{kInvSqrt2, 0.0};
  c64 coef1 = std::polar(kInvSqrt2, -alpha);
  if (m == 1) coef1 = -coef1;

  StateVector out;
  out.num_qubits = s.num_qubits - 1;
  out.amps.assign(s.dim() / 2, c64{0.0, 0.0});
  out.weight = s.weight;
  for (std::size_t j = 0; j < out.amps.size(); ++j) {
    const std::size_t high = (j & ~low_mask) << 1;
    const std::size_t base = high | (j & low_mask);
    out.amps[j] =
        coef0 * s.amps[base] + coef1 * s.amps[base | (std::size_t{1} << bit)];
  }
  if (out.norm_sq() < 1e-20 * (s.norm_sq() + 1e-300))
    throw ZeroBranchError("measure_equatorial: probability-0 outcome");
  return out;
}

double equatorial_prob0(const StateVector& s, std::size_t q, double alpha) {
  const std::size_t bit = s.bit_of(q);
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  const c64 coef1 = std::polar(kInvSqrt2, -alpha);
  double p0 = 0.0;
  for (std::size_t j = 0; j < s.dim() / 2; ++j) {
    const std::size_t high = (j & ~low_mask) << 1;
    const std::size_t base = high | (j & low_mask);
    p0 += std::norm(c64{kInvSqrt2, 0.0} * s.amps[base] +
                    coef1 * s.amps[base | (std::size_t{1} << bit)]);
  }
  return p0 / s.norm_sq();
}

StateVector fuse_type1(const StateVector& s, std::size_t qa, std::size_t qb) {
  if (qa == qb) throw std::invalid_argument("fuse_type1: qa == qb");
  const std::size_t bit_a = s.bit_of(qa);
  const std::size_t bit_b = s.bit_of(qb);
  const std::size_t low_mask = (std::size_t{1} << bit_b) - 1;

  StateVector out;
  out.num_qubits = s.num_qubits - 1;
  out.amps.assign(s.dim() / 2, c64{0.0, 0.0});
  out.weight = s.weight;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const bool va = (i >> bit_a) & 1;
    const bool vb = (i >> bit_b) & 1;
    if (va != vb) continue;
    const std::size_t j = ((i >> 1) & ~low_mask) | (i & low_mask);
    out.amps[j] = s.amps[i];
  }
  if (out.norm_sq() < 1e-20 * (s.norm_sq() + 1e-300))
    throw ZeroBranchError("fuse_type1: fusion cannot succeed");
  return out;
}

StateVector permute_qubits(const StateVector& s,
                           const std::vector<std::size_t>& perm) {
  StateVector out;
  out.num_qubits = s.num_qubits;
  out.amps.assign(s.dim(), c64{0.0, 0.0});
  out.weight = s.weight;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::size_t j = 0;
    for (std::size_t nq = 0; nq < s.num_qubits; ++nq) {
      const std::size_t oq = perm[nq];
      const std::size_t bit = (i >> s.bit_of(oq)) & 1;
      j |= bit << out.bit_of(nq);
    }
    out.amps[j] = s.amps[i];
  }
  return out;
}

}  // namespace photonc
