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

#include "photonc/kernels/kernels.hpp"

namespace photonc::kernels {
namespace {

void axpy_scalar(c64 a, const c64* x, c64* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(c64 a, c64* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

c64 dot_scalar(const c64* x, const c64* y, std::size_t n) {
  c64 acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double norm_sq_scalar(const c64* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return acc;
}

void matmul_acc_scalar(const c64* a, const c64* b, c64* c, std::size_t m,
                       std::size_t k, std::size_t n, std::size_t lda,
                       std::size_t ldb, std::size_t ldc) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const c64 av = a[i * lda + p];
      if (av == c64{0.0, 0.0}) continue;
      const c64* brow = b + p * ldb;
      c64* crow = c + i * ldc;
      for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void apply_gate1_scalar(c64* state, std::size_t nq, std::size_t bit,
                        const c64 g[4]) {
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t step = std::size_t{1} << bit;
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t i = base; i < base + step; ++i) {
      const c64 a0 = state[i];
      const c64 a1 = state[i + step];
      state[i] = g[0] * a0 + g[1] * a1;
      state[i + step] = g[2] * a0 + g[3] * a1;
    }
  }
}

void apply_cz_scalar(c64* state, std::size_t nq, std::size_t bit_a,
                     std::size_t bit_b) {
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t mask = (std::size_t{1} << bit_a) | (std::size_t{1} << bit_b);
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & mask) == mask) state[i] = -state[i];
}

void apply_phase1_scalar(c64* state, std::size_t nq, std::size_t bit,
                         c64 phase) {
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t mask = std::size_t{1} << bit;
  for (std::size_t i = 0; i < dim; ++i)
    if (i & mask) state[i] *= phase;
}

}  // namespace

const Kernels kScalar = {
    "scalar",          axpy_scalar,     scale_scalar,
    dot_scalar,        norm_sq_scalar,  matmul_acc_scalar,
    apply_gate1_scalar, apply_cz_scalar, apply_phase1_scalar,
};

}  // namespace photonc::kernels
