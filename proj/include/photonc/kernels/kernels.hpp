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

#ifndef PHOTONC_KERNELS_KERNELS_HPP
#define PHOTONC_KERNELS_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

// Dense complex kernels used by the state-vector simulator and the tensor
// contractor. Every operation has a scalar reference implementation and may
// have SIMD variants; the active table is chosen once at startup from CPU
// features (override with PHOTONC_KERNEL=scalar|avx2).

namespace photonc::kernels {

using c64 = std::complex<double>;

struct Kernels {
  const char* name;

  // y[i] += a * x[i]
  void (*axpy)(c64 a, const c64* x, c64* y, std::size_t n);
  // x[i] *= a
  void (*scale)(c64 a, c64* x, std::size_t n);
  // sum_i conj(x[i]) * y[i]
  c64 (*dot)(const c64* x, const c64* y, std::size_t n);
  // sum_i |x[i]|^2
  double (*norm_sq)(const c64* x, std::size_t n);
  // C[m*ldc + n] += sum_k A[m*lda + k] * B[k*ldb + n]   (row-major)
  void (*matmul_acc)(const c64* a, const c64* b, c64* c, std::size_t m,
                     std::size_t k, std::size_t n, std::size_t lda,
                     std::size_t ldb, std::size_t ldc);
  // In-place single-qubit gate on a length-2^nq state vector. `bit` is the
  // bit position counted from the least significant end of the amplitude
  // index. g = {g00, g01, g10, g11}.
  void (*apply_gate1)(c64* state, std::size_t nq, std::size_t bit,
                      const c64 g[4]);
  // amp *= -1 wherever both bits are set.
  void (*apply_cz)(c64* state, std::size_t nq, std::size_t bit_a,
                   std::size_t bit_b);
  // amp *= phase wherever `bit` is set.
  void (*apply_phase1)(c64* state, std::size_t nq, std::size_t bit, c64 phase);
};

extern const Kernels kScalar;
#if defined(__x86_64__) || defined(_M_X64)
extern const Kernels kAvx2;
bool avx2_supported();
#endif

// Active table (resolved once, thread-safe).
const Kernels& active();

}  // namespace photonc::kernels

#endif  // PHOTONC_KERNELS_KERNELS_HPP
