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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a runtime CPU check (see kernels.cpp).

#include "photonc/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace photonc::kernels {
namespace {

// One __m256d holds two complex doubles as [re0, im0, re1, im1].

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// (ar + i*ai) * v for two packed complex values.
inline __m256d cmul_splat(__m256d ar, __m256d ai, __m256d v) {
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swap_re_im(v)));
}

void axpy_avx2(c64 a, const c64* x, c64* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    yv = _mm256_add_pd(yv, cmul_splat(ar, ai, xv));
    _mm256_storeu_pd(ys + 2 * i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(c64 a, c64* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  double* xs = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    _mm256_storeu_pd(xs + 2 * i, cmul_splat(ar, ai, xv));
  }
  for (; i < n; ++i) x[i] *= a;
}

c64 dot_avx2(const c64* x, const c64* y, std::size_t n) {
  // conj(x) * y: re = xr*yr + xi*yi, im = xr*yi - xi*yr.
  __m256d acc_same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
  __m256d acc_cross = _mm256_setzero_pd();  // [xi*yr, xr*yi, ...]
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    acc_same = _mm256_fmadd_pd(xv, yv, acc_same);
    acc_cross = _mm256_fmadd_pd(swap_re_im(xv), yv, acc_cross);
  }
  alignas(32) double s[4], t[4];
  _mm256_store_pd(s, acc_same);
  _mm256_store_pd(t, acc_cross);
  double re = s[0] + s[1] + s[2] + s[3];
  double im = t[1] - t[0] + t[3] - t[2];
  for (; i < n; ++i) {
    const c64 v = std::conj(x[i]) * y[i];
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

double norm_sq_avx2(const c64* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const double* xs = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double s[4];
  _mm256_store_pd(s, acc);
  double out = s[0] + s[1] + s[2] + s[3];
  for (; i < n; ++i) out += std::norm(x[i]);
  return out;
}

void matmul_acc_avx2(const c64* a, const c64* b, c64* c, std::size_t m,
                     std::size_t k, std::size_t n, std::size_t lda,
                     std::size_t ldb, std::size_t ldc) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const c64 av = a[i * lda + p];
      if (av == c64{0.0, 0.0}) continue;
      const __m256d ar = _mm256_set1_pd(av.real());
      const __m256d ai = _mm256_set1_pd(av.imag());
      const double* brow = reinterpret_cast<const double*>(b + p * ldb);
      double* crow = reinterpret_cast<double*>(c + i * ldc);
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        cv = _mm256_add_pd(cv, cmul_splat(ar, ai, bv));
        _mm256_storeu_pd(crow + 2 * j, cv);
      }
      for (; j < n; ++j) c[i * ldc + j] += av * b[p * ldb + j];
    }
  }
}

void apply_gate1_avx2(c64* state, std::size_t nq, std::size_t bit,
                      const c64 g[4]) {
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t step = std::size_t{1} << bit;
  if (bit == 0 || dim < 4) {
    kScalar.apply_gate1(state, nq, bit, g);
    return;
  }
  const __m256d g00r = _mm256_set1_pd(g[0].real()), g00i = _mm256_set1_pd(g[0].imag());
  const __m256d g01r = _mm256_set1_pd(g[1].real()), g01i = _mm256_set1_pd(g[1].imag());
  const __m256d g10r = _mm256_set1_pd(g[2].real()), g10i = _mm256_set1_pd(g[2].imag());
  const __m256d g11r = _mm256_set1_pd(g[3].real()), g11i = _mm256_set1_pd(g[3].imag());
  double* s = reinterpret_cast<double*>(state);
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t i = base; i < base + step; i += 2) {
      __m256d a0 = _mm256_loadu_pd(s + 2 * i);
      __m256d a1 = _mm256_loadu_pd(s + 2 * (i + step));
      __m256d n0 = _mm256_add_pd(cmul_splat(g00r, g00i, a0),
                                 cmul_splat(g01r, g01i, a1));
      __m256d n1 = _mm256_add_pd(cmul_splat(g10r, g10i, a0),
                                 cmul_splat(g11r, g11i, a1));
      _mm256_storeu_pd(s + 2 * i, n0);
      _mm256_storeu_pd(s + 2 * (i + step), n1);
    }
  }
}

void apply_cz_avx2(c64* state, std::size_t nq, std::size_t bit_a,
                   std::size_t bit_b) {
  const std::size_t lo = bit_a < bit_b ? bit_a : bit_b;
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t mask =
      (std::size_t{1} << bit_a) | (std::size_t{1} << bit_b);
  if (lo == 0) {
    kScalar.apply_cz(state, nq, bit_a, bit_b);
    return;
  }
  // Amplitudes with both bits set come in contiguous runs of length 2^lo.
  const __m256d neg = _mm256_set1_pd(-0.0);
  double* s = reinterpret_cast<double*>(state);
  const std::size_t run = std::size_t{1} << lo;
  for (std::size_t base = 0; base < dim; base += run) {
    if ((base & mask) != mask) continue;
    std::size_t i = base;
    for (; i + 2 <= base + run; i += 2) {
      __m256d v = _mm256_loadu_pd(s + 2 * i);
      _mm256_storeu_pd(s + 2 * i, _mm256_xor_pd(v, neg));
    }
    for (; i < base + run; ++i) state[i] = -state[i];
  }
}

void apply_phase1_avx2(c64* state, std::size_t nq, std::size_t bit,
                       c64 phase) {
  const std::size_t dim = std::size_t{1} << nq;
  if (bit == 0) {
    kScalar.apply_phase1(state, nq, bit, phase);
    return;
  }
  const __m256d pr = _mm256_set1_pd(phase.real());
  const __m256d pi = _mm256_set1_pd(phase.imag());
  double* s = reinterpret_cast<double*>(state);
  const std::size_t run = std::size_t{1} << bit;
  for (std::size_t base = run; base < dim; base += 2 * run) {
    std::size_t i = base;
    for (; i + 2 <= base + run; i += 2) {
      __m256d v = _mm256_loadu_pd(s + 2 * i);
      _mm256_storeu_pd(s + 2 * i, cmul_splat(pr, pi, v));
    }
    for (; i < base + run; ++i) state[i] *= phase;
  }
}

}  // namespace

const Kernels kAvx2 = {
    "avx2",           axpy_avx2,     scale_avx2,
    dot_avx2,         norm_sq_avx2,  matmul_acc_avx2,
    apply_gate1_avx2, apply_cz_avx2, apply_phase1_avx2,
};

}  // namespace photonc::kernels

#endif  // x86_64
