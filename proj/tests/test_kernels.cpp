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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "photonc/kernels/kernels.hpp"

using namespace photonc::kernels;

namespace {

std::vector<c64> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<c64> v(n);
  for (auto& x : v) x = c64{u(rng), u(rng)};
  return v;
}

double max_diff(const std::vector<c64>& a, const std::vector<c64>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

#if defined(__x86_64__) || defined(_M_X64)

TEST_CASE("scalar and avx2 kernels agree on random data") {
  if (!avx2_supported()) {
    MESSAGE("AVX2 not available; skipping equivalence checks");
    return;
  }
  std::mt19937_64 rng(12345);
  for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 257u}) {
    const std::vector<c64> x = random_vec(n, rng);
    const c64 a{0.3, -0.7};

    std::vector<c64> y1 = random_vec(n, rng), y2 = y1;
    kScalar.axpy(a, x.data(), y1.data(), n);
    kAvx2.axpy(a, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) < 1e-13);

    std::vector<c64> s1 = x, s2 = x;
    kScalar.scale(a, s1.data(), n);
    kAvx2.scale(a, s2.data(), n);
    CHECK(max_diff(s1, s2) < 1e-13);

    const c64 d1 = kScalar.dot(x.data(), y1.data(), n);
    const c64 d2 = kAvx2.dot(x.data(), y1.data(), n);
    CHECK(std::abs(d1 - d2) < 1e-11 * (1.0 + std::abs(d1)));

    CHECK(kScalar.norm_sq(x.data(), n) ==
          doctest::Approx(kAvx2.norm_sq(x.data(), n)).epsilon(1e-12));
  }
}

TEST_CASE("matmul kernels agree") {
  if (!avx2_supported()) return;
  std::mt19937_64 rng(99);
  for (auto [m, k, n] : std::vector<std::array<std::size_t, 3>>{
           {1, 1, 1}, {2, 3, 4}, {8, 8, 8}, {5, 16, 7}, {16, 4, 32}}) {
    const std::vector<c64> a = random_vec(m * k, rng);
    const std::vector<c64> b = random_vec(k * n, rng);
    std::vector<c64> c1(m * n, c64{0, 0}), c2 = c1;
    kScalar.matmul_acc(a.data(), b.data(), c1.data(), m, k, n, k, n, n);
    kAvx2.matmul_acc(a.data(), b.data(), c2.data(), m, k, n, k, n, n);
    CHECK(max_diff(c1, c2) < 1e-12);
  }
}

TEST_CASE("state kernels agree across qubit positions") {
  if (!avx2_supported()) return;
  std::mt19937_64 rng(7);
  const std::size_t nq = 6;
  const std::vector<c64> base = random_vec(std::size_t{1} << nq, rng);
  const c64 g[4] = {{0.6, 0.1}, {-0.2, 0.7}, {0.7, 0.2}, {0.1, -0.6}};
  for (std::size_t bit = 0; bit < nq; ++bit) {
    std::vector<c64> s1 = base, s2 = base;
    kScalar.apply_gate1(s1.data(), nq, bit, g);
    kAvx2.apply_gate1(s2.data(), nq, bit, g);
    CHECK(max_diff(s1, s2) < 1e-13);

    s1 = base;
    s2 = base;
    kScalar.apply_phase1(s1.data(), nq, bit, c64{0.0, 1.0});
    kAvx2.apply_phase1(s2.data(), nq, bit, c64{0.0, 1.0});
    CHECK(max_diff(s1, s2) < 1e-13);

    for (std::size_t other = 0; other < nq; ++other) {
      if (other == bit) continue;
      s1 = base;
      s2 = base;
      kScalar.apply_cz(s1.data(), nq, bit, other);
      kAvx2.apply_cz(s2.data(), nq, bit, other);
      CHECK(max_diff(s1, s2) < 1e-14);
    }
  }
}

#endif  // x86_64

TEST_CASE("apply_gate1 matches the dense kron construction") {
  std::mt19937_64 rng(3);
  const std::size_t nq = 3;
  const std::size_t dim = std::size_t{1} << nq;
  const std::vector<c64> state = random_vec(dim, rng);
  const c64 g[4] = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};  // X
  for (std::size_t bit = 0; bit < nq; ++bit) {
    std::vector<c64> got = state;
    active().apply_gate1(got.data(), nq, bit, g);
    for (std::size_t i = 0; i < dim; ++i)
      CHECK(std::abs(got[i ^ (std::size_t{1} << bit)] - state[i]) < 1e-15);
  }
}

TEST_CASE("active table reports a valid name") {
  const std::string name = active().name;
  CHECK((name == "scalar" || name == "avx2"));
}
