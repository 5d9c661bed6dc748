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

#include "photonc/linear_map.hpp"

#include <cmath>
#include <limits>

#include "photonc/kernels/kernels.hpp"

namespace photonc {

LinearMap LinearMap::identity(std::size_t dim) {
  LinearMap m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c64{1.0, 0.0};
  return m;
}

LinearMap LinearMap::times(const LinearMap& o) const {
  LinearMap out(rows, o.cols);
  kernels::active().matmul_acc(a.data(), o.a.data(), out.a.data(), rows, cols,
                               o.cols, cols, o.cols, o.cols);
  out.scalar = scalar * o.scalar;
  return out;
}

std::vector<c64> LinearMap::materialized() const {
  std::vector<c64> out = a;
  kernels::active().scale(scalar, out.data(), out.size());
  return out;
}

namespace {

double max_abs(const std::vector<c64>& v) {
  double m = 0.0;
  for (const c64& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double max_norm_distance_up_to_scalar(const LinearMap& a, const LinearMap& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    return std::numeric_limits<double>::infinity();
  std::vector<c64> am = a.materialized();
  std::vector<c64> bm = b.materialized();
  const double na = max_abs(am);
  const double nb = max_abs(bm);
  if (na == 0.0 || nb == 0.0)
    return (na == 0.0 && nb == 0.0) ? 0.0
                                    : std::numeric_limits<double>::infinity();
  kernels::active().scale(c64{1.0 / na, 0.0}, am.data(), am.size());
  kernels::active().scale(c64{1.0 / nb, 0.0}, bm.data(), bm.size());
  c64 overlap = kernels::active().dot(am.data(), bm.data(), am.size());
  const double mag = std::abs(overlap);
  c64 phase = mag > 1e-12 ? overlap / mag : c64{1.0, 0.0};
  double dev = 0.0;
  for (std::size_t i = 0; i < am.size(); ++i)
    dev = std::max(dev, std::abs(phase * am[i] - bm[i]));
  return dev;
}

double max_norm_distance_exact(const LinearMap& a, const LinearMap& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    return std::numeric_limits<double>::infinity();
  std::vector<c64> am = a.materialized();
  std::vector<c64> bm = b.materialized();
  double dev = 0.0;
  for (std::size_t i = 0; i < am.size(); ++i)
    dev = std::max(dev, std::abs(am[i] - bm[i]));
  return dev;
}

}  // namespace photonc
