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

#ifndef PHOTONC_LINEAR_MAP_HPP
#define PHOTONC_LINEAR_MAP_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace photonc {

using c64 = std::complex<double>;

// Dense complex matrix with an explicit scalar factor kept to the side, so
// "equal up to scalar" checks can be sharpened to exact checks when wanted.
struct LinearMap {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<c64> a;  // row-major, rows*cols entries
  c64 scalar{1.0, 0.0};

  LinearMap() : a(1, c64{1.0, 0.0}) {}
  LinearMap(std::size_t r, std::size_t c)
      : rows(r), cols(c), a(r * c, c64{0.0, 0.0}) {}

  static LinearMap identity(std::size_t dim);

  c64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  c64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  // this * o (matrix product; scalars multiply).
  LinearMap times(const LinearMap& o) const;

  // Entries with the scalar folded in.
  std::vector<c64> materialized() const;
};

// Largest entry-wise deviation between a and b after normalizing both to
// unit max-magnitude and aligning the global phase (least-squares optimal).
// Returns a large value when either map is numerically zero or the shapes
// differ.
double max_norm_distance_up_to_scalar(const LinearMap& a, const LinearMap& b);

// Deviation without any scalar freedom: max |a_ij - b_ij| with scalars
// folded in.
double max_norm_distance_exact(const LinearMap& a, const LinearMap& b);

}  // namespace photonc

#endif  // PHOTONC_LINEAR_MAP_HPP
