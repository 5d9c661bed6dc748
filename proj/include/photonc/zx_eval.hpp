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

#ifndef PHOTONC_ZX_EVAL_HPP
#define PHOTONC_ZX_EVAL_HPP

#include "photonc/linear_map.hpp"
#include "photonc/statevector.hpp"
#include "photonc/zx.hpp"

namespace photonc {

// Contracts the diagram to its dense linear map (2^|outputs| x 2^|inputs|,
// output 0 = most significant row bit). Z spider = |0..0><0..0| +
// e^{i a}|1..1><1..1|, Hadamard wires insert H. Works on arbitrary
// well-formed diagrams (X spiders, parallel edges, self-loops included).
//
// Tensors are eliminated greedily by smallest resulting rank. Refuses
// diagrams with more than `vertex_cap` vertices (spiders + boundaries), or
// whose contraction exceeds an internal rank limit, with a SizeCapError
// naming the cap.
LinearMap evaluate(const ZXDiagram& d, std::size_t vertex_cap = 14);

}  // namespace photonc

#endif  // PHOTONC_ZX_EVAL_HPP
