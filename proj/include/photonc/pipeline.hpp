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

#ifndef PHOTONC_PIPELINE_HPP
#define PHOTONC_PIPELINE_HPP

#include <string>

#include "photonc/circuit.hpp"
#include "photonc/decompose.hpp"
#include "photonc/emit.hpp"
#include "photonc/mgraph.hpp"
#include "photonc/oracle.hpp"
#include "photonc/qasm.hpp"
#include "photonc/simplify.hpp"
#include "photonc/transpile.hpp"
#include "photonc/zx.hpp"

namespace photonc {

// Full compilation result. The native sequence carries the per-qubit HRZ(0)
// initialization prefix, so the pattern map equals unitary_of(native).
struct CompileOutput {
  Circuit circuit;
  NativeSeq native;  // prefixed
  ZXDiagram diagram;
  MGraph mgraph;
  DecompositionPlan plan;
  InstructionProgram program;
  SimplifyResult simplification;
};

// qasm text -> native -> m-graph -> (optional) ZX optimization -> pattern
// -> decomposition -> instructions. opt_level 0 skips the simplifier.
CompileOutput compile_qasm(const std::string& qasm_text, int opt_level,
                           bool collect_trace = false);

// Max-norm deviation (after scalar alignment) between the compiled pattern's
// post-selected map and the oracle unitary of the prefixed native sequence.
double verify_deviation(const NativeSeq& prefixed_native, const MGraph& m,
                        std::size_t pattern_vertex_cap = 20);

}  // namespace photonc

#endif  // PHOTONC_PIPELINE_HPP
