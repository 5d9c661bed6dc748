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

#include "photonc/pipeline.hpp"

#include "photonc/linear_map.hpp"

namespace photonc {

CompileOutput compile_qasm(const std::string& qasm_text, int opt_level,
                           bool collect_trace) {
  CompileOutput out;
  out.circuit = parse_qasm(qasm_text);
  const Circuit basis = transpile_to_basis(out.circuit);
  out.native = with_init_prefix(rewrite_to_native(basis));

  MGraph grid = build_mgraph(out.native);
  out.diagram = as_graph_like(grid);
  if (opt_level >= 1) {
    SimplifyOptions opts;
    opts.collect_trace = collect_trace;
    out.simplification = simplify(out.diagram, opts);
  }
  out.mgraph = extract_pattern(out.diagram);
  out.plan = decompose(out.mgraph);
  out.program = emit(out.plan, out.mgraph);
  return out;
}

double verify_deviation(const NativeSeq& prefixed_native, const MGraph& m,
                        std::size_t pattern_vertex_cap) {
  const LinearMap pattern = run_pattern_postselect(m, pattern_vertex_cap);
  const LinearMap reference = unitary_of(prefixed_native);
  return max_norm_distance_up_to_scalar(pattern, reference);
}

}  // namespace photonc
