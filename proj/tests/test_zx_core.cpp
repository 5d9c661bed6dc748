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

#include <cmath>
#include <random>

#include "photonc/linear_map.hpp"
#include "photonc/oracle.hpp"
#include "photonc/zx.hpp"
#include "photonc/zx_eval.hpp"

using namespace photonc;

namespace {

constexpr double kPi = 3.14159265358979323846;

LinearMap dense(std::size_t rows, std::size_t cols,
                std::initializer_list<c64> entries) {
  LinearMap m(rows, cols);
  std::size_t i = 0;
  for (c64 v : entries) m.a[i++] = v;
  return m;
}

NativeSeq random_native(std::size_t qubits, std::size_t ops,
                        std::mt19937_64& rng) {
  NativeSeq s;
  s.num_qubits = qubits;
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> qd(0, qubits - 1);
  std::uniform_int_distribution<int> num(-7, 8);
  for (std::size_t i = 0; i < ops; ++i) {
    if (qubits >= 2 && kind(rng) == 0) {
      std::size_t a = qd(rng), b = qd(rng);
      while (b == a) b = qd(rng);
      s.ops.push_back(NativeOp{NativeOp::kCz, a, b, Angle::zero()});
    } else {
      s.ops.push_back(
          NativeOp{NativeOp::kHrz, qd(rng), 0, Angle::pi_frac(num(rng), 4)});
    }
  }
  return s;
}

// Random well-formed diagram exercising X spiders, parallel edges and
// self-loops (the to_graph_like inputs).
ZXDiagram random_diagram(std::mt19937_64& rng) {
  ZXDiagram d;
  std::uniform_int_distribution<int> nspiders(2, 6);
  std::uniform_int_distribution<int> num(-3, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  const int n = nspiders(rng);
  std::vector<ZXDiagram::Id> ids;
  for (int i = 0; i < n; ++i)
    ids.push_back(d.add_spider(coin(rng) ? SpiderColor::kZ : SpiderColor::kX,
                               Angle::pi_frac(num(rng), 4)));
  std::uniform_int_distribution<int> vd(0, n - 1);
  const int extra = vd(rng) + 1;
  for (int i = 0; i < n - 1 + extra; ++i) {
    int a = vd(rng), b = vd(rng);
    EdgeType t = coin(rng) ? EdgeType::kHadamard : EdgeType::kPlain;
    d.add_edge(ids[a], ids[b], t);
  }
  // 1-2 boundaries on each side.
  for (int side = 0; side < 2; ++side) {
    const int count = coin(rng) + 1;
    for (int i = 0; i < count; ++i) {
      ZXDiagram::Id b = d.add_boundary();
      (side == 0 ? d.inputs() : d.outputs()).push_back(b);
      d.add_edge(b, ids[static_cast<std::size_t>(vd(rng))],
                 coin(rng) ? EdgeType::kHadamard : EdgeType::kPlain);
    }
  }
  return d;
}

}  // namespace

TEST_CASE("empty 1-qubit sequence evaluates to the identity") {
  NativeSeq s;
  s.num_qubits = 1;
  const LinearMap m = evaluate(native_to_diagram(s));
  CHECK(max_norm_distance_up_to_scalar(m, LinearMap::identity(2)) < 1e-12);
}

TEST_CASE("single Z-phase spider gives diag(1, e^{ia})") {
  for (double a : {0.3, kPi / 4, -1.2}) {
    ZXDiagram d;
    ZXDiagram::Id s = d.add_spider(SpiderColor::kZ, Angle::radians(a));
    ZXDiagram::Id in = d.add_boundary();
    ZXDiagram::Id out = d.add_boundary();
    d.inputs().push_back(in);
    d.outputs().push_back(out);
    d.add_edge(in, s, EdgeType::kPlain);
    d.add_edge(s, out, EdgeType::kPlain);
    const LinearMap expect =
        dense(2, 2, {c64{1, 0}, c64{0, 0}, c64{0, 0}, std::polar(1.0, a)});
    CHECK(max_norm_distance_exact(evaluate(d), expect) < 1e-12);
  }
}

TEST_CASE("HRZ chain evaluates to H * diag(1, e^{ia})") {
  const double a = 0.7;
  NativeSeq s;
  s.num_qubits = 1;
  s.ops.push_back(NativeOp{NativeOp::kHrz, 0, 0, Angle::radians(a)});
  const LinearMap got = evaluate(native_to_diagram(s));
  const double r = 1.0 / std::sqrt(2.0);
  const LinearMap expect =
      dense(2, 2, {c64{r, 0}, r * std::polar(1.0, a), c64{r, 0},
                   -r * std::polar(1.0, a)});
  CHECK(max_norm_distance_up_to_scalar(got, expect) < 1e-12);
}

TEST_CASE("native CNOT encoding matches the CNOT matrix") {
  NativeSeq s;
  s.num_qubits = 2;
  s.ops.push_back(NativeOp{NativeOp::kHrz, 1, 0, Angle::zero()});
  s.ops.push_back(NativeOp{NativeOp::kCz, 0, 1, Angle::zero()});
  s.ops.push_back(NativeOp{NativeOp::kHrz, 1, 0, Angle::zero()});
  const LinearMap got = evaluate(native_to_diagram(s));
  const LinearMap cnot = dense(
      4, 4, {c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{0, 0},  //
             c64{0, 0}, c64{1, 0}, c64{0, 0}, c64{0, 0},  //
             c64{0, 0}, c64{0, 0}, c64{0, 0}, c64{1, 0},  //
             c64{0, 0}, c64{0, 0}, c64{1, 0}, c64{0, 0}});
  CHECK(max_norm_distance_up_to_scalar(got, cnot) < 1e-12);
}

TEST_CASE("CZ diagram gives diag(1,1,1,-1) up to scalar") {
  ZXDiagram d;
  ZXDiagram::Id a = d.add_spider(SpiderColor::kZ, Angle::zero());
  ZXDiagram::Id b = d.add_spider(SpiderColor::kZ, Angle::zero());
  d.add_edge(a, b, EdgeType::kHadamard);
  for (ZXDiagram::Id s : {a, b}) {
    ZXDiagram::Id in = d.add_boundary();
    ZXDiagram::Id out = d.add_boundary();
    d.inputs().push_back(in);
    d.outputs().push_back(out);
    d.add_edge(in, s, EdgeType::kPlain);
    d.add_edge(s, out, EdgeType::kPlain);
  }
  LinearMap cz = LinearMap::identity(4);
  cz.at(3, 3) = c64{-1, 0};
  CHECK(max_norm_distance_up_to_scalar(evaluate(d), cz) < 1e-12);
}

TEST_CASE("closed phase-free Z spider contracts to the scalar 2") {
  ZXDiagram d;
  d.add_spider(SpiderColor::kZ, Angle::zero());
  const LinearMap m = evaluate(d);
  CHECK(m.rows == 1);
  CHECK(m.cols == 1);
  CHECK(std::abs(m.materialized()[0] - c64{2.0, 0.0}) < 1e-12);
}

TEST_CASE("X spider matches the X-phase matrix exactly") {
  ZXDiagram d;
  const double a = 0.9;
  ZXDiagram::Id s = d.add_spider(SpiderColor::kX, Angle::radians(a));
  ZXDiagram::Id in = d.add_boundary();
  ZXDiagram::Id out = d.add_boundary();
  d.inputs().push_back(in);
  d.outputs().push_back(out);
  d.add_edge(in, s, EdgeType::kPlain);
  d.add_edge(s, out, EdgeType::kPlain);
  const c64 e = std::polar(1.0, a);
  const LinearMap expect =
      dense(2, 2, {0.5 * (c64{1, 0} + e), 0.5 * (c64{1, 0} - e),
                   0.5 * (c64{1, 0} - e), 0.5 * (c64{1, 0} + e)});
  CHECK(max_norm_distance_exact(evaluate(d), expect) < 1e-12);
}

TEST_CASE("round-trip soundness: diagram equals dense unitary up to scalar") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> nq(1, 4);
    std::uniform_int_distribution<std::size_t> no(0, 16);
    const NativeSeq s = random_native(nq(rng), no(rng), rng);
    const LinearMap direct = unitary_of(s);
    const LinearMap via_zx = evaluate(native_to_diagram(s), 64);
    CHECK(max_norm_distance_up_to_scalar(via_zx, direct) < 1e-8);
  }
}

TEST_CASE("to_graph_like preserves the map exactly, including the scalar") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const ZXDiagram d = random_diagram(rng);
    const ZXDiagram g = to_graph_like(d);
    std::string why;
    const bool ok = is_graph_like(g, &why);
    CHECK(ok);
    if (!ok) MESSAGE(why);
    const LinearMap before = evaluate(d, 64);
    const LinearMap after = evaluate(g, 64);
    CHECK(max_norm_distance_exact(before, after) < 1e-10);
  }
}

TEST_CASE("parallel Hadamard pair reduces with scalar 1/2") {
  ZXDiagram d;
  ZXDiagram::Id a = d.add_spider(SpiderColor::kZ, Angle::pi_frac(1, 4));
  ZXDiagram::Id b = d.add_spider(SpiderColor::kZ, Angle::pi_frac(1, 3));
  d.add_edge(a, b, EdgeType::kHadamard, 2);
  ZXDiagram g = to_graph_like(d);
  CHECK(g.edge_count(a, b).total() == 0);
  CHECK(std::abs(g.scalar() - c64{0.5, 0.0}) < 1e-15);
  CHECK(max_norm_distance_exact(evaluate(d), evaluate(g)) < 1e-12);
}

TEST_CASE("hadamard self-loop adds pi and 1/sqrt(2)") {
  ZXDiagram d;
  ZXDiagram::Id a = d.add_spider(SpiderColor::kZ, Angle::pi_frac(1, 4));
  ZXDiagram::Id in = d.add_boundary();
  d.inputs().push_back(in);
  d.add_edge(in, a, EdgeType::kPlain);
  d.add_edge(a, a, EdgeType::kHadamard);
  ZXDiagram g = to_graph_like(d);
  CHECK(g.vertex(a).phase == Angle::pi_frac(-3, 4));  // pi/4 + pi
  CHECK(std::abs(g.scalar() - c64{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(max_norm_distance_exact(evaluate(d), evaluate(g)) < 1e-12);
}

TEST_CASE("to_graph_like is idempotent") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const ZXDiagram d = random_diagram(rng);
    const ZXDiagram g1 = to_graph_like(d);
    const ZXDiagram g2 = to_graph_like(g1);
    CHECK(g1.num_spiders() == g2.num_spiders());
    CHECK(g1.hadamard_edge_count() == g2.hadamard_edge_count());
    CHECK(max_norm_distance_exact(evaluate(g1, 64), evaluate(g2, 64)) < 1e-12);
  }
}

TEST_CASE("evaluate refuses oversized diagrams, naming the cap") {
  NativeSeq s;
  s.num_qubits = 4;
  for (int i = 0; i < 12; ++i)
    s.ops.push_back(NativeOp{NativeOp::kHrz,
                             static_cast<std::size_t>(i % 4), 0,
                             Angle::zero()});
  const ZXDiagram d = native_to_diagram(s);
  CHECK(d.num_vertices() > 14);
  CHECK_THROWS_AS(evaluate(d), SizeCapError);
  CHECK_NOTHROW(evaluate(d, 64));
}

TEST_CASE("dot dump mentions phases and dashed Hadamard edges") {
  NativeSeq s;
  s.num_qubits = 1;
  s.ops.push_back(NativeOp{NativeOp::kHrz, 0, 0, Angle::pi_frac(1, 2)});
  const std::string dot = to_dot(native_to_diagram(s));
  CHECK(dot.find("pi/2") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("graph zx") != std::string::npos);
}
