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

#include "photonc/angle.hpp"

using photonc::Angle;
using photonc::parse_angle_expr;

TEST_CASE("exact angles normalize into (-pi, pi]") {
  CHECK(Angle::pi_frac(3, 2) == Angle::pi_frac(-1, 2));
  CHECK(Angle::pi_frac(2, 1) == Angle::zero());
  CHECK(Angle::pi_frac(-1, 1) == Angle::pi());
  CHECK(Angle::pi_frac(7, 4) == Angle::pi_frac(-1, 4));
  CHECK(Angle::pi_frac(4, 8) == Angle::pi_frac(1, 2));
}

TEST_CASE("arithmetic keeps exactness") {
  const Angle a = Angle::pi_frac(1, 4);
  CHECK((a + a) == Angle::pi_frac(1, 2));
  CHECK((a - a).is_zero());
  CHECK((-a) == Angle::pi_frac(-1, 4));
  CHECK((a + a + a + a) == Angle::pi());
  CHECK((a + a + a + a + a + a + a + a).is_zero());
  CHECK(Angle::pi().plus_pi().is_zero());
}

TEST_CASE("clifford predicates use the exact form only") {
  CHECK(Angle::zero().is_pauli());
  CHECK(Angle::pi().is_pauli());
  CHECK(Angle::pi_frac(1, 2).is_proper_clifford());
  CHECK(Angle::pi_frac(-1, 2).is_proper_clifford());
  CHECK(!Angle::pi_frac(1, 4).is_clifford());
  // A float that happens to equal pi/2 numerically is never Clifford.
  const Angle f = Angle::radians(std::acos(0.0));
  CHECK(!f.is_clifford());
  CHECK(!f.is_pauli());
}

TEST_CASE("expression parsing tracks rational multiples of pi") {
  CHECK(parse_angle_expr("pi/4") == Angle::pi_frac(1, 4));
  CHECK(parse_angle_expr("-pi") == Angle::pi());  // normalized to +pi
  CHECK(parse_angle_expr("3*pi/2") == Angle::pi_frac(-1, 2));
  CHECK(parse_angle_expr("2*pi/8") == Angle::pi_frac(1, 4));
  CHECK(parse_angle_expr("0.5*pi") == Angle::pi_frac(1, 2));
  CHECK(parse_angle_expr("(pi/2 + pi/2)") == Angle::pi());
  CHECK(parse_angle_expr("0") == Angle::zero());
  CHECK(parse_angle_expr("pi - pi").is_zero());
}

TEST_CASE("plain decimals fall back to floats") {
  const Angle a = parse_angle_expr("0.785398163397448");
  CHECK(!a.is_exact());
  CHECK(a.radians() == doctest::Approx(0.785398163397448));
  const Angle b = parse_angle_expr("1.5 + 0.25");
  CHECK(!b.is_exact());
  CHECK(b.radians() == doctest::Approx(1.75));
}

TEST_CASE("malformed expressions are rejected") {
  CHECK_THROWS(parse_angle_expr("pi/"));
  CHECK_THROWS(parse_angle_expr("foo"));
  CHECK_THROWS(parse_angle_expr("1/0"));
  CHECK_THROWS(parse_angle_expr("(pi"));
}

TEST_CASE("str renders k pi / d") {
  CHECK(Angle::pi_frac(1, 2).str() == "pi/2");
  CHECK(Angle::pi_frac(-3, 4).str() == "-3pi/4");
  CHECK(Angle::zero().str() == "0");
  CHECK(Angle::pi().str() == "pi");
}
