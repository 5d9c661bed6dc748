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

#ifndef PHOTONC_ANGLE_HPP
#define PHOTONC_ANGLE_HPP

#include <cstdint>
#include <string>

namespace photonc {

// An angle in radians, stored exactly as (num/den)*pi whenever the source
// expression permits, with a plain double fallback otherwise. Exact angles
// are kept normalized to num/den in (-1, 1] (i.e. the angle lies in
// (-pi, pi]) with den > 0 and gcd(num, den) == 1.
//
// Clifford tests use the exact form only; float angles are never treated as
// Clifford, so no rewrite can fire from rounding noise.
class Angle {
 public:
  Angle() : exact_(true), num_(0), den_(1), val_(0.0) {}

  static Angle pi_frac(std::int64_t num, std::int64_t den);
  static Angle radians(double v);
  static Angle zero() { return Angle(); }
  static Angle pi() { return pi_frac(1, 1); }

  bool is_exact() const { return exact_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const { return val_; }

  bool is_zero() const { return exact_ && num_ == 0; }
  // 0 or pi (exact only).
  bool is_pauli() const { return exact_ && (num_ == 0 || den_ == 1); }
  // +pi/2 or -pi/2 (exact only).
  bool is_proper_clifford() const {
    return exact_ && den_ == 2 && (num_ == 1 || num_ == -1);
  }
  // any multiple of pi/2 (exact only).
  bool is_clifford() const { return exact_ && (den_ == 1 || den_ == 2); }

  Angle operator+(const Angle& o) const;
  Angle operator-(const Angle& o) const;
  Angle operator-() const;
  Angle plus_pi() const { return *this + pi(); }

  // Exact angles compare by (num, den); floats by value.
  bool operator==(const Angle& o) const;
  bool operator!=(const Angle& o) const { return !(*this == o); }

  // "0", "pi/2", "-3pi/4", or a decimal for float angles.
  std::string str() const;

 private:
  Angle(bool exact, std::int64_t num, std::int64_t den, double val)
      : exact_(exact), num_(num), den_(den), val_(val) {}

  bool exact_;
  std::int64_t num_, den_;
  double val_;
};

// Parses a QASM parameter expression (numbers, pi, + - * / and parentheses),
// tracking exact rational-pi form where possible. Throws std::runtime_error
// on malformed input.
Angle parse_angle_expr(const std::string& text);

}  // namespace photonc

#endif  // PHOTONC_ANGLE_HPP
