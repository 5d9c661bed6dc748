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

#include "photonc/angle.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace photonc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::int64_t kOverflowLimit = std::int64_t{1} << 40;

struct Frac {
  std::int64_t num, den;  // den > 0, reduced
};

Frac reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

bool would_overflow(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return false;
  const std::int64_t aa = a < 0 ? -a : a;
  const std::int64_t bb = b < 0 ? -b : b;
  return aa > kOverflowLimit / bb;
}

}  // namespace

Angle Angle::pi_frac(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::runtime_error("angle: zero denominator");
  Frac f = reduce(num, den);
  // Normalize into (-pi, pi]: num/den in (-1, 1].
  std::int64_t two_den = 2 * f.den;
  std::int64_t m = f.num % two_den;
  if (m <= -f.den)
    m += two_den;
  else if (m > f.den)
    m -= two_den;
  f = reduce(m, f.den);
  return Angle(true, f.num, f.den,
               kPi * static_cast<double>(f.num) / static_cast<double>(f.den));
}

Angle Angle::radians(double v) {
  if (v == 0.0) return zero();
  return Angle(false, 0, 1, v);
}

Angle Angle::operator+(const Angle& o) const {
  if (exact_ && o.exact_) {
    if (!would_overflow(num_, o.den_) && !would_overflow(o.num_, den_) &&
        !would_overflow(den_, o.den_)) {
      return pi_frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
  }
  double v = std::remainder(val_ + o.val_, 2.0 * kPi);
  return radians(v);
}

Angle Angle::operator-(const Angle& o) const { return *this + (-o); }

Angle Angle::operator-() const {
  if (exact_) return pi_frac(-num_, den_);
  return radians(-val_);
}

bool Angle::operator==(const Angle& o) const {
  if (exact_ != o.exact_) return false;
  if (exact_) return num_ == o.num_ && den_ == o.den_;
  return val_ == o.val_;
}

std::string Angle::str() const {
  if (!exact_) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", val_);
    return buf;
  }
  if (num_ == 0) return "0";
  std::string s = num_ < 0 ? "-" : "";
  const std::int64_t a = num_ < 0 ? -num_ : num_;
  if (a != 1) s += std::to_string(a);
  s += "pi";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

// ---------------------------------------------------------------------------
// Parameter expression parsing.
//
// Values are tracked as a plain rational, a rational multiple of pi, or a
// float. Only the rational-pi outcome yields an exact Angle.

namespace {

struct PVal {
  enum Kind { kRational, kRationalPi, kFloat } kind;
  std::int64_t num = 0, den = 1;
  double val = 0.0;

  static PVal rational(std::int64_t n, std::int64_t d) {
    Frac f = reduce(n, d);
    return {kRational, f.num, f.den,
            static_cast<double>(f.num) / static_cast<double>(f.den)};
  }
  static PVal rational_pi(std::int64_t n, std::int64_t d) {
    Frac f = reduce(n, d);
    return {kRationalPi, f.num, f.den,
            kPi * static_cast<double>(f.num) / static_cast<double>(f.den)};
  }
  static PVal flt(double v) { return {kFloat, 0, 1, v}; }
};

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  PVal parse() {
    PVal v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters in expression");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("angle expression: " + msg + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PVal expr() {
    PVal v = term();
    for (;;) {
      if (eat('+'))
        v = add(v, term(), +1);
      else if (eat('-'))
        v = add(v, term(), -1);
      else
        return v;
    }
  }

  PVal term() {
    PVal v = unary();
    for (;;) {
      if (eat('*'))
        v = mul(v, unary());
      else if (eat('/'))
        v = div(v, unary());
      else
        return v;
    }
  }

  PVal unary() {
    if (eat('-')) return negate(unary());
    if (eat('+')) return unary();
    return atom();
  }

  PVal atom() {
    skip_ws();
    if (eat('(')) {
      PVal v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() &&
        (std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isalpha(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      const std::string word = s_.substr(start, pos_ - start);
      if (word == "pi") return PVal::rational_pi(1, 1);
      fail("unknown identifier '" + word + "'");
    }
    return number();
  }

  PVal number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::size_t int_digits = pos_ - start;
    std::size_t frac_digits = 0;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      frac_digits = pos_ - fs;
    }
    if (int_digits == 0 && frac_digits == 0) fail("expected number");
    bool has_exp = false;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      has_exp = true;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
    }
    const std::string text = s_.substr(start, pos_ - start);
    if (!has_exp && int_digits + frac_digits <= 15) {
      std::int64_t mant = 0;
      for (char c : text)
        if (c != '.') mant = mant * 10 + (c - '0');
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
      return PVal::rational(mant, den);
    }
    return PVal::flt(std::stod(text));
  }

  static PVal negate(PVal v) {
    switch (v.kind) {
      case PVal::kRational:
        return PVal::rational(-v.num, v.den);
      case PVal::kRationalPi:
        return PVal::rational_pi(-v.num, v.den);
      default:
        return PVal::flt(-v.val);
    }
  }

  static PVal add(PVal a, PVal b, int sign) {
    if (sign < 0) b = negate(b);
    if (a.kind == b.kind && a.kind != PVal::kFloat &&
        !would_overflow(a.num, b.den) && !would_overflow(b.num, a.den) &&
        !would_overflow(a.den, b.den)) {
      auto make = a.kind == PVal::kRational ? PVal::rational : PVal::rational_pi;
      return make(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    if (a.kind == PVal::kRational && a.num == 0) return b;
    if (b.kind == PVal::kRational && b.num == 0) return a;
    return PVal::flt(a.val + b.val);
  }

  static PVal mul(PVal a, PVal b) {
    const bool pi_a = a.kind == PVal::kRationalPi;
    const bool pi_b = b.kind == PVal::kRationalPi;
    if (a.kind != PVal::kFloat && b.kind != PVal::kFloat && !(pi_a && pi_b) &&
        !would_overflow(a.num, b.num) && !would_overflow(a.den, b.den)) {
      auto make = (pi_a || pi_b) ? PVal::rational_pi : PVal::rational;
      return make(a.num * b.num, a.den * b.den);
    }
    return PVal::flt(a.val * b.val);
  }

  static PVal div(PVal a, PVal b) {
    if (b.kind != PVal::kFloat && b.num == 0)
      throw std::runtime_error("angle expression: division by zero");
    if (a.kind != PVal::kFloat && b.kind == PVal::kRational &&
        !would_overflow(a.num, b.den) && !would_overflow(a.den, b.num)) {
      auto make = a.kind == PVal::kRationalPi ? PVal::rational_pi : PVal::rational;
      return make(a.num * b.den, a.den * b.num);
    }
    if (b.val == 0.0) throw std::runtime_error("angle expression: division by zero");
    return PVal::flt(a.val / b.val);
  }
};

}  // namespace

Angle parse_angle_expr(const std::string& text) {
  PVal v = ExprParser(text).parse();
  switch (v.kind) {
    case PVal::kRationalPi:
      return Angle::pi_frac(v.num, v.den);
    case PVal::kRational:
      if (v.num == 0) return Angle::zero();
      return Angle::radians(v.val);
    default:
      return Angle::radians(v.val);
  }
}

}  // namespace photonc
