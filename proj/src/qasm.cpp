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

#include "photonc/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace photonc {

std::size_t NativeSeq::count_hrz() const {
  std::size_t n = 0;
  for (const auto& op : ops)
    if (op.kind == NativeOp::kHrz) ++n;
  return n;
}

std::size_t NativeSeq::count_cz() const { return ops.size() - count_hrz(); }

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::kH: return "h";
    case GateKind::kX: return "x";
    case GateKind::kY: return "y";
    case GateKind::kZ: return "z";
    case GateKind::kS: return "s";
    case GateKind::kSdg: return "sdg";
    case GateKind::kT: return "t";
    case GateKind::kTdg: return "tdg";
    case GateKind::kRx: return "rx";
    case GateKind::kRy: return "ry";
    case GateKind::kRz: return "rz";
    case GateKind::kU1: return "u1";
    case GateKind::kU2: return "u2";
    case GateKind::kU3: return "u3";
    case GateKind::kCx: return "cx";
    case GateKind::kCz: return "cz";
    case GateKind::kCcx: return "ccx";
    case GateKind::kSwap: return "swap";
  }
  return "?";
}

bool gate_is_two_qubit(GateKind k) {
  return k == GateKind::kCx || k == GateKind::kCz || k == GateKind::kSwap;
}

namespace {

struct GateSpec {
  GateKind kind;
  int num_params;
  int num_qubits;
};

const std::map<std::string, GateSpec>& gate_table() {
  static const std::map<std::string, GateSpec> table = {
      {"h", {GateKind::kH, 0, 1}},     {"x", {GateKind::kX, 0, 1}},
      {"y", {GateKind::kY, 0, 1}},     {"z", {GateKind::kZ, 0, 1}},
      {"s", {GateKind::kS, 0, 1}},     {"sdg", {GateKind::kSdg, 0, 1}},
      {"t", {GateKind::kT, 0, 1}},     {"tdg", {GateKind::kTdg, 0, 1}},
      {"rx", {GateKind::kRx, 1, 1}},   {"ry", {GateKind::kRy, 1, 1}},
      {"rz", {GateKind::kRz, 1, 1}},   {"u1", {GateKind::kU1, 1, 1}},
      {"u2", {GateKind::kU2, 2, 1}},   {"u3", {GateKind::kU3, 3, 1}},
      {"u", {GateKind::kU3, 3, 1}},    {"cx", {GateKind::kCx, 0, 2}},
      {"CX", {GateKind::kCx, 0, 2}},   {"cz", {GateKind::kCz, 0, 2}},
      {"ccx", {GateKind::kCcx, 0, 3}}, {"swap", {GateKind::kSwap, 0, 2}},
  };
  return table;
}

// Constructs rejected by the declared subset, as whole statements.
const std::set<std::string>& rejected_keywords() {
  static const std::set<std::string> kw = {"if",     "opaque", "gate",
                                           "reset",  "while",  "for",
                                           "def",    "defcal"};
  return kw;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Circuit run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    std::sort(measured_.begin(), measured_.end());
    measured_.erase(std::unique(measured_.begin(), measured_.end()),
                    measured_.end());
    circuit_.measured_qubits = measured_;
    return circuit_;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Circuit circuit_;
  std::vector<std::size_t> measured_;
  // register name -> (base flat index, size); cregs tracked only by name
  std::map<std::string, std::pair<std::size_t, std::size_t>> qregs_;
  std::set<std::string> cregs_;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
        advance();
      if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
          text_[pos_ + 1] == '/') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }

  std::string identifier() {
    skip_ws();
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) ||
                      peek() == '_'))
      fail("expected identifier");
    std::string id;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_'))
      id += advance();
    return id;
  }

  std::size_t integer() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer");
    std::size_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + static_cast<std::size_t>(advance() - '0');
    return v;
  }

  void statement() {
    skip_ws();
    if (at_end()) return;
    const int stmt_line = line_;
    std::string head = identifier();

    if (rejected_keywords().count(head))
      throw UnsupportedError(head, stmt_line);

    if (head == "OPENQASM") {
      skip_to_semicolon();
      return;
    }
    if (head == "include") {
      skip_to_semicolon();
      return;
    }
    if (head == "qreg" || head == "creg") {
      std::string name = identifier();
      expect('[', "after register name");
      std::size_t size = integer();
      expect(']', "after register size");
      expect(';', "after register declaration");
      if (head == "qreg") {
        if (qregs_.count(name)) fail("duplicate qreg '" + name + "'");
        qregs_[name] = {circuit_.num_qubits, size};
        circuit_.num_qubits += size;
      } else {
        cregs_.insert(name);
      }
      return;
    }
    if (head == "barrier") {
      skip_to_semicolon();
      return;
    }
    if (head == "measure") {
      measure_statement();
      return;
    }
    if (head == "id") {  // explicit identity, nothing to record
      skip_to_semicolon();
      return;
    }
    gate_statement(head, stmt_line);
  }

  void skip_to_semicolon() {
    while (!at_end() && peek() != ';') advance();
    expect(';', "at end of statement");
  }

  // qubit argument: name[i] -> single index, or bare name -> whole register
  struct QArg {
    std::size_t base;
    std::size_t size;    // 1 for indexed args
    bool broadcast;
  };

  QArg qubit_arg() {
    std::string name = identifier();
    auto it = qregs_.find(name);
    if (it == qregs_.end()) fail("unknown qreg '" + name + "'");
    if (eat('[')) {
      std::size_t idx = integer();
      expect(']', "after qubit index");
      if (idx >= it->second.second)
        fail("qubit index " + std::to_string(idx) + " out of range for '" +
             name + "'");
      return {it->second.first + idx, 1, false};
    }
    return {it->second.first, it->second.second, true};
  }

  void measure_statement() {
    QArg q = qubit_arg();
    skip_ws();
    if (!(eat('-') && eat('>'))) fail("expected '->' in measure");
    std::string cname = identifier();
    if (!cregs_.count(cname)) fail("unknown creg '" + cname + "'");
    if (eat('[')) {
      integer();
      expect(']', "after bit index");
    }
    expect(';', "after measure");
    for (std::size_t i = 0; i < q.size; ++i) measured_.push_back(q.base + i);
  }

  // Raw parameter expressions between parentheses, split on top-level commas.
  std::vector<std::string> param_exprs() {
    std::vector<std::string> out;
    std::string cur;
    int depth = 1;
    while (!at_end()) {
      char c = peek();
      if (c == '(') ++depth;
      if (c == ')') {
        --depth;
        if (depth == 0) {
          advance();
          out.push_back(cur);
          return out;
        }
      }
      if (c == ',' && depth == 1) {
        advance();
        out.push_back(cur);
        cur.clear();
        continue;
      }
      cur += advance();
    }
    fail("unterminated parameter list");
  }

  void gate_statement(const std::string& name, int stmt_line) {
    auto it = gate_table().find(name);
    if (it == gate_table().end()) throw UnsupportedError(name, stmt_line);
    const GateSpec& spec = it->second;

    std::vector<Angle> params;
    if (eat('(')) {
      for (const std::string& e : param_exprs()) {
        try {
          params.push_back(parse_angle_expr(e));
        } catch (const std::runtime_error& err) {
          fail(err.what());
        }
      }
    }
    if (static_cast<int>(params.size()) != spec.num_params)
      fail("gate '" + name + "' expects " + std::to_string(spec.num_params) +
           " parameter(s)");

    std::vector<QArg> args;
    args.push_back(qubit_arg());
    while (eat(',')) args.push_back(qubit_arg());
    expect(';', "after gate statement");
    if (static_cast<int>(args.size()) != spec.num_qubits)
      fail("gate '" + name + "' expects " + std::to_string(spec.num_qubits) +
           " qubit argument(s)");

    std::size_t reps = 1;
    for (const QArg& a : args)
      if (a.broadcast) {
        if (reps != 1 && a.size != reps)
          fail("mismatched register sizes in broadcast");
        reps = std::max(reps, a.size);
      }

    for (std::size_t r = 0; r < reps; ++r) {
      Gate g;
      g.kind = spec.kind;
      g.params = params;
      for (const QArg& a : args)
        g.qubits.push_back(a.broadcast ? a.base + r : a.base);
      std::set<std::size_t> distinct(g.qubits.begin(), g.qubits.end());
      if (distinct.size() != g.qubits.size())
        fail("gate '" + name + "' requires distinct qubit operands");
      circuit_.gates.push_back(std::move(g));
    }
  }
};

}  // namespace

Circuit parse_qasm(const std::string& text) { return Parser(text).run(); }

}  // namespace photonc
