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

#ifndef PHOTONC_QASM_HPP
#define PHOTONC_QASM_HPP

#include <stdexcept>
#include <string>

#include "photonc/circuit.hpp"

namespace photonc {

// Syntax error with source position.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// A syntactically valid construct outside the supported subset (classical
// control, opaque/custom gates, ...). Carries the construct name.
struct UnsupportedError : std::runtime_error {
  UnsupportedError(const std::string& construct, int line)
      : std::runtime_error("unsupported construct '" + construct +
                           "' at line " + std::to_string(line)),
        construct(construct) {}
  std::string construct;
};

// Parses the OpenQASM 2.0 subset: qreg/creg declarations, the standard gate
// vocabulary (u1/u2/u3, x/y/z/h/s/t/sdg/tdg, rx/ry/rz, cx/cz/ccx/swap),
// barrier (ignored) and measure (final-output marker).
Circuit parse_qasm(const std::string& text);

}  // namespace photonc

#endif  // PHOTONC_QASM_HPP
