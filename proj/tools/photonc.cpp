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

// photonc: compiles OpenQASM 2.0 circuits to measurement patterns for a
// photonic one-way processor, with a built-in verification oracle.
//
//   photonc compile grover.qasm --out build/grover
//   photonc verify grover.qasm
//   photonc stats bench/
//   photonc trace grover.qasm

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "photonc/linear_map.hpp"
#include "photonc/pipeline.hpp"

namespace fs = std::filesystem;
using namespace photonc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitInternalError = 3;

constexpr double kVerifyTolerance = 1e-8;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

struct Cli {
  std::string input;
  std::string out_dir = ".";
  int opt_level = 1;
  std::size_t verify_cap = 6;
  std::size_t pattern_cap = 20;
  std::string mgraph_override;
  unsigned long seed = 1;
  bool trace = false;
};

int cmd_compile(const Cli& cfg) {
  CompileOutput out;
  try {
    out = compile_qasm(read_file(cfg.input), cfg.opt_level, cfg.trace);
  } catch (const InvariantError& e) {
    std::cerr << "photonc compile [optimize]: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "photonc compile [frontend]: " << e.what() << "\n";
    return kExitInputError;
  }
  try {
    const fs::path dir(cfg.out_dir);
    write_file(dir / "mgraph.json", mgraph_to_json(out.mgraph));
    write_file(dir / "plan.json", plan_to_json(out.plan));
    write_file(dir / "instructions.json", program_to_json(out.program));
    if (cfg.trace) {
      std::ostringstream os;
      for (const RuleFiring& f : out.simplification.trace) {
        os << f.rule;
        for (auto id : f.spiders) os << " " << id;
        os << " [" << f.detail << "]\n";
      }
      write_file(dir / "trace.log", os.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "photonc compile [write]: " << e.what() << "\n";
    return kExitInputError;
  }
  std::cout << "compiled " << cfg.input << ": " << out.mgraph.vertices.size()
            << " vertices, " << out.plan.ghz_count() << " GHZ, "
            << out.plan.linear_count() << " linear, " << out.plan.photon_count
            << " photons\n";
  return kExitOk;
}

int cmd_verify(const Cli& cfg) {
  CompileOutput out;
  try {
    out = compile_qasm(read_file(cfg.input), cfg.opt_level, false);
  } catch (const InvariantError& e) {
    std::cerr << "photonc verify [optimize]: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "photonc verify [frontend]: " << e.what() << "\n";
    return kExitInputError;
  }
  if (out.circuit.num_qubits > cfg.verify_cap) {
    std::cout << "SKIP " << cfg.input << ": " << out.circuit.num_qubits
              << " qubits exceeds --verify-cap " << cfg.verify_cap << "\n";
    return kExitOk;
  }
  MGraph pattern = out.mgraph;
  if (!cfg.mgraph_override.empty()) {
    try {
      pattern = mgraph_from_json(read_file(cfg.mgraph_override));
    } catch (const std::exception& e) {
      std::cerr << "photonc verify [mgraph]: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  double dev = 0.0;
  try {
    dev = verify_deviation(out.native, pattern, cfg.pattern_cap);
  } catch (const SizeCapError& e) {
    std::cout << "SKIP " << cfg.input << ": " << e.what() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "photonc verify [oracle]: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  const bool pass = dev <= kVerifyTolerance;
  std::cout << (pass ? "PASS " : "FAIL ") << cfg.input
            << ": max-norm deviation " << dev << " (tolerance "
            << kVerifyTolerance << ")\n";
  return pass ? kExitOk : kExitVerifyFailure;
}

int cmd_stats(const Cli& cfg) {
  std::vector<fs::path> files;
  try {
    for (const auto& entry : fs::directory_iterator(cfg.input))
      if (entry.path().extension() == ".qasm") files.push_back(entry.path());
  } catch (const std::exception& e) {
    std::cerr << "photonc stats: " << e.what() << "\n";
    return kExitInputError;
  }
  std::sort(files.begin(), files.end());
  std::vector<StatsRow> rows;
  for (const fs::path& f : files) {
    StatsRow row;
    row.name = f.stem().string();
    try {
      CompileOutput out = compile_qasm(read_file(f.string()), cfg.opt_level);
      row = stats(out.program, out.plan);
      row.name = f.stem().string();
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(row);
  }
  std::cout << stats_table(rows);
  write_file(fs::path(cfg.out_dir) / "stats.csv", stats_csv(rows));
  return kExitOk;
}

int cmd_trace(const Cli& cfg) {
  try {
    CompileOutput out = compile_qasm(read_file(cfg.input), 1, true);
    for (const RuleFiring& f : out.simplification.trace) {
      std::cout << f.rule;
      for (auto id : f.spiders) std::cout << " " << id;
      std::cout << " [" << f.detail << "]\n";
    }
    std::cout << "# " << out.simplification.firings << " firings, "
              << out.mgraph.vertices.size() << " vertices\n";
  } catch (const InvariantError& e) {
    std::cerr << "photonc trace: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "photonc trace: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photonc: QASM to photonic one-way measurement patterns"};
  app.require_subcommand(1);
  Cli cfg;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("input", cfg.input, "input file")->required();
    sub->add_option("--opt-level", cfg.opt_level,
                    "0 = no simplification, 1 = full (default)")
        ->check(CLI::Range(0, 1));
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--seed", cfg.seed, "seed for randomized runs");
  };

  CLI::App* compile = app.add_subcommand("compile",
                                         "compile a .qasm file to "
                                         "mgraph/plan/instructions JSON");
  add_common(compile, true);
  compile->add_flag("--trace", cfg.trace, "write the rule-firing log");

  CLI::App* verify = app.add_subcommand(
      "verify", "compare the compiled pattern against the circuit unitary");
  add_common(verify, true);
  verify->add_option("--verify-cap", cfg.verify_cap,
                     "max qubits for the oracle (default 6)");
  verify->add_option("--pattern-cap", cfg.pattern_cap,
                     "max pattern vertices for the oracle (default 20)");
  verify->add_option("--mgraph", cfg.mgraph_override,
                     "verify this mgraph.json instead of the compiled one");

  CLI::App* st = app.add_subcommand("stats",
                                    "compile every .qasm in a directory and "
                                    "print a benchmark table");
  add_common(st, true);

  CLI::App* tr = app.add_subcommand("trace", "print the rule-firing log");
  add_common(tr, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) return cmd_compile(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (st->parsed()) return cmd_stats(cfg);
    if (tr->parsed()) return cmd_trace(cfg);
  } catch (const std::exception& e) {
    std::cerr << "photonc: internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitOk;
}
