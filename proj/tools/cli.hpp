#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "potts/ball.hpp"

namespace potts::cli {

enum class Command { classes, ground_states, regions, extend, verify, peierls };

struct RunConfig {
  int k = 2;
  Command command = Command::verify;
  std::optional<Coupling> coupling;
  std::string out;  // empty: stdout
  std::uint64_t seed = 42;
  bool quiet = false;

  bool list = false;                // classes
  std::optional<int> grid;          // regions: odd, >= 3
  Rational range = 2;               // regions
  std::string ball_json;            // extend
  int depth = 4;                    // extend: verification depth; peierls: perturbation depth
  int trials = 500;                 // peierls
  int flips = 5;                    // peierls
};

/// Exit status: 0 success, 1 verification failure, 2 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it; usage errors exit 2.
int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The six verification suites run by `verify`, in order.
std::vector<SuiteResult> run_verification(int k, std::uint64_t seed);

}  // namespace potts::cli
