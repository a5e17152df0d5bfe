#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace gmm {

struct VerifyOptions {
  std::vector<double> ps{1.0, 2.0, std::numeric_limits<double>::infinity()};
  /// Cubic graphs are enumerated for every even order in 4..max_cubic_order.
  int max_cubic_order = 8;
  /// Also run the non-Hamiltonian Petersen graph through the cycle reduction.
  bool petersen = true;
  /// Local-search restarts for the 3-Partition NO-instance falsification run.
  int restarts = 10000;
  int colored_pairs = 20;
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;
  double seconds = 0;
};

/// hamcycle, path, 3part, cut, colorconv, gadget.
std::vector<std::string> verify_suite_names();

/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace gmm
