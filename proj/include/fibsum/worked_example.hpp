#pragma once

#include <string>
#include <vector>

#include "fibsum/interval.hpp"

namespace fibsum {

/// One line of the k = 3, d = 1 reproduction: a computed constant next to
/// its reference value.
struct ExampleCheck {
  std::string name;
  std::string computed;
  std::string reference;
  std::string tolerance;
  /// Informational rows never fail.
  bool gating = true;
  bool pass = true;
};

/// Recomputes every constant of the reference k = 3, d = 1 worked example:
/// the minimal polynomial and heights, C_{4,6}, the A_i, lambda, the
/// doubling threshold, and the corrected-c_3 bound pipeline.
std::vector<ExampleCheck> reproduce_tribonacci_example(Precision precision_bits);

}  // namespace fibsum
