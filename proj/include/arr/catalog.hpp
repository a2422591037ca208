#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

// Built-in families and the fixed examples used throughout the tests.
//   boolean(n)  coordinate hyperplanes x_i in K^n
//   braid(n)    x_i - x_j, i < j (not essential)
//   bn(n)       x_i; x_i - x_j, x_i + x_j, i < j  (reflection arrangement B_n)
//   kn(n)       x_i; x_i + x_j, i < j             (B_n minus the braid part)
//   ex51              a rank-5 arrangement of 11 hyperplanes
//   ex51_restriction  its rank-4 restriction to the second hyperplane
//   ex51_localization its rank-3 localization at hyperplanes {1,2,4}
// The families require n >= 1; the fixed examples take no parameter.
// Throws std::invalid_argument for unknown names or bad parameters.
Arrangement builtin(const std::string& name, std::optional<int> n = std::nullopt);

std::vector<std::string> builtin_names();

}  // namespace arr
