#include "arr/catalog.hpp"

#include <stdexcept>

namespace arr {

namespace {

Vec unit(int dim, int i) {
  Vec v(dim);
  v[i - 1] = 1;
  return v;
}

Vec pair_form(int dim, int i, int j, int sign_j) {
  Vec v(dim);
  v[i - 1] = 1;
  v[j - 1] = sign_j;
  return v;
}

std::vector<Vec> boolean_normals(int n) {
  std::vector<Vec> out;
  for (int i = 1; i <= n; ++i) out.push_back(unit(n, i));
  return out;
}

std::vector<Vec> braid_normals(int n) {
  std::vector<Vec> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(pair_form(n, i, j, -1));
  return out;
}

std::vector<Vec> bn_normals(int n) {
  std::vector<Vec> out = boolean_normals(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(pair_form(n, i, j, -1));
      out.push_back(pair_form(n, i, j, +1));
    }
  return out;
}

std::vector<Vec> kn_normals(int n) {
  std::vector<Vec> out = boolean_normals(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(pair_form(n, i, j, +1));
  return out;
}

Vec from_ints(const std::vector<int>& xs) {
  Vec v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
  return v;
}

// Defining forms, one per row:
// x1, x2, x3, x4, x5, x1+x3, x1+x3+x5, x1+x2+x4, x1+x2+x4+x5,
// x1+x2+x3+x5, x1+x2+x3+x4+x5.
std::vector<Vec> ex51_normals() {
  return {
      from_ints({1, 0, 0, 0, 0}), from_ints({0, 1, 0, 0, 0}), from_ints({0, 0, 1, 0, 0}),
      from_ints({0, 0, 0, 1, 0}), from_ints({0, 0, 0, 0, 1}), from_ints({1, 0, 1, 0, 0}),
      from_ints({1, 0, 1, 0, 1}), from_ints({1, 1, 0, 1, 0}), from_ints({1, 1, 0, 1, 1}),
      from_ints({1, 1, 1, 0, 1}), from_ints({1, 1, 1, 1, 1}),
  };
}

// Restriction of ex51 to its second hyperplane, written in the fixed order
// x1, x2, x3, x4, x1+x3, x1+x3+x4, x1+x2, x1+x2+x4, x1+x2+x3+x4.
std::vector<Vec> ex51_restriction_normals() {
  return {
      from_ints({1, 0, 0, 0}), from_ints({0, 1, 0, 0}), from_ints({0, 0, 1, 0}),
      from_ints({0, 0, 0, 1}), from_ints({1, 0, 1, 0}), from_ints({1, 0, 1, 1}),
      from_ints({1, 1, 0, 0}), from_ints({1, 1, 0, 1}), from_ints({1, 1, 1, 1}),
  };
}

// Localization of ex51 at the rank-3 flat through hyperplanes 1, 2, 4;
// hyperplane 8 (x1+x2+x4) is the only other member.
std::vector<Vec> ex51_localization_normals() {
  return {
      from_ints({1, 0, 0, 0, 0}),
      from_ints({0, 1, 0, 0, 0}),
      from_ints({0, 0, 0, 1, 0}),
      from_ints({1, 1, 0, 1, 0}),
  };
}

}  // namespace

Arrangement builtin(const std::string& name, std::optional<int> n) {
  bool takes_n = (name == "boolean" || name == "braid" || name == "bn" || name == "kn");
  if (takes_n) {
    if (!n) throw std::invalid_argument("builtin '" + name + "' needs a parameter n >= 1");
    if (*n < 1) throw std::invalid_argument("builtin '" + name + "' needs n >= 1, got " + std::to_string(*n));
    if (name == "boolean") return Arrangement(*n, boolean_normals(*n));
    if (name == "braid") return Arrangement(*n, braid_normals(*n));
    if (name == "bn") return Arrangement(*n, bn_normals(*n));
    return Arrangement(*n, kn_normals(*n));
  }
  if (name == "ex51" || name == "ex51_restriction" || name == "ex51_localization") {
    if (n) throw std::invalid_argument("builtin '" + name + "' takes no parameter");
    if (name == "ex51") return Arrangement(5, ex51_normals());
    if (name == "ex51_restriction") return Arrangement(4, ex51_restriction_normals());
    return Arrangement(5, ex51_localization_normals());
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"bn", "boolean", "braid", "ex51", "ex51_localization", "ex51_restriction", "kn"};
}

}  // namespace arr
