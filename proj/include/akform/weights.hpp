#pragma once

#include <string>
#include <vector>

namespace akform {

/// Quasihomogeneous weights for the A_k family. Variables are ordered
/// (x_1, ..., x_{k-1}, z, eps) with weights (k, k-1, ..., 2, 1, 2k-1);
/// under them G_k is quasihomogeneous of degree k and F of degree k-1.
struct Weights {
  int k = 0;
  std::vector<int> r;  // size k+1

  int nvars() const { return k + 1; }
};

/// Throws std::invalid_argument for k < 2.
Weights weights(int k);

inline int z_index(int k) { return k - 1; }
inline int eps_index(int k) { return k; }

/// "x1", ..., "z", "eps".
std::string var_name(int k, int var);

}  // namespace akform
