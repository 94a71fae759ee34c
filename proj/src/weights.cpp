#include "akform/weights.hpp"

#include <stdexcept>

namespace akform {

Weights weights(int k) {
  if (k < 2) throw std::invalid_argument("weights: k must be >= 2");
  Weights w;
  w.k = k;
  w.r.resize(k + 1);
  for (int j = 0; j < k; ++j) w.r[j] = k - j;  // x_1..x_{k-1}, then z
  w.r[k] = 2 * k - 1;                          // eps
  return w;
}

std::string var_name(int k, int var) {
  if (var < 0 || var > k) throw std::invalid_argument("var_name: index out of range");
  if (var == z_index(k)) return "z";
  if (var == eps_index(k)) return "eps";
  return "x" + std::to_string(var + 1);
}

}  // namespace akform
