#pragma once

#include <string>
#include <vector>

#include "akform/weights.hpp"

namespace akform {

/// Exponent vector over (x_1, ..., x_{k-1}, z, eps). The canonical order is
/// lexicographic on exponent vectors with x_1 most significant.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  /// The constant monomial 1 in k+1 variables.
  static Monomial one(int k) { return Monomial(std::vector<int>(k + 1, 0)); }
  static Monomial var(int k, int var, int power = 1);

  int nvars() const { return static_cast<int>(exps.size()); }
  long quasidegree(const Weights& w) const;
  int eps_exponent() const { return exps.empty() ? 0 : exps.back(); }
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps == b.exps;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exps < b.exps;
  }

  std::string str(int k) const;
};

}  // namespace akform
