#pragma once

#include <map>
#include <optional>
#include <vector>

#include "akform/polynomial.hpp"

namespace akform {

/// Polynomial vector field on R^{k+1}. Component i multiplies d/dx_i with
/// the variable order (x_1, ..., x_{k-1}, z, eps); indices are 0-based, so
/// component k-1 is the z direction and component k the eps direction.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int k) : k_(k), comps_(k + 1, Polynomial(k)) {}

  int k() const { return k_; }
  int ncomps() const { return k_ + 1; }

  const Polynomial& component(int i) const { return comps_.at(i); }
  void set_component(int i, Polynomial p);
  void add_to_component(int i, const Polynomial& p);
  const Polynomial& eps_component() const { return comps_.at(eps_index(k_)); }
  bool eps_component_zero() const { return eps_component().is_zero(); }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Rational& c);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.k_ == b.k_ && a.comps_ == b.comps_;
  }

  std::string str() const;

 private:
  void check_compatible(const VectorField& o) const;

  int k_ = 0;
  std::vector<Polynomial> comps_;
};

/// X(g) = sum_j X_j dg/dx_j.
Polynomial directional_derivative(const VectorField& x, const Polynomial& g);

/// [X, Y], component i = X(Y_i) - Y(X_i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// Splits X into quasihomogeneous pieces: component i of the value at key
/// gamma collects the monomials of polynomial quasidegree gamma + r_i.
std::map<long, VectorField> quasi_components(const VectorField& x, const Weights& w);

/// Minimum key of quasi_components; nullopt stands for +infinity (zero field).
std::optional<long> quasiorder(const VectorField& x, const Weights& w);

bool is_quasihomogeneous(const VectorField& x, const Weights& w, long gamma);

/// Drops every term whose vector-field quasidegree exceeds n.
VectorField truncate_above(const VectorField& x, const Weights& w, long n);

}  // namespace akform
