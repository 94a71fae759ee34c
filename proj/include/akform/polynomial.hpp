#pragma once

#include <map>
#include <optional>
#include <string>

#include "akform/monomial.hpp"
#include "akform/rational.hpp"

namespace akform {

/// Sparse multivariate polynomial over exact rationals in the k+1 variables
/// (x_1, ..., x_{k-1}, z, eps). Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int k) : k_(k) {}
  static Polynomial constant(int k, const Rational& c);
  static Polynomial monomial(int k, const Monomial& m, const Rational& c = Rational(1));

  int k() const { return k_; }
  int nvars() const { return k_ + 1; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  /// Formal partial derivative with respect to variable index var (0-based).
  Polynomial partial(int var) const;

  /// True when every term has exps[var] >= power.
  bool divisible_by(int var, int power) const;
  /// Exact division by var^power; throws std::invalid_argument when not divisible.
  Polynomial divide_by_var_power(int var, int power) const;
  /// Substitutes var = 0 (drops every term with a positive exponent there).
  Polynomial eval_var_zero(int var) const;

  /// Common quasidegree of all terms, or nullopt when zero or mixed.
  std::optional<long> homogeneous_degree(const Weights& w) const;
  /// Zero counts as quasihomogeneous of every degree.
  bool is_quasihomogeneous(const Weights& w, long delta) const;
  /// Minimal quasidegree over the terms; nullopt for the zero polynomial.
  std::optional<long> quasiorder(const Weights& w) const;
  /// Terms of quasidegree exactly delta.
  Polynomial graded_part(const Weights& w, long delta) const;

  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  int k_ = 0;
  std::map<Monomial, Rational> terms_;
};

}  // namespace akform
