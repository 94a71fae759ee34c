#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "akform/qmatrix.hpp"
#include "akform/vector_field.hpp"

namespace akform {

/// Ordered monomial basis of the quasihomogeneous piece P_delta, with the
/// diagonal Gram weights (s!)^r / delta! of the factorial inner product.
struct PolyBasis {
  int k = 0;
  long delta = 0;
  std::vector<Monomial> monomials;  // ascending lex, x_1 most significant
  std::vector<Rational> gram;
  std::map<Monomial, int> index;

  int dim() const { return static_cast<int>(monomials.size()); }
  std::optional<int> index_of(const Monomial& m) const;
};

/// Ordered basis of H_gamma: elements m * d/dx_i with i ranging over the
/// first k components (the eps component is excluded) and m running through
/// the monomial basis of P_{gamma + r_i}. Component-major order.
struct VFBasis {
  struct Element {
    int comp = 0;  // 0-based; comp == k-1 is the z direction
    Monomial mono;
  };

  int k = 0;
  long gamma = 0;
  std::vector<Element> elements;
  std::vector<Rational> gram;
  std::map<std::pair<int, Monomial>, int> index;

  int dim() const { return static_cast<int>(elements.size()); }
  std::optional<int> index_of(int comp, const Monomial& m) const;

  VectorField element_field(int i) const;
  VectorField combine(const QVector& coords) const;
  /// Coordinates of a field in this basis; throws std::logic_error when the
  /// field lies outside the span (a grading bug).
  QVector coordinates(const VectorField& x) const;
  /// Indices of the elements whose monomial is divisible by eps.
  std::vector<int> good_indices() const;
};

/// All monomials with dot(r, s) = delta, ascending lex; empty for delta < 0.
PolyBasis enumerate_poly_basis(int k, long delta);

VFBasis enumerate_vf_basis(int k, long gamma);

/// Sub-basis of enumerate_vf_basis(k, beta) with eps-divisible monomials.
/// Throws std::invalid_argument for beta < k (not a good-perturbation degree).
VFBasis enumerate_good_basis(int k, long beta);

/// Cached variants; safe for concurrent use.
std::shared_ptr<const PolyBasis> poly_basis(int k, long delta);
std::shared_ptr<const VFBasis> vf_basis(int k, long gamma);

}  // namespace akform
