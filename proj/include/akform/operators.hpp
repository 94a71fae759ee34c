#pragma once

#include <memory>
#include <optional>
#include <string>

#include "akform/bases.hpp"
#include "akform/qmatrix.hpp"

namespace akform {

enum class OpTag { d, dstar, box };

/// Matrix of a graded operator between vector-field spaces. Column j holds
/// the image of domain element j expanded in the codomain basis, so the
/// matrix has codomain->dim() rows and domain->dim() columns.
struct OperatorMatrix {
  OpTag op_tag = OpTag::d;
  int k = 0;
  std::shared_ptr<const VFBasis> domain;
  std::shared_ptr<const VFBasis> codomain;
  QMatrix mat;
};

/// d(U) = [F, U] as a map H_gamma -> H_{gamma+k-1}. Cached per (k, gamma).
/// Throws std::logic_error if a bracket image leaves the codomain span
/// (that would be a grading bug, not a caller error).
OperatorMatrix matrix_of_d(int k, long gamma);

/// Gram adjoint d*: H_beta -> H_{beta-k+1}, defined by
/// <d(U), V>_{beta} = <U, d*(V)>_{beta-k+1} and computed as
/// G_dom^{-1} D^T G_cod from D = matrix_of_d(k, beta-k+1).
/// Requires beta >= k.
OperatorMatrix matrix_of_dstar(int k, long beta);

/// box_beta = d . d* : H_beta -> H_beta. Requires beta >= k.
OperatorMatrix matrix_of_box(int k, long beta);

/// Diagonal of the Gram matrix of H_gamma, in basis order.
QVector gram_diagonal(int k, long gamma);

/// Exactness certificate for H_gamma = Im d* (+) ker d, the orthogonal
/// splitting behind the homological solve: rank counts must add up and the
/// two factors must pair to zero under the Gram form, all exactly.
struct DecompositionReport {
  int k = 0;
  long gamma = 0;
  int dim_h = 0;
  int dim_im_dstar = 0;
  int dim_ker_d = 0;
  bool dims_ok = false;
  bool orthogonal = false;
  bool holds = false;
  std::optional<std::string> counterexample;
};

DecompositionReport verify_decomposition(int k, long gamma);

}  // namespace akform
