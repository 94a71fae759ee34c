#include "akform/operators.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "akform/ak_system.hpp"

namespace akform {

namespace {

std::mutex op_cache_mutex;

OperatorMatrix build_matrix_of_d(int k, long gamma) {
  OperatorMatrix m;
  m.op_tag = OpTag::d;
  m.k = k;
  m.domain = vf_basis(k, gamma);
  m.codomain = vf_basis(k, gamma + k - 1);
  m.mat = QMatrix(m.codomain->dim(), m.domain->dim());
  const VectorField f = build_F(k);
  for (int j = 0; j < m.domain->dim(); ++j) {
    const VectorField image = lie_bracket(f, m.domain->element_field(j));
    QVector col;
    try {
      col = m.codomain->coordinates(image);
    } catch (const std::logic_error& e) {
      throw std::logic_error("matrix_of_d(k=" + std::to_string(k) +
                             ", gamma=" + std::to_string(gamma) +
                             "): " + e.what());
    }
    for (int i = 0; i < m.codomain->dim(); ++i) m.mat.at(i, j) = col[i];
  }
  return m;
}

/// Same as matrix_of_dstar but without the beta >= k guard; used internally
/// where the adjoint of d: H_gamma -> H_{gamma+k-1} is needed for gamma < 1.
OperatorMatrix dstar_any(int k, long beta) {
  const OperatorMatrix d = matrix_of_d(k, beta - k + 1);
  OperatorMatrix m;
  m.op_tag = OpTag::dstar;
  m.k = k;
  m.domain = d.codomain;
  m.codomain = d.domain;
  QVector inv_gram;
  inv_gram.reserve(d.domain->gram.size());
  for (const Rational& g : d.domain->gram) inv_gram.push_back(inverse(g));
  m.mat = d.mat.transpose().scale_cols(d.codomain->gram).scale_rows(inv_gram);
  return m;
}

}  // namespace

OperatorMatrix matrix_of_d(int k, long gamma) {
  static std::map<std::pair<int, long>, OperatorMatrix> cache;
  std::lock_guard<std::mutex> lock(op_cache_mutex);
  auto it = cache.find({k, gamma});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(k, gamma), build_matrix_of_d(k, gamma))
             .first;
  }
  return it->second;
}

OperatorMatrix matrix_of_dstar(int k, long beta) {
  if (beta < k) {
    throw std::invalid_argument("matrix_of_dstar: beta must be >= k");
  }
  return dstar_any(k, beta);
}

OperatorMatrix matrix_of_box(int k, long beta) {
  if (beta < k) {
    throw std::invalid_argument("matrix_of_box: beta must be >= k");
  }
  const OperatorMatrix a = dstar_any(k, beta);
  const OperatorMatrix d = matrix_of_d(k, beta - k + 1);
  OperatorMatrix m;
  m.op_tag = OpTag::box;
  m.k = k;
  m.domain = a.domain;
  m.codomain = a.domain;
  m.mat = d.mat * a.mat;
  return m;
}

QVector gram_diagonal(int k, long gamma) { return vf_basis(k, gamma)->gram; }

DecompositionReport verify_decomposition(int k, long gamma) {
  DecompositionReport rep;
  rep.k = k;
  rep.gamma = gamma;
  const OperatorMatrix d = matrix_of_d(k, gamma);
  rep.dim_h = d.domain->dim();
  const std::vector<QVector> ker = kernel_basis(d.mat);
  rep.dim_ker_d = static_cast<int>(ker.size());
  // Adjoint of d: H_gamma -> H_{gamma+k-1}; its image lives in H_gamma.
  const OperatorMatrix a = dstar_any(k, gamma + k - 1);
  rep.dim_im_dstar = static_cast<int>(rank(a.mat));
  rep.dims_ok = rep.dim_im_dstar + rep.dim_ker_d == rep.dim_h;
  rep.orthogonal = true;
  const QVector& g = d.domain->gram;
  for (std::size_t j = 0; j < a.mat.cols() && rep.orthogonal; ++j) {
    for (const QVector& v : ker) {
      Rational pairing;
      for (std::size_t i = 0; i < v.size(); ++i) {
        pairing += a.mat.at(i, j) * g[i] * v[i];
      }
      if (!pairing.is_zero()) {
        rep.orthogonal = false;
        rep.counterexample = "gram pairing of d* column " + std::to_string(j) +
                             " with a ker d vector is " + pairing.str();
        break;
      }
    }
  }
  if (!rep.dims_ok && !rep.counterexample) {
    rep.counterexample = "rank d* (" + std::to_string(rep.dim_im_dstar) +
                         ") + dim ker d (" + std::to_string(rep.dim_ker_d) +
                         ") != dim H (" + std::to_string(rep.dim_h) + ")";
  }
  rep.holds = rep.dims_ok && rep.orthogonal;
  return rep;
}

}  // namespace akform
