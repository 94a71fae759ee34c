#pragma once

#include <map>
#include <optional>

#include "akform/ak_system.hpp"
#include "akform/vector_field.hpp"

namespace akform {

/// P_gamma = d(U) + R, the exact splitting of a degree-gamma piece along
/// Im d (+) ker d*.
struct HomologicalSplit {
  VectorField u;  // generator in H_{gamma-k+1}, free coordinates zero
  VectorField r;  // Gram-orthogonal projection onto ker d*
};

/// Solves the homological equation at degree gamma >= k. Requires p_gamma
/// quasihomogeneous of degree gamma with zero eps component. The projection
/// goes through the exact normal equations of the Gram form, so d(U) + R
/// reproduces p_gamma with exact rational equality and d*(R) = 0 exactly.
HomologicalSplit homological_solve(int k, long gamma, const VectorField& p_gamma);

/// Time-1 formal flow of U applied to X: the Lie series
/// X + [U,X] + [U,[U,X]]/2! + ... truncated above quasidegree n. Requires
/// quasiorder(U) >= 1 (otherwise the truncated series would not terminate)
/// and a zero eps component on U.
VectorField apply_generator(const VectorField& x, const VectorField& u,
                            const Weights& w, long n);

struct NormalizationResult {
  int k = 0;
  long order = 0;  // truncation quasidegree N
  std::map<long, VectorField> generators;      // gamma -> U_gamma
  std::map<long, VectorField> resonant_parts;  // gamma -> R_gamma, expected 0
  VectorField residual;                        // quasiorder > N (zero here)
  std::map<long, bool> goodness_log;  // running perturbation still good?
  bool all_resonant_zero = false;
};

/// Degree-by-degree normalization of sys.X through quasidegree n >= k.
/// Records one generator and one resonant part per degree; the resonant
/// part is the Gram projection of that degree's class onto ker d* and is
/// exactly zero precisely when the class is removable. A goodness violation
/// of the running perturbation is logged, not fatal.
NormalizationResult normalize(const AkSystem& sys, long n);

struct ConjugacyCertificate {
  bool holds = false;
  long checked_order = 0;
  struct Failure {
    long degree = 0;
    int component = 0;
    Monomial monomial;
  };
  std::optional<Failure> first_failure;
};

/// Recomputes the composite pushforward of sys.X through result.generators
/// from scratch and compares against F on every quasidegree <= order.
ConjugacyCertificate verify_conjugacy(const AkSystem& sys,
                                      const NormalizationResult& result);

}  // namespace akform
