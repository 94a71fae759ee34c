#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "akform/operators.hpp"
#include "akform/polynomial.hpp"
#include "akform/vector_field.hpp"

namespace akform {

/// G_k = z^k + sum_{i=1}^{k-1} x_i z^{i-1}; quasihomogeneous of degree k.
Polynomial build_Gk(int k);

/// F = eps d/dx_1 - G_k d/dz; the principal part, quasidegree k-1.
VectorField build_F(int k);

/// A slow-fast system of type A_k, split as X = F + P with P a good
/// perturbation (quasiorder > k-1, zero eps component, every monomial
/// divisible by eps).
struct AkSystem {
  int k = 0;
  VectorField X;
  VectorField F;
  VectorField P;
};

struct Violation {
  std::string clause;
  std::string detail;
};

/// Shape check for the A_k-SFS normal form: eps component zero, x_1
/// component eps + eps^2 f_1, middle components divisible by eps^2, z
/// component -G_k + eps f_k, every f_i with zero constant term. On success
/// the field is split into F + P.
std::variant<AkSystem, std::vector<Violation>> validate_ak_sfs(
    const VectorField& x, int k);

/// Good-perturbation check: quasiorder > k-1, zero eps component, every
/// monomial of every component divisible by eps. Empty list means ok.
std::vector<Violation> validate_good_perturbation(const VectorField& p, int k);

/// Builds F + P directly from a good perturbation; throws
/// std::invalid_argument listing the violations when P is not good.
AkSystem make_good_system(int k, const VectorField& p);

/// Deterministic-in-seed sparse rational combination of good basis elements
/// over degrees k..max_degree. Always passes validate_good_perturbation.
VectorField random_good_perturbation(int k, long max_degree, std::uint64_t seed);

/// Gram adjoint of multiplication by the quasihomogeneous polynomial m as a
/// map P_a -> P_{a + deg m}; the result has dim P_a rows and
/// dim P_{a + deg m} columns. Throws std::invalid_argument when m is not
/// quasihomogeneous.
QMatrix mult_adjoint(int k, const Polynomial& m, long a);

/// Gram adjoint of Q -> F(Q) as a map P_a -> P_{a+k-1}; dim P_a rows,
/// dim P_{a+k-1} columns.
QMatrix fstar_block(int k, long a);

/// d* on H_beta assembled from its block structure: F* on the diagonal, the
/// coupling column (1, z*, ..., z^{k-2}*) feeding the z slot into the x_i
/// slots, and F* + Z* in the z-z block with Z = dG_k/dz. Must agree with
/// matrix_of_dstar(k, beta) entry for entry; the Gram-transpose route and
/// this block route are independent implementations. Requires beta >= k.
OperatorMatrix explicit_dstar_good(int k, long beta);

/// Kernel data of d* on H_beta and its intersection with the good subspace
/// (eps-divisible elements). dim_good_kernel is expected to be 0 at every
/// degree; a nonzero value would come with explicit witnesses, written in
/// good-basis coordinates and cleared to primitive integers.
struct KernelReport {
  int k = 0;
  long beta = 0;
  int dim_h = 0;
  int dim_good = 0;
  int dim_full_kernel = 0;
  int dim_good_kernel = 0;
  std::vector<QVector> witnesses;
};

/// One report per beta in [beta_min, beta_max]. Requires k <= beta_min <=
/// beta_max.
std::vector<KernelReport> verify_kernel_trivial(int k, long beta_min,
                                                long beta_max);

/// Trace of the structured elimination that proves the good kernel trivial:
/// the eps row of the full-space adjoint forces P_1 = 0, the identity
/// coupling block then forces P_k = 0, and the remaining components die by
/// recursion on the eps exponent. Every step is re-derived here from exact
/// pairings <[F,U], P> with explicit test fields U, not assumed.
struct EliminationStep {
  std::string rule;  // "eps-row", "identity-coupling", "eps-recursion"
  int component = 0;  // 0-based component of the eliminated coefficients
  long eps_level = 0; // eps exponent of the eliminated monomials
  int count = 0;
};

struct StructuredKernelProof {
  int k = 0;
  long beta = 0;
  int unknowns = 0;
  bool p1_forced_zero = false;
  bool pk_forced_zero = false;
  std::vector<EliminationStep> steps;
  bool complete = false;
  std::string failure;  // empty when complete
};

StructuredKernelProof structured_kernel_proof(int k, long beta);

}  // namespace akform
