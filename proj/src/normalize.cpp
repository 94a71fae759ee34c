#include "akform/normalize.hpp"

#include <stdexcept>

#include "akform/operators.hpp"

namespace akform {

HomologicalSplit homological_solve(int k, long gamma,
                                   const VectorField& p_gamma) {
  const Weights w = weights(k);
  if (gamma < k) {
    throw std::invalid_argument("homological_solve: gamma must be >= k");
  }
  if (!p_gamma.eps_component_zero()) {
    throw std::invalid_argument(
        "homological_solve: perturbation has a nonzero eps component");
  }
  if (!is_quasihomogeneous(p_gamma, w, gamma)) {
    throw std::invalid_argument(
        "homological_solve: input is not quasihomogeneous of degree " +
        std::to_string(gamma));
  }

  const OperatorMatrix d = matrix_of_d(k, gamma - k + 1);
  const QVector b = d.codomain->coordinates(p_gamma);
  const QVector& g = d.codomain->gram;

  // Normal equations of the Gram form: (D^T G D) c = D^T G b. They are
  // always consistent; b - Dc is then the exact projection onto ker d*.
  const QMatrix dt = d.mat.transpose();
  const QMatrix gd = d.mat.scale_rows(g);
  const QMatrix m = dt * gd;
  QVector gb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) gb[i] = g[i] * b[i];
  const QVector rhs = dt.apply(gb);
  const auto c = solve(m, rhs);
  if (!c) {
    throw std::logic_error(
        "homological_solve: normal equations inconsistent (impossible for a "
        "Gram form)");
  }

  const QVector dc = d.mat.apply(*c);
  QVector r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - dc[i];

  // d*(R) = 0 must hold exactly; anything else is an implementation bug.
  const OperatorMatrix a = matrix_of_dstar(k, gamma);
  for (const Rational& entry : a.mat.apply(r)) {
    if (!entry.is_zero()) {
      throw std::logic_error(
          "homological_solve: residual escaped ker d* (projection bug)");
    }
  }

  // Solve d(U) = p_gamma - R exactly; consistent by construction, free
  // variables pinned to zero for determinism.
  const auto u = solve(d.mat, dc);
  if (!u) {
    throw std::logic_error(
        "homological_solve: d(U) = P - R has no solution (projection bug)");
  }

  HomologicalSplit split;
  split.u = d.domain->combine(*u);
  split.r = d.codomain->combine(r);
  return split;
}

VectorField apply_generator(const VectorField& x, const VectorField& u,
                            const Weights& w, long n) {
  if (!u.eps_component_zero()) {
    throw std::invalid_argument(
        "apply_generator: generator has a nonzero eps component");
  }
  const auto ord = quasiorder(u, w);
  if (ord && *ord <= 0) {
    throw std::invalid_argument(
        "apply_generator: generator quasiorder must be >= 1, got " +
        std::to_string(*ord));
  }
  VectorField result = truncate_above(x, w, n);
  VectorField term = result;
  for (long j = 1; !term.is_zero(); ++j) {
    term = truncate_above(lie_bracket(u, term), w, n);
    term *= Rational(1, j);
    result += term;
  }
  return result;
}

NormalizationResult normalize(const AkSystem& sys, long n) {
  const int k = sys.k;
  const Weights w = weights(k);
  if (n < k) {
    throw std::invalid_argument("normalize: order must be >= k");
  }

  NormalizationResult res;
  res.k = k;
  res.order = n;
  res.residual = VectorField(k);

  VectorField running = truncate_above(sys.X, w, n);
  VectorField resonant_sum(k);

  for (long gamma = k; gamma <= n; ++gamma) {
    const VectorField perturbation = running - sys.F;
    res.goodness_log[gamma] =
        validate_good_perturbation(perturbation, k).empty();

    // Below-degree terms must all be recorded resonant parts; anything else
    // means a flow failed to cancel its degree.
    const VectorField unexplained = perturbation - resonant_sum;
    const auto parts = quasi_components(unexplained, w);
    for (const auto& [deg, part] : parts) {
      if (deg < gamma) {
        throw std::logic_error(
            "normalize: stray terms of quasidegree " + std::to_string(deg) +
            " below the current degree " + std::to_string(gamma));
      }
    }

    const auto it = parts.find(gamma);
    if (it == parts.end()) {
      res.generators[gamma] = VectorField(k);
      res.resonant_parts[gamma] = VectorField(k);
      continue;
    }

    const HomologicalSplit split = homological_solve(k, gamma, it->second);
    res.generators[gamma] = split.u;
    res.resonant_parts[gamma] = split.r;
    resonant_sum += split.r;
    running = apply_generator(running, split.u, w, n);
  }

  res.residual = running - sys.F - resonant_sum;
  const auto left = quasiorder(res.residual, w);
  if (left && *left <= n) {
    throw std::logic_error("normalize: residual has quasiorder <= order");
  }
  res.all_resonant_zero = true;
  for (const auto& [gamma, r] : res.resonant_parts) {
    if (!r.is_zero()) res.all_resonant_zero = false;
  }
  return res;
}

ConjugacyCertificate verify_conjugacy(const AkSystem& sys,
                                      const NormalizationResult& result) {
  const Weights w = weights(sys.k);
  const long n = result.order;
  ConjugacyCertificate cert;
  cert.checked_order = n;

  VectorField pushed = truncate_above(sys.X, w, n);
  for (const auto& [gamma, u] : result.generators) {
    pushed = apply_generator(pushed, u, w, n);
  }

  const VectorField diff = pushed - truncate_above(sys.F, w, n);
  if (diff.is_zero()) {
    cert.holds = true;
    return cert;
  }

  cert.holds = false;
  const auto parts = quasi_components(diff, w);
  const auto& [degree, part] = *parts.begin();
  ConjugacyCertificate::Failure fail;
  fail.degree = degree;
  for (int i = 0; i <= sys.k; ++i) {
    if (!part.component(i).is_zero()) {
      fail.component = i;
      fail.monomial = part.component(i).terms().begin()->first;
      break;
    }
  }
  cert.first_failure = fail;
  return cert;
}

}  // namespace akform
