#include "akform/inner_product.hpp"

#include <stdexcept>

namespace akform {

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class factorial_weight(const Monomial& s, const Weights& w) {
  if (s.nvars() != w.nvars()) {
    throw std::invalid_argument("factorial weight: variable count mismatch");
  }
  mpz_class out = 1;
  for (int i = 0; i < s.nvars(); ++i) {
    if (s.exps[i] < 2) continue;  // (0!)^r = (1!)^r = 1
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), factorial(s.exps[i]).get_mpz_t(),
               static_cast<unsigned long>(w.r[i]));
    out *= p;
  }
  return out;
}

Rational gram_weight(const Monomial& s, const Weights& w, long delta) {
  return Rational(factorial_weight(s, w), factorial(delta));
}

Rational inner_product_poly(const Polynomial& f, const Polynomial& g,
                            const Weights& w, long delta) {
  if (f.k() != w.k || g.k() != w.k) {
    throw std::invalid_argument("inner product: weights mismatch");
  }
  if (!f.is_quasihomogeneous(w, delta) || !g.is_quasihomogeneous(w, delta)) {
    throw std::invalid_argument(
        "inner product: arguments not quasihomogeneous of degree " +
        std::to_string(delta));
  }
  Rational out;
  for (const auto& [m, c] : f.terms()) {
    const Rational cg = g.coeff(m);
    if (cg.is_zero()) continue;
    out += c * cg * gram_weight(m, w, delta);
  }
  return out;
}

Rational inner_product_vf(const VectorField& x, const VectorField& y,
                          const Weights& w, long delta) {
  if (x.k() != w.k || y.k() != w.k) {
    throw std::invalid_argument("inner product: weights mismatch");
  }
  if (!is_quasihomogeneous(x, w, delta) || !is_quasihomogeneous(y, w, delta)) {
    throw std::invalid_argument(
        "inner product: fields not quasihomogeneous of degree " +
        std::to_string(delta));
  }
  Rational out;
  for (int i = 0; i <= w.k; ++i) {
    if (x.component(i).is_zero() || y.component(i).is_zero()) continue;
    out += inner_product_poly(x.component(i), y.component(i), w, delta + w.r[i]);
  }
  return out;
}

}  // namespace akform
