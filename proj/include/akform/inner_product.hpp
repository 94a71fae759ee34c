#pragma once

#include "akform/rational.hpp"
#include "akform/vector_field.hpp"

namespace akform {

mpz_class factorial(long n);

/// (s!)^r = prod_i (s_i!)^{r_i}.
mpz_class factorial_weight(const Monomial& s, const Weights& w);

/// Diagonal Gram weight of the monomial x^s in P_delta: (s!)^r / delta!.
Rational gram_weight(const Monomial& s, const Weights& w, long delta);

/// <f, g>_{r,delta} = sum over shared monomials of f_s g_s (s!)^r / delta!.
/// Both arguments must be quasihomogeneous of degree delta.
Rational inner_product_poly(const Polynomial& f, const Polynomial& g,
                            const Weights& w, long delta);

/// <X, Y>_{r,delta} = sum_i <X_i, Y_i>_{r,delta+r_i}.
Rational inner_product_vf(const VectorField& x, const VectorField& y,
                          const Weights& w, long delta);

}  // namespace akform
