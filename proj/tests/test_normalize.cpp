#include <doctest.h>

#include <stdexcept>

#include "akform/ak_system.hpp"
#include "akform/inner_product.hpp"
#include "akform/normalize.hpp"
#include "akform/operators.hpp"
#include "oracles.hpp"

using akform::AkSystem;
using akform::HomologicalSplit;
using akform::Monomial;
using akform::NormalizationResult;
using akform::Polynomial;
using akform::QVector;
using akform::Rational;
using akform::VectorField;
using akform::Weights;

namespace {

Polynomial pmono(int k, std::vector<int> e, Rational c = Rational(1)) {
  return Polynomial::monomial(k, Monomial(std::move(e)), c);
}

bool in_ker_dstar(int k, long beta, const VectorField& r) {
  if (r.is_zero()) return true;
  const akform::OperatorMatrix a = akform::matrix_of_dstar(k, beta);
  for (const Rational& c : a.mat.apply(a.domain->coordinates(r))) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("homological solve splits exactly") {
  oracle::TestRng rng(0x501E);
  for (int k : {2, 3}) {
    const VectorField f = akform::build_F(k);
    const Weights w = akform::weights(k);
    for (long gamma = k; gamma <= k + 4; ++gamma) {
      const auto basis = akform::vf_basis(k, gamma);
      const VectorField p = basis->combine(rng.coords(basis->dim()));
      const HomologicalSplit s = akform::homological_solve(k, gamma, p);
      CAPTURE(k);
      CAPTURE(gamma);
      CHECK(akform::lie_bracket(f, s.u) + s.r == p);
      CHECK(in_ker_dstar(k, gamma, s.r));
      CHECK(akform::is_quasihomogeneous(s.u, w, gamma - k + 1));
      CHECK(s.u.eps_component_zero());
    }
  }
}

TEST_CASE("homological solve on a clean image has no remainder") {
  oracle::TestRng rng(0x1DEA);
  for (int k : {2, 3}) {
    const VectorField f = akform::build_F(k);
    for (long gamma = k; gamma <= k + 3; ++gamma) {
      const auto dom = akform::vf_basis(k, gamma - k + 1);
      const VectorField v = dom->combine(rng.coords(dom->dim()));
      const VectorField p = akform::lie_bracket(f, v);
      const HomologicalSplit s = akform::homological_solve(k, gamma, p);
      CHECK(s.r.is_zero());
      CHECK(akform::lie_bracket(f, s.u) == p);
    }
  }
}

TEST_CASE("homological solve of eps d/dz at k = 2") {
  VectorField p(2);
  p.set_component(1, pmono(2, {0, 0, 1}));
  const HomologicalSplit s = akform::homological_solve(2, 2, p);
  CHECK(s.r.is_zero());
  CHECK(akform::lie_bracket(akform::build_F(2), s.u) == p);
}

TEST_CASE("homological solve rejects bad inputs") {
  VectorField p(2);
  p.set_component(1, pmono(2, {0, 0, 1}));
  CHECK_THROWS_AS(akform::homological_solve(2, 1, p), std::invalid_argument);
  CHECK_THROWS_AS(akform::homological_solve(2, 3, p), std::invalid_argument);

  VectorField bad_eps(2);
  bad_eps.set_component(2, pmono(2, {0, 2, 0}));
  CHECK_THROWS_AS(akform::homological_solve(2, 2, bad_eps), std::invalid_argument);

  VectorField mixed(2);  // degrees 2 and 1 in one field
  mixed.set_component(1, pmono(2, {0, 0, 1}) + pmono(2, {0, 2, 0}));
  CHECK_THROWS_AS(akform::homological_solve(2, 2, mixed), std::invalid_argument);
}

TEST_CASE("generator flow cancels the solved degree") {
  const int k = 2;
  const long n = 8;
  const Weights w = akform::weights(k);
  const VectorField f = akform::build_F(k);

  VectorField p(k);
  p.set_component(1, pmono(k, {0, 0, 1}));  // eps d/dz, degree 2
  const AkSystem sys = akform::make_good_system(k, p);
  const HomologicalSplit s = akform::homological_solve(k, 2, p);

  const VectorField pushed = akform::apply_generator(sys.X, s.u, w, n);
  const auto parts = akform::quasi_components(pushed - f, w);
  CHECK(parts.count(2) == 0);  // the solved degree is gone
  for (const auto& [gamma, part] : parts) CHECK(gamma > 2);
}

TEST_CASE("generator flow is the identity for a zero generator") {
  const VectorField x = akform::build_F(3);
  CHECK(akform::apply_generator(x, VectorField(3), akform::weights(3), 9) == x);
}

TEST_CASE("generator flow rejects non-positive quasiorder and eps directions") {
  const Weights w = akform::weights(2);
  const VectorField x = akform::build_F(2);

  VectorField dz(2);
  dz.set_component(1, Polynomial::constant(2, Rational(1)));  // quasiorder -1
  CHECK_THROWS_AS(akform::apply_generator(x, dz, w, 6), std::invalid_argument);

  VectorField deps(2);
  deps.set_component(2, pmono(2, {0, 0, 2}));
  CHECK_THROWS_AS(akform::apply_generator(x, deps, w, 6), std::invalid_argument);
}

TEST_CASE("generator flow commutes with truncation order") {
  oracle::TestRng rng(0x7914);
  const int k = 2;
  const Weights w = akform::weights(k);
  const VectorField x =
      akform::build_F(k) + akform::random_good_perturbation(k, 7, 11);
  const auto gen_basis = akform::vf_basis(k, 2);
  const VectorField u = gen_basis->combine(rng.coords(gen_basis->dim()));

  const VectorField at8 = akform::apply_generator(x, u, w, 8);
  const VectorField at11 = akform::apply_generator(x, u, w, 11);
  CHECK(akform::truncate_above(at11, w, 8) == at8);
}

TEST_CASE("normalization of the zero perturbation is trivial") {
  const AkSystem sys = akform::make_good_system(3, VectorField(3));
  const NormalizationResult res = akform::normalize(sys, 9);
  CHECK(res.k == 3);
  CHECK(res.order == 9);
  CHECK(res.all_resonant_zero);
  CHECK(res.residual.is_zero());
  REQUIRE(res.generators.size() == 7);  // degrees 3..9
  for (const auto& [gamma, u] : res.generators) {
    CHECK(u.is_zero());
    CHECK(res.resonant_parts.at(gamma).is_zero());
    CHECK(res.goodness_log.at(gamma));
  }
  const auto cert = akform::verify_conjugacy(sys, res);
  CHECK(cert.holds);
  CHECK(cert.checked_order == 9);
  CHECK(!cert.first_failure.has_value());
}

TEST_CASE("normalization kills the standard k = 2 example") {
  VectorField p(2);
  p.set_component(1, pmono(2, {0, 0, 2}));  // eps^2 d/dz
  const AkSystem sys = akform::make_good_system(2, p);
  const NormalizationResult res = akform::normalize(sys, 12);
  CHECK(res.all_resonant_zero);
  for (const auto& [gamma, r] : res.resonant_parts) {
    CAPTURE(gamma);
    CHECK(r.is_zero());
  }
  // one step does it: d(eps^2 d/dx1) = eps^2 d/dz, nothing else appears
  VectorField u5(2);
  u5.set_component(0, pmono(2, {0, 0, 2}));
  CHECK(res.generators.at(5) == u5);
  for (const auto& [gamma, u] : res.generators) {
    CAPTURE(gamma);
    if (gamma != 5) CHECK(u.is_zero());
  }
  CHECK(res.residual.is_zero());
  CHECK(akform::verify_conjugacy(sys, res).holds);
}

TEST_CASE("an obstructed perturbation is reported, not absorbed") {
  // Not every good perturbation is removable: at k = 2 the class of
  // eps^2 z d/dx1 in degree 5 survives every formal change of coordinates.
  // The driver must surface it as an exact resonant remainder instead of
  // pretending to succeed.
  const int k = 2;
  const Weights w = akform::weights(k);
  VectorField p(k);
  p.set_component(0, pmono(2, {0, 1, 2}));  // eps^2 z d/dx1
  const AkSystem sys = akform::make_good_system(k, p);
  const NormalizationResult res = akform::normalize(sys, 7);
  CHECK(!res.all_resonant_zero);

  const VectorField& r5 = res.resonant_parts.at(5);
  REQUIRE(!r5.is_zero());
  CHECK(in_ker_dstar(k, 5, r5));
  // the remainder is Gram-orthogonal to the whole image of d in H_5 ...
  const auto dom = akform::vf_basis(k, 4);
  for (int j = 0; j < dom->dim(); ++j) {
    QVector e(dom->dim(), Rational(0));
    e[j] = Rational(1);
    const VectorField du = akform::lie_bracket(sys.F, dom->combine(e));
    CAPTURE(j);
    CHECK(akform::inner_product_vf(r5, du, w, 5) == Rational(0));
  }
  // ... while <R, P> = <R, R> > 0, so the class genuinely sticks
  CHECK(akform::inner_product_vf(r5, p, w, 5) ==
        akform::inner_product_vf(r5, r5, w, 5));
  CHECK(akform::inner_product_vf(r5, r5, w, 5) != Rational(0));
  // the recorded generator still accounts for the removable complement
  CHECK(akform::lie_bracket(sys.F, res.generators.at(5)) == p - r5);
  CHECK(!akform::verify_conjugacy(sys, res).holds);
}

TEST_CASE("seeded random systems normalize with zero resonant parts") {
  for (int k : {2, 3}) {
    const long n = k + 6;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const AkSystem sys =
          akform::make_good_system(k, akform::random_good_perturbation(k, n, seed));
      const NormalizationResult res = akform::normalize(sys, n);
      CAPTURE(k);
      CAPTURE(seed);
      CHECK(res.all_resonant_zero);
      const auto cert = akform::verify_conjugacy(sys, res);
      CHECK(cert.holds);
      CHECK(cert.checked_order == n);
      // the running perturbation stays good the whole way down
      for (const auto& [gamma, good] : res.goodness_log) {
        CAPTURE(gamma);
        CHECK(good);
      }
    }
  }
}

TEST_CASE("extending the order preserves the low-degree generators") {
  const int k = 2;
  const AkSystem sys =
      akform::make_good_system(k, akform::random_good_perturbation(k, 9, 5));
  const NormalizationResult shorter = akform::normalize(sys, 6);
  const NormalizationResult longer = akform::normalize(sys, 9);
  for (const auto& [gamma, u] : shorter.generators) {
    CHECK(longer.generators.at(gamma) == u);
    CHECK(longer.resonant_parts.at(gamma) == shorter.resonant_parts.at(gamma));
  }
}

TEST_CASE("a corrupted generator breaks the certificate") {
  const int k = 2;
  const AkSystem sys =
      akform::make_good_system(k, akform::random_good_perturbation(k, 8, 9));
  NormalizationResult res = akform::normalize(sys, 8);
  REQUIRE(akform::verify_conjugacy(sys, res).holds);

  // sabotage the degree-4 generator (which lives in H_3)
  const auto basis = akform::vf_basis(k, 3);
  QVector bump(basis->dim(), Rational(0));
  bump[0] = Rational(1, 7);
  res.generators.at(4) += basis->combine(bump);

  const auto cert = akform::verify_conjugacy(sys, res);
  CHECK(!cert.holds);
  REQUIRE(cert.first_failure.has_value());
  CHECK(cert.first_failure->degree >= 4);
  CHECK(cert.first_failure->degree <= 8);
}

TEST_CASE("normalize rejects orders below k") {
  const AkSystem sys = akform::make_good_system(2, VectorField(2));
  CHECK_THROWS_AS(akform::normalize(sys, 1), std::invalid_argument);
}
