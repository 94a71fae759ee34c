#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <variant>

#include "akform/ak_system.hpp"
#include "akform/inner_product.hpp"
#include "oracles.hpp"

using akform::AkSystem;
using akform::Monomial;
using akform::Polynomial;
using akform::QMatrix;
using akform::QVector;
using akform::Rational;
using akform::VectorField;
using akform::Violation;
using akform::Weights;

namespace {

Polynomial pmono(int k, std::vector<int> e, Rational c = Rational(1)) {
  return Polynomial::monomial(k, Monomial(std::move(e)), c);
}

bool has_clause(const std::vector<Violation>& vs, const std::string& clause) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation& v) { return v.clause == clause; });
}

QVector poly_coords(const akform::PolyBasis& b, const Polynomial& p) {
  QVector c(b.dim(), Rational(0));
  for (const auto& [m, coeff] : p.terms()) {
    c[b.index_of(m).value()] = coeff;
  }
  return c;
}

Polynomial poly_combine(const akform::PolyBasis& b, const QVector& c) {
  Polynomial p(b.k);
  for (int i = 0; i < b.dim(); ++i) {
    p += Polynomial::monomial(b.k, b.monomials[i], c[i]);
  }
  return p;
}

Polynomial random_homogeneous(oracle::TestRng& rng, const akform::PolyBasis& b) {
  return poly_combine(b, rng.coords(b.dim()));
}

}  // namespace

TEST_CASE("G_k polynomials") {
  CHECK(akform::build_Gk(2) == pmono(2, {0, 2, 0}) + pmono(2, {1, 0, 0}));
  CHECK(akform::build_Gk(3) ==
        pmono(3, {0, 0, 3, 0}) + pmono(3, {1, 0, 0, 0}) + pmono(3, {0, 1, 1, 0}));
  for (int k = 2; k <= 6; ++k) {
    const Polynomial g = akform::build_Gk(k);
    CHECK(static_cast<int>(g.terms().size()) == k);
    CHECK(g.homogeneous_degree(akform::weights(k)) == k);
  }
}

TEST_CASE("principal part F") {
  const VectorField f2 = akform::build_F(2);
  CHECK(f2.component(0) == pmono(2, {0, 0, 1}));
  CHECK(f2.component(1) == -akform::build_Gk(2));
  CHECK(f2.eps_component_zero());

  for (int k = 2; k <= 5; ++k) {
    const VectorField f = akform::build_F(k);
    CHECK(akform::is_quasihomogeneous(f, akform::weights(k), k - 1));
    for (int i = 1; i < k - 1; ++i) CHECK(f.component(i).is_zero());
  }
}

TEST_CASE("good perturbation checks") {
  CHECK(akform::validate_good_perturbation(VectorField(2), 2).empty());

  VectorField eps_dz(2);
  eps_dz.set_component(1, pmono(2, {0, 0, 1}));
  CHECK(akform::validate_good_perturbation(eps_dz, 2).empty());

  // z d/dz: no eps anywhere and quasidegree 0 <= k-1
  VectorField zdz(2);
  zdz.set_component(1, pmono(2, {0, 1, 0}));
  const auto v1 = akform::validate_good_perturbation(zdz, 2);
  CHECK(has_clause(v1, "eps-divisibility"));
  CHECK(has_clause(v1, "quasiorder"));

  // eps d/dx1: divisible by eps but sits exactly at quasidegree k-1
  VectorField eps_dx1(2);
  eps_dx1.set_component(0, pmono(2, {0, 0, 1}));
  const auto v2 = akform::validate_good_perturbation(eps_dx1, 2);
  CHECK(has_clause(v2, "quasiorder"));
  CHECK(!has_clause(v2, "eps-divisibility"));

  // anything in the eps direction is out
  VectorField deps(2);
  deps.set_component(2, pmono(2, {0, 0, 1}));
  CHECK(has_clause(akform::validate_good_perturbation(deps, 2), "eps-component"));

  CHECK_THROWS_AS(akform::validate_good_perturbation(VectorField(3), 2),
                  std::invalid_argument);
}

TEST_CASE("slow-fast shape validation") {
  const VectorField f = akform::build_F(2);

  // F alone is a system with zero perturbation
  const auto ok = akform::validate_ak_sfs(f, 2);
  REQUIRE(std::holds_alternative<AkSystem>(ok));
  CHECK(std::get<AkSystem>(ok).P.is_zero());

  // F + eps^2 z d/dx1 is the standard nontrivial example
  VectorField x = f;
  x.add_to_component(0, pmono(2, {0, 1, 2}));
  const auto ok2 = akform::validate_ak_sfs(x, 2);
  REQUIRE(std::holds_alternative<AkSystem>(ok2));
  const AkSystem sys = std::get<AkSystem>(ok2);
  CHECK(sys.F == f);
  CHECK(sys.X == x);
  VectorField p(2);
  p.set_component(0, pmono(2, {0, 1, 2}));
  CHECK(sys.P == p);

  // constant f_1 fails the vanishing-at-origin clause
  VectorField bad1 = f;
  bad1.add_to_component(0, pmono(2, {0, 0, 2}));
  const auto r1 = akform::validate_ak_sfs(bad1, 2);
  REQUIRE(std::holds_alternative<std::vector<Violation>>(r1));
  CHECK(has_clause(std::get<std::vector<Violation>>(r1), "vanishing-at-origin"));

  // eps-free correction to the z component
  VectorField bad2 = f;
  bad2.add_to_component(1, pmono(2, {0, 3, 0}));
  const auto r2 = akform::validate_ak_sfs(bad2, 2);
  REQUIRE(std::holds_alternative<std::vector<Violation>>(r2));
  CHECK(has_clause(std::get<std::vector<Violation>>(r2), "z-shape"));

  // x1 component must start with eps itself
  VectorField bad3 = f;
  bad3.add_to_component(0, pmono(2, {0, 1, 1}));  // eps*z, not eps^2-divisible
  const auto r3 = akform::validate_ak_sfs(bad3, 2);
  REQUIRE(std::holds_alternative<std::vector<Violation>>(r3));
  CHECK(has_clause(std::get<std::vector<Violation>>(r3), "x1-shape"));

  // nonzero eps direction
  VectorField bad4 = f;
  bad4.add_to_component(2, pmono(2, {0, 0, 2}));
  const auto r4 = akform::validate_ak_sfs(bad4, 2);
  REQUIRE(std::holds_alternative<std::vector<Violation>>(r4));
  CHECK(has_clause(std::get<std::vector<Violation>>(r4), "eps-component"));

  // middle components at k = 3 need eps^2
  VectorField bad5 = akform::build_F(3);
  bad5.add_to_component(1, pmono(3, {0, 0, 1, 1}));  // eps*z
  const auto r5 = akform::validate_ak_sfs(bad5, 3);
  REQUIRE(std::holds_alternative<std::vector<Violation>>(r5));
  CHECK(has_clause(std::get<std::vector<Violation>>(r5), "xi-shape"));
}

TEST_CASE("make_good_system accepts good and rejects bad") {
  VectorField p(2);
  p.set_component(1, pmono(2, {0, 0, 1}));  // eps d/dz
  const AkSystem sys = akform::make_good_system(2, p);
  CHECK(sys.X == akform::build_F(2) + p);

  VectorField bad(2);
  bad.set_component(1, pmono(2, {0, 1, 0}));
  CHECK_THROWS_AS(akform::make_good_system(2, bad), std::invalid_argument);
}

TEST_CASE("random good perturbations are good and reproducible") {
  for (int k : {2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const VectorField p = akform::random_good_perturbation(k, k + 5, seed);
      CAPTURE(k);
      CAPTURE(seed);
      CHECK(akform::validate_good_perturbation(p, k).empty());
      CHECK(p == akform::random_good_perturbation(k, k + 5, seed));
    }
  }
  // distinct seeds explore different supports
  CHECK(akform::random_good_perturbation(2, 8, 1) !=
        akform::random_good_perturbation(2, 8, 2));
  // several quasidegrees get populated across a few seeds
  std::set<long> degrees;
  const Weights w = akform::weights(2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (const auto& [gamma, part] :
         akform::quasi_components(akform::random_good_perturbation(2, 8, seed), w)) {
      degrees.insert(gamma);
    }
  }
  CHECK(degrees.size() >= 3);
  CHECK_THROWS_AS(akform::random_good_perturbation(2, 1, 0), std::invalid_argument);
}

TEST_CASE("multiplication adjoints satisfy the pairing identity") {
  oracle::TestRng rng(0x3A17);
  for (int k : {2, 3}) {
    const Weights w = akform::weights(k);
    const Polynomial multipliers[] = {
        Polynomial::constant(k, Rational(1)),
        Polynomial::monomial(k, Monomial::var(k, akform::z_index(k))),
        akform::build_Gk(k),
    };
    for (const Polynomial& m : multipliers) {
      const long dm = m.homogeneous_degree(w).value();
      for (long a : {1L, 2L, 3L}) {
        const QMatrix adj = akform::mult_adjoint(k, m, a);
        const auto ba = akform::poly_basis(k, a);
        const auto bb = akform::poly_basis(k, a + dm);
        REQUIRE(adj.rows() == static_cast<std::size_t>(ba->dim()));
        REQUIRE(adj.cols() == static_cast<std::size_t>(bb->dim()));
        for (int trial = 0; trial < 4; ++trial) {
          const Polynomial f = random_homogeneous(rng, *ba);
          const Polynomial g = random_homogeneous(rng, *bb);
          const Rational lhs = akform::inner_product_poly(m * f, g, w, a + dm);
          const Polynomial mg = poly_combine(*ba, adj.apply(poly_coords(*bb, g)));
          CHECK(lhs == akform::inner_product_poly(f, mg, w, a));
        }
      }
    }
  }
  CHECK_THROWS_AS(
      akform::mult_adjoint(2, pmono(2, {0, 2, 0}) + pmono(2, {0, 1, 0}), 1),
      std::invalid_argument);
  CHECK_THROWS_AS(akform::mult_adjoint(2, Polynomial(2), 1), std::invalid_argument);
}

TEST_CASE("F-derivative adjoint satisfies the pairing identity") {
  oracle::TestRng rng(0xF5B0);
  for (int k : {2, 3}) {
    const Weights w = akform::weights(k);
    const VectorField f = akform::build_F(k);
    for (long a : {1L, 2L, 4L}) {
      const QMatrix adj = akform::fstar_block(k, a);
      const auto ba = akform::poly_basis(k, a);
      const auto bb = akform::poly_basis(k, a + k - 1);
      for (int trial = 0; trial < 4; ++trial) {
        const Polynomial u = random_homogeneous(rng, *ba);
        const Polynomial v = random_homogeneous(rng, *bb);
        const Rational lhs = akform::inner_product_poly(
            akform::directional_derivative(f, u), v, w, a + k - 1);
        const Polynomial fv = poly_combine(*ba, adj.apply(poly_coords(*bb, v)));
        CHECK(lhs == akform::inner_product_poly(u, fv, w, a));
      }
    }
  }
}

TEST_CASE("block assembly of dstar agrees with the Gram transpose route") {
  for (int k : {2, 3}) {
    for (long beta = k; beta <= k + 6; ++beta) {
      const akform::OperatorMatrix direct = akform::explicit_dstar_good(k, beta);
      const akform::OperatorMatrix gram = akform::matrix_of_dstar(k, beta);
      CAPTURE(k);
      CAPTURE(beta);
      CHECK(direct.mat == gram.mat);
      CHECK(direct.domain->gamma == beta);
      CHECK(direct.codomain->gamma == beta - k + 1);
    }
  }
  CHECK(akform::explicit_dstar_good(4, 5).mat == akform::matrix_of_dstar(4, 5).mat);
  CHECK_THROWS_AS(akform::explicit_dstar_good(2, 1), std::invalid_argument);
}

TEST_CASE("good kernels of dstar are trivial") {
  for (int k : {2, 3}) {
    const auto reports = akform::verify_kernel_trivial(k, k, k + 6);
    REQUIRE(reports.size() == 7);
    for (const akform::KernelReport& r : reports) {
      CAPTURE(k);
      CAPTURE(r.beta);
      CHECK(r.dim_good_kernel == 0);
      CHECK(r.witnesses.empty());
      CHECK(r.dim_good <= r.dim_h);
      CHECK(r.dim_good_kernel <= r.dim_full_kernel);
      CHECK(r.dim_good == akform::enumerate_good_basis(k, r.beta).dim());
    }
  }
  CHECK_THROWS_AS(akform::verify_kernel_trivial(2, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(akform::verify_kernel_trivial(2, 5, 4), std::invalid_argument);
}

TEST_CASE("structured elimination certifies the trivial kernel") {
  for (int k : {2, 3, 4}) {
    for (long beta = k; beta <= k + 4; ++beta) {
      const akform::StructuredKernelProof proof = akform::structured_kernel_proof(k, beta);
      CAPTURE(k);
      CAPTURE(beta);
      CHECK(proof.complete);
      CHECK(proof.failure.empty());
      CHECK(proof.p1_forced_zero);
      CHECK(proof.pk_forced_zero);
      CHECK(proof.unknowns == akform::enumerate_good_basis(k, beta).dim());

      int eliminated = 0;
      for (const akform::EliminationStep& s : proof.steps) eliminated += s.count;
      CHECK(eliminated == proof.unknowns);

      // the eps row goes first, the identity coupling second, recursion last
      const auto rank_of = [](const std::string& rule) {
        if (rule == "eps-row") return 0;
        if (rule == "identity-coupling") return 1;
        return 2;
      };
      for (std::size_t i = 1; i < proof.steps.size(); ++i) {
        CHECK(rank_of(proof.steps[i - 1].rule) <= rank_of(proof.steps[i].rule));
      }
      if (k == 2) {
        // no middle components, so no recursion phase at all
        for (const auto& s : proof.steps) CHECK(s.rule != "eps-recursion");
      }
    }
  }
  // middle components appear from k = 3 on
  const auto p3 = akform::structured_kernel_proof(3, 7);
  CHECK(std::any_of(p3.steps.begin(), p3.steps.end(), [](const akform::EliminationStep& s) {
    return s.rule == "eps-recursion" && s.component == 1;
  }));
  CHECK_THROWS_AS(akform::structured_kernel_proof(2, 1), std::invalid_argument);
}
