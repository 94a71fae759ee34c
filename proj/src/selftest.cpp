#include "akform/selftest.hpp"

#include <random>
#include <string>

#include "akform/ak_system.hpp"
#include "akform/normalize.hpp"
#include "akform/operators.hpp"
#include "akform/version.hpp"

namespace akform {

namespace {

Rational small_rational(std::mt19937_64& eng) {
  const long num = static_cast<long>(eng() % 19) - 9;
  const long den = static_cast<long>(eng() % 5) + 1;
  return Rational(num, den);
}

QVector random_coords(std::mt19937_64& eng, std::size_t n) {
  QVector v(n);
  for (auto& c : v) c = small_rational(eng);
  return v;
}

/// <M u, v> under the diagonal Gram form of the codomain.
Rational pair_under_gram(const QMatrix& m, const QVector& u, const QVector& v,
                         const QVector& gram) {
  const QVector mu = m.apply(u);
  Rational s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * gram[i] * v[i];
  return s;
}

bool in_kernel(const QMatrix& m, const QVector& v) {
  for (const Rational& c : m.apply(v)) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string range_str(long lo, long hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

SelftestOutcome run_selftest(const SelftestOptions& opts) {
  SelftestOutcome out;
  Json& rep = out.report;
  rep["schema_version"] = kReportSchemaVersion;
  rep["tool"] = "akform";
  rep["version"] = kVersion;
  rep["command"] = "selftest";
  rep["options"]["max_k"] = opts.max_k;
  rep["options"]["max_degree"] = opts.max_degree;
  rep["options"]["seed"] = opts.seed;
  Json checks = Json::array();

  bool ok = true;
  Json violation;
  auto fail = [&](const std::string& property, int k, long degree,
                  const std::string& detail) {
    ok = false;
    violation["property"] = property;
    violation["k"] = k;
    violation["degree"] = degree;
    violation["seed"] = opts.seed;
    violation["detail"] = detail;
    violation["reproduce"] = "akform selftest --max-k " + std::to_string(k) +
                             " --max-degree " + std::to_string(degree) +
                             " --seed " + std::to_string(opts.seed);
  };

  if (opts.max_k < 2) fail("options", opts.max_k, 0, "max_k must be >= 2");

  for (int k = 2; ok && k <= opts.max_k; ++k) {
    std::mt19937_64 eng(opts.seed * 6364136223846793005ULL +
                        static_cast<std::uint64_t>(k));

    // Adjoint identity <d(U), V> = <U, d*(V)> on random coordinate pairs.
    if (opts.max_degree >= k) {
      const int pairs = 10;
      for (long beta = k; ok && beta <= opts.max_degree; ++beta) {
        const OperatorMatrix d = matrix_of_d(k, beta - k + 1);
        const OperatorMatrix a = matrix_of_dstar(k, beta);
        for (int t = 0; t < pairs; ++t) {
          const QVector u = random_coords(eng, d.domain->dim());
          const QVector v = random_coords(eng, d.codomain->dim());
          const Rational lhs = pair_under_gram(d.mat, u, v, d.codomain->gram);
          const Rational rhs = pair_under_gram(a.mat, v, u, a.codomain->gram);
          if (lhs != rhs) {
            fail("adjoint-identity", k, beta,
                 "<d(U),V> = " + lhs.str() + " but <U,d*(V)> = " + rhs.str());
            break;
          }
        }
      }
      Json c;
      c["name"] = "adjoint-identity";
      c["k"] = k;
      c["degrees"] = range_str(k, opts.max_degree);
      c["pairs_per_degree"] = pairs;
      c["ok"] = ok;
      checks.push_back(std::move(c));
    }

    // ker box and ker d* coincide, checked by dimensions and exact mutual
    // membership.
    if (ok && opts.max_degree >= k) {
      for (long beta = k; ok && beta <= opts.max_degree; ++beta) {
        const OperatorMatrix a = matrix_of_dstar(k, beta);
        const OperatorMatrix b = matrix_of_box(k, beta);
        const auto ker_a = kernel_basis(a.mat);
        const auto ker_b = kernel_basis(b.mat);
        if (ker_a.size() != ker_b.size()) {
          fail("box-kernel-agreement", k, beta,
               "dim ker d* = " + std::to_string(ker_a.size()) +
                   " but dim ker box = " + std::to_string(ker_b.size()));
          break;
        }
        for (const QVector& v : ker_a) {
          if (!in_kernel(b.mat, v)) {
            fail("box-kernel-agreement", k, beta,
                 "a ker d* vector is not in ker box");
            break;
          }
        }
        for (const QVector& v : ker_b) {
          if (!in_kernel(a.mat, v)) {
            fail("box-kernel-agreement", k, beta,
                 "a ker box vector is not in ker d*");
            break;
          }
        }
      }
      Json c;
      c["name"] = "box-kernel-agreement";
      c["k"] = k;
      c["degrees"] = range_str(k, opts.max_degree);
      c["ok"] = ok;
      checks.push_back(std::move(c));
    }

    // Orthogonal decomposition H_gamma = Im d* (+) ker d.
    if (ok && opts.max_degree - k + 1 >= 1) {
      const long hi = opts.max_degree - k + 1;
      for (long gamma = 1; ok && gamma <= hi; ++gamma) {
        const DecompositionReport r = verify_decomposition(k, gamma);
        if (!r.holds) {
          fail("decomposition", k, gamma,
               r.counterexample ? *r.counterexample : "decomposition failed");
        }
      }
      Json c;
      c["name"] = "decomposition";
      c["k"] = k;
      c["degrees"] = range_str(1, hi);
      c["ok"] = ok;
      checks.push_back(std::move(c));
    }

    // Kernel triviality on the good subspace plus the structured proofs.
    if (ok && opts.max_degree >= k) {
      for (const KernelReport& r :
           verify_kernel_trivial(k, k, opts.max_degree)) {
        if (r.dim_good_kernel != 0) {
          fail("kernel-trivial", k, r.beta,
               "good kernel has dimension " +
                   std::to_string(r.dim_good_kernel));
          break;
        }
      }
      for (long beta = k; ok && beta <= opts.max_degree; ++beta) {
        const StructuredKernelProof p = structured_kernel_proof(k, beta);
        if (!p.complete || !p.p1_forced_zero || !p.pk_forced_zero) {
          fail("structured-proof", k, beta,
               p.failure.empty() ? "proof incomplete" : p.failure);
        }
      }
      Json c;
      c["name"] = "kernel-trivial";
      c["k"] = k;
      c["degrees"] = range_str(k, opts.max_degree);
      c["ok"] = ok;
      checks.push_back(std::move(c));
    }

    // One seeded normalization per k, certified independently.
    if (ok && opts.max_degree >= k) {
      const std::uint64_t pseed = opts.seed * 6364136223846793005ULL +
                                  static_cast<std::uint64_t>(100 + k);
      const VectorField p = random_good_perturbation(k, opts.max_degree, pseed);
      const AkSystem sys = make_good_system(k, p);
      const NormalizationResult res = normalize(sys, opts.max_degree);
      const ConjugacyCertificate cert = verify_conjugacy(sys, res);
      long goodness_failures = 0;
      for (const auto& [gamma, good] : res.goodness_log) {
        if (!good) ++goodness_failures;
      }
      if (!res.all_resonant_zero) {
        for (const auto& [gamma, r] : res.resonant_parts) {
          if (!r.is_zero()) {
            fail("normalization-resonant", k, gamma,
                 "nonzero resonant part " + r.str());
            break;
          }
        }
      } else if (!cert.holds) {
        const long deg =
            cert.first_failure ? cert.first_failure->degree : opts.max_degree;
        fail("normalization-conjugacy", k, deg,
             "pushforward does not equal F");
      }
      Json c;
      c["name"] = "normalization";
      c["k"] = k;
      c["order"] = opts.max_degree;
      c["perturbation_seed"] = pseed;
      c["goodness_violations_logged"] = goodness_failures;
      c["ok"] = ok;
      checks.push_back(std::move(c));
    }
  }

  rep["checks"] = std::move(checks);
  rep["ok"] = ok;
  if (!ok) rep["violation"] = std::move(violation);
  out.ok = ok;
  return out;
}

}  // namespace akform
