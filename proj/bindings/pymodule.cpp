// Python face of the library. Everything structured crosses the boundary as
// a JSON string (exact rationals stay "p/q" strings); the pure-python
// wrapper in python/akform/__init__.py decodes them. Keeping the binding
// this thin means the schema is the same one the CLI speaks.

#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>

#include "akform/ak_system.hpp"
#include "akform/bases.hpp"
#include "akform/normalize.hpp"
#include "akform/operators.hpp"
#include "akform/selftest.hpp"
#include "akform/system_io.hpp"
#include "akform/version.hpp"
#include "akform/weights.hpp"

namespace py = pybind11;

namespace {

using akform::Json;

std::string dumps(const Json& j) { return j.dump(); }

Json operator_to_json(const akform::OperatorMatrix& m) {
  Json j;
  switch (m.op_tag) {
    case akform::OpTag::d: j["op"] = "d"; break;
    case akform::OpTag::dstar: j["op"] = "dstar"; break;
    case akform::OpTag::box: j["op"] = "box"; break;
  }
  j["k"] = m.k;
  j["domain_degree"] = m.domain->gamma;
  j["codomain_degree"] = m.codomain->gamma;
  j["matrix"] = akform::matrix_to_json(m.mat);
  return j;
}

std::string operator_json(int k, const std::string& op, long degree) {
  akform::OperatorMatrix m;
  if (op == "d") {
    m = akform::matrix_of_d(k, degree);
  } else if (op == "dstar") {
    m = akform::matrix_of_dstar(k, degree);
  } else if (op == "box") {
    m = akform::matrix_of_box(k, degree);
  } else {
    throw std::invalid_argument("unknown operator '" + op +
                                "' (expected d, dstar or box)");
  }
  return dumps(operator_to_json(m));
}

std::string kernel_json(int k, long beta_min, long beta_max) {
  Json out = Json::array();
  for (const akform::KernelReport& r :
       akform::verify_kernel_trivial(k, beta_min, beta_max)) {
    Json j;
    j["k"] = r.k;
    j["beta"] = r.beta;
    j["dim_h"] = r.dim_h;
    j["dim_good"] = r.dim_good;
    j["dim_ker_dstar"] = r.dim_full_kernel;
    j["dim_good_kernel"] = r.dim_good_kernel;
    Json ws = Json::array();
    const akform::VFBasis good = akform::enumerate_good_basis(k, r.beta);
    for (const akform::QVector& w : r.witnesses) {
      Json entry;
      Json coords = Json::array();
      for (const akform::Rational& c : w) coords.push_back(c.str());
      entry["coords"] = std::move(coords);
      entry["field"] = akform::vf_to_json(good.combine(w));
      ws.push_back(std::move(entry));
    }
    j["witnesses"] = std::move(ws);
    out.push_back(std::move(j));
  }
  return dumps(out);
}

std::string decomposition_json(int k, long gamma) {
  const akform::DecompositionReport r = akform::verify_decomposition(k, gamma);
  Json j;
  j["k"] = r.k;
  j["gamma"] = r.gamma;
  j["dim_h"] = r.dim_h;
  j["dim_im_dstar"] = r.dim_im_dstar;
  j["dim_ker_d"] = r.dim_ker_d;
  j["dims_ok"] = r.dims_ok;
  j["orthogonal"] = r.orthogonal;
  j["holds"] = r.holds;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return dumps(j);
}

std::string structured_proof_json(int k, long beta) {
  const akform::StructuredKernelProof p = akform::structured_kernel_proof(k, beta);
  Json j;
  j["k"] = p.k;
  j["beta"] = p.beta;
  j["unknowns"] = p.unknowns;
  j["p1_forced_zero"] = p.p1_forced_zero;
  j["pk_forced_zero"] = p.pk_forced_zero;
  Json steps = Json::array();
  for (const akform::EliminationStep& s : p.steps) {
    Json step;
    step["rule"] = s.rule;
    step["component"] = s.component;
    step["eps_level"] = s.eps_level;
    step["count"] = s.count;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["complete"] = p.complete;
  if (!p.failure.empty()) j["failure"] = p.failure;
  return dumps(j);
}

std::string normalize_json(const std::string& system_text, long order) {
  Json input;
  try {
    input = Json::parse(system_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("system json: ") + err.what());
  }
  const akform::VectorField x = akform::system_from_json(input);
  auto checked = akform::validate_ak_sfs(x, x.k());
  if (std::holds_alternative<std::vector<akform::Violation>>(checked)) {
    std::string msg = "not an A_k slow-fast system:";
    for (const akform::Violation& v :
         std::get<std::vector<akform::Violation>>(checked)) {
      msg += " [" + v.clause + "] " + v.detail;
    }
    throw std::invalid_argument(msg);
  }
  const akform::AkSystem sys = std::get<akform::AkSystem>(checked);
  const akform::NormalizationResult res = akform::normalize(sys, order);
  const akform::ConjugacyCertificate cert = akform::verify_conjugacy(sys, res);

  Json j;
  j["k"] = res.k;
  j["order"] = res.order;
  Json degrees = Json::array();
  for (const auto& [gamma, u] : res.generators) {
    Json deg;
    deg["degree"] = gamma;
    deg["generator"] = akform::vf_to_json(u);
    deg["resonant"] = akform::vf_to_json(res.resonant_parts.at(gamma));
    deg["resonant_zero"] = res.resonant_parts.at(gamma).is_zero();
    deg["perturbation_still_good"] = res.goodness_log.at(gamma);
    degrees.push_back(std::move(deg));
  }
  j["degrees"] = std::move(degrees);
  j["all_resonant_zero"] = res.all_resonant_zero;
  Json cj;
  cj["holds"] = cert.holds;
  cj["checked_order"] = cert.checked_order;
  if (cert.first_failure) {
    Json f;
    f["degree"] = cert.first_failure->degree;
    f["component"] = cert.first_failure->component;
    f["monomial"] = akform::monomial_to_json(cert.first_failure->monomial);
    cj["first_failure"] = std::move(f);
  }
  j["certificate"] = std::move(cj);
  return dumps(j);
}

std::string random_system_json(int k, long max_degree, std::uint64_t seed) {
  const akform::VectorField p =
      akform::random_good_perturbation(k, max_degree, seed);
  const akform::AkSystem sys = akform::make_good_system(k, p);
  return dumps(akform::system_to_json(sys.X));
}

std::string selftest_json(int max_k, long max_degree, std::uint64_t seed) {
  akform::SelftestOptions opts;
  opts.max_k = max_k;
  opts.max_degree = max_degree;
  opts.seed = seed;
  return akform::dump_report(akform::run_selftest(opts).report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact quasihomogeneous normal form machinery for A_k slow-fast systems";

  m.def("version", [] { return std::string(akform::kVersion); });
  m.def("weights", [](int k) {
    py::list out;
    for (int r : akform::weights(k).r) out.append(r);
    return out;
  }, py::arg("k"));

  m.def("poly_basis_json", [](int k, long degree) {
    return dumps(akform::poly_basis_to_json(*akform::poly_basis(k, degree)));
  }, py::arg("k"), py::arg("degree"));
  m.def("vf_basis_json", [](int k, long degree) {
    return dumps(akform::vf_basis_to_json(*akform::vf_basis(k, degree)));
  }, py::arg("k"), py::arg("degree"));
  m.def("good_basis_json", [](int k, long degree) {
    return dumps(akform::vf_basis_to_json(akform::enumerate_good_basis(k, degree)));
  }, py::arg("k"), py::arg("degree"));

  m.def("operator_json", &operator_json,
        py::arg("k"), py::arg("op"), py::arg("degree"));
  m.def("verify_kernel_trivial_json", &kernel_json,
        py::arg("k"), py::arg("beta_min"), py::arg("beta_max"));
  m.def("verify_decomposition_json", &decomposition_json,
        py::arg("k"), py::arg("gamma"));
  m.def("structured_kernel_proof_json", &structured_proof_json,
        py::arg("k"), py::arg("beta"));

  m.def("random_good_system_json", &random_system_json,
        py::arg("k"), py::arg("max_degree"), py::arg("seed"));
  m.def("normalize_json", &normalize_json,
        py::arg("system_json"), py::arg("order"));
  m.def("selftest_json", &selftest_json,
        py::arg("max_k") = 4, py::arg("max_degree") = 10, py::arg("seed") = 0);
}
