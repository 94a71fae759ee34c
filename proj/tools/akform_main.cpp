#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "akform/ak_system.hpp"
#include "akform/normalize.hpp"
#include "akform/operators.hpp"
#include "akform/selftest.hpp"
#include "akform/system_io.hpp"
#include "akform/version.hpp"

namespace {

using akform::Json;

struct GlobalOpts {
  bool json = false;
  bool quiet = false;
  std::uint64_t seed = 0;
};

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = akform::kReportSchemaVersion;
  j["tool"] = "akform";
  j["version"] = akform::kVersion;
  j["command"] = command;
  return j;
}

void emit(const GlobalOpts& g, const Json& report, const std::string& text) {
  if (g.json) {
    std::cout << akform::dump_report(report);
  } else if (!text.empty()) {
    std::cout << text;
  }
}

std::string element_label(int k, const akform::VFBasis::Element& e) {
  const std::string dir = "d/d" + akform::var_name(k, e.comp);
  return e.mono.is_one() ? dir : e.mono.str(k) + "*" + dir;
}

std::string matrix_text(const akform::OperatorMatrix& op,
                        const std::string& name) {
  std::string out = name + ": H_" + std::to_string(op.domain->gamma) +
                    " -> H_" + std::to_string(op.codomain->gamma) +
                    " (k=" + std::to_string(op.k) + "), " +
                    std::to_string(op.mat.rows()) + " x " +
                    std::to_string(op.mat.cols()) + "\n";
  out += "columns:";
  for (const auto& e : op.domain->elements) {
    out += " " + element_label(op.k, e);
  }
  out += "\nrows:\n";
  for (std::size_t i = 0; i < op.mat.rows(); ++i) {
    out += "  " + element_label(op.k, op.codomain->elements[i]) + " |";
    for (std::size_t j = 0; j < op.mat.cols(); ++j) {
      out += " " + op.mat.at(i, j).str();
    }
    out += "\n";
  }
  return out;
}

/// Inclusive "A..B" range, or a single integer meaning A = B.
std::pair<long, long> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      const long v = std::stol(s);
      return {v, v};
    }
    const long lo = std::stol(s.substr(0, pos));
    const long hi = std::stol(s.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + s +
                                "' (expected A..B or a single integer)");
  }
}

int cmd_basis(const GlobalOpts& g, int k, long degree,
              const std::string& space) {
  Json rep = envelope("basis");
  rep["inputs"]["k"] = k;
  rep["inputs"]["degree"] = degree;
  rep["inputs"]["space"] = space;
  std::string text;
  if (space == "poly") {
    const auto b = akform::poly_basis(k, degree);
    rep["results"] = akform::poly_basis_to_json(*b);
    if (!g.quiet) {
      text = "P_" + std::to_string(degree) + " (k=" + std::to_string(k) +
             "), dim " + std::to_string(b->dim()) + "\n";
    }
    for (int i = 0; i < b->dim(); ++i) {
      text += b->monomials[i].str(k) + "  " + b->gram[i].str() + "\n";
    }
  } else {
    const akform::VFBasis b = space == "vf"
                                  ? akform::enumerate_vf_basis(k, degree)
                                  : akform::enumerate_good_basis(k, degree);
    rep["results"] = akform::vf_basis_to_json(b);
    if (!g.quiet) {
      text = (space == "vf" ? "H_" : "good H_") + std::to_string(degree) +
             " (k=" + std::to_string(k) + "), dim " + std::to_string(b.dim()) +
             "\n";
    }
    for (int i = 0; i < b.dim(); ++i) {
      text += element_label(k, b.elements[i]) + "  " + b.gram[i].str() + "\n";
    }
  }
  emit(g, rep, text);
  return 0;
}

int cmd_operator(const GlobalOpts& g, int k, const std::string& op,
                 const CLI::Option* gamma_opt, long gamma,
                 const CLI::Option* beta_opt, long beta, bool check) {
  akform::OperatorMatrix mat;
  long degree = 0;
  if (op == "d") {
    if (!*gamma_opt) {
      throw std::invalid_argument("operator d needs --gamma");
    }
    if (*beta_opt) {
      throw std::invalid_argument("operator d takes --gamma, not --beta");
    }
    degree = gamma;
    mat = akform::matrix_of_d(k, gamma);
  } else {
    if (!*beta_opt) {
      throw std::invalid_argument("operator " + op + " needs --beta");
    }
    if (*gamma_opt) {
      throw std::invalid_argument("operator " + op +
                                  " takes --beta, not --gamma");
    }
    degree = beta;
    mat = op == "dstar" ? akform::matrix_of_dstar(k, beta)
                        : akform::matrix_of_box(k, beta);
  }

  Json rep = envelope("operator");
  rep["inputs"]["k"] = k;
  rep["inputs"]["op"] = op;
  rep["inputs"]["degree"] = degree;
  rep["inputs"]["check"] = check;
  rep["results"]["domain"] = akform::vf_basis_to_json(*mat.domain);
  rep["results"]["codomain"] = akform::vf_basis_to_json(*mat.codomain);
  rep["results"]["matrix"] = akform::matrix_to_json(mat.mat);

  int code = 0;
  std::string check_text;
  if (check) {
    // The adjoint identity as a matrix identity: G_cod A == D^T G_dom,
    // where D is the bracket route and A the Gram-transpose route.
    const long b = op == "d" ? gamma + k - 1 : degree;
    if (b < k) {
      throw std::invalid_argument(
          "--check needs the adjoint domain H_beta with beta >= k (gamma >= "
          "1)");
    }
    const akform::OperatorMatrix d = akform::matrix_of_d(k, b - k + 1);
    const akform::OperatorMatrix a = akform::matrix_of_dstar(k, b);
    const akform::QMatrix lhs = a.mat.scale_rows(a.codomain->gram);
    const akform::QMatrix rhs =
        d.mat.transpose().scale_cols(d.codomain->gram);
    bool adjoint_ok = lhs == rhs;
    bool explicit_ok = true;
    if (op == "dstar" || op == "box") {
      explicit_ok = akform::explicit_dstar_good(k, b).mat == a.mat;
    }
    bool self_adjoint_ok = true;
    if (op == "box") {
      const akform::QMatrix gb = mat.mat.scale_rows(mat.codomain->gram);
      self_adjoint_ok = gb == gb.transpose();
    }
    rep["results"]["check"]["adjoint_identity"] = adjoint_ok;
    rep["results"]["check"]["explicit_blocks_match"] = explicit_ok;
    rep["results"]["check"]["box_self_adjoint"] = self_adjoint_ok;
    if (!adjoint_ok || !explicit_ok || !self_adjoint_ok) code = 1;
    check_text = std::string("check: ") + (code == 0 ? "ok" : "MISMATCH") +
                 "\n";
  }

  std::string text;
  if (!g.quiet || code != 0) {
    text = matrix_text(mat, op) + check_text;
  }
  emit(g, rep, text);
  return code;
}

int cmd_verify(const GlobalOpts& g, int k, const std::string& beta_range) {
  const auto [lo, hi] = parse_range(beta_range);
  const auto reports = akform::verify_kernel_trivial(k, lo, hi);

  Json rep = envelope("verify");
  rep["inputs"]["k"] = k;
  rep["inputs"]["beta"] = beta_range;
  Json rows = Json::array();
  std::string text = "beta  dim_H  dim_good  dim_ker_dstar  dim_good_kernel\n";
  bool trivial = true;
  for (const auto& r : reports) {
    Json row;
    row["beta"] = r.beta;
    row["dim_h"] = r.dim_h;
    row["dim_good"] = r.dim_good;
    row["dim_ker_dstar"] = r.dim_full_kernel;
    row["dim_good_kernel"] = r.dim_good_kernel;
    if (r.dim_good_kernel != 0) {
      trivial = false;
      Json wits = Json::array();
      const akform::VFBasis basis = akform::enumerate_good_basis(k, r.beta);
      for (const auto& w : r.witnesses) {
        Json wit;
        Json coords = Json::array();
        for (const auto& c : w) coords.push_back(c.str());
        wit["coords"] = std::move(coords);
        wit["field"] = akform::vf_to_json(basis.combine(w));
        wits.push_back(std::move(wit));
      }
      row["witnesses"] = std::move(wits);
    }
    rows.push_back(std::move(row));
    text += std::to_string(r.beta) + "  " + std::to_string(r.dim_h) + "  " +
            std::to_string(r.dim_good) + "  " +
            std::to_string(r.dim_full_kernel) + "  " +
            std::to_string(r.dim_good_kernel) + "\n";
    if (r.dim_good_kernel != 0) {
      const akform::VFBasis basis = akform::enumerate_good_basis(k, r.beta);
      for (const auto& w : r.witnesses) {
        text += "  witness: " + basis.combine(w).str() + "\n";
      }
    }
  }
  rep["results"]["per_degree"] = std::move(rows);
  rep["results"]["good_kernels_trivial"] = trivial;
  text += trivial ? "all good kernels trivial\n"
                  : "NONTRIVIAL good kernel found\n";
  emit(g, rep, g.quiet && trivial ? "" : text);
  return trivial ? 0 : 1;
}

int cmd_normalize(const GlobalOpts& g, const std::string& input, long order,
                  const std::string& output) {
  const akform::VectorField x = akform::load_system_file(input);
  const auto validated = akform::validate_ak_sfs(x, x.k());
  if (const auto* bad =
          std::get_if<std::vector<akform::Violation>>(&validated)) {
    std::string msg = "system file " + input + " is not an A_k-SFS:";
    for (const auto& v : *bad) msg += "\n  [" + v.clause + "] " + v.detail;
    throw std::invalid_argument(msg);
  }
  const akform::AkSystem& sys = std::get<akform::AkSystem>(validated);
  const akform::NormalizationResult res = akform::normalize(sys, order);
  const akform::ConjugacyCertificate cert = akform::verify_conjugacy(sys, res);

  Json rep = envelope("normalize");
  rep["inputs"]["input"] = input;
  rep["inputs"]["k"] = sys.k;
  rep["inputs"]["order"] = order;
  Json degrees = Json::array();
  for (const auto& [gamma, u] : res.generators) {
    Json d;
    d["degree"] = gamma;
    d["generator"] = akform::vf_to_json(u);
    d["resonant"] = akform::vf_to_json(res.resonant_parts.at(gamma));
    d["resonant_zero"] = res.resonant_parts.at(gamma).is_zero();
    d["perturbation_still_good"] = res.goodness_log.at(gamma);
    degrees.push_back(std::move(d));
  }
  rep["results"]["degrees"] = std::move(degrees);
  rep["results"]["all_resonant_zero"] = res.all_resonant_zero;
  rep["results"]["residual"] = akform::vf_to_json(res.residual);
  rep["results"]["certificate"]["holds"] = cert.holds;
  rep["results"]["certificate"]["checked_order"] = cert.checked_order;
  if (cert.first_failure) {
    Json f;
    f["degree"] = cert.first_failure->degree;
    f["component"] = cert.first_failure->component;
    f["monomial"] = akform::monomial_to_json(cert.first_failure->monomial);
    rep["results"]["certificate"]["first_failure"] = std::move(f);
  }

  if (!output.empty()) {
    akform::write_text_file(output, akform::dump_report(rep));
  }

  std::string text;
  if (!g.quiet) {
    text = "k=" + std::to_string(sys.k) + " system normalized through degree " +
           std::to_string(order) + "\n";
    for (const auto& [gamma, u] : res.generators) {
      text += "  degree " + std::to_string(gamma) + ": generator " + u.str() +
              (res.resonant_parts.at(gamma).is_zero()
                   ? ", resonant 0"
                   : ", RESONANT " + res.resonant_parts.at(gamma).str()) +
              "\n";
    }
    text += std::string("certificate: ") + (cert.holds ? "holds" : "FAILS") +
            " at order " + std::to_string(cert.checked_order) + "\n";
  }
  emit(g, rep, text);
  return res.all_resonant_zero && cert.holds ? 0 : 1;
}

int cmd_selftest(const GlobalOpts& g, int max_k, long max_degree) {
  akform::SelftestOptions opts;
  opts.max_k = max_k;
  opts.max_degree = max_degree;
  opts.seed = g.seed;
  const akform::SelftestOutcome out = akform::run_selftest(opts);
  std::string text;
  if (!g.quiet) {
    for (const auto& c : out.report.at("checks")) {
      text += std::string(c.at("ok").get<bool>() ? "ok   " : "FAIL ") +
              c.at("name").get<std::string>() + " (k=" +
              std::to_string(c.at("k").get<int>()) + ")\n";
    }
    text += out.ok ? "selftest passed\n" : "selftest FAILED\n";
    if (!out.ok) {
      text += "reproduce: " +
              out.report.at("violation").at("reproduce").get<std::string>() +
              "\n";
    }
  }
  emit(g, out.report, text);
  return out.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normal form machinery for A_k slow-fast systems"};
  app.set_version_flag("--version", akform::kVersion);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable report on stdout");
  app.add_flag("--quiet", g.quiet, "suppress non-essential text output");
  app.add_option("--seed", g.seed, "seed for randomized checks");

  int code = 0;

  // basis
  int b_k = 0;
  long b_degree = 0;
  std::string b_space;
  auto* basis = app.add_subcommand("basis", "print a graded basis");
  basis->fallthrough();
  basis->add_option("--k", b_k, "family index, k >= 2")->required();
  basis->add_option("--degree", b_degree, "quasidegree")->required();
  basis->add_option("--space", b_space, "poly | vf | good")
      ->required()
      ->check(CLI::IsMember({"poly", "vf", "good"}));
  basis->callback([&] { code = cmd_basis(g, b_k, b_degree, b_space); });

  // operator
  int o_k = 0;
  long o_gamma = 0, o_beta = 0;
  std::string o_op;
  bool o_check = false;
  auto* oper = app.add_subcommand("operator", "print an operator matrix");
  oper->fallthrough();
  oper->add_option("--k", o_k, "family index, k >= 2")->required();
  oper->add_option("--op", o_op, "d | dstar | box")
      ->required()
      ->check(CLI::IsMember({"d", "dstar", "box"}));
  auto* gamma_opt = oper->add_option("--gamma", o_gamma, "domain degree for d");
  auto* beta_opt = oper->add_option("--beta", o_beta, "degree for dstar/box");
  oper->add_flag("--check", o_check, "cross-verify against the block route");
  oper->callback([&] {
    code = cmd_operator(g, o_k, o_op, gamma_opt, o_gamma, beta_opt, o_beta,
                        o_check);
  });

  // verify
  int v_k = 0;
  std::string v_beta;
  auto* verify = app.add_subcommand("verify", "kernel-triviality certificates");
  verify->fallthrough();
  verify->add_option("--k", v_k, "family index, k >= 2")->required();
  verify->add_option("--beta", v_beta, "degree range A..B")->required();
  verify->callback([&] { code = cmd_verify(g, v_k, v_beta); });

  // normalize
  std::string n_input, n_output;
  long n_order = 0;
  auto* norm = app.add_subcommand("normalize", "normalize a system file");
  norm->fallthrough();
  norm->add_option("--input", n_input, "system file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  norm->add_option("--order", n_order, "truncation quasidegree N")->required();
  norm->add_option("--output", n_output, "write the report file here");
  norm->callback([&] { code = cmd_normalize(g, n_input, n_order, n_output); });

  // selftest
  int s_max_k = 4;
  long s_max_degree = 10;
  auto* self = app.add_subcommand("selftest", "run the property suite");
  self->fallthrough();
  self->add_option("--max-k", s_max_k, "largest k to sweep (default 4)");
  self->add_option("--max-degree", s_max_degree,
                   "largest quasidegree to sweep (default 10)");
  self->callback([&] { code = cmd_selftest(g, s_max_k, s_max_degree); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
