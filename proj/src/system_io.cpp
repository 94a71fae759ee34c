#include "akform/system_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace akform {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("system file: " + where + ": " + what);
}

long require_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

}  // namespace

VectorField system_from_json(const Json& j) {
  if (!j.is_object()) fail("root", "expected an object");
  if (!j.contains("k")) fail("root", "missing \"k\"");
  const long k_long = require_integer(j.at("k"), "k");
  if (k_long < 2) fail("k", "k must be >= 2");
  const int k = static_cast<int>(k_long);

  if (!j.contains("components")) fail("root", "missing \"components\"");
  const Json& comps = j.at("components");
  if (!comps.is_array() || comps.size() != static_cast<std::size_t>(k + 1)) {
    fail("components", "expected an array of k+1 = " + std::to_string(k + 1) +
                           " component polynomials");
  }

  VectorField x(k);
  for (int i = 0; i <= k; ++i) {
    const std::string cwhere = "components[" + std::to_string(i) + "]";
    const Json& terms = comps.at(i);
    if (!terms.is_array()) fail(cwhere, "expected an array of terms");
    Polynomial p(k);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string twhere = cwhere + "[" + std::to_string(t) + "]";
      const Json& term = terms.at(t);
      if (!term.is_object()) fail(twhere, "expected a term object");
      if (!term.contains("exponents")) fail(twhere, "missing \"exponents\"");
      if (!term.contains("coeff")) fail(twhere, "missing \"coeff\"");
      const Json& exps = term.at("exponents");
      if (!exps.is_array() || exps.size() != static_cast<std::size_t>(k + 1)) {
        fail(twhere + ".exponents",
             "expected " + std::to_string(k + 1) + " integers");
      }
      std::vector<int> e(k + 1);
      for (int v = 0; v <= k; ++v) {
        const long val = require_integer(
            exps.at(v), twhere + ".exponents[" + std::to_string(v) + "]");
        if (val < 0) {
          fail(twhere + ".exponents[" + std::to_string(v) + "]",
               "exponents must be nonnegative");
        }
        e[v] = static_cast<int>(val);
      }
      const Json& coeff = term.at("coeff");
      if (!coeff.is_string()) fail(twhere + ".coeff", "expected a string");
      Rational c;
      try {
        c = Rational::parse(coeff.get<std::string>());
      } catch (const std::invalid_argument& err) {
        fail(twhere + ".coeff", err.what());
      }
      p.add_term(Monomial(std::move(e)), c);
    }
    x.set_component(i, std::move(p));
  }
  return x;
}

Json system_to_json(const VectorField& x) {
  Json j;
  j["k"] = x.k();
  Json comps = Json::array();
  for (int i = 0; i <= x.k(); ++i) {
    comps.push_back(polynomial_to_json(x.component(i)));
  }
  j["components"] = std::move(comps);
  return j;
}

VectorField load_system_file(const std::string& path) {
  const std::string text = read_text_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("system file: " + path + ": " + err.what());
  }
  return system_from_json(j);
}

Json monomial_to_json(const Monomial& m) {
  Json a = Json::array();
  for (const int e : m.exps) a.push_back(e);
  return a;
}

Json polynomial_to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term;
    term["exponents"] = monomial_to_json(m);
    term["coeff"] = c.str();
    a.push_back(std::move(term));
  }
  return a;
}

Json vf_to_json(const VectorField& x) { return system_to_json(x); }

Json matrix_to_json(const QMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json poly_basis_to_json(const PolyBasis& b) {
  Json j;
  j["k"] = b.k;
  j["degree"] = b.delta;
  j["dim"] = b.dim();
  Json monos = Json::array();
  Json gram = Json::array();
  for (int i = 0; i < b.dim(); ++i) {
    monos.push_back(monomial_to_json(b.monomials[i]));
    gram.push_back(b.gram[i].str());
  }
  j["monomials"] = std::move(monos);
  j["gram"] = std::move(gram);
  return j;
}

Json vf_basis_to_json(const VFBasis& b) {
  Json j;
  j["k"] = b.k;
  j["degree"] = b.gamma;
  j["dim"] = b.dim();
  Json elems = Json::array();
  Json gram = Json::array();
  for (int i = 0; i < b.dim(); ++i) {
    Json e;
    e["component"] = b.elements[i].comp;
    e["monomial"] = monomial_to_json(b.elements[i].mono);
    elems.push_back(std::move(e));
    gram.push_back(b.gram[i].str());
  }
  j["elements"] = std::move(elems);
  j["gram"] = std::move(gram);
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

}  // namespace akform
