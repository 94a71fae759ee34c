#include "akform/vector_field.hpp"

#include <stdexcept>

namespace akform {

void VectorField::set_component(int i, Polynomial p) {
  if (p.k() != k_) throw std::invalid_argument("vector field: component has wrong k");
  comps_.at(i) = std::move(p);
}

void VectorField::add_to_component(int i, const Polynomial& p) {
  if (p.k() != k_) throw std::invalid_argument("vector field: component has wrong k");
  comps_.at(i) += p;
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

void VectorField::check_compatible(const VectorField& o) const {
  if (k_ != o.k_) throw std::invalid_argument("vector field: mixed-k operands");
}

VectorField VectorField::operator-() const {
  VectorField v(k_);
  for (int i = 0; i <= k_; ++i) v.comps_[i] = -comps_[i];
  return v;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  check_compatible(o);
  for (int i = 0; i <= k_; ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  check_compatible(o);
  for (int i = 0; i <= k_; ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

std::string VectorField::str() const {
  std::string out;
  for (int i = 0; i <= k_; ++i) {
    if (comps_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + comps_[i].str() + ")*d/d" + var_name(k_, i);
  }
  return out.empty() ? "0" : out;
}

Polynomial directional_derivative(const VectorField& x, const Polynomial& g) {
  if (x.k() != g.k()) throw std::invalid_argument("directional derivative: mixed-k operands");
  Polynomial out(g.k());
  for (int j = 0; j <= g.k(); ++j) {
    if (x.component(j).is_zero()) continue;
    out += x.component(j) * g.partial(j);
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.k() != y.k()) throw std::invalid_argument("lie bracket: mixed-k operands");
  VectorField out(x.k());
  for (int i = 0; i <= x.k(); ++i) {
    out.set_component(i, directional_derivative(x, y.component(i)) -
                              directional_derivative(y, x.component(i)));
  }
  return out;
}

std::map<long, VectorField> quasi_components(const VectorField& x, const Weights& w) {
  if (x.k() != w.k) throw std::invalid_argument("quasi components: weights mismatch");
  std::map<long, VectorField> out;
  for (int i = 0; i <= x.k(); ++i) {
    for (const auto& [m, c] : x.component(i).terms()) {
      const long gamma = m.quasidegree(w) - w.r[i];
      auto [it, inserted] = out.emplace(gamma, VectorField(x.k()));
      (void)inserted;
      it->second.add_to_component(i, Polynomial::monomial(x.k(), m, c));
    }
  }
  return out;
}

std::optional<long> quasiorder(const VectorField& x, const Weights& w) {
  if (x.k() != w.k) throw std::invalid_argument("quasiorder: weights mismatch");
  std::optional<long> ord;
  for (int i = 0; i <= x.k(); ++i) {
    for (const auto& [m, c] : x.component(i).terms()) {
      (void)c;
      const long gamma = m.quasidegree(w) - w.r[i];
      if (!ord || gamma < *ord) ord = gamma;
    }
  }
  return ord;
}

bool is_quasihomogeneous(const VectorField& x, const Weights& w, long gamma) {
  for (int i = 0; i <= x.k(); ++i) {
    if (!x.component(i).is_quasihomogeneous(w, gamma + w.r[i])) return false;
  }
  return true;
}

VectorField truncate_above(const VectorField& x, const Weights& w, long n) {
  VectorField out(x.k());
  for (int i = 0; i <= x.k(); ++i) {
    Polynomial p(x.k());
    for (const auto& [m, c] : x.component(i).terms()) {
      if (m.quasidegree(w) - w.r[i] <= n) p.add_term(m, c);
    }
    out.set_component(i, std::move(p));
  }
  return out;
}

}  // namespace akform
