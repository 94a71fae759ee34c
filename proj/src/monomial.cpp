#include "akform/monomial.hpp"

#include <stdexcept>

namespace akform {

Monomial Monomial::var(int k, int var, int power) {
  if (var < 0 || var > k) throw std::invalid_argument("monomial: variable index out of range");
  Monomial m = one(k);
  m.exps[var] = power;
  return m;
}

long Monomial::quasidegree(const Weights& w) const {
  if (static_cast<int>(exps.size()) != w.nvars()) {
    throw std::invalid_argument("monomial: variable count does not match weights");
  }
  long d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    d += static_cast<long>(w.r[i]) * exps[i];
  }
  return d;
}

bool Monomial::is_one() const {
  for (int e : exps)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exps.size() != o.exps.size()) {
    throw std::invalid_argument("monomial: variable count mismatch in product");
  }
  Monomial m(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
  return m;
}

std::string Monomial::str(int k) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(k, static_cast<int>(i));
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

}  // namespace akform
