#include "akform/polynomial.hpp"

#include <stdexcept>

namespace akform {

Polynomial Polynomial::constant(int k, const Rational& c) {
  return monomial(k, Monomial::one(k), c);
}

Polynomial Polynomial::monomial(int k, const Monomial& m, const Rational& c) {
  if (m.nvars() != k + 1) {
    throw std::invalid_argument("polynomial: monomial has wrong variable count");
  }
  Polynomial p(k);
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Monomial::one(k_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != k_ + 1) {
    throw std::invalid_argument("polynomial: monomial has wrong variable count");
  }
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (k_ != o.k_) throw std::invalid_argument("polynomial: mixed-k operands");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(k_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_compatible(o);
  Polynomial out(k_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial Polynomial::partial(int var) const {
  if (var < 0 || var > k_) {
    throw std::invalid_argument("polynomial: derivative variable out of range");
  }
  Polynomial p(k_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exps[var];
    if (e == 0) continue;
    Monomial d(m);
    d.exps[var] = e - 1;
    p.add_term(d, c * Rational(e));
  }
  return p;
}

bool Polynomial::divisible_by(int var, int power) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (m.exps[var] < power) return false;
  }
  return true;
}

Polynomial Polynomial::divide_by_var_power(int var, int power) const {
  if (!divisible_by(var, power)) {
    throw std::invalid_argument("polynomial: not divisible by " + var_name(k_, var) +
                                "^" + std::to_string(power));
  }
  Polynomial p(k_);
  for (const auto& [m, c] : terms_) {
    Monomial d(m);
    d.exps[var] -= power;
    p.terms_.emplace(d, c);
  }
  return p;
}

Polynomial Polynomial::eval_var_zero(int var) const {
  Polynomial p(k_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[var] == 0) p.terms_.emplace(m, c);
  }
  return p;
}

std::optional<long> Polynomial::homogeneous_degree(const Weights& w) const {
  std::optional<long> deg;
  for (const auto& [m, c] : terms_) {
    (void)c;
    const long d = m.quasidegree(w);
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

bool Polynomial::is_quasihomogeneous(const Weights& w, long delta) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (m.quasidegree(w) != delta) return false;
  }
  return true;
}

std::optional<long> Polynomial::quasiorder(const Weights& w) const {
  std::optional<long> ord;
  for (const auto& [m, c] : terms_) {
    (void)c;
    const long d = m.quasidegree(w);
    if (!ord || d < *ord) ord = d;
  }
  return ord;
}

Polynomial Polynomial::graded_part(const Weights& w, long delta) const {
  Polynomial p(k_);
  for (const auto& [m, c] : terms_) {
    if (m.quasidegree(w) == delta) p.terms_.emplace(m, c);
  }
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += m.str(k_);
    }
  }
  return out;
}

}  // namespace akform
