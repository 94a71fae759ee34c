#include "akform/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace akform {

namespace {

mpq_class canonical(mpq_class q) {
  if (sgn(q.get_den()) == 0) throw std::domain_error("rational: zero denominator");
  q.canonicalize();
  return q;
}

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(canonical(mpq_class(num, den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : v_(canonical(mpq_class(num, den))) {}

Rational::Rational(mpq_class q) : v_(canonical(std::move(q))) {}

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!valid_integer_token(num)) {
    throw std::invalid_argument("rational: malformed numerator in '" + s + "'");
  }
  if (slash == std::string::npos) return Rational(mpz_class(num));
  const std::string den = s.substr(slash + 1);
  if (!valid_integer_token(den)) {
    throw std::invalid_argument("rational: malformed denominator in '" + s + "'");
  }
  mpz_class d(den);
  if (sgn(d) == 0) {
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  }
  return Rational(mpz_class(num), d);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational inverse(const Rational& a) {
  if (a.is_zero()) throw std::domain_error("rational: inverse of zero");
  return Rational(1) / a;
}

std::ostream& operator<<(std::ostream& os, const Rational& a) {
  return os << a.str();
}

}  // namespace akform
