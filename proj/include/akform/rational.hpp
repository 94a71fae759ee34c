#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace akform {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}    // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  explicit Rational(mpq_class q);

  /// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
  /// or zero denominator.
  static Rational parse(const std::string& s);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical string form: "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& a);
Rational inverse(const Rational& a);  // throws std::domain_error on zero

std::ostream& operator<<(std::ostream& os, const Rational& a);

}  // namespace akform
