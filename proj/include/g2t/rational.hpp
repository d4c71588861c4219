#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace g2t {

/// Exact rational scalar. Invariants: always in lowest terms, denominator
/// positive, zero stored canonically as 0/1. mpq_class does not canonicalize
/// on construction, so every constructor here does; GMP arithmetic preserves
/// canonical form afterwards.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p", or "p/q" in base 10 (sign on the numerator only).
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");
    std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_signed_digits(num) || !is_digits(den) || den == "0" ||
        den.empty())
      throw std::invalid_argument("Rational: bad literal '" + s + "'");
    mpq_class q(num + "/" + den);
    q.canonicalize();
    return Rational(q);
  }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] mpz_class num() const { return v_.get_num(); }
  [[nodiscard]] mpz_class den() const { return v_.get_den(); }

  [[nodiscard]] std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static bool is_digits(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  }
  static bool is_signed_digits(const std::string& t) {
    if (t.empty()) return false;
    return t[0] == '-' ? is_digits(t.substr(1)) : is_digits(t);
  }

  mpq_class v_;
};

}  // namespace g2t
