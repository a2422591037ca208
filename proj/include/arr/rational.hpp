#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arr {

// Exact rational scalar. Canonical at all times: lowest terms, positive
// denominator, zero stored as 0/1. Arithmetic never loses exactness.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}  // NOLINT: implicit by design, literals are handy
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }

  // Accepts "p", "-p", "p/q" with q > 0 (decimal digits only). Returns
  // nullopt on anything else, including "p/0".
  static std::optional<Rat> parse(std::string_view tok) {
    if (tok.empty()) return std::nullopt;
    std::size_t pos = 0;
    if (tok[0] == '+' || tok[0] == '-') pos = 1;
    bool digits = false, slash = false, den_digits = false;
    for (std::size_t i = pos; i < tok.size(); ++i) {
      char c = tok[i];
      if (c == '/') {
        if (slash || !digits) return std::nullopt;
        slash = true;
      } else if (c >= '0' && c <= '9') {
        (slash ? den_digits : digits) = true;
      } else {
        return std::nullopt;
      }
    }
    if (!digits || (slash && !den_digits)) return std::nullopt;
    if (tok[0] == '+') tok.remove_prefix(1);  // mpq_set_str rejects a leading '+'
    Rat r;
    if (mpq_set_str(r.v_.get_mpq_t(), std::string(tok).c_str(), 10) != 0)
      return std::nullopt;
    if (sgn(r.v_.get_den()) == 0) return std::nullopt;
    r.v_.canonicalize();
    return r;
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat inv() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  // "p" or "p/q".
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.v_;
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rat(const mpq_class& canonical) : v_(canonical) {}
  mpq_class v_;
};

}  // namespace arr
