#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gsp4/poly.hpp"

namespace gsp4 {

// Rational function: quotient of two polynomials over Q(i). No gcd reduction
// is attempted; equality is decided by cross-multiplication, which is exact.
class RatFun {
public:
  RatFun() : num_(), den_(1) {}
  RatFun(long n) : num_(n), den_(1) {}
  RatFun(const Scalar& c) : num_(c), den_(1) {}
  RatFun(Poly num) : num_(std::move(num)), den_(1) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num_.is_zero()) den_ = Poly(1);
  }

  static RatFun var(const std::string& name) { return RatFun(Poly::var(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const { return RatFun(-num_, den_); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
  RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
  RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
  RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

  RatFun inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    return RatFun(den_, num_);
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string to_string() const {
    if (den_ == Poly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFun& f) {
    return os << f.to_string();
  }

private:
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

// Substitutes rational functions for variables of a polynomial.
inline RatFun rat_substitute(const Poly& p,
                             const std::map<std::string, RatFun>& images) {
  RatFun out;
  for (const auto& [e, c] : p.terms()) {
    RatFun term{Scalar(c)};
    for (size_t k = 0; k < p.vars().size(); ++k) {
      if (e[k] == 0) continue;
      auto it = images.find(p.vars()[k]);
      RatFun base = (it != images.end()) ? it->second : RatFun::var(p.vars()[k]);
      for (int j = 0; j < e[k]; ++j) term *= base;
    }
    out += term;
  }
  return out;
}

}  // namespace gsp4
