#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gsp4/rational.hpp"

namespace gsp4 {

// Element of Q(i), the Gaussian rationals. All kernel arithmetic runs over
// this field (or over polynomial/rational-function rings built on top of it).
class Scalar {
public:
  Scalar() = default;
  Scalar(long n) : re_(n) {}
  Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar conj() const { return Scalar(re_, -im_); }

  // re^2 + im^2, a nonnegative rational
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("Scalar: division by zero");
    Scalar c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(re_ / n, -im_ / n);
  }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag = imag_part_string();
    if (re_.is_zero()) return imag;
    std::string out = re_.to_string();
    if (im_.sign() > 0) out += "+";
    out += imag;
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

private:
  std::string imag_part_string() const {
    if (im_ == Rational(1)) return "i";
    if (im_ == Rational(-1)) return "-i";
    return im_.to_string() + "i";
  }

  Rational re_;
  Rational im_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace gsp4
