#pragma once

#include <ostream>
#include <string>

namespace gsp4 {

// Weight (p,q) for the compact Cartan {H, J}: [H,X] = -2pi X, [J,X] = -2qi X.
// p and q live in (1/2)Z, so the components are stored doubled.
struct Weight {
  int p2 = 0;
  int q2 = 0;

  static Weight from_halves(int twice_p, int twice_q) { return {twice_p, twice_q}; }
  static Weight alpha() { return {2, 0}; }
  static Weight beta() { return {0, 2}; }

  bool is_zero() const { return p2 == 0 && q2 == 0; }

  friend Weight operator+(Weight x, Weight y) { return {x.p2 + y.p2, x.q2 + y.q2}; }
  friend Weight operator-(Weight x, Weight y) { return {x.p2 - y.p2, x.q2 - y.q2}; }
  friend Weight operator*(int n, Weight w) { return {n * w.p2, n * w.q2}; }
  Weight operator-() const { return {-p2, -q2}; }

  friend bool operator==(Weight x, Weight y) { return x.p2 == y.p2 && x.q2 == y.q2; }
  friend bool operator!=(Weight x, Weight y) { return !(x == y); }
  friend bool operator<(Weight x, Weight y) {
    if (x.p2 != y.p2) return x.p2 < y.p2;
    return x.q2 < y.q2;
  }

  std::string to_string() const {
    auto half = [](int d) {
      if (d % 2 == 0) return std::to_string(d / 2);
      return std::to_string(d) + "/2";
    };
    return "(" + half(p2) + "," + half(q2) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, Weight w) {
    return os << w.to_string();
  }
};

}  // namespace gsp4
