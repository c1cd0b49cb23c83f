#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/lie.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/weight.hpp"

namespace gsp4::ktypes {

// Formal character: weight -> multiplicity, zero entries dropped.
class Character {
public:
  Character() = default;

  void add(Weight w, long mult = 1) {
    if (mult == 0) return;
    long& m = counts_[w];
    m += mult;
    if (m == 0) counts_.erase(w);
  }

  long count(Weight w) const {
    auto it = counts_.find(w);
    return it == counts_.end() ? 0 : it->second;
  }

  const std::map<Weight, long>& counts() const { return counts_; }

  long dimension() const {
    long d = 0;
    for (const auto& [w, m] : counts_) d += m;
    return d;
  }

  bool empty() const { return counts_.empty(); }

  Weight max_weight() const {
    if (counts_.empty()) throw std::logic_error("Character: empty");
    return counts_.rbegin()->first;
  }

  Character scaled(long k) const {
    Character out;
    for (const auto& [w, m] : counts_) out.add(w, m * k);
    return out;
  }

  friend Character operator+(Character x, const Character& y) {
    for (const auto& [w, m] : y.counts_) x.add(w, m);
    return x;
  }
  friend Character operator-(Character x, const Character& y) {
    for (const auto& [w, m] : y.counts_) x.add(w, -m);
    return x;
  }
  friend bool operator==(const Character& x, const Character& y) {
    return x.counts_ == y.counts_;
  }

  std::string to_string() const {
    if (counts_.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (const auto& [w, m] : counts_) {
      if (!first) out += ", ";
      out += w.to_string();
      if (m != 1) out += ":" + std::to_string(m);
      first = false;
    }
    return out + "}";
  }

private:
  std::map<Weight, long> counts_;
};

// Dominance for k-highest weights: p nonnegative half-integer, q any
// half-integer. Storage is doubled integers, so only the sign of p matters.
inline bool is_valid_highest_weight(Weight w) { return w.p2 >= 0; }

// Character of the irreducible k-module with highest weight (p,q): the
// alpha-string (m,q), m = -p..p, each once; dimension 2p+1.
inline Character irr_character(Weight hw) {
  if (!is_valid_highest_weight(hw)) {
    throw std::invalid_argument("irr_character: p must be nonnegative");
  }
  Character ch;
  for (int m2 = -hw.p2; m2 <= hw.p2; m2 += 2) ch.add(Weight{m2, hw.q2});
  return ch;
}

// Greedy peeling by the lexicographically maximal remaining weight. Throws
// if the character is not a nonnegative sum of irreducibles.
inline std::map<Weight, long> decompose_character(Character ch) {
  std::map<Weight, long> out;
  while (!ch.empty()) {
    Weight top = ch.max_weight();
    long mult = ch.count(top);
    if (!is_valid_highest_weight(top) || mult < 0) {
      throw std::runtime_error("decompose_character: not a k-type sum at " +
                               top.to_string());
    }
    Character sub = irr_character(top);
    for (const auto& [w, m] : sub.counts()) {
      if (ch.count(w) < mult * m) {
        throw std::runtime_error("decompose_character: not a k-type sum at " +
                                 w.to_string());
      }
    }
    ch = ch - sub.scaled(mult);
    out[top] = mult;
  }
  return out;
}

inline long multiplicity(const Character& ch, Weight hw) {
  auto dec = decompose_character(ch);
  auto it = dec.find(hw);
  return it == dec.end() ? 0 : it->second;
}

// Finite-dimensional k-module given by the action matrices of H, J and the
// pinned root vectors E_alpha, E_{-alpha}. The constructor verifies the
// bracket relations of k on these four generators.
class KModule {
public:
  KModule(std::vector<std::string> labels, Mat<Scalar> H, Mat<Scalar> J,
          Mat<Scalar> Ea, Mat<Scalar> Ema)
      : labels_(std::move(labels)),
        H_(std::move(H)),
        J_(std::move(J)),
        Ea_(std::move(Ea)),
        Ema_(std::move(Ema)) {
    size_t n = labels_.size();
    for (const Mat<Scalar>* m : {&H_, &J_, &Ea_, &Ema_}) {
      if (m->rows() != n || m->cols() != n) {
        throw std::invalid_argument("KModule: matrix size mismatch");
      }
    }
    validate();
  }

  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Mat<Scalar>& act_H() const { return H_; }
  const Mat<Scalar>& act_J() const { return J_; }
  const Mat<Scalar>& act_Ea() const { return Ea_; }
  const Mat<Scalar>& act_Ema() const { return Ema_; }

  // Simultaneous eigenspace decomposition under H and J.
  std::map<Weight, std::vector<std::vector<Scalar>>> weight_spaces() const {
    size_t n = dim();
    std::map<Weight, std::vector<std::vector<Scalar>>> out;
    size_t total = 0;
    for (int p2 = -12; p2 <= 12; ++p2) {
      for (int q2 = -12; q2 <= 12; ++q2) {
        auto ns = joint_kernel(Weight{p2, q2}, false);
        if (ns.empty()) continue;
        total += ns.size();
        out[Weight{p2, q2}] = std::move(ns);
      }
    }
    if (total != n) {
      throw std::runtime_error("KModule: t-action not diagonalizable");
    }
    return out;
  }

  Character character() const {
    Character ch;
    for (const auto& [w, vs] : weight_spaces()) {
      ch.add(w, static_cast<long>(vs.size()));
    }
    return ch;
  }

  // Basis of { v in the w-weight space : E_alpha v = 0 }.
  std::vector<std::vector<Scalar>> highest_weight_vectors(Weight w) const {
    return joint_kernel(w, true);
  }

  std::vector<Scalar> apply(const Mat<Scalar>& m,
                            const std::vector<Scalar>& v) const {
    return mat_apply(m, v);
  }

private:
  std::vector<std::vector<Scalar>> joint_kernel(Weight w, bool with_Ea) const {
    size_t n = dim();
    Scalar lh(Rational(0), Rational(-w.p2));
    Scalar lj(Rational(0), Rational(-w.q2));
    size_t rows = with_Ea ? 3 * n : 2 * n;
    Mat<Scalar> stacked(rows, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        stacked(i, j) = H_(i, j);
        stacked(n + i, j) = J_(i, j);
        if (with_Ea) stacked(2 * n + i, j) = Ea_(i, j);
      }
      stacked(i, i) = stacked(i, i) - lh;
      stacked(n + i, i) = stacked(n + i, i) - lj;
    }
    return stacked.nullspace();
  }

  void validate() const {
    using lie::bracket;
    auto comm = [](const Mat<Scalar>& x, const Mat<Scalar>& y) {
      return x * y - y * x;
    };
    Scalar m2i(Rational(0), Rational(-2));
    if (!comm(H_, J_).is_zero()) {
      throw std::invalid_argument("KModule: [H,J] != 0");
    }
    if (!(comm(H_, Ea_) == m2i * Ea_)) {
      throw std::invalid_argument("KModule: [H,Ea] relation fails");
    }
    if (!(comm(H_, Ema_) == -m2i * Ema_)) {
      throw std::invalid_argument("KModule: [H,Ema] relation fails");
    }
    if (!comm(J_, Ea_).is_zero() || !comm(J_, Ema_).is_zero()) {
      throw std::invalid_argument("KModule: [J,E] relation fails");
    }
    // [E_alpha, E_{-alpha}] in t, with coefficients fixed by the pinning
    auto c = lie::to_coords(
        bracket(lie::pinned_E_alpha(), lie::pinned_E_minus_alpha()));
    Mat<Scalar> expect = c[lie::idx_H] * H_ + c[lie::idx_J] * J_;
    if (!(comm(Ea_, Ema_) == expect)) {
      throw std::invalid_argument("KModule: [Ea,Ema] relation fails");
    }
  }

  std::vector<std::string> labels_;
  Mat<Scalar> H_, J_, Ea_, Ema_;
};

// k acting on a bracket-stable span of gsp4 matrices by the adjoint action.
inline KModule adjoint_module(const std::vector<lie::Mat4>& span,
                              std::vector<std::string> labels) {
  const auto& b = lie::basis();
  return KModule(std::move(labels), lie::ad_action(b[lie::idx_H], span),
                 lie::ad_action(b[lie::idx_J], span),
                 lie::ad_action(lie::pinned_E_alpha(), span),
                 lie::ad_action(lie::pinned_E_minus_alpha(), span));
}

}  // namespace gsp4::ktypes
