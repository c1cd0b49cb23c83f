#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/forms.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/poly.hpp"

namespace gsp4::invcalc {

using forms::Form;
using forms::Frame;

// commuting operator symbols theta_i = t_i d/dt_i
inline Poly theta1() { return Poly::var("th1"); }
inline Poly theta2() { return Poly::var("th2"); }

// Coefficient function: a constant plus a sum of twisted pieces f^{P tau},
// one operator polynomial P in Q(i)[th1, th2] per base symbol. f is linear
// in its exponent argument, so collecting per base is lossless.
class CoeffFn {
public:
  CoeffFn() = default;

  static CoeffFn constant(const Scalar& c) {
    CoeffFn out;
    out.constant_ = c;
    return out;
  }

  static CoeffFn twisted(const std::string& base, Poly op = Poly(1)) {
    CoeffFn out;
    if (!op.is_zero()) out.twisted_[base] = std::move(op);
    return out;
  }

  const Scalar& constant_part() const { return constant_; }
  const std::map<std::string, Poly>& twisted_parts() const { return twisted_; }

  bool is_zero() const { return constant_.is_zero() && twisted_.empty(); }

  CoeffFn operator-() const {
    CoeffFn out;
    out.constant_ = -constant_;
    for (const auto& [b, p] : twisted_) out.twisted_[b] = -p;
    return out;
  }

  friend CoeffFn operator+(const CoeffFn& x, const CoeffFn& y) {
    CoeffFn out = x;
    out.constant_ = out.constant_ + y.constant_;
    for (const auto& [b, p] : y.twisted_) {
      auto [it, fresh] = out.twisted_.emplace(b, p);
      if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) out.twisted_.erase(it);
      }
    }
    return out;
  }
  friend CoeffFn operator-(const CoeffFn& x, const CoeffFn& y) {
    return x + (-y);
  }

  friend CoeffFn operator*(const Scalar& c, const CoeffFn& f) {
    CoeffFn out;
    out.constant_ = c * f.constant_;
    if (!c.is_zero()) {
      for (const auto& [b, p] : f.twisted_) out.twisted_[b] = Poly(c) * p;
    }
    return out;
  }

  // applies an operator polynomial to every twisted piece and drops the
  // constant (the derivative of a constant coefficient vanishes)
  CoeffFn theta_scaled(const Poly& op) const {
    CoeffFn out;
    for (const auto& [b, p] : twisted_) {
      Poly q = op * p;
      if (!q.is_zero()) out.twisted_[b] = q;
    }
    return out;
  }

  friend bool operator==(const CoeffFn& x, const CoeffFn& y) {
    return x.constant_ == y.constant_ && x.twisted_ == y.twisted_;
  }
  friend bool operator!=(const CoeffFn& x, const CoeffFn& y) {
    return !(x == y);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!constant_.is_zero()) out = constant_.to_string();
    for (const auto& [b, p] : twisted_) {
      if (!out.empty()) out += " + ";
      out += "f^{(" + p.to_string() + ")" + b + "}";
    }
    return out;
  }

private:
  Scalar constant_;
  std::map<std::string, Poly> twisted_;
};

inline bool is_zero(const CoeffFn& f) { return f.is_zero(); }

// ---- Chevalley-Eilenberg differential on the Borel frame ----

namespace detail {

// d(xi_j) = -sum_{k<l} c^j_{kl} xi_k ^ xi_l from the b0 structure constants
inline const std::vector<Form<Scalar>>& ce_d_covectors() {
  static const std::vector<Form<Scalar>> table = [] {
    const auto& prim = forms::frame_primal(Frame::borel);
    std::vector<Form<Scalar>> out(6, Form<Scalar>(Frame::borel));
    for (size_t k = 0; k < 6; ++k) {
      for (size_t l = k + 1; l < 6; ++l) {
        auto c = lie::to_coords(lie::bracket(prim[k], prim[l]));
        for (size_t r = lie::idx_H; r < lie::basis_count; ++r) {
          if (!c[r].is_zero()) {
            throw std::logic_error("ce_d: b0 is not bracket-closed");
          }
        }
        for (size_t j = 0; j < 6; ++j) {
          if (c[j].is_zero()) continue;
          out[j] += (-c[j]) * wedge(Form<Scalar>::covector(Frame::borel, k),
                                    Form<Scalar>::covector(Frame::borel, l));
        }
      }
    }
    return out;
  }();
  return table;
}

}  // namespace detail

inline Form<Scalar> ce_d(const Form<Scalar>& w) {
  if (w.frame() != Frame::borel) {
    throw std::invalid_argument("ce_d: expects a Borel-frame form");
  }
  const auto& dxi = detail::ce_d_covectors();
  Form<Scalar> out(Frame::borel);
  for (const auto& [m, c] : w.terms()) {
    auto slots = forms::detail::slots_of(m);
    for (size_t q = 0; q < slots.size(); ++q) {
      Form<Scalar> acc = Form<Scalar>::constant(
          Frame::borel, q % 2 == 0 ? c : -c);
      for (size_t r = 0; r < slots.size(); ++r) {
        const Form<Scalar>& factor =
            r == q ? dxi[slots[r]]
                   : Form<Scalar>::covector(Frame::borel, slots[r]);
        acc = wedge(acc, factor);
        if (acc.is_zero()) break;
      }
      out += acc;
    }
  }
  return out;
}

// ---- twisted forms ----

class TwistedForm {
public:
  TwistedForm() = default;

  // coefficient times an ordinary Borel-frame multivector
  TwistedForm(const CoeffFn& f, const Form<Scalar>& w) {
    if (w.frame() != Frame::borel) {
      throw std::invalid_argument("TwistedForm: expects a Borel-frame form");
    }
    for (const auto& [m, c] : w.terms()) accumulate(m, c * f);
  }

  const std::map<uint8_t, CoeffFn>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CoeffFn coeff(uint8_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? CoeffFn() : it->second;
  }

  TwistedForm operator-() const {
    TwistedForm out;
    for (const auto& [m, f] : terms_) out.terms_[m] = -f;
    return out;
  }

  friend TwistedForm operator+(const TwistedForm& x, const TwistedForm& y) {
    TwistedForm out = x;
    for (const auto& [m, f] : y.terms_) out.accumulate(m, f);
    return out;
  }
  friend TwistedForm operator-(const TwistedForm& x, const TwistedForm& y) {
    return x + (-y);
  }
  TwistedForm& operator+=(const TwistedForm& o) {
    for (const auto& [m, f] : o.terms_) accumulate(m, f);
    return *this;
  }

  friend bool operator==(const TwistedForm& x, const TwistedForm& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const TwistedForm& x, const TwistedForm& y) {
    return !(x == y);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto& names = forms::frame_labels(Frame::borel);
    std::string out;
    for (const auto& [m, f] : terms_) {
      std::string mono;
      for (size_t j : forms::detail::slots_of(m)) {
        if (!mono.empty()) mono += "^";
        mono += names[j];
      }
      if (!out.empty()) out += " + ";
      out += "(" + f.to_string() + ")";
      if (!mono.empty()) out += mono;
    }
    return out;
  }

  void accumulate(uint8_t m, const CoeffFn& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, f);
    if (!fresh) {
      it->second = it->second + f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

private:
  std::map<uint8_t, CoeffFn> terms_;
};

// d(f omega) = df ^ omega + f ce_d(omega), with the twisted differential
// rule d(f^{P tau}) = f^{2 th2 P tau} a* + f^{(2 th1 - 2 th2) P tau} h*.
inline TwistedForm twisted_d(const TwistedForm& W) {
  TwistedForm out;
  for (const auto& [m, f] : W.terms()) {
    Form<Scalar> mono =
        Form<Scalar>::term(Frame::borel, forms::detail::slots_of(m), Scalar(1));
    // df ^ omega
    CoeffFn da = f.theta_scaled(Poly(2) * theta2());
    CoeffFn dh = f.theta_scaled(Poly(2) * theta1() - Poly(2) * theta2());
    if (!da.is_zero()) {
      out += TwistedForm(da, wedge(forms::covB(0), mono));
    }
    if (!dh.is_zero()) {
      out += TwistedForm(dh, wedge(forms::covB(1), mono));
    }
    // f ce_d(omega)
    out += TwistedForm(f, ce_d(mono));
  }
  return out;
}

// eta^{tau1, tau2} with operator polynomials applied to the two bases
inline TwistedForm eta_twisted(const Poly& P1, const Poly& P2) {
  return TwistedForm(CoeffFn::twisted("tau1", P1), forms::eta_one()) +
         TwistedForm(CoeffFn::twisted("tau2", P2), forms::eta_two());
}

// eta^{tau1, tau2} after substituting the relation tau1 = P tau2
inline TwistedForm eta_relation(const Poly& P) {
  return TwistedForm(CoeffFn::twisted("tau2", P), forms::eta_one()) +
         TwistedForm(CoeffFn::twisted("tau2", Poly(1)), forms::eta_two());
}

struct Closedness {
  TwistedForm derivative;
  bool closed;
};

inline Closedness closedness_condition(const TwistedForm& W) {
  TwistedForm d = twisted_d(W);
  bool closed = d.is_zero();
  return Closedness{std::move(d), closed};
}

// Obstruction of the generic eta^{tau1,tau2}: the coefficient of
// a*^h*^n0*^n1*^n3* in its twisted differential.
inline CoeffFn eta_obstruction() {
  TwistedForm d = twisted_d(eta_twisted(Poly(1), Poly(1)));
  uint8_t mask = (1u << 0) | (1u << 1) | (1u << 2) | (1u << 3) | (1u << 5);
  return d.coeff(mask);
}

// ---- the formal Eisenstein seed of 6.1.3 ----

// Free graded-commutative algebra on eta_o (degree 1), omega (degree 3),
// domega (degree 4), with function coefficients in Q(i)[kappa, lamkp]
// where lamkp stands for lambda kappa'(lambda).
class FormalElem {
public:
  static constexpr int degree_of[3] = {1, 3, 4};  // eta_o, omega, domega

  FormalElem() = default;

  static FormalElem symbol(int id, Poly coeff = Poly(1)) {
    FormalElem out;
    if (!coeff.is_zero()) out.terms_[uint8_t(1u << id)] = std::move(coeff);
    return out;
  }

  static FormalElem scalar(Poly coeff) {
    FormalElem out;
    if (!coeff.is_zero()) out.terms_[0] = std::move(coeff);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<uint8_t, Poly>& terms() const { return terms_; }

  friend FormalElem operator+(const FormalElem& x, const FormalElem& y) {
    FormalElem out = x;
    for (const auto& [m, c] : y.terms_) out.accumulate(m, c);
    return out;
  }

  friend FormalElem wedge(const FormalElem& x, const FormalElem& y) {
    FormalElem out;
    for (const auto& [m1, c1] : x.terms_) {
      for (const auto& [m2, c2] : y.terms_) {
        if (m1 & m2) {
          // a repeated symbol of odd degree squares to zero; omega and
          // domega are odd or would need coefficients we never produce
          bool odd = false;
          for (int j = 0; j < 3; ++j) {
            if ((m1 & m2 & (1u << j)) && degree_of[j] % 2 == 1) odd = true;
          }
          if (odd) continue;
          throw std::logic_error("FormalElem: repeated even symbol");
        }
        int cross = 0;
        for (int j = 0; j < 3; ++j) {
          if (!(m2 & (1u << j))) continue;
          for (int i = j + 1; i < 3; ++i) {
            if (m1 & (1u << i)) cross += degree_of[i] * degree_of[j];
          }
        }
        Poly c = c1 * c2;
        if (cross % 2 == 1) c = -c;
        out.accumulate(uint8_t(m1 | m2), c);
      }
    }
    return out;
  }

  friend bool operator==(const FormalElem& x, const FormalElem& y) {
    return x.terms_ == y.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"eta_o", "omega", "domega"};
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (int j = 0; j < 3; ++j) {
        if (!(m & (1u << j))) continue;
        if (!mono.empty()) mono += "^";
        mono += names[j];
      }
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (!mono.empty()) out += mono;
    }
    return out;
  }

private:
  void accumulate(uint8_t m, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<uint8_t, Poly> terms_;
};

struct SeedProof {
  bool closed;
  std::string residual;
  std::vector<std::string> steps;
};

// d(eta^{kappa, omega}) for eta^{kappa, omega} = kappa(lambda) omega ^ eta_o,
// using d(kappa(lambda)) = lambda kappa'(lambda) eta_o, d(eta_o) = 0 and
// d(omega) = 0 (or the injected nonzero value when asked to).
inline SeedProof eisenstein_seed_closed(bool inject_nonclosed_omega = false) {
  Poly kappa = Poly::var("kappa");
  Poly lamkp = Poly::var("lamkp");
  FormalElem eta_o = FormalElem::symbol(0);
  FormalElem omega = FormalElem::symbol(1);
  FormalElem domega = FormalElem::symbol(2);

  SeedProof proof;
  proof.steps.push_back("seed = kappa . omega ^ eta_o");

  // d(kappa) ^ omega ^ eta_o
  FormalElem dk = FormalElem::symbol(0, lamkp);
  FormalElem term1 = wedge(dk, wedge(omega, eta_o));
  proof.steps.push_back("d(kappa) ^ omega ^ eta_o = (lamkp) eta_o ^ omega ^ eta_o = " +
                        term1.to_string());

  // kappa (d(omega) ^ eta_o + (-1)^3 omega ^ d(eta_o))
  FormalElem dom = inject_nonclosed_omega ? domega : FormalElem();
  FormalElem term2 = wedge(FormalElem::scalar(kappa), wedge(dom, eta_o));
  proof.steps.push_back("kappa . d(omega) ^ eta_o = " + term2.to_string());
  proof.steps.push_back("kappa . omega ^ d(eta_o) = 0");

  FormalElem total = term1 + term2;
  proof.closed = total.is_zero();
  proof.residual = total.to_string();
  proof.steps.push_back("d(seed) = " + proof.residual);
  return proof;
}

// ---- section 6.1.1 weight bookkeeping ----

// Eigenvalue of the coadjoint H-action in the doubled convention
// ([H, X] = -i p2 X); empty when the form is not an H-eigenvector.
inline std::optional<int> h_weight(const Form<Scalar>& f) {
  if (f.is_zero()) return std::nullopt;
  Form<Scalar> img = forms::k_action(lie::basis()[lie::idx_H], f);
  const auto& [m0, c0] = *f.terms().begin();
  Scalar ratio = img.coeff(m0) * c0.inverse();
  if (!(ratio * f == img)) return std::nullopt;
  Scalar r = ratio * Scalar::i().inverse();
  if (!r.im().is_zero()) return std::nullopt;
  Rational p2 = -r.re();
  if (!p2.is_integer()) return std::nullopt;
  return static_cast<int>(p2.to_long());
}

struct WeightEntry {
  std::string name;
  std::optional<int> computed_p2;  // multiples of alpha are p2 = 2j
  std::optional<int> claimed_p2;   // empty when the text makes no claim
};

// The eta^pm, eta_pm weight claims and the full H-eigen table of wedge^2 u*.
inline std::vector<WeightEntry> weights_of_section6_forms() {
  std::vector<WeightEntry> out;
  out.push_back({"eta^+", h_weight(forms::eta_upper(+1)), 2});
  out.push_back({"eta^-", h_weight(forms::eta_upper(-1)), -2});
  out.push_back({"eta_+", h_weight(forms::eta_lower(+1)), 2});
  out.push_back({"eta_-", h_weight(forms::eta_lower(-1)), -2});
  // wedge^2 u* in the raw monomial basis and in the eigenbasis
  Form<Scalar> n12 = wedge(forms::covB(3), forms::covB(4));
  Form<Scalar> n13 = wedge(forms::covB(3), forms::covB(5));
  Form<Scalar> n23 = wedge(forms::covB(4), forms::covB(5));
  out.push_back({"n1*^n2*", h_weight(n12), std::nullopt});
  out.push_back({"n1*^n3*", h_weight(n13), std::nullopt});
  out.push_back({"n2*^n3*", h_weight(n23), std::nullopt});
  return out;
}

}  // namespace gsp4::invcalc
