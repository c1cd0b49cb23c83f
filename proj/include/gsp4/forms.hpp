#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/ktypes.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/poly.hpp"
#include "gsp4/ratfun.hpp"

namespace gsp4::forms {

// Frames on b0*: the Borel frame (a*, h*, n0*, n1*, n2*, n3*), the root
// frame dual to the displayed e-basis, and the variant dual to the
// eigen-corrected basis (e(-a+b) with the n3 sign flipped).
enum class Frame { borel, root_printed, root_corrected };

inline const std::vector<std::string>& frame_labels(Frame f) {
  static const std::vector<std::string> borel = {"a*",  "h*",  "n0*",
                                                 "n1*", "n2*", "n3*"};
  static const std::vector<std::string> root = {
      "e*(-a-b)", "e*(-b)", "e*(a-b)", "e*(-a+b)", "e*(b)", "e*(a+b)"};
  return f == Frame::borel ? borel : root;
}

// Primal basis vectors of the frame, as 4x4 matrices over Q(i).
inline const std::vector<lie::Mat4>& frame_primal(Frame f) {
  static const std::vector<lie::Mat4> borel = lie::b0_basis();
  static const std::vector<lie::Mat4> printed = [] {
    std::vector<lie::Mat4> v;
    for (const char* n :
         {"e(-a-b)", "e(-b)", "e(a-b)", "e(-a+b)", "e(b)", "e(a+b)"}) {
      v.push_back(lie::frame_vector(n));
    }
    return v;
  }();
  static const std::vector<lie::Mat4> corrected = [] {
    std::vector<lie::Mat4> v = printed;
    v[3] = v[3] + Scalar(2) * lie::basis()[lie::idx_n3];
    return v;
  }();
  switch (f) {
    case Frame::borel: return borel;
    case Frame::root_printed: return printed;
    default: return corrected;
  }
}

namespace detail {

// Columns are the Borel coordinates of the frame's primal vectors.
inline const Mat<Scalar>& primal_to_borel(Frame f) {
  static std::map<Frame, Mat<Scalar>> cache;
  auto it = cache.find(f);
  if (it != cache.end()) return it->second;
  Mat<Scalar> C(6, 6);
  const auto& prim = frame_primal(f);
  for (size_t k = 0; k < 6; ++k) {
    auto c = lie::to_coords(prim[k]);
    for (size_t r = 0; r < 6; ++r) C(r, k) = c[r];
  }
  return cache.emplace(f, std::move(C)).first->second;
}

inline int wedge_sign(uint8_t m1, uint8_t m2) {
  int crossings = 0;
  for (int j = 0; j < 6; ++j) {
    if (!(m2 & (1u << j))) continue;
    for (int i = j + 1; i < 6; ++i) {
      if (m1 & (1u << i)) ++crossings;
    }
  }
  return crossings % 2 == 0 ? 1 : -1;
}

inline std::vector<size_t> slots_of(uint8_t mask) {
  std::vector<size_t> out;
  for (size_t j = 0; j < 6; ++j) {
    if (mask & (1u << j)) out.push_back(j);
  }
  return out;
}

}  // namespace detail

template <typename R>
class Form {
public:
  explicit Form(Frame f = Frame::borel) : frame_(f) {}

  static Form zero(Frame f) { return Form(f); }

  static Form constant(Frame f, const R& c) {
    Form out(f);
    out.accumulate(0, c);
    return out;
  }

  static Form covector(Frame f, size_t slot) {
    if (slot >= 6) throw std::invalid_argument("Form: slot out of range");
    Form out(f);
    out.terms_[static_cast<uint8_t>(1u << slot)] = R(1);
    return out;
  }

  // wedge of unit covectors in the listed order, scaled by c
  static Form term(Frame f, const std::vector<size_t>& slots, const R& c) {
    Form out = constant(f, c);
    for (size_t s : slots) out = wedge(out, covector(f, s));
    return out;
  }

  Frame frame() const { return frame_; }
  const std::map<uint8_t, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // degree of a homogeneous form (0 for the zero form); throws if mixed
  int degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      int k = popcount(m);
      if (d && *d != k) throw std::domain_error("Form: mixed degree");
      d = k;
    }
    return d.value_or(0);
  }

  R coeff(uint8_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? R() : it->second;
  }

  Form operator-() const {
    Form out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend Form operator+(const Form& x, const Form& y) {
    x.check_frame(y);
    Form out = x;
    for (const auto& [m, c] : y.terms_) out.accumulate(m, c);
    return out;
  }
  friend Form operator-(const Form& x, const Form& y) { return x + (-y); }

  Form& operator+=(const Form& o) { *this = *this + o; return *this; }
  Form& operator-=(const Form& o) { *this = *this - o; return *this; }

  friend Form operator*(const R& c, const Form& f) {
    Form out(f.frame_);
    for (const auto& [m, x] : f.terms_) out.accumulate(m, c * x);
    return out;
  }

  friend Form wedge(const Form& x, const Form& y) {
    x.check_frame(y);
    Form out(x.frame_);
    for (const auto& [m1, c1] : x.terms_) {
      for (const auto& [m2, c2] : y.terms_) {
        if (m1 & m2) continue;
        R c = c1 * c2;
        if (detail::wedge_sign(m1, m2) < 0) c = -c;
        out.accumulate(static_cast<uint8_t>(m1 | m2), c);
      }
    }
    return out;
  }

  friend bool operator==(const Form& x, const Form& y) {
    return x.frame_ == y.frame_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const Form& x, const Form& y) { return !(x == y); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto& names = frame_labels(frame_);
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (size_t j : detail::slots_of(m)) {
        if (!mono.empty()) mono += "^";
        mono += names[j];
      }
      if (!first) out += " + ";
      std::string cs = c.to_string();
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else if (cs == "-1") {
        out += "-" + mono;
      } else {
        out += "(" + cs + ")" + mono;
      }
      first = false;
    }
    return out;
  }

  // Slot substitution: covector j maps to sum_k D(j,k) covector_k of the
  // target frame, extended multiplicatively over wedges.
  template <typename R2>
  Form<R2> substitute_slots(const Mat<R2>& D, Frame target) const {
    Form<R2> out(target);
    for (const auto& [m, c] : terms_) {
      Form<R2> acc = Form<R2>::constant(target, R2(c));
      for (size_t j : detail::slots_of(m)) {
        if (acc.is_zero()) break;
        Form<R2> row(target);
        for (size_t k = 0; k < 6; ++k) {
          if (elem_is_zero(D(j, k))) continue;
          row += D(j, k) * Form<R2>::covector(target, k);
        }
        acc = wedge(acc, row);
      }
      out += acc;
    }
    return out;
  }

private:
  static int popcount(uint8_t m) {
    int n = 0;
    for (int j = 0; j < 8; ++j) n += (m >> j) & 1;
    return n;
  }

  void check_frame(const Form& o) const {
    if (frame_ != o.frame_) throw std::invalid_argument("Form: frame mismatch");
  }

  void accumulate(uint8_t m, const R& c) {
    if (elem_is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (elem_is_zero(it->second)) terms_.erase(it);
    }
  }

  Frame frame_;
  std::map<uint8_t, R> terms_;
};

template <typename R>
bool is_zero(const Form<R>& f) {
  return f.is_zero();
}

// Coefficient-ring promotion (Scalar -> Poly and the like).
template <typename R2, typename R>
Form<R2> form_cast(const Form<R>& f) {
  Form<R2> out(f.frame());
  for (const auto& [m, c] : f.terms()) {
    out += Form<R2>::term(f.frame(), detail::slots_of(m), R2(c));
  }
  return out;
}

// Change of frame for covector coordinates. With C_F the primal change
// (columns = Borel coordinates of F's primal vectors), covectors obey
// e*F_j = sum_k (C_F^-1)(j,k) e*B_k, so F -> T substitutes with C_F^-1 C_T.
struct FrameMap {
  Frame source;
  Frame target;
  Mat<Scalar> matrix;
};

inline FrameMap frame_map(Frame from, Frame to) {
  const Mat<Scalar>& Cf = detail::primal_to_borel(from);
  const Mat<Scalar>& Ct = detail::primal_to_borel(to);
  auto cf_inv = Cf.inverse();
  if (!cf_inv) throw std::logic_error("frame_map: singular frame");
  return FrameMap{from, to, *cf_inv * Ct};
}

template <typename R>
Form<R> apply(const FrameMap& fm, const Form<R>& f) {
  if (f.frame() != fm.source) {
    throw std::invalid_argument("apply: form not in the map's source frame");
  }
  Mat<R> D(6, 6);
  for (size_t i = 0; i < 6; ++i) {
    for (size_t j = 0; j < 6; ++j) D(i, j) = R(fm.matrix(i, j));
  }
  return f.substitute_slots(D, fm.target);
}

template <typename R>
Form<R> convert(const Form<R>& f, Frame to) {
  if (f.frame() == to) return f;
  return apply(frame_map(f.frame(), to), f);
}

// ---- quotient adjoint ----

// proj_b0(g Y g_inv) for group elements with entries in a ring over Q(i).
template <typename R>
Mat<R> quotient_ad_conj(const Mat<R>& g, const Mat<R>& g_inv, const Mat<R>& Y) {
  Mat<R> conj = g * Y * g_inv;
  auto c = lie::to_coords(conj);
  for (size_t k = lie::idx_H; k < lie::basis_count; ++k) c[k] = R();
  return lie::from_coords(c);
}

template <typename R>
Mat<R> ring_lift(const lie::Mat4& m) {
  Mat<R> out(4, 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      if (!m(i, j).is_zero()) out(i, j) = R(m(i, j));
  return out;
}

// 6x6 matrix of the quotient adjoint on b0 in the Borel frame; columns are
// the images of (a, h, n0, n1, n2, n3).
template <typename R>
Mat<R> quotient_ad_matrix(const Mat<R>& g, const Mat<R>& g_inv) {
  Mat<R> out(6, 6);
  const auto& prim = frame_primal(Frame::borel);
  for (size_t k = 0; k < 6; ++k) {
    Mat<R> img = quotient_ad_conj(g, g_inv, ring_lift<R>(prim[k]));
    auto c = lie::to_coords(img);
    for (size_t r = 0; r < 6; ++r) out(r, k) = c[r];
  }
  return out;
}

// Field-coefficient convenience that inverts g itself.
template <typename R>
Mat<R> quotient_ad(const Mat<R>& g, const Mat<R>& Y) {
  auto inv = g.inverse();
  if (!inv) throw std::domain_error("quotient_ad: singular group element");
  return quotient_ad_conj(g, *inv, Y);
}

inline lie::Mat4 group_m0() { return lie::diag(1, -1, 1, -1); }
inline lie::Mat4 group_kappa0() { return lie::diag(1, 1, -1, -1); }

// k(theta) = blockdiag(k_th, k_th), entries in single-angle symbols ct, st.
inline Mat<Poly> group_ktheta() {
  Poly ct = Poly::var("ct");
  Poly st = Poly::var("st");
  Mat<Poly> g(4, 4);
  g(0, 0) = ct; g(0, 1) = st;
  g(1, 0) = -st; g(1, 1) = ct;
  g(2, 2) = ct; g(2, 3) = st;
  g(3, 2) = -st; g(3, 3) = ct;
  return g;
}

// gamma_delta = blockdiag(b, transpose(b)^-1), b = [[0,1],[-1,-delta]].
inline Mat<RatFun> group_gamma_delta() {
  RatFun d = RatFun::var("delta");
  Mat<RatFun> g(4, 4);
  g(0, 1) = RatFun(1);
  g(1, 0) = RatFun(-1);
  g(1, 1) = -d;
  g(2, 2) = -d; g(2, 3) = RatFun(1);
  g(3, 2) = RatFun(-1);
  return g;
}

namespace detail {

// Rewrites a polynomial homogeneous of degree 2 in (ct, st) in the
// double-angle symbols c = cos 2theta, s = sin 2theta.
inline Poly double_angle_reduce(const Poly& p) {
  Poly c = Poly::var("c");
  Poly s = Poly::var("s");
  Poly half(Scalar(Rational(1, 2)));
  Poly out;
  for (const auto& [e, coeff] : p.terms()) {
    int dct = 0, dst = 0;
    for (size_t k = 0; k < p.vars().size(); ++k) {
      if (p.vars()[k] == "ct") dct = e[k];
      if (p.vars()[k] == "st") dst = e[k];
    }
    if (dct + dst != 2) {
      throw std::domain_error("double_angle_reduce: not degree 2");
    }
    Poly img;
    if (dct == 2) img = half * (Poly(1) + c);
    else if (dst == 2) img = half * (Poly(1) - c);
    else img = half * s;
    out += Poly(coeff) * img;
  }
  return out;
}

}  // namespace detail

// Quotient adjoint of k(theta) on b0 with entries polynomial in c = cos 2theta
// and s = sin 2theta. The formal transpose serves as the inverse; this is
// exact modulo ct^2 + st^2 = 1, which the degree-2 reduction absorbs.
inline const Mat<Poly>& ktheta_ad_matrix() {
  static const Mat<Poly> A = [] {
    Mat<Poly> g = group_ktheta();
    Mat<Poly> raw = quotient_ad_matrix(g, g.transpose());
    Mat<Poly> out(6, 6);
    for (size_t i = 0; i < 6; ++i) {
      for (size_t j = 0; j < 6; ++j) {
        if (!raw(i, j).is_zero()) {
          out(i, j) = detail::double_angle_reduce(raw(i, j));
        }
      }
    }
    return out;
  }();
  return A;
}

// ---- pullback ----

// Pullback along the group element whose primal quotient-ad matrix in the
// form's frame is A (columns = images): covector_j -> sum_k A(j,k) covector_k.
template <typename R>
Form<R> pullback(const Mat<R>& A, const Form<R>& f) {
  return f.substitute_slots(A, f.frame());
}

inline Form<Scalar> pullback(const lie::Mat4& g, const lie::Mat4& g_inv,
                             const Form<Scalar>& f) {
  Mat<Scalar> A = quotient_ad_matrix(g, g_inv);
  if (f.frame() != Frame::borel) {
    const Mat<Scalar>& C = detail::primal_to_borel(f.frame());
    auto c_inv = C.inverse();
    if (!c_inv) throw std::logic_error("pullback: singular frame");
    A = *c_inv * A * C;
  }
  return pullback(A, f);
}

// ---- k-action (coadjoint through the quotient, as a derivation) ----

// Matrix of proj.ad(X) on the frame's primal basis (columns = images).
inline Mat<Scalar> k_action_matrix(const lie::Mat4& X, Frame frame) {
  auto coords = lie::to_coords(X);
  for (size_t k = 0; k < 6; ++k) {
    if (!coords[k].is_zero()) {
      throw std::invalid_argument("k_action: element not in k~");
    }
  }
  const auto& prim = frame_primal(frame);
  Mat<Scalar> S(16, 6);
  for (size_t k = 0; k < 6; ++k) {
    auto fl = lie::flatten(prim[k]);
    for (size_t r = 0; r < 16; ++r) S(r, k) = fl[r];
  }
  Mat<Scalar> A(6, 6);
  for (size_t k = 0; k < 6; ++k) {
    lie::Mat4 img = lie::project_b0(lie::bracket(X, prim[k]));
    auto sol = S.solve(lie::flatten(img));
    if (!sol) throw std::logic_error("k_action: image left the frame span");
    for (size_t r = 0; r < 6; ++r) A(r, k) = (*sol)[r];
  }
  return A;
}

// (X.omega)(Y1,..,Yk) = -sum_m omega(Y1,..,proj[X,Ym],..,Yk).
inline Form<Scalar> k_action(const lie::Mat4& X, const Form<Scalar>& f) {
  Mat<Scalar> A = k_action_matrix(X, f.frame());
  Form<Scalar> out(f.frame());
  for (const auto& [m, c] : f.terms()) {
    auto slots = detail::slots_of(m);
    for (size_t pos = 0; pos < slots.size(); ++pos) {
      Form<Scalar> acc = Form<Scalar>::constant(f.frame(), -c);
      for (size_t q = 0; q < slots.size(); ++q) {
        Form<Scalar> factor(f.frame());
        if (q == pos) {
          for (size_t k = 0; k < 6; ++k) {
            if (A(slots[q], k).is_zero()) continue;
            factor += A(slots[q], k) * Form<Scalar>::covector(f.frame(), k);
          }
        } else {
          factor = Form<Scalar>::covector(f.frame(), slots[q]);
        }
        acc = wedge(acc, factor);
        if (acc.is_zero()) break;
      }
      out += acc;
    }
  }
  return out;
}

// Joint (H, J) weight of a form under k_action, in the doubled (p2, q2)
// convention of weight_of ([T, X] = -i p2 X); empty if not a joint
// eigenvector.
inline std::optional<Weight> form_weight(const Form<Scalar>& f) {
  if (f.is_zero()) return std::nullopt;
  auto eig = [&](const lie::Mat4& T) -> std::optional<Rational> {
    Form<Scalar> img = k_action(T, f);
    const auto& [m0, c0] = *f.terms().begin();
    Scalar ratio = img.coeff(m0) * c0.inverse();
    if (!(ratio * f == img)) return std::nullopt;
    Scalar r = ratio * Scalar::i().inverse();
    if (!r.im().is_zero()) return std::nullopt;
    return -r.re();
  };
  auto p2 = eig(lie::basis()[lie::idx_H]);
  if (!p2) return std::nullopt;
  auto q2 = eig(lie::basis()[lie::idx_J]);
  if (!q2) return std::nullopt;
  if (!p2->is_integer() || !q2->is_integer()) return std::nullopt;
  return Weight{static_cast<int>(p2->to_long()),
                static_cast<int>(q2->to_long())};
}

// ---- restriction ----

// Keeps only the terms supported on the listed slots.
template <typename R>
Form<R> restrict_to(const Form<R>& f, const std::vector<size_t>& slots) {
  uint8_t keep = 0;
  for (size_t s : slots) {
    if (s >= 6) throw std::invalid_argument("restrict_to: slot out of range");
    keep = static_cast<uint8_t>(keep | (1u << s));
  }
  Form<R> out(f.frame());
  for (const auto& [m, c] : f.terms()) {
    if ((m & ~keep) == 0) {
      out += Form<R>::term(f.frame(), detail::slots_of(m), c);
    }
  }
  return out;
}

// Borel slots surviving restriction to the Levi of P_H (kills n0*, n3*).
inline std::vector<size_t> ph_frame_slots() { return {0, 1, 3, 4}; }

// ---- named forms ----

inline Form<Scalar> covB(size_t slot) {
  return Form<Scalar>::covector(Frame::borel, slot);
}

// eta^1 = a*^h*^n1*^n2*
inline Form<Scalar> eta_one() {
  return Form<Scalar>::term(Frame::borel, {0, 1, 3, 4}, Scalar(1));
}

// eta^2 = a*^n0*^(n1* - n2*)^n3*
inline Form<Scalar> eta_two() {
  Form<Scalar> mid = covB(3) - covB(4);
  return wedge(wedge(wedge(covB(0), covB(2)), mid), covB(5));
}

// the h*-leading variant of eta^2 appearing in the closing remark
inline Form<Scalar> eta_two_remark() {
  Form<Scalar> mid = covB(3) - covB(4);
  return wedge(wedge(wedge(covB(1), covB(2)), mid), covB(5));
}

// omega_0 = h*^n2* + (1/2) n0*^n3* + a*^n1*
inline Form<Scalar> omega0() {
  return wedge(covB(1), covB(4)) +
         Scalar(Rational(1, 2)) * wedge(covB(2), covB(5)) +
         wedge(covB(0), covB(3));
}

// eta^+ = h* + (i/2) n0*, eta^- = h* - (i/2) n0*
inline Form<Scalar> eta_upper(int sign) {
  Scalar half_i = Scalar::i() * Scalar(Rational(1, 2));
  return covB(1) + (sign >= 0 ? half_i : -half_i) * covB(2);
}

// eta_+ = n1*^n3* + i n1*^n2*, eta_- = n1*^n3* - i n1*^n2*
inline Form<Scalar> eta_lower(int sign) {
  Form<Scalar> base = wedge(covB(3), covB(5));
  Form<Scalar> tail = wedge(covB(3), covB(4));
  return base + (sign >= 0 ? Scalar::i() : -Scalar::i()) * tail;
}

// eta_o = 2 a*
inline Form<Scalar> eta_o() { return Scalar(2) * covB(0); }

// The eta_j family in a root frame, slot order
// (e*(-a-b), e*(-b), e*(a-b), e*(-a+b), e*(b), e*(a+b)).
inline Form<Scalar> eta_j(int j, Frame f = Frame::root_printed) {
  if (f == Frame::borel) throw std::invalid_argument("eta_j: root frame only");
  auto cv = [&](size_t s) { return Form<Scalar>::covector(f, s); };
  switch (j) {
    case 2: return wedge(cv(0), cv(3));
    case 1: return wedge(cv(0), cv(4)) + wedge(cv(1), cv(3));
    case 0:
      return wedge(cv(0), cv(5)) + Scalar(2) * wedge(cv(1), cv(4)) +
             wedge(cv(2), cv(3));
    case -1: return wedge(cv(2), cv(4)) + wedge(cv(1), cv(5));
    case -2: return wedge(cv(2), cv(5));
    default: throw std::invalid_argument("eta_j: j must be -2..2");
  }
}

// ---- pullback scalars through the Siegel section ----

// Substitutes c = (1-t^2)/(1+t^2), s = 2t/(1+t^2), t = -r1/(r2 delta)
// into a polynomial in (c, s).
inline RatFun tan_substitute(const Poly& p) {
  RatFun t = -(RatFun::var("r1") *
               RatFun(Poly::var("r2") * Poly::var("delta")).inverse());
  RatFun one(1);
  RatFun denom = one + t * t;
  RatFun c = (one - t * t) * denom.inverse();
  RatFun s = (RatFun(2) * t) * denom.inverse();
  RatFun out;
  for (const auto& [e, coeff] : p.terms()) {
    RatFun term{Poly(coeff)};
    for (size_t k = 0; k < p.vars().size(); ++k) {
      RatFun base;
      if (p.vars()[k] == "c") base = c;
      else if (p.vars()[k] == "s") base = s;
      else throw std::domain_error("tan_substitute: unexpected symbol");
      for (int q = 0; q < e[k]; ++q) term = term * base;
    }
    out = out + term;
  }
  return out;
}

struct PullbackScalars {
  RatFun f1;
  RatFun f2;
};

// restrict(pullback(k(theta), eta^i), P_H frame) = f_i eta^1 with the double
// angle substituted via tan theta = -r1/(r2 delta).
inline PullbackScalars pullback_scalars() {
  const Mat<Poly>& A = ktheta_ad_matrix();
  auto scalar_of = [&](const Form<Scalar>& eta) {
    Form<Poly> pb = pullback(A, form_cast<Poly>(eta));
    Form<Poly> res = restrict_to(pb, ph_frame_slots());
    uint8_t mask = (1u << 0) | (1u << 1) | (1u << 3) | (1u << 4);
    for (const auto& [m, c] : res.terms()) {
      if (m != mask) throw std::logic_error("pullback_scalars: stray term");
    }
    return tan_substitute(res.coeff(mask));
  };
  return PullbackScalars{scalar_of(eta_one()), scalar_of(eta_two())};
}

// The gamma = 1 branch: no rotation occurs, the restriction applies to the
// forms themselves, so the scalars are those of the identity element.
inline PullbackScalars pullback_scalars_gamma1() {
  auto scalar_of = [&](const Form<Scalar>& eta) {
    Form<Scalar> res = restrict_to(eta, ph_frame_slots());
    uint8_t mask = (1u << 0) | (1u << 1) | (1u << 3) | (1u << 4);
    Scalar v = res.coeff(mask);
    if (!v.im().is_zero()) throw std::logic_error("pullback_scalars: complex");
    return RatFun{Poly(v)};
  };
  return PullbackScalars{scalar_of(eta_one()), scalar_of(eta_two())};
}

// ---- k-module structure on exterior powers ----

// The k-module on the degree-d part of the exterior algebra of b0* in the
// given frame; basis = slot masks of that degree in increasing order.
inline ktypes::KModule wedge_module(int deg, Frame frame = Frame::borel) {
  std::vector<uint8_t> masks;
  for (int m = 0; m < 64; ++m) {
    int n = 0;
    for (int j = 0; j < 6; ++j) n += (m >> j) & 1;
    if (n == deg) masks.push_back(static_cast<uint8_t>(m));
  }
  std::vector<std::string> labels;
  const auto& names = frame_labels(frame);
  for (uint8_t m : masks) {
    std::string s;
    for (size_t j : detail::slots_of(m)) {
      if (!s.empty()) s += "^";
      s += names[j];
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  auto matrix_of = [&](const lie::Mat4& X) {
    Mat<Scalar> M(masks.size(), masks.size());
    for (size_t k = 0; k < masks.size(); ++k) {
      Form<Scalar> base =
          Form<Scalar>::term(frame, detail::slots_of(masks[k]), Scalar(1));
      Form<Scalar> img = k_action(X, base);
      for (size_t r = 0; r < masks.size(); ++r) {
        M(r, k) = img.coeff(masks[r]);
      }
    }
    return M;
  };
  const auto& B = lie::basis();
  return ktypes::KModule(labels, matrix_of(B[lie::idx_H]),
                         matrix_of(B[lie::idx_J]),
                         matrix_of(lie::pinned_E_alpha()),
                         matrix_of(lie::pinned_E_minus_alpha()));
}

}  // namespace gsp4::forms
