#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/forms.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/poly.hpp"

namespace gsp4::uea {

inline constexpr size_t letter_count = 10;

// PBW letter order: Cartan pair, then the four long-root pairs that make up
// the annihilator of the period functional, then E_beta, E_{-beta}, E_alpha,
// E_{-alpha}.
enum Letter : uint8_t {
  L_H = 0,
  L_J,
  L_Eab,
  L_Emab,
  L_Eamb,
  L_Emapb,
  L_Eb,
  L_Emb,
  L_Ea,
  L_Ema,
};

inline const std::vector<std::string>& letter_names() {
  static const std::vector<std::string> names = {
      "H",     "J",     "E(a+b)", "E(-a-b)", "E(a-b)",
      "E(-a+b)", "E(b)", "E(-b)",  "E(a)",    "E(-a)"};
  return names;
}

namespace detail {

inline const std::vector<lie::Mat4>& span10() {
  static const std::vector<lie::Mat4> s = [] {
    const auto& b = lie::basis();
    return std::vector<lie::Mat4>(b.begin(), b.begin() + 10);
  }();
  return s;
}

}  // namespace detail

// Killing form as the trace form of the adjoint action on the 10-dim algebra,
// extended complex-bilinearly.
inline Scalar killing_form(const lie::Mat4& X, const lie::Mat4& Y) {
  Mat<Scalar> ax = lie::ad_action(X, detail::span10());
  Mat<Scalar> ay = lie::ad_action(Y, detail::span10());
  Mat<Scalar> prod = ax * ay;
  Scalar tr(0);
  for (size_t k = 0; k < 10; ++k) tr = tr + prod(k, k);
  return tr;
}

// The ten basis letters. Plus-root representatives are the pinned vectors of
// the root decomposition; minus-root representatives are rescaled so that
// the Killing pairing with their partner is 1.
inline const std::vector<lie::Mat4>& letters() {
  static const std::vector<lie::Mat4> ls = [] {
    auto spaces = lie::root_decompose(detail::span10());
    auto find = [&](int p2, int q2) {
      for (const auto& rs : spaces) {
        if (rs.weight.p2 == p2 && rs.weight.q2 == q2) {
          if (rs.vectors.size() != 1) {
            throw std::logic_error("letters: root space not one dimensional");
          }
          return rs.vectors[0];
        }
      }
      throw std::logic_error("letters: missing root space");
    };
    std::vector<lie::Mat4> out(letter_count, lie::Mat4(4, 4));
    out[L_H] = lie::basis()[lie::idx_H];
    out[L_J] = lie::basis()[lie::idx_J];
    out[L_Eab] = find(2, 2);
    out[L_Eamb] = find(2, -2);
    out[L_Eb] = find(0, 2);
    out[L_Ea] = find(2, 0);
    const std::array<std::pair<Letter, Letter>, 4> pairs = {
        std::pair<Letter, Letter>{L_Eab, L_Emab},
        {L_Eamb, L_Emapb},
        {L_Eb, L_Emb},
        {L_Ea, L_Ema}};
    const std::array<std::pair<int, int>, 4> minus_wt = {
        std::pair<int, int>{-2, -2}, {-2, 2}, {0, -2}, {-2, 0}};
    for (size_t k = 0; k < 4; ++k) {
      lie::Mat4 raw = find(minus_wt[k].first, minus_wt[k].second);
      Scalar pairing = killing_form(out[pairs[k].first], raw);
      if (pairing.is_zero()) {
        throw std::logic_error("letters: degenerate root pairing");
      }
      out[pairs[k].second] = pairing.inverse() * raw;
      if (!(killing_form(out[pairs[k].first], out[pairs[k].second]) ==
            Scalar(1))) {
        throw std::logic_error("letters: normalization failed");
      }
    }
    return out;
  }();
  return ls;
}

// Coordinates of an algebra element in the letter basis.
inline std::vector<Scalar> expand_in_letters(const lie::Mat4& X) {
  static const Mat<Scalar> L = [] {
    Mat<Scalar> m(lie::basis_count, letter_count);
    for (size_t k = 0; k < letter_count; ++k) {
      auto c = lie::to_coords(letters()[k]);
      for (size_t r = 0; r < lie::basis_count; ++r) m(r, k) = c[r];
    }
    return m;
  }();
  auto rhs = lie::to_coords(X);
  auto sol = L.solve(rhs);
  if (!sol) throw std::invalid_argument("expand_in_letters: not in the span");
  return *sol;
}

// Structure constants [x_i, x_j] = sum_c sc[c] x_c, cached for i < j.
inline const std::vector<Scalar>& bracket_letters(size_t i, size_t j) {
  if (i >= letter_count || j >= letter_count || i >= j) {
    throw std::invalid_argument("bracket_letters: need i < j < 10");
  }
  static const auto table = [] {
    std::map<std::pair<size_t, size_t>, std::vector<Scalar>> t;
    for (size_t a = 0; a < letter_count; ++a) {
      for (size_t b = a + 1; b < letter_count; ++b) {
        t[{a, b}] = expand_in_letters(lie::bracket(letters()[a], letters()[b]));
      }
    }
    return t;
  }();
  return table.at({i, j});
}

using Expo = std::array<uint8_t, letter_count>;
using Word = std::vector<uint8_t>;

inline Word word_of(const Expo& e) {
  Word w;
  for (uint8_t l = 0; l < letter_count; ++l) {
    for (uint8_t k = 0; k < e[l]; ++k) w.push_back(l);
  }
  return w;
}

// Element of the enveloping algebra in PBW normal form; coefficients are
// exact polynomials (constants embed as constant polynomials).
class UEAElt {
public:
  UEAElt() = default;

  static UEAElt one() { return monomial(Expo{}, Poly(1)); }

  static UEAElt letter(size_t l) {
    if (l >= letter_count) throw std::invalid_argument("UEAElt: bad letter");
    Expo e{};
    e[l] = 1;
    return monomial(e, Poly(1));
  }

  static UEAElt monomial(const Expo& e, const Poly& c) {
    UEAElt out;
    if (!c.is_zero()) out.terms_[e] = c;
    return out;
  }

  const std::map<Expo, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Poly() : it->second;
  }

  long total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
      long t = 0;
      for (uint8_t l = 0; l < letter_count; ++l) t += e[l];
      d = std::max(d, t);
    }
    return d;
  }

  UEAElt operator-() const {
    UEAElt out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  friend UEAElt operator+(const UEAElt& x, const UEAElt& y) {
    UEAElt out = x;
    for (const auto& [e, c] : y.terms_) out.accumulate(e, c);
    return out;
  }
  friend UEAElt operator-(const UEAElt& x, const UEAElt& y) {
    return x + (-y);
  }
  UEAElt& operator+=(const UEAElt& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }

  friend UEAElt operator*(const Poly& c, const UEAElt& x) {
    UEAElt out;
    for (const auto& [e, t] : x.terms_) {
      Poly p = c * t;
      if (!p.is_zero()) out.terms_[e] = p;
    }
    return out;
  }
  friend UEAElt operator*(const Scalar& c, const UEAElt& x) {
    return Poly(c) * x;
  }

  friend bool operator==(const UEAElt& x, const UEAElt& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const UEAElt& x, const UEAElt& y) {
    return !(x == y);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (uint8_t l = 0; l < letter_count; ++l) {
        if (e[l] == 0) continue;
        if (!mono.empty()) mono += ".";
        mono += letter_names()[l];
        if (e[l] > 1) mono += "^" + std::to_string(int(e[l]));
      }
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (!mono.empty()) out += mono;
    }
    return out;
  }

  void accumulate(const Expo& e, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

private:
  std::map<Expo, Poly> terms_;
};

inline bool is_zero(const UEAElt& x) { return x.is_zero(); }

// Rewriting direction for the normal-ordering recursion; confluence of the
// two directions is a correctness check.
enum class Order { leftmost, rightmost };

inline UEAElt normalize_word(const Word& w, Order order = Order::leftmost) {
  static std::mutex mu;
  static std::map<Word, UEAElt> memo[2];
  size_t oi = order == Order::leftmost ? 0 : 1;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo[oi].find(w);
    if (it != memo[oi].end()) return it->second;
  }

  // find a descent
  std::optional<size_t> descent;
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] > w[k + 1]) {
      descent = k;
      if (order == Order::leftmost) break;
    }
  }

  UEAElt result;
  if (!descent) {
    Expo e{};
    for (uint8_t l : w) ++e[l];
    result = UEAElt::monomial(e, Poly(1));
  } else {
    size_t k = *descent;
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    result = normalize_word(swapped, order);
    // x_p x_q = x_q x_p + [x_p, x_q] with p > q
    const auto& sc = bracket_letters(w[k + 1], w[k]);
    for (size_t c = 0; c < letter_count; ++c) {
      if (sc[c].is_zero()) continue;
      Word contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + long(k));
      contracted.push_back(uint8_t(c));
      contracted.insert(contracted.end(), w.begin() + long(k) + 2, w.end());
      result += (-sc[c]) * normalize_word(contracted, order);
    }
  }

  std::lock_guard<std::mutex> lock(mu);
  memo[oi].emplace(w, result);
  return result;
}

inline UEAElt pbw_product(const UEAElt& u, const UEAElt& v) {
  UEAElt out;
  for (const auto& [eu, cu] : u.terms()) {
    Word wu = word_of(eu);
    for (const auto& [ev, cv] : v.terms()) {
      Word w = wu;
      Word wv = word_of(ev);
      w.insert(w.end(), wv.begin(), wv.end());
      out += (cu * cv) * normalize_word(w);
    }
  }
  return out;
}

inline UEAElt commutator(const UEAElt& u, const UEAElt& v) {
  return pbw_product(u, v) - pbw_product(v, u);
}

// Coroot elements expressed through the letter brackets.
inline UEAElt h_alpha() {
  const auto& sc = bracket_letters(L_Ea, L_Ema);
  UEAElt out;
  for (size_t c = 0; c < letter_count; ++c) {
    if (!sc[c].is_zero()) out += sc[c] * UEAElt::letter(c);
  }
  return out;
}

inline UEAElt h_beta() {
  const auto& sc = bracket_letters(L_Eb, L_Emb);
  UEAElt out;
  for (size_t c = 0; c < letter_count; ++c) {
    if (!sc[c].is_zero()) out += sc[c] * UEAElt::letter(c);
  }
  return out;
}

// beta(H_beta), extracted from [H_beta, E_beta] = beta(H_beta) E_beta.
inline Scalar beta_value() {
  static const Scalar b = [] {
    const auto& sc = bracket_letters(L_Eb, L_Emb);
    lie::Mat4 hb(4, 4);
    for (size_t c = 0; c < letter_count; ++c) {
      hb = hb + sc[c] * letters()[c];
    }
    auto coords = expand_in_letters(lie::bracket(hb, letters()[L_Eb]));
    for (size_t c = 0; c < letter_count; ++c) {
      if (c != L_Eb && !coords[c].is_zero()) {
        throw std::logic_error("beta_value: [H_beta, E_beta] not diagonal");
      }
    }
    return coords[L_Eb];
  }();
  return b;
}

// Casimir element from Killing-dual bases, in PBW normal form.
inline const UEAElt& casimir() {
  static const UEAElt omega = [] {
    Mat<Scalar> B(letter_count, letter_count);
    for (size_t i = 0; i < letter_count; ++i) {
      for (size_t j = i; j < letter_count; ++j) {
        Scalar v = killing_form(letters()[i], letters()[j]);
        B(i, j) = v;
        B(j, i) = v;
      }
    }
    auto inv = B.inverse();
    if (!inv) throw std::runtime_error("casimir: Killing form degenerate");
    UEAElt out;
    for (size_t i = 0; i < letter_count; ++i) {
      for (size_t j = 0; j < letter_count; ++j) {
        Scalar c = (*inv)(j, i);
        if (c.is_zero()) continue;
        Word w = {uint8_t(i), uint8_t(j)};
        out += c * normalize_word(w);
      }
    }
    return out;
  }();
  return omega;
}

// ---- the commutation identity of the beta string ----

struct IdentityRecord {
  long i;
  bool holds;
  std::string lhs;
  std::string rhs;
};

// E_beta^i E_{-beta}^i = E_beta E_{-beta} E' + (i-1) H_beta E'
//                        - (i(i-1) beta(H_beta)/2) E',
// with E' = E_beta^{i-1} E_{-beta}^{i-1}; verified by normal ordering.
inline IdentityRecord commutation_identity(long i) {
  if (i < 1) throw std::invalid_argument("commutation_identity: i >= 1");
  Expo lhs_e{};
  lhs_e[L_Eb] = uint8_t(i);
  lhs_e[L_Emb] = uint8_t(i);
  UEAElt lhs = UEAElt::monomial(lhs_e, Poly(1));

  Expo ep{};
  ep[L_Eb] = uint8_t(i - 1);
  ep[L_Emb] = uint8_t(i - 1);
  UEAElt eprime = UEAElt::monomial(ep, Poly(1));

  UEAElt ebemb = pbw_product(UEAElt::letter(L_Eb), UEAElt::letter(L_Emb));
  UEAElt rhs = pbw_product(ebemb, eprime);
  rhs += Scalar(i - 1) * pbw_product(h_beta(), eprime);
  Scalar half_i_i1 = Scalar(Rational(i * (i - 1), 2), Rational(0));
  rhs += (-(half_i_i1 * beta_value())) * eprime;

  return IdentityRecord{i, lhs == rhs, lhs.to_string(), rhs.to_string()};
}

// Symbolic sl2 layer: letters Hb, Eb, Emb with [Eb, Emb] = Hb,
// [Hb, Eb] = b Eb, [Hb, Emb] = -b Emb, b = beta(H_beta) kept symbolic.
using SL2Expo = std::array<uint8_t, 3>;
using SL2Elt = std::map<SL2Expo, Poly>;

inline Poly beta_symbol() { return Poly::var("bHb"); }

namespace detail {

inline void sl2_accumulate(SL2Elt& out, const SL2Expo& e, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace detail

inline SL2Elt sl2_add(const SL2Elt& x, const SL2Elt& y) {
  SL2Elt out = x;
  for (const auto& [e, c] : y) detail::sl2_accumulate(out, e, c);
  return out;
}

inline SL2Elt sl2_scale(const Poly& c, const SL2Elt& x) {
  SL2Elt out;
  for (const auto& [e, t] : x) detail::sl2_accumulate(out, e, c * t);
  return out;
}

inline SL2Elt sl2_normalize_word(const std::vector<uint8_t>& w) {
  std::optional<size_t> descent;
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] > w[k + 1]) {
      descent = k;
      break;
    }
  }
  if (!descent) {
    SL2Expo e{};
    for (uint8_t l : w) ++e[l];
    SL2Elt out;
    out[e] = Poly(1);
    return out;
  }
  size_t k = *descent;
  std::vector<uint8_t> swapped = w;
  std::swap(swapped[k], swapped[k + 1]);
  SL2Elt result = sl2_normalize_word(swapped);
  // brackets: [Emb, Eb] = -Hb, [Eb, Hb] = -b Eb, [Emb, Hb] = b Emb
  uint8_t p = w[k], q = w[k + 1];
  Poly coeff;
  uint8_t target = 0;
  if (p == 2 && q == 1) {
    coeff = Poly(-1);
    target = 0;
  } else if (p == 1 && q == 0) {
    coeff = -beta_symbol();
    target = 1;
  } else if (p == 2 && q == 0) {
    coeff = beta_symbol();
    target = 2;
  } else {
    throw std::logic_error("sl2_normalize_word: unexpected descent");
  }
  std::vector<uint8_t> contracted;
  contracted.reserve(w.size() - 1);
  contracted.insert(contracted.end(), w.begin(), w.begin() + long(k));
  contracted.push_back(target);
  contracted.insert(contracted.end(), w.begin() + long(k) + 2, w.end());
  return sl2_add(result, sl2_scale(coeff, sl2_normalize_word(contracted)));
}

inline IdentityRecord sl2_commutation_identity(long i) {
  if (i < 1) throw std::invalid_argument("sl2_commutation_identity: i >= 1");
  std::vector<uint8_t> lw;
  for (long k = 0; k < i; ++k) lw.push_back(1);
  for (long k = 0; k < i; ++k) lw.push_back(2);
  SL2Elt lhs = sl2_normalize_word(lw);

  auto append = [](std::vector<uint8_t> w, const std::vector<uint8_t>& tail) {
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  };
  std::vector<uint8_t> eprime;
  for (long k = 0; k < i - 1; ++k) eprime.push_back(1);
  for (long k = 0; k < i - 1; ++k) eprime.push_back(2);

  SL2Elt rhs = sl2_normalize_word(append({1, 2}, eprime));
  rhs = sl2_add(rhs, sl2_scale(Poly(i - 1), sl2_normalize_word(append({0}, eprime))));
  Poly scalar = Poly(Scalar(Rational(-i * (i - 1), 2), Rational(0))) * beta_symbol();
  rhs = sl2_add(rhs, sl2_scale(scalar, sl2_normalize_word(eprime)));

  auto show = [](const SL2Elt& x) {
    if (x.empty()) return std::string("0");
    static const char* names[3] = {"Hb", "Eb", "Emb"};
    std::string out;
    for (const auto& [e, c] : x) {
      std::string mono;
      for (int l = 0; l < 3; ++l) {
        if (e[l] == 0) continue;
        if (!mono.empty()) mono += ".";
        mono += names[l];
        if (e[l] > 1) mono += "^" + std::to_string(int(e[l]));
      }
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")" + mono;
    }
    return out;
  };
  return IdentityRecord{i, lhs == rhs, show(lhs), show(rhs)};
}

// Embeds a symbolic sl2 element into the full algebra, substituting the
// computed value of beta(H_beta) for its symbol.
inline UEAElt sl2_embed(const SL2Elt& x) {
  std::map<std::string, Poly> sub = {{"bHb", Poly(beta_value())}};
  UEAElt out;
  for (const auto& [e, c] : x) {
    UEAElt m = UEAElt::one();
    for (uint8_t k = 0; k < e[0]; ++k) m = pbw_product(m, h_beta());
    for (uint8_t k = 0; k < e[1]; ++k) {
      m = pbw_product(m, UEAElt::letter(L_Eb));
    }
    for (uint8_t k = 0; k < e[2]; ++k) {
      m = pbw_product(m, UEAElt::letter(L_Emb));
    }
    out += c.substitute(sub) * m;
  }
  return out;
}

// ---- spin-2 data for the period reduction ----

// Chain realization inside the 5-dim constituent of wedge^2 b0*: v[0] is the
// highest weight vector, v[k+1] = E_{-alpha} v[k] with the Killing-normalized
// E_{-alpha}; mu[j] is the scalar of E_alpha^j E_{-alpha}^j on the weight
// zero vector v[2].
struct Spin2Data {
  std::vector<std::vector<Scalar>> chain;
  std::vector<Scalar> raising;  // E_alpha v[k] = raising[k] v[k-1], k = 1..4
  std::vector<Scalar> mu;       // j = 0..5
};

namespace detail {

inline std::optional<Scalar> proportionality(const std::vector<Scalar>& target,
                                             const std::vector<Scalar>& base) {
  size_t lead = base.size();
  for (size_t k = 0; k < base.size(); ++k) {
    if (!base[k].is_zero()) {
      lead = k;
      break;
    }
  }
  if (lead == base.size()) return std::nullopt;
  Scalar s = target[lead] * base[lead].inverse();
  for (size_t k = 0; k < base.size(); ++k) {
    if (!(target[k] == s * base[k])) return std::nullopt;
  }
  return s;
}

}  // namespace detail

inline const Spin2Data& spin2() {
  static const Spin2Data data = [] {
    ktypes::KModule M = forms::wedge_module(2);
    auto hw = M.highest_weight_vectors(Weight{4, 0});
    if (hw.size() != 1) {
      throw std::logic_error("spin2: highest weight space not a line");
    }
    // the module was built from the raw pinned E_{-alpha}; rescale to the
    // Killing normalization used by the letters
    Scalar s = lie::to_coords(letters()[L_Ema])[lie::idx_K2];
    Mat<Scalar> ema = M.act_Ema();
    for (size_t r = 0; r < ema.rows(); ++r) {
      for (size_t c = 0; c < ema.cols(); ++c) ema(r, c) = s * ema(r, c);
    }
    const Mat<Scalar>& ea = M.act_Ea();

    Spin2Data out;
    out.chain.push_back(hw[0]);
    for (int k = 0; k < 4; ++k) {
      auto next = mat_apply(ema, out.chain.back());
      bool zero = true;
      for (const auto& x : next) {
        if (!x.is_zero()) zero = false;
      }
      if (zero) throw std::logic_error("spin2: chain broke early");
      out.chain.push_back(next);
    }
    auto bottom = mat_apply(ema, out.chain.back());
    for (const auto& x : bottom) {
      if (!x.is_zero()) throw std::logic_error("spin2: chain too long");
    }

    out.raising.resize(5, Scalar(0));
    auto top = mat_apply(ea, out.chain[0]);
    for (const auto& x : top) {
      if (!x.is_zero()) throw std::logic_error("spin2: top not killed");
    }
    for (size_t k = 1; k < 5; ++k) {
      auto img = mat_apply(ea, out.chain[k]);
      auto r = detail::proportionality(img, out.chain[k - 1]);
      if (!r) throw std::logic_error("spin2: raising not proportional");
      out.raising[k] = *r;
    }

    for (int j = 0; j <= 5; ++j) {
      std::vector<Scalar> v = out.chain[2];
      bool died = false;
      for (int k = 0; k < j && !died; ++k) {
        v = mat_apply(ema, v);
        died = true;
        for (const auto& x : v) {
          if (!x.is_zero()) died = false;
        }
      }
      if (died) {
        out.mu.push_back(Scalar(0));
        continue;
      }
      for (int k = 0; k < j; ++k) v = mat_apply(ea, v);
      auto r = detail::proportionality(v, out.chain[2]);
      if (!r) throw std::logic_error("spin2: mu not proportional");
      out.mu.push_back(*r);
    }
    return out;
  }();
  return data;
}

inline Scalar mu(long j) {
  if (j < 0) throw std::invalid_argument("mu: j >= 0");
  const auto& m = spin2().mu;
  if (size_t(j) < m.size()) return m[size_t(j)];
  return Scalar(0);
}

// ---- period functional reduction ----

inline Poly lambda_sym() { return Poly::var("lam"); }

// Reduction strategies: identity_peel uses the closed-form commutation
// identity to peel one E_beta E_{-beta} pair; generic_peel derives the same
// correction terms by raw normal ordering.
enum class Strategy { identity_peel, generic_peel };

struct PeriodState {
  std::vector<std::pair<Poly, Expo>> pending;
  Poly accumulated;
};

// Computes C with l(R phi0) = C l(phi0) for normal-ordered R, using
// (i)  l(X u) = 0 when the leading letter X lies in the annihilator span,
// (ii) l(E_beta E_{-beta} u) = lambda l(u) - l(E_alpha E_{-alpha} u),
// (iv) l kills monomials of nonzero torus weight,
// and the spin-2 scalars for pure alpha strings.
inline Poly period_reduce(const UEAElt& R,
                          Strategy strategy = Strategy::identity_peel) {
  PeriodState st;
  for (const auto& [e, c] : R.terms()) st.pending.push_back({c, e});

  while (!st.pending.empty()) {
    auto [c, e] = st.pending.back();
    st.pending.pop_back();
    if (c.is_zero()) continue;

    // rule (i): a leading annihilator letter kills the term
    bool annihilated = false;
    for (size_t l = 0; l < L_Eb; ++l) {
      if (e[l] > 0) annihilated = true;
    }
    if (annihilated) continue;

    // rule (iv): unbalanced strings carry nonzero weight
    if (e[L_Eb] != e[L_Emb] || e[L_Ea] != e[L_Ema]) continue;

    long i = e[L_Eb];
    long j = e[L_Ea];
    if (i == 0) {
      st.accumulated += c * Poly(mu(j));
      continue;
    }

    Expo ep = e;
    --ep[L_Eb];
    --ep[L_Emb];
    Word wp = word_of(ep);

    // lambda l(E' tail)
    st.pending.push_back({c * lambda_sym(), ep});

    // - l(E_alpha E_{-alpha} E' tail)
    Word wa = {L_Ea, L_Ema};
    wa.insert(wa.end(), wp.begin(), wp.end());
    UEAElt alpha_part = normalize_word(wa);
    for (const auto& [e2, c2] : alpha_part.terms()) {
      st.pending.push_back({-(c * c2), e2});
    }

    if (strategy == Strategy::identity_peel) {
      // closed form: + (i-1) H_beta E' (rule (i) removes it) and
      // - i(i-1) beta(H_beta)/2 E'
      UEAElt hb_part = pbw_product(h_beta(), UEAElt::monomial(ep, Poly(1)));
      for (const auto& [e2, c2] : hb_part.terms()) {
        st.pending.push_back({Scalar(i - 1) * (c * c2), e2});
      }
      Scalar half = Scalar(Rational(i * (i - 1), 2), Rational(0));
      st.pending.push_back({-(c * Poly(half * beta_value())), ep});
    } else {
      // generic: - l(D) with D = normalize(E_beta E_{-beta} E' tail) - M
      Word wb = {L_Eb, L_Emb};
      wb.insert(wb.end(), wp.begin(), wp.end());
      UEAElt D = normalize_word(wb) - UEAElt::monomial(e, Poly(1));
      for (const auto& [e2, c2] : D.terms()) {
        st.pending.push_back({-(c * c2), e2});
      }
    }
  }
  return st.accumulated;
}

// C_i with l(E_beta^i E_{-beta}^i phi0) = C_i l(phi0).
inline Poly c_polynomial(long i, Strategy strategy = Strategy::identity_peel) {
  if (i < 0) throw std::invalid_argument("c_polynomial: i >= 0");
  Expo e{};
  e[L_Eb] = uint8_t(i);
  e[L_Emb] = uint8_t(i);
  return period_reduce(UEAElt::monomial(e, Poly(1)), strategy);
}

}  // namespace gsp4::uea
