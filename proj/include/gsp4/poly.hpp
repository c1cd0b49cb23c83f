#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/scalar.hpp"

namespace gsp4 {

// Multivariate polynomial over Q(i), exact. The variable list is carried with
// the polynomial; canonical form sorts the variables, drops variables that
// appear in no term, and drops terms with zero coefficient. Two polynomials
// compare equal iff their canonical forms are identical.
class Poly {
public:
  using Exponents = std::vector<int>;

  Poly() = default;
  Poly(long n) { if (n != 0) terms_[{}] = Scalar(n); }
  Poly(const Scalar& c) { if (!c.is_zero()) terms_[{}] = c; }

  static Poly var(const std::string& name) {
    Poly p;
    p.vars_ = {name};
    p.terms_[{1}] = Scalar(1);
    return p;
  }

  static Poly monomial(const Scalar& c, const std::vector<std::string>& vars,
                       const Exponents& exps) {
    Poly p;
    p.vars_ = vars;
    p.terms_[exps] = c;
    p.canonicalize();
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
  }

  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms_.begin()->second;
  }

  int degree(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    auto [av, bv, vars] = aligned(a, b);
    Poly r;
    r.vars_ = vars;
    r.terms_ = av;
    for (const auto& [e, c] : bv) {
      auto [it, fresh] = r.terms_.emplace(e, c);
      if (!fresh) it->second += c;
    }
    r.canonicalize();
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    auto [av, bv, vars] = aligned(a, b);
    Poly r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : av) {
      for (const auto& [eb, cb] : bv) {
        Exponents e(ea.size());
        for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        Scalar c = ca * cb;
        auto [it, fresh] = r.terms_.emplace(std::move(e), c);
        if (!fresh) it->second += c;
      }
    }
    r.canonicalize();
    return r;
  }

  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  friend Poly operator*(const Scalar& c, const Poly& p) { return Poly(c) * p; }
  friend Poly operator*(const Poly& p, const Scalar& c) { return Poly(c) * p; }

  Poly pow(int k) const {
    if (k < 0) throw std::domain_error("Poly: negative power");
    Poly r(1);
    for (int j = 0; j < k; ++j) r *= *this;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end();
         ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (!(ia->second == ib->second)) return scalar_less(ia->second, ib->second);
    }
    return false;
  }

  // Replaces each mapped variable by the given polynomial; unmapped variables
  // stay themselves.
  Poly substitute(const std::map<std::string, Poly>& images) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      Poly term(c);
      for (size_t k = 0; k < vars_.size(); ++k) {
        if (e[k] == 0) continue;
        auto it = images.find(vars_[k]);
        Poly base = (it != images.end()) ? it->second : Poly::var(vars_[k]);
        term *= base.pow(e[k]);
      }
      out += term;
    }
    return out;
  }

  Scalar eval(const std::map<std::string, Scalar>& point) const {
    std::map<std::string, Poly> images;
    for (const auto& [k, v] : point) images.emplace(k, Poly(v));
    Poly r = substitute(images);
    return r.constant_value();
  }

  // Collects the terms of exact degree k in v, with v stripped out.
  Poly coefficient_of(const std::string& v, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return k == 0 ? *this : Poly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Poly out;
    out.vars_ = vars_;
    out.vars_.erase(out.vars_.begin() + static_cast<long>(idx));
    for (const auto& [e, c] : terms_) {
      if (e[idx] != k) continue;
      Exponents stripped = e;
      stripped.erase(stripped.begin() + static_cast<long>(idx));
      out.terms_[stripped] = c;
    }
    out.canonicalize();
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (size_t k = 0; k < vars_.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (e[k] != 1) mono += "^" + std::to_string(e[k]);
      }
      std::string cs = c.to_string();
      std::string term;
      if (mono.empty()) {
        term = cs;
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else if (cs.find('+') != std::string::npos ||
                 cs.find('-', 1) != std::string::npos) {
        term = "(" + cs + ")*" + mono;
      } else {
        term = cs + "*" + mono;
      }
      if (!first) out += " + ";
      out += term;
      first = false;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
  }

private:
  static bool scalar_less(const Scalar& x, const Scalar& y) {
    if (x.re() != y.re()) return x.re() < y.re();
    return x.im() < y.im();
  }

  void canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    // locate variables that actually occur
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
      for (size_t k = 0; k < vars_.size(); ++k) {
        if (e[k] != 0) used[k] = true;
      }
    }
    bool all_used = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    bool sorted = std::is_sorted(vars_.begin(), vars_.end());
    if (all_used && sorted) return;

    std::vector<std::string> kept;
    std::vector<size_t> keep_idx;
    for (size_t k = 0; k < vars_.size(); ++k) {
      if (used[k]) {
        kept.push_back(vars_[k]);
        keep_idx.push_back(k);
      }
    }
    std::vector<size_t> order(kept.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return kept[x] < kept[y]; });

    std::vector<std::string> new_vars(order.size());
    for (size_t k = 0; k < order.size(); ++k) new_vars[k] = kept[order[k]];

    std::map<Exponents, Scalar> new_terms;
    for (const auto& [e, c] : terms_) {
      Exponents ne(order.size());
      for (size_t k = 0; k < order.size(); ++k) ne[k] = e[keep_idx[order[k]]];
      new_terms[std::move(ne)] = c;
    }
    vars_ = std::move(new_vars);
    terms_ = std::move(new_terms);
  }

  // Re-expresses both polynomials over the merged, sorted variable list.
  static std::tuple<std::map<Exponents, Scalar>, std::map<Exponents, Scalar>,
                    std::vector<std::string>>
  aligned(const Poly& a, const Poly& b) {
    std::vector<std::string> vars = a.vars_;
    for (const auto& v : b.vars_) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    auto remap = [&vars](const Poly& p) {
      std::vector<size_t> pos(p.vars_.size());
      for (size_t k = 0; k < p.vars_.size(); ++k) {
        pos[k] = static_cast<size_t>(
            std::find(vars.begin(), vars.end(), p.vars_[k]) - vars.begin());
      }
      std::map<Exponents, Scalar> out;
      for (const auto& [e, c] : p.terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
        out[std::move(ne)] = c;
      }
      return out;
    };
    return {remap(a), remap(b), vars};
  }

  std::vector<std::string> vars_;
  std::map<Exponents, Scalar> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace gsp4
