#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/linalg.hpp"
#include "gsp4/scalar.hpp"
#include "gsp4/weight.hpp"

namespace gsp4::lie {

using Mat4 = Mat<Scalar>;

// Distinguished 11-element basis of gsp4(R), in fixed order.
enum Idx : size_t {
  idx_a = 0,
  idx_h,
  idx_n0,
  idx_n1,
  idx_n2,
  idx_n3,
  idx_H,
  idx_J,
  idx_K2,
  idx_K3,
  idx_I4,
};
inline constexpr size_t basis_count = 11;

inline Mat4 unit(int i, int j) {
  Mat4 m(4, 4);
  m(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = Scalar(1);
  return m;
}

inline Mat4 diag(long d1, long d2, long d3, long d4) {
  Mat4 m(4, 4);
  m(0, 0) = Scalar(d1);
  m(1, 1) = Scalar(d2);
  m(2, 2) = Scalar(d3);
  m(3, 3) = Scalar(d4);
  return m;
}

inline const std::vector<Mat4>& basis() {
  static const std::vector<Mat4> b = [] {
    std::vector<Mat4> v;
    v.push_back(diag(1, 1, -1, -1));                                     // a
    v.push_back(diag(1, -1, -1, 1));                                     // h
    v.push_back(unit(1, 2) - unit(4, 3));                                // n0
    v.push_back(unit(1, 3) + unit(2, 4));                                // n1
    v.push_back(unit(1, 3) - unit(2, 4));                                // n2
    v.push_back(unit(1, 4) + unit(2, 3));                                // n3
    v.push_back(unit(1, 2) - unit(2, 1) + unit(3, 4) - unit(4, 3));      // H
    v.push_back(unit(1, 3) + unit(2, 4) - unit(3, 1) - unit(4, 2));      // J
    v.push_back(unit(1, 3) - unit(2, 4) - unit(3, 1) + unit(4, 2));      // K2
    v.push_back(unit(1, 4) + unit(2, 3) - unit(3, 2) - unit(4, 1));      // K3
    v.push_back(Mat4::identity(4));                                      // I4
    return v;
  }();
  return b;
}

inline const char* basis_name(size_t k) {
  static const char* names[] = {"a",  "h", "n0", "n1", "n2", "n3",
                                "H",  "J", "K2", "K3", "I4"};
  return names[k];
}

inline const Mat4& J2() {
  static const Mat4 j = unit(1, 3) + unit(2, 4) - unit(3, 1) - unit(4, 2);
  return j;
}

// X lies in gsp4 iff X^T J2 + J2 X is a scalar multiple of J2; the multiple
// is the similitude factor (zero exactly on sp4).
inline std::optional<Scalar> similitude(const Mat4& X) {
  Mat4 lhs = X.transpose() * J2() + J2() * X;
  Scalar c;
  bool seen = false;
  for (size_t i = 0; i < 4 && !seen; ++i) {
    for (size_t j = 0; j < 4 && !seen; ++j) {
      if (!J2()(i, j).is_zero()) {
        c = lhs(i, j) / J2()(i, j);
        seen = true;
      }
    }
  }
  if (lhs == c * J2()) return c;
  return std::nullopt;
}

inline bool is_member(const Mat4& X) { return similitude(X).has_value(); }

template <typename R>
std::vector<R> flatten(const Mat<R>& m) {
  std::vector<R> v;
  v.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  }
  return v;
}

namespace detail {

inline const Mat<Scalar>& span16x11() {
  static const Mat<Scalar> M = [] {
    Mat<Scalar> m(16, basis_count);
    for (size_t k = 0; k < basis_count; ++k) {
      auto f = flatten(basis()[k]);
      for (size_t r = 0; r < 16; ++r) m(r, k) = f[r];
    }
    return m;
  }();
  return M;
}

// Left inverse (M^T M)^{-1} M^T of the basis matrix, exact over Q. Applying
// it gives coordinates over any commutative ring containing Q(i).
inline const Mat<Scalar>& coord_projector() {
  static const Mat<Scalar> P = [] {
    const Mat<Scalar>& M = span16x11();
    Mat<Scalar> Mt = M.transpose();
    auto inv = (Mt * M).inverse();
    if (!inv) throw std::logic_error("basis matrix is rank-deficient");
    return *inv * Mt;
  }();
  return P;
}

}  // namespace detail

// Coordinates of X in the 11-element basis, over any scalar ring R that
// contains the rationals (R must be constructible from Scalar via product).
template <typename R>
std::vector<R> to_coords(const Mat<R>& X) {
  const Mat<Scalar>& P = detail::coord_projector();
  std::vector<R> flat = flatten(X);
  std::vector<R> coords(basis_count, R());
  for (size_t i = 0; i < basis_count; ++i) {
    for (size_t j = 0; j < 16; ++j) {
      if (P(i, j).is_zero()) continue;
      coords[i] = coords[i] + R(P(i, j)) * flat[j];
    }
  }
  // verify the reconstruction; rejects matrices outside the span
  const Mat<Scalar>& M = detail::span16x11();
  for (size_t j = 0; j < 16; ++j) {
    R acc{};
    for (size_t i = 0; i < basis_count; ++i) {
      if (M(j, i).is_zero()) continue;
      acc = acc + R(M(j, i)) * coords[i];
    }
    if (!(acc == flat[j])) {
      throw std::domain_error("to_coords: matrix outside the gsp4 span");
    }
  }
  return coords;
}

template <typename R>
Mat<R> from_coords(const std::vector<R>& c) {
  if (c.size() != basis_count) throw std::invalid_argument("from_coords: size");
  Mat<R> out(4, 4);
  for (size_t k = 0; k < basis_count; ++k) {
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 0; j < 4; ++j) {
        const Scalar& e = basis()[k](i, j);
        if (!e.is_zero()) out(i, j) = out(i, j) + c[k] * R(e);
      }
    }
  }
  return out;
}

template <typename R>
Mat<R> bracket(const Mat<R>& X, const Mat<R>& Y) {
  return X * Y - Y * X;
}

inline Mat4 cartan_theta(const Mat4& X) { return -X.transpose(); }

inline std::vector<Mat4> b0_basis() {
  const auto& b = basis();
  return {b[idx_a], b[idx_h], b[idx_n0], b[idx_n1], b[idx_n2], b[idx_n3]};
}
inline std::vector<Mat4> t_basis() {
  return {basis()[idx_H], basis()[idx_J]};
}
inline std::vector<Mat4> k_basis() {
  const auto& b = basis();
  return {b[idx_H], b[idx_J], b[idx_K2], b[idx_K3]};
}
inline std::vector<Mat4> p_basis() {
  const auto& b = basis();
  std::vector<Mat4> out = {b[idx_a], b[idx_h]};
  for (size_t k : {idx_n0, idx_n1, idx_n2, idx_n3}) {
    out.push_back(b[k] + b[k].transpose());
  }
  return out;
}
inline std::vector<Mat4> sp4_basis() {
  std::vector<Mat4> out = basis();
  out.pop_back();
  return out;
}

// Projection g -> b0 along span{H, J, K2, K3, I4}.
inline Mat4 project_b0(const Mat4& X) {
  auto c = to_coords(X);
  for (size_t k = idx_H; k < basis_count; ++k) c[k] = Scalar(0);
  return from_coords(c);
}

enum class AdMode { plain, borel_quotient };

// Weight (p,q) with [H,X] = -2pi X and [J,X] = -2qi X. In borel_quotient
// mode both brackets are projected to b0 first, which models the t-action
// on b0 identified with g/(t + V_alpha + V_{-alpha} + center).
inline std::optional<Weight> weight_of(const Mat4& X,
                                       AdMode mode = AdMode::plain) {
  if (X.is_zero()) throw std::domain_error("weight_of: zero vector");
  Mat4 bh = bracket(basis()[idx_H], X);
  Mat4 bj = bracket(basis()[idx_J], X);
  if (mode == AdMode::borel_quotient) {
    bh = project_b0(bh);
    bj = project_b0(bj);
  }
  auto ratio_to_doubled = [&](const Mat4& B) -> std::optional<int> {
    // B must equal lambda*X with lambda = -(2p)i
    Scalar lambda;
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 0; j < 4; ++j) {
        if (!X(i, j).is_zero()) {
          lambda = B(i, j) / X(i, j);
          goto found;
        }
      }
    }
  found:
    if (!(B == lambda * X)) return std::nullopt;
    if (!lambda.re().is_zero()) return std::nullopt;
    Rational p2 = -lambda.im();
    if (!p2.is_integer()) return std::nullopt;
    return static_cast<int>(p2.to_long());
  };
  auto p2 = ratio_to_doubled(bh);
  auto q2 = ratio_to_doubled(bj);
  if (!p2 || !q2) return std::nullopt;
  return Weight{*p2, *q2};
}

namespace detail {

// Matrix of ad(T) restricted to the span, columns in span coordinates.
inline Mat<Scalar> ad_matrix(const Mat4& T, const std::vector<Mat4>& span) {
  size_t n = span.size();
  Mat<Scalar> S(16, n);
  for (size_t k = 0; k < n; ++k) {
    auto f = flatten(span[k]);
    for (size_t r = 0; r < 16; ++r) S(r, k) = f[r];
  }
  Mat<Scalar> out(n, n);
  for (size_t k = 0; k < n; ++k) {
    Mat4 w = bracket(T, span[k]);
    auto sol = S.solve(flatten(w));
    if (!sol) {
      throw std::runtime_error(
          std::string("ad_matrix: bracket of span element ") +
          std::to_string(k) + " leaves the span");
    }
    for (size_t r = 0; r < n; ++r) out(r, k) = (*sol)[r];
  }
  return out;
}

}  // namespace detail

// Matrix of ad(T) on a T-stable span, columns in span coordinates.
inline Mat<Scalar> ad_action(const Mat4& T, const std::vector<Mat4>& span) {
  return detail::ad_matrix(T, span);
}

// Pinned root vectors for the alpha pair inside k (leading coordinate 1 in
// the basis order H, J, K2, K3).
inline Mat4 pinned_E_alpha() {
  return basis()[idx_K2] - Scalar::i() * basis()[idx_K3];
}
inline Mat4 pinned_E_minus_alpha() {
  return basis()[idx_K2] + Scalar::i() * basis()[idx_K3];
}

struct RootSpace {
  Weight weight;
  std::vector<std::vector<Scalar>> coords;  // in the input span's basis
  std::vector<Mat4> vectors;
};

// Simultaneous eigenspace decomposition of a t-stable span under ad(H),
// ad(J). Eigenvectors are pinned by scaling the first nonzero coordinate
// to 1. Throws if the span is not ad(t)-stable or the action does not
// diagonalize over the scanned weight window.
inline std::vector<RootSpace> root_decompose(const std::vector<Mat4>& span) {
  size_t n = span.size();
  if (n == 0) return {};
  Mat<Scalar> adH = detail::ad_matrix(basis()[idx_H], span);
  Mat<Scalar> adJ = detail::ad_matrix(basis()[idx_J], span);
  std::vector<RootSpace> out;
  size_t total = 0;
  for (int p2 = -8; p2 <= 8; ++p2) {
    for (int q2 = -8; q2 <= 8; ++q2) {
      Scalar lh(Rational(0), Rational(-p2));
      Scalar lj(Rational(0), Rational(-q2));
      Mat<Scalar> stacked(2 * n, n);
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          stacked(i, j) = adH(i, j);
          stacked(n + i, j) = adJ(i, j);
        }
        stacked(i, i) = stacked(i, i) - lh;
        stacked(n + i, i) = stacked(n + i, i) - lj;
      }
      auto ns = stacked.nullspace();
      if (ns.empty()) continue;
      RootSpace rs;
      rs.weight = Weight{p2, q2};
      for (auto& v : ns) {
        size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        Scalar inv = v[lead].inverse();
        for (auto& c : v) c = inv * c;
        Mat4 vec(4, 4);
        for (size_t k = 0; k < n; ++k) vec = vec + v[k] * span[k];
        rs.coords.push_back(std::move(v));
        rs.vectors.push_back(std::move(vec));
      }
      total += rs.vectors.size();
      out.push_back(std::move(rs));
    }
  }
  if (total != n) {
    throw std::runtime_error("root_decompose: action not diagonalizable");
  }
  return out;
}

inline bool subalgebra_closed(const std::vector<Mat4>& span) {
  size_t n = span.size();
  Mat<Scalar> S(16, n);
  for (size_t k = 0; k < n; ++k) {
    auto f = flatten(span[k]);
    for (size_t r = 0; r < 16; ++r) S(r, k) = f[r];
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Mat4 w = bracket(span[i], span[j]);
      if (!S.solve(flatten(w)).has_value()) return false;
    }
  }
  return true;
}

// Killing form of sp4, computed as trace(ad X ad Y) on the 10-dim basis.
inline Scalar killing_form(const Mat4& X, const Mat4& Y) {
  auto span = sp4_basis();
  Mat<Scalar> ax = detail::ad_matrix(X, span);
  Mat<Scalar> ay = detail::ad_matrix(Y, span);
  return (ax * ay).trace();
}

struct FrameEntry {
  std::string name;
  Mat4 vec;
  Weight claimed;
  bool eigen_ok = false;
  Mat4 h_defect;  // plain bracket minus the claimed eigenvalue multiple
  Mat4 j_defect;
};

struct FrameChangeResult {
  std::vector<FrameEntry> entries;
  size_t rank = 0;
  bool all_ok = false;
};

inline const std::vector<std::pair<std::string, Weight>>& frame_table() {
  static const std::vector<std::pair<std::string, Weight>> t = {
      {"e(-a-b)", Weight{-2, -2}}, {"e(a+b)", Weight{2, 2}},
      {"e(a-b)", Weight{2, -2}},   {"e(-a+b)", Weight{-2, 2}},
      {"e(b)", Weight{0, 2}},      {"e(-b)", Weight{0, -2}},
  };
  return t;
}

inline Mat4 frame_vector(const std::string& name) {
  const auto& b = basis();
  Scalar half(Rational(1, 2));
  Scalar i = Scalar::i();
  const Mat4 &a = b[idx_a], &h = b[idx_h], &n0 = b[idx_n0], &n1 = b[idx_n1],
             &n2 = b[idx_n2], &n3 = b[idx_n3];
  if (name == "e(-a-b)") return half * h + i * n0 + i * n2 - Scalar(1) * n3;
  if (name == "e(a+b)") return half * h - i * n0 - i * n2 - Scalar(1) * n3;
  if (name == "e(a-b)") return half * h - i * n0 + i * n2 + Scalar(1) * n3;
  if (name == "e(-a+b)") return half * h + i * n0 - i * n2 - Scalar(1) * n3;
  if (name == "e(b)") return half * a - i * n1;
  if (name == "e(-b)") return half * a + i * n1;
  throw std::invalid_argument("frame_vector: unknown name " + name);
}

// Checks the six displayed b0 frame vectors against their claimed t-weights,
// acting through the b0 quotient, and that together they span b0.
inline FrameChangeResult verify_frame_change() {
  FrameChangeResult res;
  res.all_ok = true;
  Mat<Scalar> cob(6, 6);
  size_t col = 0;
  for (const auto& [name, w] : frame_table()) {
    FrameEntry e;
    e.name = name;
    e.vec = frame_vector(name);
    e.claimed = w;
    Mat4 bh = bracket(basis()[idx_H], e.vec);
    Mat4 bj = bracket(basis()[idx_J], e.vec);
    Scalar lh(Rational(0), Rational(-w.p2));
    Scalar lj(Rational(0), Rational(-w.q2));
    e.h_defect = bh - lh * e.vec;
    e.j_defect = bj - lj * e.vec;
    bool ok_h = project_b0(bh) == lh * e.vec;
    bool ok_j = project_b0(bj) == lj * e.vec;
    e.eigen_ok = ok_h && ok_j;
    res.all_ok = res.all_ok && e.eigen_ok;
    auto coords = to_coords(e.vec);
    for (size_t r = 0; r < 6; ++r) cob(r, col) = coords[r];
    ++col;
    res.entries.push_back(std::move(e));
  }
  res.rank = cob.rank();
  res.all_ok = res.all_ok && res.rank == 6;
  return res;
}

}  // namespace gsp4::lie
