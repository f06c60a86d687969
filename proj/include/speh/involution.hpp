#pragma once

// Involutions theta_x(g) = x^{-1} g^{-T} x of GL_m attached to nonsingular
// skew-symmetric forms x, the right action x.g = g^T x g, and the induced
// action on the character lattice of the diagonal torus.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "speh/error.hpp"
#include "speh/matrix.hpp"
#include "speh/rational.hpp"
#include "speh/root_data.hpp"

namespace speh {

class SkewForm {
 public:
  explicit SkewForm(Matrix x) : x_(std::move(x)) {
    if (!x_.square() || x_.rows() % 2 != 0 || x_.rows() == 0)
      throw Error(ErrorCode::OddRank, "skew form must be square of even size");
    if (x_.transpose() != -x_) throw Error(ErrorCode::NotSkewSymmetric, "x^T != -x");
    x_inv_ = x_.inverse();
  }

  const Matrix& matrix() const noexcept { return x_; }
  const Matrix& inverse() const noexcept { return x_inv_; }
  std::size_t size() const noexcept { return x_.rows(); }

  friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.x_ == b.x_; }

 private:
  Matrix x_;
  Matrix x_inv_;
};

/// J_n: ones on the anti-diagonal.
inline Matrix antidiagonal_ones(std::size_t n) {
  Matrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
  return j;
}

/// eps_{2n} = [[0, J_n], [-J_n, 0]].
inline SkewForm standard_symplectic_form(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "standard_symplectic_form needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  Matrix x(2 * un, 2 * un);
  const Matrix j = antidiagonal_ones(un);
  x.set_block(0, un, j);
  x.set_block(un, 0, -j);
  return SkewForm(std::move(x));
}

inline void require_invertible(const Matrix& g) {
  if (!g.square() || g.determinant() == 0) throw Error(ErrorCode::NotInvertible, "g is singular");
}

/// theta_x(g) = x^{-1} g^{-T} x.
inline Matrix apply_involution(const SkewForm& x, const Matrix& g) {
  if (g.rows() != x.size() || !g.square()) throw Error(ErrorCode::DimensionMismatch, "apply_involution");
  require_invertible(g);
  return x.inverse() * g.inverse().transpose() * x.matrix();
}

/// x.g = g^T x g. The induced involution satisfies theta_{x.g} = g.theta_x.
inline SkewForm act_on_involution(const Matrix& g, const SkewForm& x) {
  if (g.rows() != x.size() || !g.square()) throw Error(ErrorCode::DimensionMismatch, "act_on_involution");
  require_invertible(g);
  return SkewForm(g.transpose() * x.matrix() * g);
}

/// (g.theta_x)(h) = g^{-1} theta_x(g h g^{-1}) g.
inline Matrix translated_involution(const Matrix& g, const SkewForm& x, const Matrix& h) {
  require_invertible(g);
  const Matrix gi = g.inverse();
  return gi * apply_involution(x, g * h * gi) * g;
}

inline bool is_fixed(const SkewForm& x, const Matrix& g) {
  if (g.rows() != x.size() || !g.square()) throw Error(ErrorCode::DimensionMismatch, "is_fixed");
  require_invertible(g);
  return g.transpose() * x.matrix() * g == x.matrix();
}

/// Differential of theta_x on gl_m: X -> -x^{-1} X^T x.
inline Matrix lie_involution(const SkewForm& x, const Matrix& X) {
  return -(x.inverse() * X.transpose() * x.matrix());
}

/// x_{2n} = eps_{2n}.w_+, block diagonal with 2x2 blocks [[0,1],[-1,0]].
inline SkewForm block_symplectic_form(int n) {
  return act_on_involution(w_plus(n).matrix(), standard_symplectic_form(n));
}

/// Signed permutation of Z^m: e_j -> sign[j] e_{target[j]}. Encodes both the
/// action on characters and, by the transpose formula, on valuation vectors.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> target, std::vector<int> sign)
      : target_(std::move(target)), sign_(std::move(sign)) {
    if (target_.size() != sign_.size()) throw Error(ErrorCode::DimensionMismatch, "signed permutation");
    WeylElement check(target_);
    for (int s : sign_)
      if (s != 1 && s != -1) throw Error(ErrorCode::InvalidParameter, "signs must be +-1");
  }

  static SignedPermutation identity(int m) {
    return SignedPermutation(WeylElement::identity(m).image(), std::vector<int>(static_cast<std::size_t>(m), 1));
  }

  int rank() const noexcept { return static_cast<int>(target_.size()); }
  int target(int j) const { return target_[static_cast<std::size_t>(j)]; }
  int sign(int j) const { return sign_[static_cast<std::size_t>(j)]; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  CharacterVector apply(const CharacterVector& chi) const {
    if (chi.rank() != target_.size()) throw Error(ErrorCode::RankMismatch, "lattice action");
    CharacterVector out(chi.rank());
    for (std::size_t j = 0; j < target_.size(); ++j)
      out[static_cast<std::size_t>(target_[j])] += Rational(sign_[j]) * chi[j];
    return out;
  }

  /// Action on the valuation vector of a diagonal element: (theta v)_j = s_j v_{target(j)}.
  std::vector<Rational> apply_to_valuation(const std::vector<Rational>& v) const {
    if (v.size() != target_.size()) throw Error(ErrorCode::RankMismatch, "valuation action");
    std::vector<Rational> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = Rational(sign_[j]) * v[static_cast<std::size_t>(target_[j])];
    return out;
  }

  /// Image of a root, or nullopt if the image is not a root.
  std::optional<Root> apply(Root r) const {
    const int si = sign(r.i), sj = sign(r.j);
    if (si != sj) return std::nullopt;
    if (si == 1) return Root{target(r.i), target(r.j)};
    return Root{target(r.j), target(r.i)};
  }

  /// Image of a root; throws NotRootStable when the image is not a root.
  Root apply_root(Root r) const {
    auto out = apply(r);
    if (!out) throw Error(ErrorCode::NotRootStable, "image of " + r.str() + " is not a root");
    return *out;
  }

  RootSet apply(const RootSet& s) const {
    RootSet out(s.rank());
    for (const auto& r : s.roots()) out.insert(apply_root(r));
    return out;
  }

  SignedPermutation compose(const SignedPermutation& o) const {
    std::vector<int> t(target_.size()), s(target_.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto mid = static_cast<std::size_t>(o.target_[j]);
      t[j] = target_[mid];
      s[j] = o.sign_[j] * sign_[mid];
    }
    return SignedPermutation(std::move(t), std::move(s));
  }

  bool is_involution() const { return compose(*this) == identity(rank()); }

  std::string str() const {
    std::string out;
    for (std::size_t j = 0; j < target_.size(); ++j) {
      if (j) out += ", ";
      out += "e" + std::to_string(j + 1) + "->" + (sign_[j] < 0 ? "-" : "") + "e" + std::to_string(target_[j] + 1);
    }
    return out;
  }

 private:
  std::vector<int> target_;
  std::vector<int> sign_;
};

/// Action of theta_x on X*(A_0) for a monomial form x: e_j -> -e_{tau(j)}
/// where x e_j is a multiple of e_{tau(j)}.
inline SignedPermutation lattice_action(const SkewForm& x) {
  const Matrix& m = x.matrix();
  if (!m.is_monomial()) throw Error(ErrorCode::UnsupportedForm, "form does not normalize the diagonal torus");
  std::vector<int> target(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) target[j] = static_cast<int>(i);
  return SignedPermutation(std::move(target), std::vector<int>(m.cols(), -1));
}

}  // namespace speh
