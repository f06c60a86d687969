#pragma once

// Character lattice of the diagonal torus of GL_m, its type A root system and
// the Weyl group S_m acting by permutations.
//
// Indices are 0-based internally and 1-based whenever printed. Permutations
// are stored in one-line notation (image[i] = w(i)) and compose as
// (w * v)(i) = w(v(i)). The action on characters is w(e_i) = e_{w(i)}, which is
// also the action on valuation vectors under conjugation a -> w a w^{-1}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "speh/error.hpp"
#include "speh/matrix.hpp"
#include "speh/rational.hpp"

namespace speh {

/// Element of X*(A_0) (x) Q: coords[i] is the coefficient of e_i.
class CharacterVector {
 public:
  CharacterVector() = default;
  explicit CharacterVector(std::size_t rank) : coords_(rank) {}
  explicit CharacterVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static CharacterVector basis(std::size_t rank, std::size_t i) {
    CharacterVector v(rank);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
  }

  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
  friend bool operator<(const CharacterVector& a, const CharacterVector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }

  CharacterVector& operator+=(const CharacterVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  CharacterVector& operator-=(const CharacterVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  CharacterVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend CharacterVector operator+(CharacterVector a, const CharacterVector& b) { return a += b; }
  friend CharacterVector operator-(CharacterVector a, const CharacterVector& b) { return a -= b; }
  friend CharacterVector operator*(const Rational& s, CharacterVector a) { return a *= s; }
  CharacterVector operator-() const { return Rational(-1) * *this; }

  /// Pairing <chi, v> with a (co)character / valuation vector.
  Rational pair(const std::vector<Rational>& v) const {
    if (v.size() != coords_.size()) throw Error(ErrorCode::DimensionMismatch, "pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * v[i];
    return s;
  }
  Rational pair(const CharacterVector& v) const { return pair(v.coords_); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + to_string(coords_[i]);
    return s + ")";
  }

 private:
  void check_rank(const CharacterVector& o) const {
    if (o.rank() != rank()) throw Error(ErrorCode::RankMismatch, "character ranks differ");
  }
  std::vector<Rational> coords_;
};

/// The root e_i - e_j (i != j, 0-based).
struct Root {
  int i = 0;
  int j = 1;

  friend auto operator<=>(const Root&, const Root&) = default;

  Root operator-() const { return {j, i}; }

  CharacterVector character(std::size_t rank) const {
    CharacterVector v(rank);
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(j)] = -1;
    return v;
  }

  /// Inverse of character(): the vector must have exactly one +1 and one -1.
  static std::optional<Root> from_character(const CharacterVector& v) {
    int plus = -1, minus = -1;
    for (std::size_t k = 0; k < v.rank(); ++k) {
      if (v[k] == 0) continue;
      if (v[k] == 1 && plus < 0) plus = static_cast<int>(k);
      else if (v[k] == -1 && minus < 0) minus = static_cast<int>(k);
      else return std::nullopt;
    }
    if (plus < 0 || minus < 0) return std::nullopt;
    return Root{plus, minus};
  }

  Rational pair(const std::vector<Rational>& v) const { return v.at(i) - v.at(j); }

  std::string str() const { return "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1); }
};

/// Subset of the m(m-1) roots of GL_m, stored as a bitmap over (i, j).
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(int rank) : rank_(rank), bits_(static_cast<std::size_t>(rank * rank), 0) {}
  RootSet(int rank, const std::vector<Root>& roots) : RootSet(rank) {
    for (const auto& r : roots) insert(r);
  }

  int rank() const noexcept { return rank_; }
  void insert(Root r) {
    auto& b = bits_[index(r)];
    if (!b) ++size_;
    b = 1;
  }
  bool contains(Root r) const { return bits_[index(r)] != 0; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  std::vector<Root> roots() const {
    std::vector<Root> out;
    out.reserve(size_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (i != j && bits_[static_cast<std::size_t>(i * rank_ + j)]) out.push_back({i, j});
    return out;
  }

  bool subset_of(const RootSet& o) const {
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] && !o.bits_[k]) return false;
    return true;
  }

  friend RootSet intersect(const RootSet& a, const RootSet& b) {
    RootSet out(a.rank_);
    for (std::size_t k = 0; k < a.bits_.size(); ++k)
      if (a.bits_[k] && b.bits_[k]) {
        out.bits_[k] = 1;
        ++out.size_;
      }
    return out;
  }

  friend RootSet difference(const RootSet& a, const RootSet& b) {
    RootSet out(a.rank_);
    for (std::size_t k = 0; k < a.bits_.size(); ++k)
      if (a.bits_[k] && !b.bits_[k]) {
        out.bits_[k] = 1;
        ++out.size_;
      }
    return out;
  }

  RootSet negated() const {
    RootSet out(rank_);
    for (const auto& r : roots()) out.insert(-r);
    return out;
  }

  friend bool operator==(const RootSet& a, const RootSet& b) { return a.rank_ == b.rank_ && a.bits_ == b.bits_; }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& r : roots()) {
      s += (first ? "" : ", ") + r.str();
      first = false;
    }
    return s + "}";
  }

 private:
  std::size_t index(Root r) const {
    if (r.i < 0 || r.j < 0 || r.i >= rank_ || r.j >= rank_ || r.i == r.j)
      throw Error(ErrorCode::RankMismatch, "root " + r.str() + " outside rank " + std::to_string(rank_));
    return static_cast<std::size_t>(r.i * rank_ + r.j);
  }

  int rank_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint8_t> bits_;
};

inline std::vector<Root> all_roots(int m) {
  std::vector<Root> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

/// Element of W_0 = S_m.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int x : image_) {
      if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || seen[static_cast<std::size_t>(x)])
        throw Error(ErrorCode::InvalidParameter, "not a permutation");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static WeylElement identity(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 0);
    return WeylElement(std::move(im));
  }

  /// From 1-based one-line notation, e.g. {1,4,2,3}.
  static WeylElement one_line(const std::vector<int>& images) {
    std::vector<int> im;
    im.reserve(images.size());
    for (int x : images) im.push_back(x - 1);
    return WeylElement(std::move(im));
  }

  /// Reflection s_alpha for alpha = e_i - e_j: the transposition (i j).
  static WeylElement reflection(int m, Root alpha) {
    auto w = identity(m);
    std::swap(w.image_[static_cast<std::size_t>(alpha.i)], w.image_[static_cast<std::size_t>(alpha.j)]);
    return w;
  }

  int rank() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const noexcept { return image_; }

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

  friend WeylElement operator*(const WeylElement& w, const WeylElement& v) {
    if (w.rank() != v.rank()) throw Error(ErrorCode::RankMismatch, "composing permutations of different size");
    std::vector<int> im(v.image_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = w(v.image_[i]);
    return WeylElement(std::move(im));
  }

  WeylElement inverse() const {
    std::vector<int> im(image_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    return WeylElement(std::move(im));
  }

  Root act(Root r) const { return {(*this)(r.i), (*this)(r.j)}; }

  CharacterVector act(const CharacterVector& chi) const {
    if (chi.rank() != image_.size()) throw Error(ErrorCode::RankMismatch, "Weyl action on character");
    CharacterVector out(chi.rank());
    for (std::size_t i = 0; i < image_.size(); ++i) out[static_cast<std::size_t>(image_[i])] = chi[i];
    return out;
  }

  std::vector<Rational> act(const std::vector<Rational>& v) const { return act(CharacterVector(v)).coords(); }

  RootSet act(const RootSet& s) const {
    RootSet out(s.rank());
    for (const auto& r : s.roots()) out.insert(act(r));
    return out;
  }

  Matrix matrix() const { return Matrix::permutation(image_); }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != static_cast<int>(i)) return false;
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < image_.size(); ++i) s += (i ? " " : "") + std::to_string(image_[i] + 1);
    return s + "]";
  }

 private:
  std::vector<int> image_;
};

/// A base of the type A_{m-1} root system together with its positive roots.
class SimpleSystem {
 public:
  SimpleSystem(int rank, std::vector<Root> base) : rank_(rank), base_(std::move(base)), positive_(rank) {
    if (rank_ < 2) throw Error(ErrorCode::InvalidRank, "rank must be at least 2");
    if (static_cast<int>(base_.size()) != rank_ - 1)
      throw Error(ErrorCode::InvalidBase, "a base of GL_m roots has m-1 elements");
    Matrix b(static_cast<std::size_t>(rank_), base_.size());
    for (std::size_t c = 0; c < base_.size(); ++c) {
      auto ch = base_[c].character(static_cast<std::size_t>(rank_));
      for (std::size_t r = 0; r < static_cast<std::size_t>(rank_); ++r) b(r, c) = ch[r];
    }
    if (b.rank() != base_.size()) throw Error(ErrorCode::InvalidBase, "simple roots are linearly dependent");
    coeffs_.assign(static_cast<std::size_t>(rank_ * rank_), {});
    for (const auto& alpha : all_roots(rank_)) {
      auto sol = b.solve(alpha.character(static_cast<std::size_t>(rank_)).coords());
      if (!sol) throw Error(ErrorCode::InvalidBase, "root " + alpha.str() + " not in the span");
      bool nonneg = true, nonpos = true;
      std::vector<int> ci;
      for (const auto& q : *sol) {
        if (denominator(q) != 1) throw Error(ErrorCode::InvalidBase, "non-integral coefficients for " + alpha.str());
        nonneg = nonneg && q >= 0;
        nonpos = nonpos && q <= 0;
        ci.push_back(static_cast<int>(to_int64(q)));
      }
      if (!nonneg && !nonpos) throw Error(ErrorCode::InvalidBase, "root " + alpha.str() + " has mixed signs");
      if (nonneg) positive_.insert(alpha);
      coeffs_[idx(alpha)] = std::move(ci);
    }
  }

  int rank() const noexcept { return rank_; }
  const std::vector<Root>& base() const noexcept { return base_; }
  const RootSet& positive() const noexcept { return positive_; }
  RootSet negative() const { return positive_.negated(); }
  bool is_positive(Root r) const { return positive_.contains(r); }
  bool contains_simple(Root r) const { return std::find(base_.begin(), base_.end(), r) != base_.end(); }

  /// Integer coordinates of a root in the base.
  const std::vector<int>& coefficients(Root r) const { return coeffs_[idx(r)]; }

  /// Coordinates of an arbitrary character in the span of the base.
  std::optional<std::vector<Rational>> coefficients(const CharacterVector& chi) const {
    Matrix b(static_cast<std::size_t>(rank_), base_.size());
    for (std::size_t c = 0; c < base_.size(); ++c) {
      auto ch = base_[c].character(static_cast<std::size_t>(rank_));
      for (std::size_t r = 0; r < static_cast<std::size_t>(rank_); ++r) b(r, c) = ch[r];
    }
    return b.solve(chi.coords());
  }

  /// Position of a simple root in base(); throws if absent.
  std::size_t simple_index(Root r) const {
    auto it = std::find(base_.begin(), base_.end(), r);
    if (it == base_.end()) throw Error(ErrorCode::InvalidSubset, r.str() + " is not simple");
    return static_cast<std::size_t>(it - base_.begin());
  }

  /// Phi_Theta: all roots supported on the given simple roots.
  RootSet subsystem(const std::vector<Root>& theta) const {
    std::vector<bool> in(base_.size(), false);
    for (const auto& t : theta) in[simple_index(t)] = true;
    RootSet out(rank_);
    for (const auto& alpha : all_roots(rank_)) {
      const auto& c = coefficients(alpha);
      bool ok = true;
      for (std::size_t k = 0; k < c.size() && ok; ++k) ok = c[k] == 0 || in[k];
      if (ok) out.insert(alpha);
    }
    return out;
  }

  friend bool operator==(const SimpleSystem& a, const SimpleSystem& b) {
    return a.rank_ == b.rank_ && a.base_ == b.base_;
  }

 private:
  std::size_t idx(Root r) const { return static_cast<std::size_t>(r.i * rank_ + r.j); }

  int rank_;
  std::vector<Root> base_;
  RootSet positive_;
  std::vector<std::vector<int>> coeffs_;
};

/// Delta = {e_i - e_{i+1}}.
inline SimpleSystem standard_base(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidRank, "standard base needs m >= 2, got " + std::to_string(m));
  std::vector<Root> base;
  for (int i = 0; i + 1 < m; ++i) base.push_back({i, i + 1});
  return SimpleSystem(m, std::move(base));
}

inline SimpleSystem translate_base(const WeylElement& w, const SimpleSystem& delta) {
  if (w.rank() != delta.rank()) throw Error(ErrorCode::RankMismatch, "translate_base");
  std::vector<Root> base;
  for (const auto& a : delta.base()) base.push_back(w.act(a));
  return SimpleSystem(delta.rank(), std::move(base));
}

/// 2i-1 -> i, 2i -> 2n+1-i (1-based) on {1..2n}.
inline WeylElement w_plus(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "w_plus needs n >= 1");
  std::vector<int> im(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    im[static_cast<std::size_t>(2 * i - 2)] = i - 1;
    im[static_cast<std::size_t>(2 * i - 1)] = 2 * n - i;
  }
  return WeylElement(std::move(im));
}

}  // namespace speh
