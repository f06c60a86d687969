#pragma once

// Dominant cones on valuation lattices of split tori.
//
// A diagonal element s = diag(pi^{v_1}, ..., pi^{v_m}) is recorded by its
// valuation vector v. Since |pi|_F = 1/q < 1 we have |alpha(s)|_F <= 1 exactly
// when <alpha, v> >= 0, and |chi(s)| < 1 exactly when <chi, v> > 0 for the
// real-part exponent vector chi. No numeric value of q is ever needed.
//
// A torus whose lattice is spanned by block indicator vectors 1_B, cut out by
// one inequality per simple root outside Theta, is simplicial modulo its
// central sub-lattice. Writing a dominant v as sum_b c_b g_b + z with z central
// and c_b >= 0, a linear exponent that vanishes on the center is strictly
// positive on every non-central dominant v iff it is strictly positive on each
// ray generator g_b. That reduction is what Casselman-type checks rely on.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "speh/error.hpp"
#include "speh/matrix.hpp"
#include "speh/rational.hpp"
#include "speh/root_data.hpp"

namespace speh {

/// Partition of {0..m-1} into classes, built from pairs that must agree.
class IndexBlocks {
 public:
  explicit IndexBlocks(int m) : parent_(static_cast<std::size_t>(m)) { std::iota(parent_.begin(), parent_.end(), 0); }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

  int find(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      parent_[static_cast<std::size_t>(a)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
      a = parent_[static_cast<std::size_t>(a)];
    }
    return a;
  }

  /// Classes ordered by smallest member, members ascending.
  std::vector<std::vector<int>> classes() {
    std::vector<std::vector<int>> out;
    std::vector<int> slot(parent_.size(), -1);
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      const int r = find(i);
      if (slot[static_cast<std::size_t>(r)] < 0) {
        slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(i);
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

inline std::vector<Rational> block_indicator(int m, const std::vector<int>& block) {
  std::vector<Rational> v(static_cast<std::size_t>(m));
  for (int i : block) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

/// Lattice of block-constant valuation vectors.
struct BlockLattice {
  int ambient_rank = 0;
  std::vector<std::vector<int>> blocks;

  std::size_t dimension() const { return blocks.size(); }

  bool contains(const std::vector<Rational>& v) const {
    for (const auto& b : blocks)
      for (int i : b)
        if (v.at(static_cast<std::size_t>(i)) != v.at(static_cast<std::size_t>(b.front()))) return false;
    return true;
  }

  std::vector<Rational> embed(const std::vector<Rational>& u) const {
    std::vector<Rational> v(static_cast<std::size_t>(ambient_rank));
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int i : blocks[b]) v[static_cast<std::size_t>(i)] = u.at(b);
    return v;
  }

  /// Canonical representative of the restriction of a character to this
  /// torus: average over each block. Pairings with lattice vectors agree.
  CharacterVector restrict(const CharacterVector& chi) const {
    if (chi.rank() != static_cast<std::size_t>(ambient_rank)) throw Error(ErrorCode::DimensionMismatch, "restriction");
    CharacterVector out(chi.rank());
    for (const auto& b : blocks) {
      Rational s = 0;
      for (int i : b) s += chi[static_cast<std::size_t>(i)];
      s /= Rational(static_cast<long>(b.size()));
      for (int i : b) out[static_cast<std::size_t>(i)] = s;
    }
    return out;
  }

  friend bool operator==(const BlockLattice&, const BlockLattice&) = default;
};

struct DominantCone {
  BlockLattice lattice;
  /// Simple roots outside Theta; the cone is {v : <alpha, v> >= 0}.
  std::vector<Root> inequalities;
  /// Basis of the central sub-lattice (valuation vectors of S_G).
  std::vector<std::vector<Rational>> central;
  /// Primitive ray generators modulo the center, as full valuation vectors,
  /// normalized so the last block coordinates vanish.
  std::vector<std::vector<Rational>> generators;

  bool in_lattice(const std::vector<Rational>& v) const { return lattice.contains(v); }

  bool is_dominant(const std::vector<Rational>& v) const {
    if (!in_lattice(v)) return false;
    return std::all_of(inequalities.begin(), inequalities.end(), [&](Root a) { return a.pair(v) >= 0; });
  }

  bool is_central(const std::vector<Rational>& v) const {
    Matrix m(v.size(), central.size());
    for (std::size_t c = 0; c < central.size(); ++c)
      for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = central[c][r];
    if (central.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
    return m.solve(v).has_value();
  }
};

/// Builds the cone on `lattice` cut out by `inequalities`, modulo `central`.
inline DominantCone make_dominant_cone(BlockLattice lattice, std::vector<Root> inequalities,
                                       std::vector<std::vector<Rational>> central) {
  const std::size_t nb = lattice.dimension();
  const std::size_t nc = central.size();
  if (inequalities.size() + nc != nb)
    throw Error(ErrorCode::NonSimplicialCone, std::to_string(inequalities.size()) + " inequalities on a rank " +
                                                  std::to_string(nb) + " lattice with center of rank " +
                                                  std::to_string(nc));
  for (const auto& z : central) {
    if (!lattice.contains(z)) throw Error(ErrorCode::NonSimplicialCone, "central vector outside the lattice");
    for (const auto& a : inequalities)
      if (a.pair(z) != 0) throw Error(ErrorCode::NonSimplicialCone, a.str() + " is nontrivial on the center");
  }
  Matrix sys(nb, nb);
  for (std::size_t r = 0; r < inequalities.size(); ++r)
    for (std::size_t b = 0; b < nb; ++b)
      sys(r, b) = inequalities[r].pair(block_indicator(lattice.ambient_rank, lattice.blocks[b]));
  for (std::size_t k = 0; k < nc; ++k) sys(inequalities.size() + k, nb - nc + k) = 1;
  if (sys.determinant() == 0) throw Error(ErrorCode::NonSimplicialCone, "inequalities are dependent modulo the center");
  const Matrix inv = sys.inverse();

  DominantCone cone{std::move(lattice), std::move(inequalities), std::move(central), {}};
  for (std::size_t g = 0; g < cone.inequalities.size(); ++g) {
    std::vector<Rational> u(nb);
    Integer den_lcm = 1;
    for (std::size_t b = 0; b < nb; ++b) {
      u[b] = inv(b, g);
      den_lcm = lcm(den_lcm, denominator(u[b]));
    }
    Integer g_all = 0;
    for (auto& x : u) {
      x *= Rational(den_lcm);
      g_all = boost::multiprecision::gcd(g_all, numerator(x));
    }
    if (g_all != 0)
      for (auto& x : u) x /= Rational(g_all);
    cone.generators.push_back(cone.lattice.embed(u));
  }
  return cone;
}

}  // namespace speh
