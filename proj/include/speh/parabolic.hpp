#pragma once

// Standard parabolic subgroups P_Theta = M_Theta N_Theta of GL_m as root-set
// data, their modular characters, and the theta-split / theta-stable /
// theta-elliptic predicates.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "speh/cone.hpp"
#include "speh/error.hpp"
#include "speh/involution.hpp"
#include "speh/matrix.hpp"
#include "speh/root_data.hpp"
#include "speh/theta_structure.hpp"

namespace speh {

inline CharacterVector root_sum(const RootSet& roots) {
  CharacterVector s(static_cast<std::size_t>(roots.rank()));
  for (const auto& a : roots.roots()) s += a.character(s.rank());
  return s;
}

struct ParabolicDatum {
  SimpleSystem base;
  std::vector<Root> theta;
  RootSet levi_roots;
  RootSet nil_roots;
  /// A_Theta = (n_{alpha in Theta} ker alpha)^o as block-constant valuations.
  BlockLattice split_component;
  /// delta_P = |.|_F o modulus_exponent on the torus.
  CharacterVector modulus_exponent;

  int rank() const { return base.rank(); }
};

inline ParabolicDatum standard_parabolic(const SimpleSystem& base, std::vector<Root> theta) {
  for (const auto& a : theta)
    if (!base.contains_simple(a)) throw Error(ErrorCode::InvalidSubset, a.str() + " is not in the base");
  RootSet levi = base.subsystem(theta);
  RootSet nil = difference(base.positive(), levi);
  IndexBlocks blocks(base.rank());
  for (const auto& a : theta) blocks.join(a.i, a.j);
  CharacterVector mod = root_sum(nil);
  return ParabolicDatum{base, std::move(theta), std::move(levi), std::move(nil),
                        BlockLattice{base.rank(), blocks.classes()}, std::move(mod)};
}

/// Modulus exponent of the opposite parabolic.
inline CharacterVector opposite_modulus_exponent(const ParabolicDatum& p) { return root_sum(p.nil_roots.negated()); }

/// theta(P) is opposite to P.
inline bool is_theta_split(const ParabolicDatum& p, const SignedPermutation& theta) {
  return theta.apply(p.nil_roots) == p.nil_roots.negated() && theta.apply(p.levi_roots) == p.levi_roots;
}

/// theta(P) = P.
inline bool is_theta_stable(const ParabolicDatum& p, const SignedPermutation& theta) {
  return theta.apply(p.levi_roots) == p.levi_roots && theta.apply(p.nil_roots) == p.nil_roots;
}

/// Rank of the (theta,F)-split part {v in A_M : theta v = -v} of A_M. Requires
/// theta(M) = M so that theta preserves the lattice.
inline std::size_t split_component_rank(const BlockLattice& lattice, const SignedPermutation& theta) {
  const auto m = static_cast<std::size_t>(lattice.ambient_rank);
  const std::size_t nb = lattice.dimension();
  Matrix map(m, nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const auto v = block_indicator(lattice.ambient_rank, lattice.blocks[b]);
    const auto tv = theta.apply_to_valuation(v);
    if (!lattice.contains(tv)) throw Error(ErrorCode::PreconditionViolation, "theta does not preserve A_M");
    for (std::size_t r = 0; r < m; ++r) map(r, b) = tv[r] + v[r];
  }
  return map.kernel().size();
}

/// M is theta-elliptic iff it is theta-stable and S_M = S_G, compared on ranks
/// of the (theta,F)-split parts of the centers.
inline bool is_theta_elliptic_levi(const ParabolicDatum& p, const SignedPermutation& theta) {
  if (theta.apply(p.levi_roots) != p.levi_roots) return false;
  const BlockLattice whole{p.rank(), {[&] {
                             std::vector<int> all(static_cast<std::size_t>(p.rank()));
                             std::iota(all.begin(), all.end(), 0);
                             return all;
                           }()}};
  return split_component_rank(p.split_component, theta) == split_component_rank(whole, theta);
}

inline bool balanced_partition_check(const std::vector<int>& partition) {
  return std::equal(partition.begin(), partition.end(), partition.rbegin());
}

/// Theta subset of the standard base Delta of GL_m for an ordered partition of m.
inline std::vector<Root> partition_subset(const std::vector<int>& partition) {
  const int m = std::accumulate(partition.begin(), partition.end(), 0);
  if (m < 2 || std::any_of(partition.begin(), partition.end(), [](int p) { return p <= 0; }))
    throw Error(ErrorCode::InvalidPartition, "partition parts must be positive with sum >= 2");
  std::vector<bool> cut(static_cast<std::size_t>(m), false);
  int s = 0;
  for (int p : partition) {
    s += p;
    if (s < m) cut[static_cast<std::size_t>(s - 1)] = true;
  }
  std::vector<Root> out;
  for (int i = 0; i + 1 < m; ++i)
    if (!cut[static_cast<std::size_t>(i)]) out.push_back({i, i + 1});
  return out;
}

inline ParabolicDatum partition_parabolic(const std::vector<int>& partition) {
  const int m = std::accumulate(partition.begin(), partition.end(), 0);
  return standard_parabolic(standard_base(m), partition_subset(partition));
}

/// All subsets of Delta_0 whose parabolic passes is_theta_split, by exhaustive scan.
inline std::vector<std::vector<Root>> theta_split_subsets_by_scan(int n) {
  const auto d0 = theta_base_delta0(n);
  const auto theta = standard_theta(n);
  const auto& base = d0.base();
  std::vector<std::vector<Root>> out;
  for (unsigned long mask = 0; mask < (1ul << base.size()); ++mask) {
    std::vector<Root> s;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask & (1ul << i)) s.push_back(base[i]);
    if (is_theta_split(standard_parabolic(d0, s), theta)) out.push_back(std::move(s));
  }
  return out;
}

struct DeltaRatio {
  int n = 0;
  std::size_t fixed_nil_dimension = 0;
  /// Exponents on the torus l(t) = diag(t_1..t_n, t_n^{-1}..t_1^{-1}) of L^theta.
  CharacterVector fixed_modulus;  // delta_{Q^theta}
  CharacterVector half_modulus;   // delta_Q^{1/2}
  CharacterVector ratio;          // delta_{Q^theta} delta_Q^{-1/2}
};

/// Q = P_(n,n), H = Sp_2n for eps_{2n}. delta_{Q^theta} is read off the
/// theta-fixed part of Lie N, decomposed into weight spaces for the L^theta torus.
inline DeltaRatio delta_ratio_on_fixed_levi(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "n must be positive");
  const int m = 2 * n;
  const auto um = static_cast<std::size_t>(m), un = static_cast<std::size_t>(n);
  const auto x = standard_symplectic_form(n);
  const auto theta = lattice_action(x);

  // Cocharacters f_k = e_k - e_{tau(k)} spanning the torus of L^theta.
  std::vector<std::vector<Rational>> f(un, std::vector<Rational>(um));
  for (std::size_t k = 0; k < un; ++k) {
    f[k][k] = 1;
    f[k][static_cast<std::size_t>(theta.target(static_cast<int>(k)))] = -1;
  }
  auto weight = [&](const CharacterVector& chi) {
    CharacterVector w(un);
    for (std::size_t k = 0; k < un; ++k) w[k] = chi.pair(f[k]);
    return w;
  };

  std::map<CharacterVector, std::vector<Root>> spaces;
  for (int i = 0; i < n; ++i)
    for (int j = n; j < m; ++j) spaces[weight(Root{i, j}.character(um))].push_back(Root{i, j});

  DeltaRatio out;
  out.n = n;
  out.fixed_modulus = CharacterVector(un);
  for (const auto& [w, roots] : spaces) {
    // Matrix of X -> dtheta(X) - X on span{E_ij}, coordinates by position in `roots`.
    Matrix a(roots.size(), roots.size());
    for (std::size_t c = 0; c < roots.size(); ++c) {
      Matrix e(um, um);
      e(static_cast<std::size_t>(roots[c].i), static_cast<std::size_t>(roots[c].j)) = 1;
      Matrix img = lie_involution(x, e);
      for (std::size_t r = 0; r < roots.size(); ++r) {
        auto& entry = img(static_cast<std::size_t>(roots[r].i), static_cast<std::size_t>(roots[r].j));
        a(r, c) = entry - (r == c ? 1 : 0);
        entry = 0;
      }
      for (std::size_t p = 0; p < um; ++p)
        for (std::size_t q = 0; q < um; ++q)
          if (img(p, q) != 0) throw Error(ErrorCode::Internal, "dtheta does not preserve a weight space of Lie N");
    }
    const std::size_t d = a.kernel().size();
    out.fixed_nil_dimension += d;
    out.fixed_modulus += Rational(static_cast<long>(d)) * w;
  }
  const auto q = partition_parabolic({n, n});
  out.half_modulus = rat(1, 2) * weight(q.modulus_exponent);
  out.ratio = out.fixed_modulus - out.half_modulus;
  return out;
}

}  // namespace speh
