#pragma once

// theta-bases, theta-fixed roots, restriction to the maximal (theta,F)-split
// torus S_0, restricted roots, theta-split subsets and their dominant cones.
//
// For theta acting on the lattice by e_j -> -e_{tau(j)}, the valuation lattice
// of S_0 is {v : v_j = v_{tau(j)}}, and restricting a character to S_0 sums
// the coordinates over each tau-orbit {j, tau(j)}. Orbits are numbered by
// their smallest member, which for eps_{2n} gives {i, 2n+1-i} -> i.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "speh/cone.hpp"
#include "speh/error.hpp"
#include "speh/involution.hpp"
#include "speh/rational.hpp"
#include "speh/root_data.hpp"

namespace speh {

/// theta_{eps_{2n}} on X*(A_0).
inline SignedPermutation standard_theta(int n) { return lattice_action(standard_symplectic_form(n)); }

/// Delta_0 = w_+ Delta.
inline SimpleSystem theta_base_delta0(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "n must be positive");
  return translate_base(w_plus(n), standard_base(2 * n));
}

inline RootSet theta_fixed_roots(const SignedPermutation& theta) {
  RootSet out(theta.rank());
  for (const auto& a : all_roots(theta.rank()))
    if (theta.apply_root(a) == a) out.insert(a);
  return out;
}

/// A positive root whose theta-image is positive but different, if any.
inline std::optional<Root> theta_base_violation(const SimpleSystem& base, const SignedPermutation& theta) {
  if (base.rank() != theta.rank()) throw Error(ErrorCode::RankMismatch, "is_theta_base");
  for (const auto& a : base.positive().roots()) {
    const Root t = theta.apply_root(a);
    if (t != a && base.is_positive(t)) return a;
  }
  return std::nullopt;
}

inline bool is_theta_base(const SimpleSystem& base, const SignedPermutation& theta) {
  return !theta_base_violation(base, theta).has_value();
}

/// Tally of w_+(e_i - e_j), i < j, by parity of (i, j), against the closed
/// formulas for its theta-image.
struct ThetaBaseCensus {
  int n = 0;
  /// Non-fixed roots seen in each case: (odd,odd), (odd,even), (even,odd), (even,even).
  std::array<int, 4> case_counts{};
  int fixed = 0;
  std::vector<std::string> mismatches;

  bool all_cases_witnessed() const {
    return std::all_of(case_counts.begin(), case_counts.end(), [](int c) { return c > 0; });
  }
};

inline ThetaBaseCensus theta_base_census(int n) {
  const auto theta = standard_theta(n);
  const auto wp = w_plus(n);
  const auto delta0 = theta_base_delta0(n);
  ThetaBaseCensus census;
  census.n = n;
  // 1-based helpers: e(a) - e(b) for the standard coordinates.
  auto std_root = [](int a, int b) { return Root{a - 1, b - 1}; };
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) {
      const Root alpha = wp.act(std_root(i, j));
      const Root image = theta.apply_root(alpha);
      if (image == alpha) {
        ++census.fixed;
        continue;
      }
      Root expected;
      int which = 0;
      if (i % 2 == 1 && j % 2 == 1) {
        const int k = (i + 1) / 2, l = (j + 1) / 2;
        expected = wp.act(std_root(2 * l, 2 * k));
        which = 0;
      } else if (i % 2 == 1) {
        const int k = (i + 1) / 2, l = j / 2;
        expected = wp.act(std_root(2 * l - 1, 2 * k));
        which = 1;
      } else if (j % 2 == 1) {
        const int k = i / 2, l = (j + 1) / 2;
        expected = wp.act(std_root(2 * l, 2 * k - 1));
        which = 2;
      } else {
        const int k = i / 2, l = j / 2;
        expected = wp.act(std_root(2 * l - 1, 2 * k - 1));
        which = 3;
      }
      ++census.case_counts[static_cast<std::size_t>(which)];
      if (image != expected) census.mismatches.push_back(alpha.str() + ": got " + image.str() + ", formula " + expected.str());
      else if (delta0.is_positive(image)) census.mismatches.push_back(alpha.str() + ": image " + image.str() + " is positive");
    }
  return census;
}

/// Element of X*(S_0) (x) Q in the coordinates eps-bar_1..eps-bar_n.
struct RestrictedCharacter {
  std::vector<Rational> coords;

  friend auto operator<=>(const RestrictedCharacter& a, const RestrictedCharacter& b) {
    if (std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end()))
      return std::strong_ordering::less;
    if (a.coords == b.coords) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }
  friend bool operator==(const RestrictedCharacter&, const RestrictedCharacter&) = default;

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + to_string(coords[i]);
    return s + ")";
  }
};

/// The tau-orbits of a lattice involution e_j -> -e_{tau(j)}.
inline std::vector<std::vector<int>> split_orbits(const SignedPermutation& theta) {
  IndexBlocks blocks(theta.rank());
  for (int j = 0; j < theta.rank(); ++j) {
    if (theta.sign(j) != -1) throw Error(ErrorCode::UnsupportedForm, "restriction needs e_j -> -e_tau(j)");
    blocks.join(j, theta.target(j));
  }
  return blocks.classes();
}

inline RestrictedCharacter restrict(const CharacterVector& chi, const SignedPermutation& theta) {
  if (chi.rank() != static_cast<std::size_t>(theta.rank())) throw Error(ErrorCode::RankMismatch, "restrict");
  const auto orbits = split_orbits(theta);
  RestrictedCharacter out{std::vector<Rational>(orbits.size())};
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int j : orbits[o]) out.coords[o] += chi[static_cast<std::size_t>(j)];
  return out;
}

/// r for theta_{eps_{2n}}: coordinate i is chi_i + chi_{2n+1-i}.
inline RestrictedCharacter restrict(const CharacterVector& chi) {
  if (chi.rank() == 0 || chi.rank() % 2 != 0) throw Error(ErrorCode::OddRank, "restriction needs even ambient rank");
  const std::size_t m = chi.rank(), n = m / 2;
  RestrictedCharacter out{std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) out.coords[i] = chi[i] + chi[m - 1 - i];
  return out;
}

struct RestrictedRootSystem {
  std::vector<RestrictedCharacter> roots;
  std::vector<RestrictedCharacter> base;
  std::string type;  // "A<l>" or "unclassified"
};

/// "A<l>" iff every restricted root is eps-bar_i - eps-bar_j, there are l(l+1)
/// of them, and the Dynkin diagram of the base is a simply laced path on l
/// nodes. Anything else is "unclassified".
inline std::string detect_cartan_type(const std::vector<RestrictedCharacter>& roots,
                                      const std::vector<RestrictedCharacter>& base) {
  const std::size_t l = base.size();
  if (l == 0 || roots.size() != l * (l + 1)) return "unclassified";
  for (const auto& r : roots) {
    int plus = 0, minus = 0;
    for (const auto& c : r.coords) {
      if (c == 1) ++plus;
      else if (c == -1) ++minus;
      else if (c != 0) return "unclassified";
    }
    if (plus != 1 || minus != 1) return "unclassified";
  }
  auto dot = [](const RestrictedCharacter& a, const RestrictedCharacter& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
  };
  std::vector<int> degree(l, 0);
  std::size_t edges = 0;
  IndexBlocks comp(static_cast<int>(l));
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = a + 1; b < l; ++b) {
      const Rational aab = 2 * dot(base[a], base[b]) / dot(base[b], base[b]);
      const Rational aba = 2 * dot(base[a], base[b]) / dot(base[a], base[a]);
      const Rational prod = aab * aba;
      if (prod == 0) continue;
      if (prod != 1) return "unclassified";
      ++degree[a];
      ++degree[b];
      ++edges;
      comp.join(static_cast<int>(a), static_cast<int>(b));
    }
  if (edges + 1 != l || comp.classes().size() != 1) return "unclassified";
  if (std::any_of(degree.begin(), degree.end(), [](int d) { return d > 2; })) return "unclassified";
  return "A" + std::to_string(l);
}

inline RestrictedRootSystem restricted_root_system(const SimpleSystem& base, const SignedPermutation& theta) {
  std::set<RestrictedCharacter> image;
  for (const auto& a : all_roots(base.rank())) {
    auto r = restrict(a.character(static_cast<std::size_t>(base.rank())), theta);
    if (!r.is_zero()) image.insert(std::move(r));
  }
  RestrictedRootSystem out;
  out.roots.assign(image.begin(), image.end());
  const RootSet fixed = theta_fixed_roots(theta);
  for (const auto& a : base.base())
    if (!fixed.contains(a)) out.base.push_back(restrict(a.character(static_cast<std::size_t>(base.rank())), theta));
  out.type = detect_cartan_type(out.roots, out.base);
  return out;
}

/// Theta = [Theta-bar] = r^{-1}(Theta-bar) u Delta_0^theta, with Theta-bar
/// recorded by the indices i of eps-bar_i - eps-bar_{i+1} (0-based).
struct ThetaSplitSubset {
  int n = 0;
  std::vector<Root> subset;
  std::vector<int> bar_part;

  friend bool operator==(const ThetaSplitSubset&, const ThetaSplitSubset&) = default;
};

inline RestrictedCharacter restricted_simple_root(int n, int i) {
  RestrictedCharacter r{std::vector<Rational>(static_cast<std::size_t>(n))};
  r.coords[static_cast<std::size_t>(i)] = 1;
  r.coords[static_cast<std::size_t>(i + 1)] = -1;
  return r;
}

inline ThetaSplitSubset theta_split_subset(int n, std::vector<int> bar_part) {
  std::sort(bar_part.begin(), bar_part.end());
  bar_part.erase(std::unique(bar_part.begin(), bar_part.end()), bar_part.end());
  for (int i : bar_part)
    if (i < 0 || i + 1 >= n) throw Error(ErrorCode::InvalidSubset, "restricted simple root index out of range");
  const auto theta = standard_theta(n);
  const auto delta0 = theta_base_delta0(n);
  const RootSet fixed = theta_fixed_roots(theta);
  std::set<RestrictedCharacter> bar;
  for (int i : bar_part) bar.insert(restricted_simple_root(n, i));
  ThetaSplitSubset out{n, {}, bar_part};
  for (const auto& a : delta0.base())
    if (fixed.contains(a) || bar.count(restrict(a.character(static_cast<std::size_t>(2 * n))))) out.subset.push_back(a);
  return out;
}

/// All 2^{n-1} theta-split subsets of Delta_0, by increasing bitmask of Theta-bar.
inline std::vector<ThetaSplitSubset> all_theta_split_subsets(int n) {
  std::vector<ThetaSplitSubset> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> bar;
    for (int i = 0; i + 1 < n; ++i)
      if (mask & (1u << i)) bar.push_back(i);
    out.push_back(theta_split_subset(n, std::move(bar)));
  }
  return out;
}

/// Theta_k = [Delta-bar_0 \ {eps-bar_k - eps-bar_{k+1}}], k = 1..n-1.
inline std::vector<ThetaSplitSubset> maximal_theta_split_subsets(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "maximal theta-split subsets need n >= 2");
  std::vector<ThetaSplitSubset> out;
  for (int k = 1; k < n; ++k) {
    std::vector<int> bar;
    for (int i = 0; i + 1 < n; ++i)
      if (i != k - 1) bar.push_back(i);
    out.push_back(theta_split_subset(n, std::move(bar)));
  }
  return out;
}

/// Whether an arbitrary subset of a theta-base is of the form [Theta-bar].
inline bool is_theta_split_subset(const std::vector<Root>& subset, const SimpleSystem& base,
                                  const SignedPermutation& theta) {
  const RootSet fixed = theta_fixed_roots(theta);
  const auto m = static_cast<std::size_t>(base.rank());
  std::set<RestrictedCharacter> bar;
  for (const auto& a : subset) {
    if (!base.contains_simple(a)) throw Error(ErrorCode::InvalidSubset, a.str() + " is not simple");
    if (!fixed.contains(a)) bar.insert(restrict(a.character(m), theta));
  }
  for (const auto& a : base.base()) {
    const bool in = std::find(subset.begin(), subset.end(), a) != subset.end();
    const bool required = fixed.contains(a) || bar.count(restrict(a.character(m), theta));
    if (in != required) return false;
  }
  return true;
}

/// Valuation lattice of S_Theta = (S_0 n ker Theta)^o, its cone cut out by
/// Delta_0 \ Theta, and the central sub-lattice v(S_G).
inline DominantCone dominant_cone(const std::vector<Root>& theta_subset, const SimpleSystem& base,
                                  const SignedPermutation& theta) {
  const int m = base.rank();
  IndexBlocks blocks(m), whole(m);
  for (int j = 0; j < m; ++j) {
    blocks.join(j, theta.target(j));
    whole.join(j, theta.target(j));
  }
  for (const auto& a : theta_subset) {
    if (!base.contains_simple(a)) throw Error(ErrorCode::InvalidSubset, a.str() + " is not simple");
    blocks.join(a.i, a.j);
  }
  for (const auto& a : base.base()) whole.join(a.i, a.j);
  std::vector<Root> ineq;
  for (const auto& a : base.base())
    if (std::find(theta_subset.begin(), theta_subset.end(), a) == theta_subset.end()) ineq.push_back(a);
  std::vector<std::vector<Rational>> central;
  for (const auto& c : whole.classes()) central.push_back(block_indicator(m, c));
  return make_dominant_cone(BlockLattice{m, blocks.classes()}, std::move(ineq), std::move(central));
}

inline DominantCone dominant_cone(const ThetaSplitSubset& t) {
  return dominant_cone(t.subset, theta_base_delta0(t.n), standard_theta(t.n));
}

}  // namespace speh
