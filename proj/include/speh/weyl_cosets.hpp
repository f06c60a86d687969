#pragma once

// Double cosets W_Theta \ W_0 / W_Omega for Theta, Omega inside Delta_0 = w_+ Delta.
//
// Conjugating by w_+ turns Theta, Omega into Delta-standard subsets, i.e.
// ordered compositions of 2n into blocks of consecutive indices. Minimal
// length representatives w' of W_Theta' \ S_2n / W_Omega' then correspond to
// contingency tables C[t][s] = #{i in source block s : w'(i) in target block t}
// with row sums the Theta' blocks and column sums the Omega' blocks, and
// w = w_+ w' w_+^{-1}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "speh/cone.hpp"
#include "speh/error.hpp"
#include "speh/involution.hpp"
#include "speh/root_data.hpp"
#include "speh/theta_structure.hpp"

namespace speh {

using Composition = std::vector<int>;
using Table = std::vector<std::vector<int>>;

/// Blocks of consecutive indices cut out by a subset of the standard base.
inline Composition composition_of(int m, const std::vector<Root>& subset) {
  std::vector<bool> joined(static_cast<std::size_t>(m), false);
  for (const auto& a : subset) {
    if (a.j != a.i + 1) throw Error(ErrorCode::InvalidSubset, a.str() + " is not in the standard base");
    joined[static_cast<std::size_t>(a.i)] = true;
  }
  Composition c;
  int len = 1;
  for (int i = 0; i + 1 < m; ++i) {
    if (joined[static_cast<std::size_t>(i)]) ++len;
    else {
      c.push_back(len);
      len = 1;
    }
  }
  c.push_back(len);
  return c;
}

/// Xi_j = Delta \ {e_j - e_{j+1}} (1-based j) in GL_m.
inline std::vector<Root> xi(int m, int j) {
  std::vector<Root> out;
  for (int i = 0; i + 1 < m; ++i)
    if (i != j - 1) out.push_back({i, i + 1});
  return out;
}

inline std::vector<int> block_starts(const Composition& c) {
  std::vector<int> s(c.size() + 1, 0);
  for (std::size_t b = 0; b < c.size(); ++b) s[b + 1] = s[b] + c[b];
  return s;
}

/// All tables with the given row and column sums, in lexicographic order of
/// their row-major entries.
inline std::vector<Table> contingency_tables(const Composition& rows, const Composition& cols) {
  std::vector<Table> out;
  Table cur(rows.size(), std::vector<int>(cols.size(), 0));
  Composition row_left = rows, col_left = cols;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == rows.size()) {
      if (std::all_of(col_left.begin(), col_left.end(), [](int x) { return x == 0; })) out.push_back(cur);
      return;
    }
    if (c + 1 == cols.size()) {
      const int v = row_left[r];
      if (v > col_left[c]) return;
      cur[r][c] = v;
      col_left[c] -= v;
      row_left[r] = 0;
      rec(r + 1, 0);
      row_left[r] = v;
      col_left[c] += v;
      cur[r][c] = 0;
      return;
    }
    for (int v = 0; v <= std::min(row_left[r], col_left[c]); ++v) {
      cur[r][c] = v;
      row_left[r] -= v;
      col_left[c] -= v;
      rec(r, c + 1);
      row_left[r] += v;
      col_left[c] += v;
    }
    cur[r][c] = 0;
  };
  rec(0, 0);
  return out;
}

/// The minimal length permutation attached to a table: source block s, in
/// increasing order, fills its share of target block 1, then block 2, and
/// so on; within target block t the sources arrive in increasing order.
inline WeylElement table_permutation(const Table& c, const Composition& rows, const Composition& cols) {
  const auto rs = block_starts(rows), cs = block_starts(cols);
  std::vector<int> image(static_cast<std::size_t>(rs.back()));
  for (std::size_t s = 0; s < cols.size(); ++s) {
    int src = cs[s];
    for (std::size_t t = 0; t < rows.size(); ++t) {
      int offset = 0;
      for (std::size_t s2 = 0; s2 < s; ++s2) offset += c[t][s2];
      for (int e = 0; e < c[t][s]; ++e) image[static_cast<std::size_t>(src++)] = rs[t] + offset + e;
    }
  }
  return WeylElement(std::move(image));
}

inline Table table_of(const WeylElement& w, const Composition& rows, const Composition& cols) {
  const auto rs = block_starts(rows), cs = block_starts(cols);
  auto block = [](const std::vector<int>& starts, int i) {
    return static_cast<std::size_t>(std::upper_bound(starts.begin(), starts.end(), i) - starts.begin() - 1);
  };
  Table c(rows.size(), std::vector<int>(cols.size(), 0));
  for (int i = 0; i < w.rank(); ++i) ++c[block(rs, w(i))][block(cs, i)];
  return c;
}

enum class RepresentativeCondition {
  /// w Omega in Phi+, w^{-1} Theta in Phi+ (minimal length).
  MinimalLength,
  /// w Omega in Phi+, w^{-1} Theta in Phi- (as printed).
  AsPrinted,
};

inline bool is_double_coset_rep(const WeylElement& w, const std::vector<Root>& theta, const std::vector<Root>& omega,
                                const SimpleSystem& base,
                                RepresentativeCondition cond = RepresentativeCondition::MinimalLength) {
  for (const auto& b : omega)
    if (!base.is_positive(w.act(b))) return false;
  const WeylElement wi = w.inverse();
  for (const auto& a : theta) {
    const bool pos = base.is_positive(wi.act(a));
    if (cond == RepresentativeCondition::MinimalLength ? !pos : pos) return false;
  }
  return true;
}

enum class CaseTag { Case1, Case2 };

inline std::string to_string(CaseTag t) { return t == CaseTag::Case1 ? "Case1" : "Case2"; }

struct CosetRep {
  WeylElement w;
  /// w' = w_+^{-1} w w_+.
  WeylElement w_prime;
  CaseTag tag = CaseTag::Case2;
  /// Phi_Theta n w Phi_Omega: roots of M_Theta n wM_Omega.
  RootSet levi_levi;
  /// (Phi+ \ Phi_Theta) n w Phi_Omega: roots of N_Theta n wM_Omega.
  RootSet nil_levi;
  /// Phi_Theta n w (Phi+ \ Phi_Omega): roots of M_Theta n wN_Omega.
  RootSet levi_nil;
  /// Rows: Theta' blocks (targets); columns: Omega' blocks (sources).
  Table table;
  Composition theta_blocks;
  Composition omega_blocks;
};

struct CosetProblem {
  int n = 0;
  SimpleSystem delta0;
  std::vector<Root> theta;
  std::vector<Root> omega;
  Composition theta_blocks;
  Composition omega_blocks;
};

inline CosetProblem coset_problem(int n, std::vector<Root> theta, std::vector<Root> omega) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "n must be positive");
  auto d0 = theta_base_delta0(n);
  const auto wi = w_plus(n).inverse();
  auto conj = [&](const std::vector<Root>& s) {
    std::vector<Root> out;
    for (const auto& a : s) {
      if (!d0.contains_simple(a)) throw Error(ErrorCode::InvalidSubset, a.str() + " is not in Delta_0");
      out.push_back(wi.act(a));
    }
    return out;
  };
  auto tb = composition_of(2 * n, conj(theta));
  auto ob = composition_of(2 * n, conj(omega));
  return CosetProblem{n, std::move(d0), std::move(theta), std::move(omega), std::move(tb), std::move(ob)};
}

/// Omega = w_+ Xi_n, the subset with M_Omega = w_+ M_(n,n) w_+^{-1}.
inline std::vector<Root> elliptic_subset(int n) {
  std::vector<Root> out;
  const auto wp = w_plus(n);
  for (const auto& a : xi(2 * n, n)) out.push_back(wp.act(a));
  return out;
}

inline CosetRep classify_case(const WeylElement& w, const CosetProblem& p) {
  if (!is_double_coset_rep(w, p.theta, p.omega, p.delta0))
    throw Error(ErrorCode::NotRepresentative, w.str() + " is not a minimal double coset representative");
  const RootSet phi_theta = p.delta0.subsystem(p.theta);
  const RootSet phi_omega = p.delta0.subsystem(p.omega);
  const RootSet w_phi_omega = w.act(phi_omega);
  const RootSet nil_theta = difference(p.delta0.positive(), phi_theta);
  const RootSet nil_omega = difference(p.delta0.positive(), phi_omega);
  const auto wp = w_plus(p.n);
  CosetRep rep;
  rep.w = w;
  rep.w_prime = wp.inverse() * w * wp;
  rep.levi_levi = intersect(phi_theta, w_phi_omega);
  rep.nil_levi = intersect(nil_theta, w_phi_omega);
  rep.levi_nil = intersect(phi_theta, w.act(nil_omega));
  rep.tag = w_phi_omega.subset_of(phi_theta) ? CaseTag::Case1 : CaseTag::Case2;
  rep.theta_blocks = p.theta_blocks;
  rep.omega_blocks = p.omega_blocks;
  rep.table = table_of(rep.w_prime, p.theta_blocks, p.omega_blocks);
  return rep;
}

/// Representatives from contingency tables, in table order.
inline std::vector<CosetRep> double_coset_reps(const CosetProblem& p) {
  const auto wp = w_plus(p.n);
  const auto wpi = wp.inverse();
  std::vector<CosetRep> out;
  for (const auto& t : contingency_tables(p.theta_blocks, p.omega_blocks)) {
    const WeylElement w_prime = table_permutation(t, p.theta_blocks, p.omega_blocks);
    out.push_back(classify_case(wp * w_prime * wpi, p));
  }
  return out;
}

inline std::vector<CosetRep> double_coset_reps(int n, const std::vector<Root>& theta, const std::vector<Root>& omega) {
  return double_coset_reps(coset_problem(n, theta, omega));
}

/// Parabolic P_1 x P_2 x ... of M_Omega' = prod GL: source block s is cut by
/// the nonzero entries of column s.
inline std::vector<Composition> source_parabolics(const CosetRep& r) {
  std::vector<Composition> out(r.omega_blocks.size());
  for (std::size_t s = 0; s < r.omega_blocks.size(); ++s)
    for (std::size_t t = 0; t < r.theta_blocks.size(); ++t)
      if (r.table[t][s] > 0) out[s].push_back(r.table[t][s]);
  return out;
}

inline bool normalizes(const WeylElement& w, const std::vector<Root>& subset) {
  const int m = w.rank();
  return w.act(RootSet(m, subset)) == RootSet(m, subset);
}

/// Lehmer-code rank of a permutation of {0..m-1}.
inline std::size_t permutation_rank(const std::vector<int>& p) {
  std::size_t r = 0;
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j)
      if (p[j] < p[i]) ++smaller;
    r = r * (m - i) + smaller;
  }
  return r;
}

struct BruteForceCosets {
  std::size_t orbit_count = 0;
  /// Per orbit, the members satisfying each representative condition.
  std::vector<std::vector<WeylElement>> minimal_length;
  std::vector<std::vector<WeylElement>> as_printed;
};

/// Orbit decomposition of S_2n under W_Theta x W_Omega by breadth-first search.
inline BruteForceCosets brute_force_double_cosets(const CosetProblem& p, int max_rank) {
  const int m = 2 * p.n;
  if (m > max_rank) throw Error(ErrorCode::OracleTooLarge, "S_" + std::to_string(m) + " exceeds the brute-force cap");
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t total = 1;
  for (int i = 2; i <= m; ++i) total *= static_cast<std::size_t>(i);
  std::vector<std::int32_t> orbit(total, -1);
  std::vector<WeylElement> left, right;
  for (const auto& a : p.theta) left.push_back(WeylElement::reflection(m, a));
  for (const auto& b : p.omega) right.push_back(WeylElement::reflection(m, b));
  BruteForceCosets out;
  do {
    if (orbit[permutation_rank(perm)] >= 0) continue;
    const auto id = static_cast<std::int32_t>(out.orbit_count++);
    out.minimal_length.emplace_back();
    out.as_printed.emplace_back();
    std::vector<WeylElement> queue{WeylElement(perm)};
    orbit[permutation_rank(perm)] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const WeylElement w = queue[head];
      if (is_double_coset_rep(w, p.theta, p.omega, p.delta0, RepresentativeCondition::MinimalLength))
        out.minimal_length.back().push_back(w);
      if (is_double_coset_rep(w, p.theta, p.omega, p.delta0, RepresentativeCondition::AsPrinted))
        out.as_printed.back().push_back(w);
      auto visit = [&](const WeylElement& v) {
        auto& slot = orbit[permutation_rank(v.image())];
        if (slot < 0) {
          slot = id;
          queue.push_back(v);
        }
      };
      for (const auto& s : left) visit(s * w);
      for (const auto& s : right) visit(w * s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Case1LeviReport {
  int n = 0;
  int samples = 0;
  bool blockwise = true;
  bool identity_fixed = true;
};

/// theta on M_Omega = w_+ M_(n,n) w_+^{-1} acts as theta_{x_n} x theta_{x_n}
/// after conjugating by w_+, checked on random invertible rational blocks.
inline Case1LeviReport case1_levi_fixed_points(int n, int samples = 25, unsigned seed = 1) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorCode::Case1Absent, "Case 1 needs n even, got " + std::to_string(n));
  const auto eps = standard_symplectic_form(n);
  const auto xn = block_symplectic_form(n / 2);
  const Matrix wp = w_plus(n).matrix(), wpi = wp.inverse();
  const auto un = static_cast<std::size_t>(n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random_block = [&] {
    for (;;) {
      Matrix b(un, un);
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) b(i, j) = d(rng);
      b(0, 0) /= 2;
      if (b.determinant() != 0) return b;
    }
  };
  Case1LeviReport rep{n, samples, true, true};
  for (int t = 0; t < samples; ++t) {
    const Matrix m1 = random_block(), m2 = random_block();
    Matrix m(2 * un, 2 * un), expected(2 * un, 2 * un);
    m.set_block(0, 0, m1);
    m.set_block(un, un, m2);
    expected.set_block(0, 0, apply_involution(xn, m1));
    expected.set_block(un, un, apply_involution(xn, m2));
    const Matrix img = wpi * apply_involution(eps, wp * m * wpi) * wp;
    rep.blockwise = rep.blockwise && img == expected;
  }
  rep.identity_fixed = is_fixed(eps, Matrix::identity(2 * un));
  return rep;
}

}  // namespace speh
