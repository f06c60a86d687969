#pragma once

// Exponents of Zelevinsky segments along standard parabolics, the Geometric
// Lemma pieces of nu^{1/2} delta x nu^{-1/2} delta along theta-split
// parabolics, and Casselman-type checks against dominant cones.
//
// Only real parts are tracked: an exponent is a rational vector chi with
// |chi(diag(a_1..a_m))| = prod |a_i|^{chi_i}. Unitary data contribute 0.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "speh/cone.hpp"
#include "speh/error.hpp"
#include "speh/rational.hpp"
#include "speh/root_data.hpp"
#include "speh/theta_structure.hpp"
#include "speh/weyl_cosets.hpp"

namespace speh {

using ExponentVector = CharacterVector;

/// Z(rho, k) twisted by nu^center, rho a unitary supercuspidal of GL_r.
struct SegmentDatum {
  std::string rho_label = "rho";
  int rho_dim = 1;
  int length = 1;
  Rational center = 0;

  int dimension() const { return rho_dim * length; }

  void validate() const {
    if (rho_dim < 1 || length < 1) throw Error(ErrorCode::InvalidParameter, "rho_dim and length must be positive");
  }

  std::string str() const {
    std::string s = "Z(" + rho_label + "," + std::to_string(length) + ")";
    if (center != 0) s += "nu^" + to_string(center);
    return s;
  }

  friend bool operator==(const SegmentDatum&, const SegmentDatum&) = default;
};

inline SegmentDatum steinberg(int n) { return SegmentDatum{"1", 1, n, 0}; }

/// Subrepresentation: Z(rho,k) embeds in nu^{(k-1)/2} rho x ... x nu^{(1-k)/2} rho,
/// so the exponents decrease along the block order. Quotient is the reverse.
enum class SegmentConvention { Subrepresentation, Quotient };

/// Exponents of the normalized Jacquet module along P_partition. A part not
/// divisible by rho_dim gives the zero module, hence no exponents.
inline std::vector<ExponentVector> segment_jacquet_exponents(const SegmentDatum& d, const Composition& partition,
                                                             SegmentConvention conv = SegmentConvention::Subrepresentation) {
  d.validate();
  if (std::accumulate(partition.begin(), partition.end(), 0) != d.dimension() ||
      std::any_of(partition.begin(), partition.end(), [](int p) { return p <= 0; }))
    throw Error(ErrorCode::InvalidPartition, "partition must be a composition of " + std::to_string(d.dimension()));
  if (std::any_of(partition.begin(), partition.end(), [&](int p) { return p % d.rho_dim != 0; })) return {};
  const int sign = conv == SegmentConvention::Subrepresentation ? 1 : -1;
  ExponentVector chi(static_cast<std::size_t>(d.dimension()));
  int used = 0, pos = 0;
  for (int p : partition) {
    const int kb = p / d.rho_dim;
    const Rational e = Rational(sign) * (rat(d.length - 1, 2) - used - rat(kb - 1, 2)) + d.center;
    for (int i = 0; i < p; ++i) chi[static_cast<std::size_t>(pos++)] = e;
    used += kb;
  }
  return {chi};
}

/// All pairwise concatenations chi (x) chi'.
inline std::vector<ExponentVector> tensor_exponents(const std::vector<ExponentVector>& a,
                                                    const std::vector<ExponentVector>& b) {
  std::vector<ExponentVector> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto c = x.coords();
      c.insert(c.end(), y.coords().begin(), y.coords().end());
      out.emplace_back(std::move(c));
    }
  return out;
}

inline std::vector<ExponentVector> twist(std::vector<ExponentVector> exps, const ExponentVector& shift) {
  for (auto& e : exps) {
    if (e.rank() != shift.rank()) throw Error(ErrorCode::DimensionMismatch, "twist");
    e = e + shift;
  }
  return exps;
}

/// Dominant cone of the standard parabolic P_partition of GL_m modulo A_G.
inline DominantCone standard_dominant_cone(const Composition& partition) {
  const int m = std::accumulate(partition.begin(), partition.end(), 0);
  BlockLattice lattice{m, {}};
  std::vector<Root> ineq;
  int pos = 0;
  for (int p : partition) {
    lattice.blocks.emplace_back();
    for (int i = 0; i < p; ++i) lattice.blocks.back().push_back(pos++);
    if (pos < m) ineq.push_back(Root{pos - 1, pos});
  }
  return make_dominant_cone(std::move(lattice), std::move(ineq),
                            {std::vector<Rational>(static_cast<std::size_t>(m), 1)});
}

struct CasselmanFailure {
  ExponentVector exponent;
  std::vector<Rational> direction;
  Rational pairing;
  bool central = false;  // exponent is non-unitary on the center
};

/// First violation of: chi trivial on the center, and <chi, g> > 0 (that is
/// |chi(g)| < 1) on every non-central generator g.
inline std::optional<CasselmanFailure> casselman_failure(const std::vector<ExponentVector>& exps,
                                                         const DominantCone& cone) {
  for (const auto& chi : exps) {
    if (chi.rank() != static_cast<std::size_t>(cone.lattice.ambient_rank))
      throw Error(ErrorCode::DimensionMismatch, "exponent of rank " + std::to_string(chi.rank()) + " on a rank " +
                                                    std::to_string(cone.lattice.ambient_rank) + " torus");
    for (const auto& z : cone.central)
      if (const Rational p = chi.pair(z); p != 0) return CasselmanFailure{chi, z, p, true};
    for (const auto& g : cone.generators)
      if (const Rational p = chi.pair(g); p <= 0) return CasselmanFailure{chi, g, p, false};
  }
  return std::nullopt;
}

inline bool casselman_check(const std::vector<ExponentVector>& exps, const DominantCone& cone) {
  return !casselman_failure(exps, cone).has_value();
}

struct FiltrationTerm {
  CosetRep rep;
  /// P_1, P_2 in M_(n,n) = GL_n x GL_n (standard coordinates).
  std::vector<Composition> source_parabolics;
  /// A_{Theta n w Omega}, in Delta_0 coordinates.
  BlockLattice lattice;
  std::vector<ExponentVector> exponents;
  /// Restrictions to the (theta,F)-split component S_Theta.
  std::vector<ExponentVector> restricted;
};

/// nu^{1/2} on the first GL_n factor and nu^{-1/2} on the second.
inline ExponentVector half_twist(int n) {
  ExponentVector s(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) s[static_cast<std::size_t>(i)] = i < n ? rat(1, 2) : rat(-1, 2);
  return s;
}

inline std::vector<FiltrationTerm> geometric_lemma_terms(const SegmentDatum& d, const CosetProblem& p) {
  const int n = p.n, m = 2 * n;
  if (d.dimension() != n) throw Error(ErrorCode::InvalidParameter, d.str() + " is not a representation of GL_" + std::to_string(n));
  if (p.omega_blocks != Composition{n, n}) throw Error(ErrorCode::InvalidSubset, "Omega must be the elliptic subset");
  const auto wp = w_plus(n);
  const auto s_theta = dominant_cone(p.theta, p.delta0, standard_theta(n)).lattice;
  std::vector<FiltrationTerm> out;
  for (auto& rep : double_coset_reps(p)) {
    FiltrationTerm t;
    t.source_parabolics = source_parabolics(rep);
    IndexBlocks blocks(m);
    for (const auto& a : rep.levi_levi.roots()) blocks.join(a.i, a.j);
    t.lattice = BlockLattice{m, blocks.classes()};
    const auto chis = twist(tensor_exponents(segment_jacquet_exponents(d, t.source_parabolics[0]),
                                             segment_jacquet_exponents(d, t.source_parabolics[1])),
                            half_twist(n));
    for (const auto& chi : chis) {
      auto e = wp.act(rep.w_prime.act(chi));
      if (!t.lattice.contains(e.coords())) throw Error(ErrorCode::Internal, "exponent is not a character of A_{Theta n w Omega}");
      t.restricted.push_back(s_theta.restrict(e));
      t.exponents.push_back(std::move(e));
    }
    t.rep = std::move(rep);
    out.push_back(std::move(t));
  }
  return out;
}

/// c_beta with nu^{1/2} (x) nu^{-1/2} = prod_beta |beta|^{c_beta / 2} over the standard base of GL_2n.
inline std::vector<Rational> unramified_coefficients(int n) {
  const auto c = standard_base(2 * n).coefficients(Rational(2) * half_twist(n));
  if (!c) throw Error(ErrorCode::Internal, "half twist is not in the root lattice");
  return *c;
}

enum class CheckStatus { Pass, Fail, AssumedOutOfScope };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::AssumedOutOfScope: return "assumed-out-of-scope";
  }
  return "fail";
}

struct CasselmanEntry {
  int k = 0;
  FiltrationTerm term;
  CheckStatus status = CheckStatus::Fail;
  std::optional<CasselmanFailure> failure;
  /// w'^{-1} a w' for the non-central generator a of S_Theta, standard coordinates.
  std::vector<Rational> conjugated_generator;
  /// Exponent of |nu^{1/2} (x) nu^{-1/2}(w'^{-1} a w')| = q^{-pairing}.
  Rational unramified_pairing;
  /// A simple root outside (w'^{-1} Xi_2k) n Xi_n on which w'^{-1} a w' is not dominant.
  std::optional<Root> telescoping_gap;
};

struct RelativeCasselmanReport {
  int n = 0;
  SegmentDatum delta;
  std::vector<Rational> c_coefficients;
  std::vector<CasselmanEntry> entries;

  bool case2_strict() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.status != CheckStatus::Fail; });
  }
  bool unramified_bounded() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) {
      return e.status == CheckStatus::AssumedOutOfScope || e.unramified_pairing >= 0;
    });
  }
  bool pass() const { return case2_strict(); }
};

/// Runs the Case 2 checks over every maximal theta-split Theta_k. Case 1 pieces
/// are excluded by the non-distinction input and only reported.
inline RelativeCasselmanReport relative_casselman_verdict(const SegmentDatum& d, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "n must be at least 2");
  RelativeCasselmanReport report;
  report.n = n;
  report.delta = d;
  report.c_coefficients = unramified_coefficients(n);
  const auto wpi = w_plus(n).inverse();
  const auto sigma = half_twist(n);
  const auto delta = standard_base(2 * n);
  const auto& simple = delta.base();
  for (const auto& t : maximal_theta_split_subsets(n)) {
    const auto problem = coset_problem(n, t.subset, elliptic_subset(n));
    const auto cone = dominant_cone(t);
    const int k = problem.theta_blocks.front() / 2;
    const RootSet phi_xi2k = delta.subsystem(xi(2 * n, 2 * k));
    for (auto& term : geometric_lemma_terms(d, problem)) {
      CasselmanEntry e;
      e.k = k;
      if (term.rep.tag == CaseTag::Case1) {
        e.status = CheckStatus::AssumedOutOfScope;
      } else {
        e.failure = casselman_failure(term.restricted, cone);
        e.status = e.failure ? CheckStatus::Fail : CheckStatus::Pass;
        const auto& wpr = term.rep.w_prime;
        e.conjugated_generator = wpr.inverse().act(wpi.act(cone.generators.front()));
        e.unramified_pairing = sigma.pair(e.conjugated_generator);
        const std::vector<Root> xin = xi(2 * n, n);
        for (const auto& b : simple) {
          const bool inside = std::find(xin.begin(), xin.end(), b) != xin.end() && phi_xi2k.contains(wpr.act(b));
          if (!inside && b.pair(e.conjugated_generator) < 0) {
            e.telescoping_gap = b;
            break;
          }
        }
      }
      e.term = std::move(term);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace speh
