#pragma once

// Local A-parameters of GL_2n as summand bookkeeping, the X-distinguished and
// X-elliptic predicates for X = Sp_2n \ GL_2n, and the Speh classification.
//
// A summand (rho, r, k, m, alpha) stands for nu^alpha phi_{Z(rho,k)} (x) S(2m);
// alpha != 0 carries an implicit partner nu^{-alpha} phi_{Z(rho,k)} (x) S(2m).

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "speh/error.hpp"
#include "speh/exponents.hpp"
#include "speh/rational.hpp"

namespace speh {

struct Summand {
  std::string rho_label = "rho";
  int rho_dim = 1;
  int k = 1;
  int m = 1;
  Rational alpha = 0;

  bool twisted() const { return alpha != 0; }
  int dimension() const { return (twisted() ? 4 : 2) * k * rho_dim * m; }

  friend auto operator<=>(const Summand& a, const Summand& b) {
    return std::tie(a.rho_label, a.rho_dim, a.k, a.m, a.alpha) <=> std::tie(b.rho_label, b.rho_dim, b.k, b.m, b.alpha);
  }
  friend bool operator==(const Summand&, const Summand&) = default;
};

struct AParameter {
  int n = 0;
  std::vector<Summand> summands;

  int dimension() const {
    int d = 0;
    for (const auto& s : summands) d += s.dimension();
    return d;
  }

  /// Throws InvalidParameter naming the first violated invariant.
  void validate() const {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be positive");
    if (summands.empty()) throw Error(ErrorCode::InvalidParameter, "no summands");
    for (const auto& s : summands) {
      if (s.rho_dim < 1 || s.k < 1 || s.m < 1)
        throw Error(ErrorCode::InvalidParameter, "rho_dim, k and m must be positive");
      if (s.alpha < 0 || s.alpha >= rat(1, 2))
        throw Error(ErrorCode::InvalidParameter, "alpha must satisfy 0 <= alpha < 1/2, got " + to_string(s.alpha));
    }
    if (dimension() != 2 * n)
      throw Error(ErrorCode::InvalidParameter, "dimension " + std::to_string(dimension()) + " != 2n = " +
                                                   std::to_string(2 * n));
  }

  std::string str() const {
    std::string s;
    for (const auto& x : summands) {
      if (!s.empty()) s += " + ";
      if (x.twisted()) s += "nu^(+-" + to_string(x.alpha) + ")";
      s += "phi_Z(" + x.rho_label + "," + std::to_string(x.k) + ")xS(" + std::to_string(2 * x.m) + ")";
    }
    return s;
  }
};

/// S(a) (x) S(b) as a multiset of dimensions.
inline std::vector<int> clebsch_gordan(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidParameter, "SL(2) dimensions must be positive");
  std::vector<int> out;
  for (int d = std::abs(a - b) + 1; d <= a + b - 1; d += 2) out.push_back(d);
  return out;
}

/// psi = phi_X (x) S(2) with phi_X = sum phi_{Z(rho_i,k_i)} tempered iff every
/// m_i = 1 and there are no twisted pairs. The witness lists phi_X.
struct Distinction {
  bool distinguished = false;
  std::vector<SegmentDatum> witness;
};

inline Distinction is_X_distinguished(const AParameter& psi) {
  psi.validate();
  Distinction d;
  d.distinguished = std::all_of(psi.summands.begin(), psi.summands.end(),
                                [](const Summand& s) { return s.m == 1 && !s.twisted(); });
  if (d.distinguished)
    for (const auto& s : psi.summands) d.witness.push_back(SegmentDatum{s.rho_label, s.rho_dim, s.k, 0});
  return d;
}

inline bool is_X_elliptic(const AParameter& psi) {
  if (!is_X_distinguished(psi).distinguished)
    throw Error(ErrorCode::PreconditionViolation, "X-ellipticity needs an X-distinguished parameter");
  return psi.summands.size() == 1;
}

/// One irreducible piece nu^alpha phi_{Z(rho,k)} (x) S(d) of L_F x SL(2).
struct Piece {
  std::string rho_label;
  int rho_dim = 1;
  int k = 1;
  int d = 1;
  Rational alpha = 0;

  int dimension() const { return rho_dim * k * d; }
  friend auto operator<=>(const Piece& a, const Piece& b) {
    return std::tie(a.rho_label, a.rho_dim, a.k, a.d, a.alpha) <=> std::tie(b.rho_label, b.rho_dim, b.k, b.d, b.alpha);
  }
  friend bool operator==(const Piece&, const Piece&) = default;
};

inline std::map<Piece, int> pieces(const AParameter& psi) {
  std::map<Piece, int> out;
  for (const auto& s : psi.summands) {
    ++out[Piece{s.rho_label, s.rho_dim, s.k, 2 * s.m, s.alpha}];
    if (s.twisted()) ++out[Piece{s.rho_label, s.rho_dim, s.k, 2 * s.m, -s.alpha}];
  }
  return out;
}

struct FactorizationSearch {
  /// Candidates phi with phi (x) S(2) = psi, including ones with Arthur content.
  std::size_t matches = 0;
  /// A match with trivial Arthur SL(2) and alpha = 0, i.e. psi = rho o (phi_X (x) id).
  bool factors = false;
};

/// Exhaustive search over multisets phi of pieces of total dimension n drawn
/// from the (rho, k, alpha) occurring in psi, 1 <= d <= max Arthur dim + 1.
inline FactorizationSearch factorization_search(const AParameter& psi, int max_dim = 12) {
  psi.validate();
  if (2 * psi.n > max_dim)
    throw Error(ErrorCode::OracleTooLarge, "dimension " + std::to_string(2 * psi.n) + " exceeds " + std::to_string(max_dim));
  const auto target = pieces(psi);
  int max_d = 0;
  for (const auto& [p, c] : target) max_d = std::max(max_d, p.d);
  std::vector<Piece> universe;
  for (const auto& [p, c] : target)
    for (int d = 1; d <= max_d + 1; ++d) {
      Piece q = p;
      q.d = d;
      if (std::find(universe.begin(), universe.end(), q) == universe.end()) universe.push_back(q);
    }

  FactorizationSearch out;
  std::vector<int> count(universe.size(), 0);
  auto check = [&] {
    std::map<Piece, int> img;
    bool l_parameter = true;
    for (std::size_t u = 0; u < universe.size(); ++u) {
      if (count[u] == 0) continue;
      l_parameter = l_parameter && universe[u].d == 1 && universe[u].alpha == 0;
      for (int e : clebsch_gordan(universe[u].d, 2)) {
        Piece q = universe[u];
        q.d = e;
        img[q] += count[u];
      }
    }
    if (img == target) {
      ++out.matches;
      out.factors = out.factors || l_parameter;
    }
  };
  auto rec = [&](auto&& self, std::size_t u, int left) -> void {
    if (left == 0) {
      check();
      return;
    }
    if (u == universe.size()) return;
    const int dim = universe[u].dimension();
    for (int c = 0; c * dim <= left; ++c) {
      count[u] = c;
      self(self, u + 1, left - c * dim);
    }
    count[u] = 0;
  };
  rec(rec, 0, psi.n);
  return out;
}

inline bool factorization_oracle(const AParameter& psi) { return factorization_search(psi).factors; }

struct Speh {
  SegmentDatum delta;
};

struct NotSpeh {
  /// Failed predicates among "P1" (X-distinguished) and "P2" (X-elliptic).
  std::vector<std::string> reasons;
};

using SpehClassification = std::variant<Speh, NotSpeh>;

inline SpehClassification classify_speh(const AParameter& psi) {
  const auto dist = is_X_distinguished(psi);
  NotSpeh no;
  if (!dist.distinguished) no.reasons.push_back("P1");
  if (psi.summands.size() != 1) no.reasons.push_back("P2");
  if (!no.reasons.empty()) return no;
  return Speh{dist.witness.front()};
}

inline std::string to_string(const SpehClassification& c) {
  if (const auto* s = std::get_if<Speh>(&c)) return "Speh(" + s->delta.str() + ")";
  std::string r;
  for (const auto& x : std::get<NotSpeh>(c).reasons) r += (r.empty() ? "" : ",") + x;
  return "NotSpeh(" + r + ")";
}

/// psi_{U(delta,2)} = phi_delta (x) S(2).
inline AParameter speh_parameter(const SegmentDatum& delta) {
  return AParameter{delta.dimension(), {Summand{delta.rho_label, delta.rho_dim, delta.length, 1, 0}}};
}

/// Every A-parameter with 2n <= max_dim built from the given (label, rho_dim)
/// types, k, m >= 1 and alpha in `alphas`, one per summand multiset.
inline std::vector<AParameter> enumerate_aparameters(int max_dim, const std::vector<std::pair<std::string, int>>& rhos,
                                                     const std::vector<Rational>& alphas) {
  std::vector<Summand> kinds;
  for (const auto& [label, r] : rhos)
    for (const auto& a : alphas)
      for (int k = 1; k * r * 2 <= max_dim; ++k)
        for (int m = 1; 2 * k * r * m <= max_dim; ++m) {
          Summand s{label, r, k, m, a};
          if (s.dimension() <= max_dim) kinds.push_back(s);
        }
  std::sort(kinds.begin(), kinds.end());
  std::vector<AParameter> out;
  std::vector<Summand> cur;
  auto rec = [&](auto&& self, std::size_t from, int dim) -> void {
    if (!cur.empty()) out.push_back(AParameter{dim / 2, cur});
    for (std::size_t i = from; i < kinds.size(); ++i) {
      if (dim + kinds[i].dimension() > max_dim) continue;
      cur.push_back(kinds[i]);
      self(self, i, dim + kinds[i].dimension());
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace speh
