#include <gtest/gtest.h>

#include <set>

#include "speh/weyl_cosets.hpp"

using namespace speh;

namespace {

/// Block permutation diag(I_j, [[0, I_{n-j}], [I_{n-j}, 0]], I_j) of S_2n.
WeylElement nice_permutation(int n, int j) {
  std::vector<int> im(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) {
    if (i < j || i >= 2 * n - j) im[static_cast<std::size_t>(i)] = i;
    else if (i < n) im[static_cast<std::size_t>(i)] = i + (n - j);
    else im[static_cast<std::size_t>(i)] = i - (n - j);
  }
  return WeylElement(im);
}

std::size_t table_count(const Composition& rows, const Composition& cols) {
  // Independent count by brute force over bounded integer matrices.
  const std::size_t r = rows.size(), c = cols.size();
  std::vector<int> cells(r * c, 0);
  const int cap = *std::max_element(rows.begin(), rows.end());
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < c; ++j) s += cells[i * c + j];
      ok = s == rows[i];
    }
    for (std::size_t j = 0; j < c && ok; ++j) {
      int s = 0;
      for (std::size_t i = 0; i < r; ++i) s += cells[i * c + j];
      ok = s == cols[j];
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < cells.size() && cells[k] == cap) cells[k++] = 0;
    if (k == cells.size()) break;
    ++cells[k];
  }
  return count;
}

}  // namespace

TEST(Compositions, OfStandardSubsets) {
  EXPECT_EQ(composition_of(6, xi(6, 2)), (Composition{2, 4}));
  EXPECT_EQ(composition_of(6, {}), (Composition{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(composition_of(6, standard_base(6).base()), (Composition{6}));
  EXPECT_THROW(composition_of(4, {Root{0, 2}}), Error);
}

TEST(Tables, CountsMatchBruteForce) {
  const std::vector<std::pair<Composition, Composition>> cases{
      {{2, 2}, {2, 2}}, {{2, 4}, {3, 3}}, {{4, 4}, {4, 4}}, {{1, 2, 3}, {3, 3}}, {{2, 2, 2}, {1, 2, 3}}};
  for (const auto& [r, c] : cases) EXPECT_EQ(contingency_tables(r, c).size(), table_count(r, c));
}

TEST(Tables, PermutationRoundTrip) {
  const Composition rows{2, 4}, cols{3, 3};
  for (const auto& t : contingency_tables(rows, cols)) {
    const auto w = table_permutation(t, rows, cols);
    EXPECT_EQ(table_of(w, rows, cols), t);
    EXPECT_TRUE(is_double_coset_rep(w, xi(6, 2), xi(6, 3), standard_base(6)));
  }
}

TEST(DoubleCosets, EllipticSelfCosetsAreNicePermutations) {
  for (int n = 2; n <= 5; ++n) {
    const auto omega = elliptic_subset(n);
    const auto reps = double_coset_reps(n, omega, omega);
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(n + 1));
    std::set<WeylElement> got, expected;
    const auto wp = w_plus(n);
    for (const auto& r : reps) got.insert(r.w);
    for (int j = 0; j <= n; ++j) expected.insert(wp * nice_permutation(n, j) * wp.inverse());
    EXPECT_EQ(got, expected);

    std::vector<WeylElement> normalizing;
    for (const auto& r : reps)
      if (normalizes(r.w_prime, xi(2 * n, n))) normalizing.push_back(r.w_prime);
    ASSERT_EQ(normalizing.size(), 2u);
    std::set<WeylElement> norm(normalizing.begin(), normalizing.end());
    EXPECT_EQ(norm, (std::set<WeylElement>{WeylElement::identity(2 * n), nice_permutation(n, 0)}));
  }
}

TEST(DoubleCosets, WholeBaseGivesIdentity) {
  for (int n = 2; n <= 4; ++n) {
    const auto d = theta_base_delta0(n).base();
    const auto reps = double_coset_reps(n, d, d);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_TRUE(reps[0].w.is_identity());
    EXPECT_EQ(reps[0].tag, CaseTag::Case1);
  }
}

TEST(DoubleCosets, N2ThetaOneHasThree) {
  const auto p = coset_problem(2, maximal_theta_split_subsets(2)[0].subset, elliptic_subset(2));
  EXPECT_EQ(double_coset_reps(p).size(), 3u);
  const auto bf = brute_force_double_cosets(p, 8);
  EXPECT_EQ(bf.orbit_count, 3u);
}

TEST(DoubleCosets, BruteForceOracle) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::vector<Root>> thetas;
    for (const auto& t : maximal_theta_split_subsets(n)) thetas.push_back(t.subset);
    thetas.push_back(theta_split_subset(n, {}).subset);
    for (const auto& theta : thetas) {
      const auto p = coset_problem(n, theta, elliptic_subset(n));
      const auto reps = double_coset_reps(p);
      const auto bf = brute_force_double_cosets(p, 8);
      ASSERT_EQ(bf.orbit_count, reps.size());
      std::set<WeylElement> from_tables, from_orbits;
      for (const auto& r : reps) from_tables.insert(r.w);
      EXPECT_EQ(from_tables.size(), reps.size());
      for (const auto& orbit : bf.minimal_length) {
        ASSERT_EQ(orbit.size(), 1u);
        from_orbits.insert(orbit.front());
      }
      EXPECT_EQ(from_tables, from_orbits);
    }
  }
}

TEST(DoubleCosets, PrintedConditionIsNotASystemOfRepresentatives) {
  // w^{-1} Theta in Phi^- picks the wrong end of the coset: some orbit gets
  // no element (or several) whenever Theta is nonempty.
  for (int n = 2; n <= 3; ++n) {
    const auto p = coset_problem(n, maximal_theta_split_subsets(n)[0].subset, elliptic_subset(n));
    const auto bf = brute_force_double_cosets(p, 8);
    bool exactly_one_each = true;
    for (const auto& orbit : bf.as_printed) exactly_one_each = exactly_one_each && orbit.size() == 1;
    EXPECT_FALSE(exactly_one_each);
  }
}

TEST(DoubleCosets, BruteForceCap) {
  const auto p = coset_problem(5, elliptic_subset(5), elliptic_subset(5));
  EXPECT_THROW(brute_force_double_cosets(p, 8), Error);
}

TEST(CaseSplit, Case1IffNEvenAndMiddle) {
  for (int n = 2; n <= 6; ++n) {
    const auto omega = elliptic_subset(n);
    for (int k = 1; k < n; ++k) {
      const auto reps = double_coset_reps(n, maximal_theta_split_subsets(n)[static_cast<std::size_t>(k - 1)].subset, omega);
      std::size_t case1 = 0;
      for (const auto& r : reps) {
        if (r.tag == CaseTag::Case1) {
          ++case1;
          EXPECT_TRUE(r.nil_levi.empty());
          continue;
        }
        EXPECT_FALSE(r.nil_levi.empty());
        EXPECT_FALSE(r.levi_nil.empty());
      }
      EXPECT_EQ(case1, (n % 2 == 0 && 2 * k == n) ? 2u : 0u) << "n=" << n << " k=" << k;
    }
  }
}

TEST(CaseSplit, Case1RepsAreIdentityAndBlockSwap) {
  for (int n = 2; n <= 6; n += 2) {
    const auto reps = double_coset_reps(n, maximal_theta_split_subsets(n)[static_cast<std::size_t>(n / 2 - 1)].subset,
                                        elliptic_subset(n));
    std::set<WeylElement> case1;
    for (const auto& r : reps)
      if (r.tag == CaseTag::Case1) case1.insert(r.w_prime);
    EXPECT_EQ(case1, (std::set<WeylElement>{WeylElement::identity(2 * n), nice_permutation(n, 0)}));
  }
}

TEST(CaseSplit, N2Exhaustive) {
  const auto p = coset_problem(2, maximal_theta_split_subsets(2)[0].subset, elliptic_subset(2));
  const auto phi_theta = p.delta0.subsystem(p.theta);
  for (const auto& r : double_coset_reps(p)) {
    const bool contained = r.w.act(p.delta0.subsystem(p.omega)).subset_of(phi_theta);
    EXPECT_EQ(r.tag == CaseTag::Case2, !contained);
    if (!contained) {
      EXPECT_FALSE(r.nil_levi.empty());
    }
  }
}

TEST(CaseSplit, RejectsNonRepresentative) {
  const auto p = coset_problem(2, elliptic_subset(2), elliptic_subset(2));
  const auto s = WeylElement::reflection(4, p.omega.front());
  try {
    classify_case(s, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRepresentative);
  }
}

TEST(CaseSplit, SourceParabolicsViaRootSets) {
  // M_1 x M_2 = M_(n,n) n w'^{-1} M_(2k,2n-2k) w': its simple roots are
  // Xi_n n w'^{-1} Phi_{Xi_2k}.
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      const auto delta = standard_base(2 * n);
      const auto phi_xi2k = delta.subsystem(xi(2 * n, 2 * k));
      for (const auto& r : double_coset_reps(n, maximal_theta_split_subsets(n)[static_cast<std::size_t>(k - 1)].subset,
                                              elliptic_subset(n))) {
        std::vector<Root> simple;
        for (const auto& a : xi(2 * n, n))
          if (phi_xi2k.contains(r.w_prime.act(a))) simple.push_back(a);
        const auto comp = composition_of(2 * n, simple);
        Composition expected;
        for (const auto& part : source_parabolics(r)) expected.insert(expected.end(), part.begin(), part.end());
        EXPECT_EQ(comp, expected);
        // At least one factor is proper in Case 2.
        const auto parts = source_parabolics(r);
        if (r.tag == CaseTag::Case2) {
          EXPECT_TRUE(parts[0].size() > 1 || parts[1].size() > 1);
        }
      }
    }
}

TEST(Case1Levi, Blockwise) {
  for (int n = 2; n <= 4; n += 2) {
    const auto rep = case1_levi_fixed_points(n);
    EXPECT_TRUE(rep.blockwise);
    EXPECT_TRUE(rep.identity_fixed);
  }
  try {
    case1_levi_fixed_points(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Case1Absent);
  }
}
