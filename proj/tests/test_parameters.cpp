#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "speh/json_io.hpp"
#include "speh/parameters.hpp"

using namespace speh;

namespace {

/// Character of S(d) on diag(q, 1/q) as exponent -> multiplicity.
std::map<int, int> character(int d) {
  std::map<int, int> c;
  for (int i = 0; i < d; ++i) ++c[d - 1 - 2 * i];
  return c;
}

std::map<int, int> product(const std::map<int, int>& a, const std::map<int, int>& b) {
  std::map<int, int> c;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) c[x + y] += m * n;
  return c;
}

const std::vector<std::pair<std::string, int>> kRhos{{"rho", 1}, {"sigma", 1}, {"tau", 2}, {"pi", 3}};

}  // namespace

TEST(ClebschGordan, Examples) {
  EXPECT_EQ(clebsch_gordan(2, 2), (std::vector<int>{1, 3}));
  EXPECT_EQ(clebsch_gordan(1, 5), (std::vector<int>{5}));
  EXPECT_EQ(clebsch_gordan(3, 2), (std::vector<int>{2, 4}));
  EXPECT_THROW(clebsch_gordan(0, 2), Error);
}

TEST(ClebschGordan, CharacterIdentity) {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      std::map<int, int> sum;
      for (int d : clebsch_gordan(a, b))
        for (const auto& [e, m] : character(d)) sum[e] += m;
      EXPECT_EQ(sum, product(character(a), character(b))) << a << "x" << b;
    }
}

TEST(AParameter, Validation) {
  EXPECT_NO_THROW((AParameter{2, {Summand{"rho", 1, 2, 1, 0}}}.validate()));
  try {
    AParameter{3, {Summand{"rho", 1, 2, 1, 0}}}.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
    EXPECT_NE(std::string(e.what()).find("2n"), std::string::npos);
  }
  EXPECT_THROW((AParameter{4, {Summand{"rho", 1, 2, 1, rat(1, 2)}}}.validate()), Error);
  EXPECT_THROW((AParameter{4, {Summand{"rho", 1, 2, 1, rat(-1, 4)}}}.validate()), Error);
  // A twisted pair counts twice.
  EXPECT_EQ((Summand{"rho", 1, 2, 1, rat(1, 4)}.dimension()), 8);
}

TEST(Distinction, Examples) {
  const AParameter st{3, {Summand{"rho", 1, 3, 1, 0}}};
  const auto d = is_X_distinguished(st);
  EXPECT_TRUE(d.distinguished);
  ASSERT_EQ(d.witness.size(), 1u);
  EXPECT_EQ(d.witness[0], (SegmentDatum{"rho", 1, 3, 0}));
  EXPECT_FALSE(is_X_distinguished(AParameter{2, {Summand{"rho", 1, 1, 2, 0}}}).distinguished);
  EXPECT_FALSE(is_X_distinguished(AParameter{2, {Summand{"rho", 1, 1, 1, rat(1, 4)}}}).distinguished);
}

TEST(Ellipticity, Examples) {
  EXPECT_TRUE(is_X_elliptic(AParameter{1, {Summand{"rho", 1, 1, 1, 0}}}));
  EXPECT_TRUE(is_X_elliptic(AParameter{4, {Summand{"tau", 2, 2, 1, 0}}}));
  EXPECT_FALSE(is_X_elliptic(AParameter{2, {Summand{"rho", 1, 1, 1, 0}, Summand{"sigma", 1, 1, 1, 0}}}));
  try {
    is_X_elliptic(AParameter{2, {Summand{"rho", 1, 1, 2, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolation);
  }
}

TEST(Factorization, ForwardFromRandomPhi) {
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    AParameter psi;
    int left = 1 + static_cast<int>(rng() % 6);
    psi.n = left;
    while (left > 0) {
      const auto& [label, r] = kRhos[rng() % kRhos.size()];
      if (r > left) continue;
      const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(left / r));
      psi.summands.push_back(Summand{label, r, k, 1, 0});
      left -= r * k;
    }
    EXPECT_TRUE(factorization_oracle(psi)) << psi.str();
  }
}

TEST(Factorization, ArthurContentDoesNotFactor) {
  EXPECT_FALSE(factorization_oracle(AParameter{2, {Summand{"rho", 1, 1, 2, 0}}}));
  // S(4) + S(2) is S(3) (x) S(2): a Clebsch-Gordan match, but not through rho.
  const AParameter psi{3, {Summand{"rho", 1, 1, 2, 0}, Summand{"rho", 1, 1, 1, 0}}};
  const auto s = factorization_search(psi);
  EXPECT_GE(s.matches, 1u);
  EXPECT_FALSE(s.factors);
  EXPECT_THROW(factorization_search(AParameter{7, {Summand{"rho", 1, 7, 1, 0}}}), Error);
}

TEST(Factorization, AgreesWithDistinctionExhaustively) {
  const auto all = enumerate_aparameters(12, kRhos, {0, rat(1, 4)});
  std::set<std::vector<Summand>> distinct;
  for (const auto& psi : all) {
    EXPECT_LE(psi.dimension(), 12);
    EXPECT_NO_THROW(psi.validate());
    distinct.insert(psi.summands);
  }
  EXPECT_EQ(distinct.size(), all.size());
  for (const auto& psi : all) EXPECT_EQ(factorization_oracle(psi), is_X_distinguished(psi).distinguished) << psi.str();
}

TEST(Classification, Examples) {
  EXPECT_EQ(to_string(classify_speh(speh_parameter(SegmentDatum{"rho", 1, 3, 0}))), "Speh(Z(rho,3))");
  EXPECT_EQ(to_string(classify_speh(AParameter{2, {Summand{"rho", 1, 1, 1, 0}, Summand{"sigma", 1, 1, 1, 0}}})),
            "NotSpeh(P2)");
  EXPECT_EQ(to_string(classify_speh(AParameter{3, {Summand{"rho", 1, 1, 3, 0}}})), "NotSpeh(P1)");
  EXPECT_EQ(to_string(classify_speh(AParameter{2, {Summand{"rho", 1, 1, 1, rat(1, 4)}}})), "NotSpeh(P1)");
}

TEST(Classification, SpehExactlyOnSingleTemperedSummand) {
  for (const auto& psi : enumerate_aparameters(12, kRhos, {0, rat(1, 4)})) {
    const bool expected = psi.summands.size() == 1 && psi.summands[0].m == 1 && !psi.summands[0].twisted();
    EXPECT_EQ(std::holds_alternative<Speh>(classify_speh(psi)), expected) << psi.str();
  }
}

TEST(Classification, ForwardBackward) {
  for (const auto& [label, r] : kRhos)
    for (int k = 1; r * k <= 6; ++k) {
      const SegmentDatum d{label, r, k, 0};
      const auto c = classify_speh(speh_parameter(d));
      ASSERT_TRUE(std::holds_alternative<Speh>(c));
      EXPECT_EQ(std::get<Speh>(c).delta, d);
    }
}

TEST(Json, RoundTrip) {
  for (const auto& psi : enumerate_aparameters(8, kRhos, {0, rat(1, 3)})) {
    const auto back = aparameter_from_json(to_json(psi).dump());
    EXPECT_EQ(back.n, psi.n);
    EXPECT_EQ(back.summands, psi.summands);
  }
}

TEST(Json, Errors) {
  try {
    aparameter_from_json(std::string("{\"n\": 2, \"summands\": [}"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  EXPECT_THROW(aparameter_from_json(std::string("{\"n\": 2}")), Error);
  try {
    aparameter_from_json(std::string(R"({"n":3,"summands":[{"rho":"rho","k":2}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
  }
  EXPECT_EQ(aparameter_from_json(std::string(R"({"n":2,"summands":[{"rho":"rho","rho_dim":1,"k":1,"m":1,"alpha":"1/4"}]})"))
                .summands[0]
                .alpha,
            rat(1, 4));
}
