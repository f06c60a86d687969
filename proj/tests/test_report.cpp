#include <gtest/gtest.h>

#include <set>

#include "speh/report.hpp"

using namespace speh;

TEST(Segment, Parse) {
  EXPECT_EQ(parse_segment("1:2"), (SegmentDatum{"1", 1, 2, 0}));
  EXPECT_EQ(parse_segment("2:3"), (SegmentDatum{"rho", 2, 3, 0}));
  EXPECT_EQ(parse_segment("1:4:1/2"), (SegmentDatum{"rho", 1, 4, rat(1, 2)}));
  for (const char* bad : {"", "2", "2:", "a:2", "2:0", "1:2:3:4", "1:2:x"}) {
    try {
      parse_segment(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  try {
    parse_segment("2:x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos) << e.what();
  }
}

TEST(Verify, N2AllPass) {
  const auto r = run_verification({2, 8, {}});
  EXPECT_FALSE(r.has_failure());
  std::set<std::string> ids;
  for (const auto& c : r.checks) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.anchor.empty());
    EXPECT_NE(c.status, CheckStatus::Fail) << c.id << ": " << c.details;
  }
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  EXPECT_TRUE(ids.count("11.case1-non-distinction"));
  EXPECT_TRUE(ids.count("13.relative-casselman.1:2"));
}

TEST(Verify, N3FailuresAreTheCasselmanGap) {
  const auto r = run_verification({3, 8, {}});
  EXPECT_TRUE(r.has_failure());
  for (const auto& c : r.checks) {
    if (c.status != CheckStatus::Fail) continue;
    EXPECT_TRUE(c.id.rfind("13.", 0) == 0 || c.id.rfind("14.", 0) == 0) << c.id << ": " << c.details;
  }
}

TEST(Verify, RejectsBadInput) {
  EXPECT_THROW(run_verification({1, 8, {}}), Error);
  EXPECT_THROW(run_verification({3, 8, {SegmentDatum{"rho", 2, 2, 0}}}), Error);
}

TEST(Verify, UserSegmentAdded) {
  const auto r = run_verification({2, 8, {SegmentDatum{"rho", 2, 1, 0}}});
  EXPECT_TRUE(std::any_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.id == "13.relative-casselman.2:1"; }));
}

TEST(Report, JsonRoundTrip) {
  for (int n = 2; n <= 3; ++n) {
    const auto r = run_verification({n, 8, {}});
    EXPECT_EQ(report_from_json(parse_json(to_json(r).dump())), r);
  }
  EXPECT_THROW(report_from_json(parse_json(R"({"schema_version":1,"n":2,"checks":[{"id":"x"}]})")), Error);
  EXPECT_THROW(report_from_json(parse_json(
                   R"({"schema_version":1,"n":2,"checks":[{"id":"x","anchor":"a","status":"ok","details":"","micros":0}]})")),
               Error);
}

TEST(Report, Table) {
  const auto t = format_table(run_verification({2, 8, {}}));
  EXPECT_NE(t.find("01.theta-base"), std::string::npos);
  EXPECT_NE(t.find("assumed-out-of-scope"), std::string::npos);
}
