#pragma once

// The verification suite behind `speh-verify verify`, its report type, and
// table / JSON renderings.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "speh/exponents.hpp"
#include "speh/json_io.hpp"
#include "speh/parabolic.hpp"
#include "speh/theta_structure.hpp"
#include "speh/weyl_cosets.hpp"

namespace speh {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::Fail;
  std::string details;
  std::int64_t micros = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool has_failure() const {
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
  }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "assumed-out-of-scope") return CheckStatus::AssumedOutOfScope;
  throw Error(ErrorCode::ParseError, "unknown status '" + s + "'");
}

/// `rho_dim:length[:center]`, e.g. "2:3" or "1:4:1/2".
inline SegmentDatum parse_segment(const std::string& spec) {
  std::vector<std::string> parts;
  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  while (true) {
    const auto c = spec.find(':', pos);
    starts.push_back(pos);
    parts.push_back(spec.substr(pos, c == std::string::npos ? std::string::npos : c - pos));
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw Error(ErrorCode::ParseError, "segment '" + spec + "' must be rho_dim:length[:center]");
  auto positive = [&](std::size_t i) {
    const auto& p = parts[i];
    if (p.empty() || !std::all_of(p.begin(), p.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) || p.size() > 6)
      throw Error(ErrorCode::ParseError, "segment '" + spec + "': expected a positive integer at position " +
                                             std::to_string(starts[i]));
    const int v = std::stoi(p);
    if (v < 1)
      throw Error(ErrorCode::ParseError, "segment '" + spec + "': expected a positive integer at position " +
                                             std::to_string(starts[i]));
    return v;
  };
  SegmentDatum d{"rho", positive(0), positive(1), 0};
  if (parts.size() == 3) {
    try {
      d.center = parse_rational(parts[2]);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "segment '" + spec + "': bad center at position " + std::to_string(starts[2]));
    }
  }
  if (d.rho_dim == 1 && parts.size() == 2) d.rho_label = "1";
  return d;
}

struct VerifyOptions {
  int n = 2;
  int max_bruteforce = 8;
  /// Extra discrete series data of GL_n; Steinberg is always included.
  std::vector<SegmentDatum> segments;
};

namespace detail {

using CheckBody = std::function<std::pair<CheckStatus, std::string>()>;

inline CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = "; ") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

inline std::string composition_str(const Composition& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

inline std::string vector_str(const std::vector<Rational>& v) { return CharacterVector(v).str(); }

}  // namespace detail

inline VerificationReport run_verification(const VerifyOptions& opt) {
  using detail::verdict;
  const int n = opt.n;
  if (n < 2) throw Error(ErrorCode::InvalidRank, "n must be at least 2");
  for (const auto& d : opt.segments)
    if (d.dimension() != n)
      throw Error(ErrorCode::InvalidParameter, "segment " + d.str() + " has dimension " +
                                                   std::to_string(d.dimension()) + ", not n = " + std::to_string(n));

  VerificationReport report;
  report.n = n;
  auto run = [&](std::string id, std::string anchor, const detail::CheckBody& body) {
    CheckResult r{std::move(id), std::move(anchor), CheckStatus::Fail, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [s, d] = body();
      r.status = s;
      r.details = std::move(d);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.details = std::string("exception: ") + e.what();
    }
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  };

  const auto theta = standard_theta(n);
  const auto d0 = theta_base_delta0(n);

  run("01.theta-base", "theta-base lemma for w+ Delta", [&] {
    const auto c = theta_base_census(n);
    const bool ok = is_theta_base(d0, theta) && c.all_cases_witnessed() && c.mismatches.empty();
    return std::pair{verdict(ok), "case counts " + std::to_string(c.case_counts[0]) + "/" + std::to_string(c.case_counts[1]) +
                                      "/" + std::to_string(c.case_counts[2]) + "/" + std::to_string(c.case_counts[3]) +
                                      ", fixed " + std::to_string(c.fixed) + ", mismatches " + std::to_string(c.mismatches.size())};
  });

  run("02.fixed-roots", "theta-fixed roots of Phi_0", [&] {
    RootSet expected(2 * n);
    for (int i = 0; i < n; ++i) {
      expected.insert(Root{i, 2 * n - 1 - i});
      expected.insert(Root{2 * n - 1 - i, i});
    }
    const auto got = theta_fixed_roots(theta);
    return std::pair{verdict(got == expected), got.str()};
  });

  run("03.restricted-root-system", "restricted root system is of type A_{n-1}", [&] {
    const auto r = restricted_root_system(d0, theta);
    const bool ok = r.roots.size() == static_cast<std::size_t>(n * (n - 1)) && r.type == "A" + std::to_string(n - 1);
    return std::pair{verdict(ok), std::to_string(r.roots.size()) + " restricted roots, type " + r.type};
  });

  run("04.maximal-theta-split", "maximal Delta_0-standard theta-split subsets Theta_k", [&] {
    const auto ts = maximal_theta_split_subsets(n);
    bool ok = ts.size() == static_cast<std::size_t>(n - 1);
    const auto wp = w_plus(n);
    for (int k = 1; k < n && ok; ++k) {
      const Root removed = wp.act(Root{2 * k - 1, 2 * k});
      RootSet expected(2 * n, d0.base());
      RootSet actual(2 * n, ts[static_cast<std::size_t>(k - 1)].subset);
      ok = difference(expected, RootSet(2 * n, {removed})) == actual && removed == (Root{2 * n - k, k}) &&
           is_theta_split(standard_parabolic(d0, ts[static_cast<std::size_t>(k - 1)].subset), theta) &&
           !is_theta_elliptic_levi(standard_parabolic(d0, ts[static_cast<std::size_t>(k - 1)].subset), theta);
    }
    return std::pair{verdict(ok), std::to_string(ts.size()) + " maximal subsets"};
  });

  run("05.minimal-theta-split", "P_0 = w+ P_(2,...,2) w+^{-1} is the minimal theta-split parabolic", [&] {
    const auto p0 = theta_split_subset(n, {}).subset;
    const auto scanned = theta_split_subsets_by_scan(n);
    bool ok = is_theta_split(standard_parabolic(d0, p0), theta) &&
              scanned.size() == all_theta_split_subsets(n).size();
    for (const auto& s : scanned)
      for (const auto& a : p0) ok = ok && std::find(s.begin(), s.end(), a) != s.end();
    return std::pair{verdict(ok), std::to_string(scanned.size()) + " theta-split subsets, all containing P_0's"};
  });

  run("06.elliptic-levi", "M_(n,n) is theta-elliptic; theta-stable standard parabolics are balanced", [&] {
    const auto q = partition_parabolic({n, n});
    const bool ok = is_theta_stable(q, theta) && !is_theta_split(q, theta) && is_theta_elliptic_levi(q, theta);
    return std::pair{verdict(ok), "rank of split part " + std::to_string(split_component_rank(q.split_component, theta))};
  });

  run("07.delta-character", "delta_{Q^theta} delta_Q^{-1/2} = nu on L^theta", [&] {
    const auto r = delta_ratio_on_fixed_levi(n);
    const CharacterVector ones(std::vector<Rational>(static_cast<std::size_t>(n), 1));
    return std::pair{verdict(r.ratio == ones), "fixed modulus " + r.fixed_modulus.str() + ", half modulus " +
                                                   r.half_modulus.str() + ", ratio " + r.ratio.str()};
  });

  const auto omega = elliptic_subset(n);
  const auto maximal = maximal_theta_split_subsets(n);
  for (int k = 1; k < n; ++k) {
    const auto& ts = maximal[static_cast<std::size_t>(k - 1)];
    run("08.double-cosets.k" + std::to_string(k), "W_Theta \\ W_0 / W_Omega representatives", [&, k] {
      const auto p = coset_problem(n, ts.subset, omega);
      const auto reps = double_coset_reps(p);
      std::size_t case1 = 0;
      for (const auto& r : reps) case1 += r.tag == CaseTag::Case1;
      const bool case1_ok = case1 == ((n % 2 == 0 && 2 * k == n) ? 2u : 0u);
      std::string d = std::to_string(reps.size()) + " reps, " + std::to_string(case1) + " Case1";
      bool ok = case1_ok;
      if (2 * n <= opt.max_bruteforce) {
        const auto bf = brute_force_double_cosets(p, opt.max_bruteforce);
        bool same = bf.orbit_count == reps.size();
        for (const auto& orbit : bf.minimal_length) {
          same = same && orbit.size() == 1 &&
                 std::any_of(reps.begin(), reps.end(), [&](const CosetRep& r) { return r.w == orbit.front(); });
        }
        ok = ok && same;
        d += same ? ", brute force agrees" : ", brute force disagrees";
      } else {
        d += ", brute force skipped (2n > " + std::to_string(opt.max_bruteforce) + ")";
      }
      return std::pair{verdict(ok), d};
    });
  }

  run("09.elliptic-self-cosets", "W_Omega \\ W_0 / W_Omega and its normalizing part", [&] {
    const auto reps = double_coset_reps(n, omega, omega);
    std::size_t normalizing = 0;
    for (const auto& r : reps) normalizing += normalizes(r.w_prime, xi(2 * n, n));
    const bool ok = reps.size() == static_cast<std::size_t>(n + 1) && normalizing == 2;
    return std::pair{verdict(ok), std::to_string(reps.size()) + " reps, " + std::to_string(normalizing) + " normalize M_(n,n)"};
  });

  run("10.case1-levi", "theta_{x_2n} acts blockwise on M_(n,n)", [&] {
    if (n % 2 != 0) return std::pair{CheckStatus::Pass, std::string("n odd: no Case1 representatives")};
    const auto r = case1_levi_fixed_points(n);
    return std::pair{verdict(r.blockwise && r.identity_fixed), std::to_string(r.samples) + " random Levi elements"};
  });

  run("11.case1-non-distinction", "Case1 pieces are not M^theta-distinguished (generic representations, Sp_n)", [&] {
    if (n % 2 != 0) return std::pair{CheckStatus::Pass, std::string("n odd: no Case1 pieces, nothing assumed")};
    return std::pair{CheckStatus::AssumedOutOfScope,
                     std::string("analytic input: generic representations of GL_n are not Sp_n-distinguished")};
  });

  run("12.multiplicity-one", "dim Hom_H(U(delta,2), 1) = 1", [&] {
    return std::pair{CheckStatus::AssumedOutOfScope, std::string("analytic input, not modeled")};
  });

  std::vector<SegmentDatum> data{steinberg(n)};
  for (const auto& d : opt.segments)
    if (std::find(data.begin(), data.end(), d) == data.end()) data.push_back(d);
  for (const auto& d : data) {
    const std::string tag = std::to_string(d.rho_dim) + ":" + std::to_string(d.length) +
                            (d.center != 0 ? ":" + to_string(d.center) : "");
    const auto verdict_report = std::make_shared<RelativeCasselmanReport>();
    run("13.relative-casselman." + tag, "Case2 exponents of nu^{1/2}delta x nu^{-1/2}delta are strictly contracting", [&] {
      *verdict_report = relative_casselman_verdict(d, n);
      std::vector<std::string> bad;
      std::size_t case2 = 0;
      for (const auto& e : verdict_report->entries) {
        if (e.status == CheckStatus::AssumedOutOfScope) continue;
        ++case2;
        if (e.failure)
          bad.push_back("k=" + std::to_string(e.k) + " w'=" + e.term.rep.w_prime.str() + " chi|S=" +
                        e.failure->exponent.str() + " <chi,v>=" + to_string(e.failure->pairing) +
                        (e.failure->central ? " (center)" : ""));
      }
      std::string det = d.str() + ": " + std::to_string(case2) + " Case2 pieces";
      if (!bad.empty()) det += ", " + std::to_string(bad.size()) + " not strict: " + detail::join(bad);
      return std::pair{verdict(verdict_report->pass()), det};
    });
    run("14.unramified-bound." + tag, "|nu^{1/2} (x) nu^{-1/2}(w'^{-1} a w')| <= 1 with c = (1,..,n,..,1)", [&] {
      std::vector<Rational> c_expected;
      for (int i = 1; i <= n; ++i) c_expected.push_back(i);
      for (int j = 1; j < n; ++j) c_expected.push_back(n - j);
      if (verdict_report->entries.empty()) *verdict_report = relative_casselman_verdict(d, n);
      const bool c_ok = verdict_report->c_coefficients == c_expected;
      std::vector<std::string> bad;
      for (const auto& e : verdict_report->entries)
        if (e.status != CheckStatus::AssumedOutOfScope && e.unramified_pairing < 0)
          bad.push_back("k=" + std::to_string(e.k) + " w'=" + e.term.rep.w_prime.str() + " u=" +
                        detail::vector_str(e.conjugated_generator) + " |.|=q^" + to_string(-e.unramified_pairing) +
                        (e.telescoping_gap ? " at " + e.telescoping_gap->str() : ""));
      std::string det = std::string("c ") + (c_ok ? "matches" : "differs");
      if (!bad.empty()) det += ", bound exceeded: " + detail::join(bad);
      return std::pair{verdict(c_ok && bad.empty()), det};
    });
  }

  std::sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

inline Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"details", c.details},
                      {"micros", c.micros}});
  return {{"schema_version", kReportSchemaVersion}, {"n", r.n}, {"checks", checks}};
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      throw Error(ErrorCode::ParseError, "unsupported schema_version");
    r.n = j.at("n").get<int>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back(CheckResult{c.at("id").get<std::string>(), c.at("anchor").get<std::string>(),
                                     status_from_string(c.at("status").get<std::string>()),
                                     c.at("details").get<std::string>(), c.at("micros").get<std::int64_t>()});
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return r;
}

inline std::string format_table(const VerificationReport& r) {
  std::size_t w = 2;
  for (const auto& c : r.checks) w = std::max(w, c.id.size());
  std::ostringstream os;
  os << "n = " << r.n << "\n";
  for (const auto& c : r.checks) {
    os << c.id << std::string(w + 2 - c.id.size(), ' ');
    const auto s = to_string(c.status);
    os << s << std::string(22 - std::min<std::size_t>(s.size(), 21), ' ');
    os << c.micros / 1000.0 << " ms  " << c.details << "\n";
  }
  return os.str();
}

}  // namespace speh
