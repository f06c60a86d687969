#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "speh/json_io.hpp"
#include "speh/parameters.hpp"
#include "speh/report.hpp"

using namespace speh;

namespace {

constexpr int kUsage = 2;

int max_n() {
  if (const char* env = std::getenv("SPEH_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring SPEH_MAX_N='" << env << "'\n";
    }
  }
  return 6;
}

Json one_line(const WeylElement& w) {
  Json a = Json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w(i) + 1);
  return a;
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string table_str(const Table& t) {
  std::string s;
  for (const auto& row : t) {
    s += s.empty() ? "[" : " ";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
  }
  return s + "]";
}

Json cosets_json(int n, int k, const std::vector<CosetRep>& reps) {
  Json out = {{"n", n}, {"k", k}, {"reps", Json::array()}};
  for (const auto& r : reps) {
    const auto parts = source_parabolics(r);
    out["reps"].push_back({{"w", one_line(r.w)},
                           {"w_prime", one_line(r.w_prime)},
                           {"case", to_string(r.tag)},
                           {"table", r.table},
                           {"P1", parts[0]},
                           {"P2", parts[1]}});
  }
  return out;
}

std::string cosets_table(int n, int k, const std::vector<CosetRep>& reps) {
  std::ostringstream os;
  os << "n = " << n << ", k = " << k << ", " << reps.size() << " representatives\n";
  for (const auto& r : reps) {
    const auto parts = source_parabolics(r);
    os << to_string(r.tag) << "  w = " << r.w.str() << "  w' = " << r.w_prime.str() << "  table " << table_str(r.table)
       << "  P1 = " << detail::composition_str(parts[0]) << "  P2 = " << detail::composition_str(parts[1]) << "\n";
  }
  return os.str();
}

Json exponents_json(const RelativeCasselmanReport& r) {
  Json out = {{"n", r.n},
              {"segment", r.delta.str()},
              {"verdict", r.pass() ? "pass" : "fail"},
              {"unramified_bound", r.unramified_bounded() ? "pass" : "fail"},
              {"c", rationals(r.c_coefficients)},
              {"entries", Json::array()}};
  for (const auto& e : r.entries) {
    Json x = {{"k", e.k},
              {"w_prime", one_line(e.term.rep.w_prime)},
              {"case", to_string(e.term.rep.tag)},
              {"status", to_string(e.status)},
              {"exponents", Json::array()}};
    for (const auto& chi : e.term.restricted) x["exponents"].push_back(rationals(chi.coords()));
    if (e.status != CheckStatus::AssumedOutOfScope) {
      x["unramified_pairing"] = to_string(e.unramified_pairing);
      if (e.telescoping_gap) x["telescoping_gap"] = e.telescoping_gap->str();
    }
    out["entries"].push_back(std::move(x));
  }
  return out;
}

std::string exponents_table(const RelativeCasselmanReport& r) {
  std::ostringstream os;
  os << r.delta.str() << " on GL_" << 2 * r.n << ": verdict " << (r.pass() ? "pass" : "fail") << ", unramified bound "
     << (r.unramified_bounded() ? "pass" : "fail") << ", c = " << detail::vector_str(r.c_coefficients) << "\n";
  for (const auto& e : r.entries) {
    os << "k=" << e.k << "  " << to_string(e.term.rep.tag) << "  w' = " << e.term.rep.w_prime.str() << "  "
       << to_string(e.status);
    for (const auto& chi : e.term.restricted) os << "  chi|S = " << chi.str();
    if (e.status != CheckStatus::AssumedOutOfScope) {
      os << "  <nu,u> = " << to_string(e.unramified_pairing);
      if (e.telescoping_gap) os << " (not dominant at " << e.telescoping_gap->str() << ")";
    }
    os << "\n";
  }
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(ErrorCode::InvalidParameter, "cannot open " + out_path);
  f << text;
}

void check_n(int n) {
  const int hi = max_n();
  if (n < 2 || n > hi)
    throw CLI::ValidationError("--n", "must satisfy 2 <= n <= " + std::to_string(hi) + " (SPEH_MAX_N)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial checks for relative discreteness of Speh representations U(delta,2) of GL_2n"};
  app.require_subcommand(1);
  std::string format = "table", out;
  app.add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--out", out, "write output to FILE instead of stdout");

  int n = 0, k = 0, max_bf = 8;
  std::vector<std::string> segments;
  std::string param_file;

  auto* verify = app.add_subcommand("verify", "run the full suite for GL_2n");
  verify->add_option("--n", n, "rank n (GL_2n)")->required();
  verify->add_option("--segment", segments, "extra discrete series rho_dim:length[:center]");
  verify->add_option("--max-bruteforce", max_bf, "largest 2n for the S_2n orbit oracle")->capture_default_str();

  auto* cosets = app.add_subcommand("cosets", "list W_Theta_k \\ W_0 / W_Omega representatives");
  cosets->add_option("--n", n, "rank n")->required();
  cosets->add_option("--k", k, "maximal theta-split subset Theta_k")->required();

  auto* exps = app.add_subcommand("exponents", "Case2 exponents and verdicts for a segment");
  exps->add_option("--n", n, "rank n")->required();
  exps->add_option("--segment", segments, "rho_dim:length[:center], default 1:n")->expected(0, 1);

  auto* params = app.add_subcommand("params", "classify an A-parameter given as JSON");
  params->add_option("file", param_file, "A-parameter JSON file")->required()->check(CLI::ExistingFile);

  for (auto* sub : {verify, cosets, exps, params}) {
    sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--out", out, "write output to FILE instead of stdout");
  }

  try {
    app.parse(argc, argv);
    const bool json = format == "json";

    if (verify->parsed()) {
      check_n(n);
      VerifyOptions opt{n, max_bf, {}};
      for (const auto& s : segments) opt.segments.push_back(parse_segment(s));
      const auto report = run_verification(opt);
      emit(json ? to_json(report).dump(2) + "\n" : format_table(report), out);
      return report.has_failure() ? 1 : 0;
    }
    if (cosets->parsed()) {
      check_n(n);
      if (k < 1 || k >= n) throw CLI::ValidationError("--k", "must satisfy 1 <= k <= n-1");
      const auto reps = double_coset_reps(n, maximal_theta_split_subsets(n)[static_cast<std::size_t>(k - 1)].subset,
                                          elliptic_subset(n));
      emit(json ? cosets_json(n, k, reps).dump(2) + "\n" : cosets_table(n, k, reps), out);
      return 0;
    }
    if (exps->parsed()) {
      check_n(n);
      const SegmentDatum d = segments.empty() ? steinberg(n) : parse_segment(segments.front());
      if (d.dimension() != n)
        throw Error(ErrorCode::InvalidParameter, "segment dimension " + std::to_string(d.dimension()) + " != n");
      const auto r = relative_casselman_verdict(d, n);
      emit(json ? exponents_json(r).dump(2) + "\n" : exponents_table(r), out);
      return r.pass() ? 0 : 1;
    }
    if (params->parsed()) {
      std::ifstream f(param_file);
      std::stringstream buf;
      buf << f.rdbuf();
      const auto psi = aparameter_from_json(buf.str());
      const auto cls = classify_speh(psi);
      const auto dist = is_X_distinguished(psi);
      const bool oracle_ok = 2 * psi.n <= 12;
      if (json) {
        Json j = {{"parameter", to_json(psi)}, {"classification", to_string(cls)}, {"x_distinguished", dist.distinguished}};
        j["x_elliptic"] = dist.distinguished ? Json(is_X_elliptic(psi)) : Json(nullptr);
        j["factorization_oracle"] = oracle_ok ? Json(factorization_oracle(psi)) : Json(nullptr);
        emit(j.dump(2) + "\n", out);
      } else {
        std::ostringstream os;
        os << to_string(cls) << "\n  psi = " << psi.str() << "\n  X-distinguished: " << (dist.distinguished ? "yes" : "no");
        if (dist.distinguished) os << "\n  X-elliptic: " << (is_X_elliptic(psi) ? "yes" : "no");
        if (oracle_ok) os << "\n  factorization oracle: " << (factorization_oracle(psi) ? "factors" : "does not factor");
        os << "\n";
        emit(os.str(), out);
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
