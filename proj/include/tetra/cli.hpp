#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tetra/darboux.hpp"
#include "tetra/families.hpp"
#include "tetra/factorization.hpp"
#include "tetra/io.hpp"
#include "tetra/polynomials.hpp"
#include "tetra/tncheck.hpp"

namespace tetra::cli {

using io::json;

enum class Mode { EXACT, FLOAT };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitError = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInput = 65;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  Mode mode = Mode::EXACT;
  double float_tolerance = 1e-10;
  std::string output_format = "json";
  std::uint64_t seed = 1;
};

struct JPOptions {
  std::string alpha = "0", beta = "0", gamma = "0", variant = "first", out;
  Index count = 6;
};

struct ScanOptions {
  std::string gamma = "0";
  std::vector<std::string> alpha_values, beta_values;
  Index count = 24, n = 4;
  std::size_t samples = 0;
};

struct FactorOptions {
  std::string input, out;
  std::optional<std::string> alpha2;
  Index n = 0;
};

struct PolysOptions {
  std::string input, kind = "type2";
  std::optional<std::string> nu, at;
  Index n = 0;
};

struct DarbouxOptions {
  std::string alphas, which = "hat", out;
  std::optional<Index> n;
};

struct VerifyOptions {
  std::string suite = "all", input, alphas, nu = "-1";
  std::vector<std::string> xs{"0", "1/4", "1", "4", "10"};
  std::optional<std::string> alpha, beta, gamma;
  Index n = 6, count = 24;
};

namespace detail {

inline void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) out << doc.dump() << '\n';
  else io::write_text_file(out_path, doc.dump());
}

template <Scalar T>
JPVariant parse_variant(const std::string& v) {
  if (v == "first") return JPVariant::FIRST;
  if (v == "akv") return JPVariant::AKV;
  throw UsageError("--variant must be first or akv");
}

template <Scalar T>
int cmd_jp(const JPOptions& o, std::ostream& out) {
  JPParams<T> p{parse_scalar<T>(o.alpha), parse_scalar<T>(o.beta), parse_scalar<T>(o.gamma)};
  auto al = jp_alphas(p, parse_variant<T>(o.variant), o.count);
  emit(io::alphas_to_json(al.first(o.count)), o.out, out);
  return kExitOk;
}

inline int cmd_jp_scan(const ScanOptions& o, const RunConfig& cfg, std::ostream& out) {
  const Rational gamma = parse_scalar<Rational>(o.gamma);
  std::vector<std::pair<Rational, Rational>> points;
  if (!o.alpha_values.empty() || !o.beta_values.empty()) {
    if (o.alpha_values.empty() || o.beta_values.empty())
      throw UsageError("--alpha-values and --beta-values must be given together");
    for (const auto& a : o.alpha_values)
      for (const auto& b : o.beta_values) points.emplace_back(parse_scalar<Rational>(a), parse_scalar<Rational>(b));
  } else {
    for (const auto& p : jp_grid())
      if (p.gamma == 0) points.emplace_back(p.alpha, p.beta);
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> sixths(-5, 18);
  for (std::size_t s = 0; s < o.samples; ++s) {
    Rational a(sixths(rng), 6);
    Rational b(sixths(rng), 6);
    points.emplace_back(a, b);
  }
  out << "alpha,beta,region,pbf_flag,oscillatory_flag\n";
  for (const auto& [a, b] : points) {
    JPParams<Rational> p{a, b, gamma};
    Region r = jp_region(p);
    out << to_string(a) << ',' << to_string(b) << ',' << to_string(r) << ',';
    if (r == Region::OUTSIDE) {
      out << "NA,NA\n";
      continue;
    }
    try {
      bool pbf = jp_alphas(p, JPVariant::AKV, o.count).classify(o.count) == Positivity::PBF;
      bool osc = is_oscillatory(jp_truncation(p, JPVariant::FIRST, o.n)).is_oscillatory_gk;
      out << (pbf ? "true" : "false") << ',' << (osc ? "true" : "false") << '\n';
    } catch (const DegenerateParameters&) {
      out << "NA,NA\n";
    }
  }
  return kExitOk;
}

template <Scalar T>
int cmd_factor(const FactorOptions& o, std::ostream& out, std::ostream& err) {
  auto t = io::matrix_from_json<T>(io::read_json_file(o.input));
  T alpha2(0);
  if (o.alpha2) alpha2 = parse_scalar<T>(*o.alpha2);
  else err << "warning: --alpha2 not given, using alpha_2 = 0; positivity may fail\n";
  auto al = bidiagonal_factor(t, o.n, alpha2);
  const Index count = 3 * o.n + 1;
  auto cls = is_pbf(al, count);
  auto doc = io::alphas_to_json(al.first(count));
  doc["classification"] = to_string(cls);
  doc["classification_excluding_alpha2"] = to_string(is_pbf_excluding_alpha2(al, count));
  emit(doc, o.out, out);
  return cls == Positivity::PBF ? 0 : (cls == Positivity::TN ? 1 : 2);
}

template <Scalar T>
int cmd_polys(const PolysOptions& o, std::ostream& out) {
  auto t = io::matrix_from_json<T>(io::read_json_file(o.input));
  std::optional<T> at;
  if (o.at) at = parse_scalar<T>(*o.at);
  auto render = [&](const PolySequence<T>& s) {
    json arr = json::array();
    if (at) {
      for (const auto& v : eval_sequence_at(s, *at)) arr.push_back(to_string(v));
    } else {
      for (const auto& p : s.polys) arr.push_back(io::polynomial_to_json(p));
    }
    return arr;
  };
  json doc;
  doc["kind"] = o.kind;
  doc["n"] = o.n;
  if (at) doc["x"] = to_string(*at);
  auto need_nu = [&] {
    if (!o.nu) throw UsageError("--kind " + o.kind + " needs --nu");
    return parse_scalar<T>(*o.nu);
  };
  if (o.kind == "type2") {
    doc["B"] = render(type2_sequence(t, o.n));
  } else if (o.kind == "type1") {
    T nu = need_nu();
    doc["nu"] = to_string(nu);
    auto [a1, a2] = type1_sequences(t, o.n, nu);
    doc["A1"] = render(a1);
    doc["A2"] = render(a2);
  } else if (o.kind == "second") {
    T nu = need_nu();
    doc["nu"] = to_string(nu);
    auto [b1, b2, small] = second_kind_sequences(t, o.n, nu);
    doc["B1"] = render(b1);
    doc["B2"] = render(b2);
    doc["b1"] = render(small);
  } else {
    throw UsageError("--kind must be type2, type1 or second");
  }
  out << doc.dump() << '\n';
  return kExitOk;
}

template <Scalar T>
int cmd_darboux(const DarbouxOptions& o, std::ostream& out, std::ostream& err) {
  auto al = io::alphas_from_json<T>(io::read_json_file(o.alphas));
  DarbouxSide side;
  if (o.which == "hat") side = DarbouxSide::HAT;
  else if (o.which == "hathat") side = DarbouxSide::HATHAT;
  else throw UsageError("--which must be hat or hathat");
  auto pair = darboux_transforms(al);
  const auto& t = pair.side(side);
  Index n = 10;
  if (o.n) n = *o.n;
  else if (auto last = t.last_row()) n = *last;
  if (n < 0) throw InputError("not enough alphas for a single row of the transformed matrix");
  if (al.has(3 * n + 3)) {
    auto d = truncation_diagnostic(pair, n, side);
    err << "note: leading truncation of the " << to_string(side)
        << " matrix differs from the truncated factor product in row " << n << ": " << d.difference << '\n';
  }
  emit(io::matrix_to_json(t, n), o.out, out);
  return kExitOk;
}

// ---- verification suites (always exact) ----

inline json witness_json(const MinorWitness<Rational>& w) {
  json rows = json::array(), cols = json::array();
  for (auto r : w.rows) rows.push_back(r + 1);
  for (auto c : w.cols) cols.push_back(c + 1);
  return {{"rows", rows}, {"cols", cols}, {"value", to_string(w.value)}};
}

inline json suite_tn(const TetraHessenberg<Rational>& t, Index n, bool expect_tn, std::uint64_t seed) {
  auto m = leading_principal(t, n);
  json r{{"suite", "tn"}, {"dimension", m.size()}};
  if (m.size() > kMinorEnumerationCap) {
    auto s = sample_total_nonnegativity(m, 2000, seed);
    r["mode"] = "sampled";
    r["minors_checked"] = s.minors_checked;
    if (s.witness) r["witness"] = witness_json(*s.witness);
    r["status"] = s.verdict == SampledVerdict::NOT_TN ? "fail" : "inconclusive";
    return r;
  }
  auto rep = oscillatory_report(m);
  r["is_tn"] = rep.is_tn;
  r["witness"] = rep.witness ? witness_json(*rep.witness) : json(nullptr);
  r["is_nonsingular"] = rep.is_nonsingular;
  r["is_irreducible"] = rep.is_irreducible;
  r["is_oscillatory_gk"] = rep.is_oscillatory_gk;
  r["is_oscillatory_power"] = rep.is_oscillatory_power ? json(*rep.is_oscillatory_power) : json(nullptr);
  bool agree = !rep.is_oscillatory_power || *rep.is_oscillatory_power == rep.is_oscillatory_gk;
  r["oracle_agreement"] = agree;
  r["status"] = agree && (!expect_tn || rep.is_tn) ? "pass" : "fail";
  return r;
}

inline json suite_charpoly(const TetraHessenberg<Rational>& t, Index n, const Rational& nu) {
  json r{{"suite", "charpoly"}, {"n", n}, {"nu", to_string(nu)}};
  auto b = type2_sequence(t, n + 1);
  auto [s1, s2, small] = second_kind_sequences(t, n + 1, nu);
  auto trailing = [&](Index m, Index k) {
    return k <= m + 1 ? char_poly_truncation(t, m, k) : Polynomial<Rational>();
  };
  std::size_t checked = 0;
  for (Index m = 0; m <= n; ++m) {
    auto fail = [&](const std::string& what) {
      r["status"] = "fail";
      r["failure"] = what + " at N = " + std::to_string(m);
      return r;
    };
    if (b[m + 1] != char_poly_dense(leading_principal(t, m))) return fail("B_{N+1} vs det(xI - T^[N])");
    for (Index k = 1; k <= 2 && k <= m; ++k)
      if (trailing(m, k) != char_poly_dense(trailing_truncation(t, m, k)))
        return fail("banded vs dense trailing determinant, k = " + std::to_string(k));
    if (s1[m + 1] != trailing(m, 1)) return fail("B1_{N+1} vs k = 1 trailing determinant");
    if (small[m + 1] != trailing(m, 2)) return fail("b1_{N+1} vs k = 2 trailing determinant");
    if (s2[m + 1] != small[m + 1] - nu * s1[m + 1]) return fail("B2 = b1 - nu B1");
    checked += 5;
  }
  r["checks"] = checked;
  r["status"] = "pass";
  return r;
}

inline json suite_christoffel(const TetraHessenberg<Rational>& t, const AlphaSequence<Rational>& al, Index n) {
  auto rep = verify_christoffel(t, al, n);
  return {{"suite", "christoffel"}, {"n", n}, {"identities_checked", rep.identities_checked}, {"status", "pass"}};
}

inline json suite_akv(const TetraHessenberg<Rational>& t, const AlphaSequence<Rational>& al, Index n,
                      const std::vector<Rational>& xs) {
  auto rep = akv_evaluate(t, al, n, xs);
  json r{{"suite", "akv"}, {"n", n}, {"xs", io::scalar_array(xs)}};
  r["max_value"] = rep.max_value ? to_string(*rep.max_value) : "";
  bool zero_at_origin = false;
  for (const auto& x : xs)
    if (x == 0) {
      auto f = akv_families(t, al, n, x);
      for (std::size_t id = 0; id < kAkvDeterminants && !zero_at_origin; ++id)
        for (Index k = 0; k <= n && !zero_at_origin; ++k) zero_at_origin = akv_determinant(f, id, k) == 0;
    }
  r["zero_attained_at_origin"] = zero_at_origin;
  r["violations"] = rep.violations.size();
  json first = json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
    const auto& v = rep.violations[i];
    first.push_back({{"determinant", v.determinant},
                     {"label", akv_label(v.determinant)},
                     {"n", v.n},
                     {"x", to_string(v.x)},
                     {"value", to_string(v.value)}});
  }
  r["first_violations"] = first;
  r["status"] = rep.passed() ? "pass" : "fail";
  return r;
}

inline json suite_roundtrip(const TetraHessenberg<Rational>& t, const AlphaSequence<Rational>& al, Index n) {
  json r{{"suite", "roundtrip"}, {"n", n}};
  const Index count = 3 * n + 1;
  auto lu = gauss_borel(t, n);
  bool lu_ok = lu.lower() * lu.upper() == leading_principal(t, n);
  auto factored = bidiagonal_factor(t, n, al(2));
  bool factor_ok = true;
  for (Index j = 1; j <= count; ++j) factor_ok = factor_ok && factored(j) == al(j);
  r["gauss_borel"] = lu_ok;
  r["bidiagonal_factor"] = factor_ok;
  bool poly_ok = true;
  if (al(2) == 0) {
    r["alphas_from_polynomials"] = "skipped (alpha_2 = 0)";
  } else {
    auto rec = alphas_from_polynomials(t, n, al(2));
    for (Index j = 1; j <= count; ++j) poly_ok = poly_ok && rec.alphas(j) == al(j);
    r["alphas_from_polynomials"] = poly_ok;
  }
  r["status"] = lu_ok && factor_ok && poly_ok ? "pass" : "fail";
  return r;
}

inline json suite_jp(const std::vector<JPParams<Rational>>& points, Index count) {
  json r{{"suite", "jp-consistency"}, {"count", count}};
  json rows = json::array();
  bool ok = true;
  for (const auto& p : points) {
    json row{{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"gamma", to_string(p.gamma)},
             {"region", to_string(jp_region(p))}};
    try {
      auto c = jp_cross_consistency(p, count);
      row["rows_checked"] = c.rows_checked;
      auto s = jp_sign_report(p, count);
      row["first"] = to_string(s.first_positivity);
      row["akv"] = to_string(s.akv_positivity);
      row["status"] = "pass";
    } catch (const Error& e) {
      row["status"] = "fail";
      row["error"] = e.what();
      ok = false;
    }
    rows.push_back(row);
  }
  r["points"] = rows;
  r["status"] = ok ? "pass" : "fail";
  return r;
}

template <class F>
json guarded(const std::string& suite, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    return {{"suite", suite}, {"status", "fail"}, {"error", e.what()}};
  }
}

inline int cmd_verify(const VerifyOptions& o, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> all{"tn", "christoffel", "akv", "roundtrip", "charpoly", "jp-consistency"};
  std::vector<std::string> suites;
  if (o.suite == "all") suites = all;
  else if (std::find(all.begin(), all.end(), o.suite) != all.end()) suites = {o.suite};
  else throw UsageError("unknown suite '" + o.suite + "'");

  std::optional<AlphaSequence<Rational>> al;
  std::optional<TetraHessenberg<Rational>> t;
  if (!o.alphas.empty()) al = io::alphas_from_json<Rational>(io::read_json_file(o.alphas));
  if (!o.input.empty()) t = io::matrix_from_json<Rational>(io::read_json_file(o.input));
  else if (al) t = tetra_from_alphas(*al);

  json results = json::array();
  for (const auto& s : suites) {
    auto skip = [&](const std::string& why) {
      if (o.suite != "all") throw UsageError("suite '" + s + "' needs " + why);
      results.push_back({{"suite", s}, {"status", "skipped"}, {"reason", "needs " + why}});
    };
    if (s == "tn") {
      if (!t) { skip("--input or --alphas"); continue; }
      bool expect_tn = al && al->classify(3 * o.n + 1) != Positivity::INDEFINITE && o.input.empty();
      results.push_back(guarded(s, [&] { return suite_tn(*t, o.n, expect_tn, cfg.seed); }));
    } else if (s == "charpoly") {
      if (!t) { skip("--input or --alphas"); continue; }
      Rational nu = parse_scalar<Rational>(o.nu);
      results.push_back(guarded(s, [&] { return suite_charpoly(*t, o.n, nu); }));
    } else if (s == "jp-consistency") {
      std::vector<JPParams<Rational>> points;
      if (o.alpha || o.beta || o.gamma) {
        points.push_back({parse_scalar<Rational>(o.alpha.value_or("0")), parse_scalar<Rational>(o.beta.value_or("0")),
                          parse_scalar<Rational>(o.gamma.value_or("0"))});
        require_natural_region(points.back());
      } else {
        points = jp_grid();
      }
      results.push_back(guarded(s, [&] { return suite_jp(points, o.count); }));
    } else {
      if (!al || !t) { skip("--alphas"); continue; }
      if (s == "christoffel") results.push_back(guarded(s, [&] { return suite_christoffel(*t, *al, o.n); }));
      if (s == "roundtrip") results.push_back(guarded(s, [&] { return suite_roundtrip(*t, *al, o.n); }));
      if (s == "akv") {
        std::vector<Rational> xs;
        for (const auto& x : o.xs) xs.push_back(parse_scalar<Rational>(x));
        results.push_back(guarded(s, [&] { return suite_akv(*t, *al, o.n, xs); }));
      }
    }
  }

  bool failed = false;
  for (const auto& r : results) {
    const auto status = r.at("status").get<std::string>();
    failed = failed || status == "fail";
    err << r.at("suite").get<std::string>() << ": " << status;
    if (r.contains("error")) err << " (" << r.at("error").get<std::string>() << ")";
    err << '\n';
  }
  json report{{"suite", o.suite}, {"n", o.n}, {"passed", !failed}, {"results", results}};
  out << report.dump() << '\n';
  return failed ? kExitVerificationFailure : kExitOk;
}

inline Mode parse_mode(const std::string& m) {
  if (m == "exact") return Mode::EXACT;
  if (m == "float") return Mode::FLOAT;
  throw UsageError("mode must be exact or float, got '" + m + "'");
}

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bidiagonal factorizations and Darboux transforms of tetradiagonal Hessenberg matrices", "tetra"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode_flag;
  app.add_option("--mode", mode_flag, "exact (default) or float; overrides TETRA_MODE");
  app.add_option("--tol", cfg.float_tolerance, "relative comparison tolerance in float mode");
  app.add_option("--seed", cfg.seed, "seed for sampled grids and minors");

  JPOptions jp;
  auto* jp_cmd = app.add_subcommand("jp", "Jacobi-Pineiro bidiagonal parameters");
  jp_cmd->add_option("--alpha", jp.alpha)->required();
  jp_cmd->add_option("--beta", jp.beta)->required();
  jp_cmd->add_option("--gamma", jp.gamma)->required();
  jp_cmd->add_option("--variant", jp.variant)->check(CLI::IsMember({"first", "akv"}));
  jp_cmd->add_option("--count", jp.count)->check(CLI::PositiveNumber);
  jp_cmd->add_option("--out", jp.out);

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("jp-scan", "CSV region scan of the Jacobi-Pineiro family");
  scan_cmd->add_option("--gamma", scan.gamma);
  scan_cmd->add_option("--alpha-values", scan.alpha_values)->delimiter(',');
  scan_cmd->add_option("--beta-values", scan.beta_values)->delimiter(',');
  scan_cmd->add_option("--count", scan.count)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--n", scan.n)->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--samples", scan.samples);

  FactorOptions factor;
  auto* factor_cmd = app.add_subcommand("factor", "bidiagonal factorization of a truncation");
  factor_cmd->add_option("--input", factor.input)->required();
  factor_cmd->add_option("--n", factor.n)->required()->check(CLI::NonNegativeNumber);
  factor_cmd->add_option("--alpha2", factor.alpha2);
  factor_cmd->add_option("--out", factor.out);

  PolysOptions polys;
  auto* polys_cmd = app.add_subcommand("polys", "recursion polynomials");
  polys_cmd->add_option("--input", polys.input)->required();
  polys_cmd->add_option("--n", polys.n)->required()->check(CLI::NonNegativeNumber);
  polys_cmd->add_option("--kind", polys.kind)->check(CLI::IsMember({"type2", "type1", "second"}));
  polys_cmd->add_option("--nu", polys.nu);
  polys_cmd->add_option("--at", polys.at);

  DarbouxOptions darboux;
  auto* darboux_cmd = app.add_subcommand("darboux", "Darboux transformed matrix");
  darboux_cmd->add_option("--alphas", darboux.alphas)->required();
  darboux_cmd->add_option("--which", darboux.which)->check(CLI::IsMember({"hat", "hathat"}));
  darboux_cmd->add_option("--n", darboux.n)->check(CLI::NonNegativeNumber);
  darboux_cmd->add_option("--out", darboux.out);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "exact verification suites");
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"tn", "christoffel", "akv", "roundtrip", "charpoly", "jp-consistency", "all"}));
  verify_cmd->add_option("--input", verify.input);
  verify_cmd->add_option("--alphas", verify.alphas);
  verify_cmd->add_option("--n", verify.n)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--nu", verify.nu);
  verify_cmd->add_option("--xs", verify.xs)->delimiter(',');
  verify_cmd->add_option("--alpha", verify.alpha);
  verify_cmd->add_option("--beta", verify.beta);
  verify_cmd->add_option("--gamma", verify.gamma);
  verify_cmd->add_option("--count", verify.count)->check(CLI::PositiveNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e, out, err) : (app.exit(e, out, err), kExitUsage);
  }

  try {
    if (const char* env = std::getenv("TETRA_MODE"); env && *env) cfg.mode = detail::parse_mode(env);
    if (!mode_flag.empty()) cfg.mode = detail::parse_mode(mode_flag);
    float_tolerance().relative = cfg.float_tolerance;
    const bool exact = cfg.mode == Mode::EXACT;
    if (jp_cmd->parsed()) {
      cfg.command = "jp";
      return exact ? detail::cmd_jp<Rational>(jp, out) : detail::cmd_jp<double>(jp, out);
    }
    if (scan_cmd->parsed()) {
      cfg.command = "jp-scan";
      return detail::cmd_jp_scan(scan, cfg, out);
    }
    if (factor_cmd->parsed()) {
      cfg.command = "factor";
      return exact ? detail::cmd_factor<Rational>(factor, out, err) : detail::cmd_factor<double>(factor, out, err);
    }
    if (polys_cmd->parsed()) {
      cfg.command = "polys";
      return exact ? detail::cmd_polys<Rational>(polys, out) : detail::cmd_polys<double>(polys, out);
    }
    if (darboux_cmd->parsed()) {
      cfg.command = "darboux";
      return exact ? detail::cmd_darboux<Rational>(darboux, out, err) : detail::cmd_darboux<double>(darboux, out, err);
    }
    cfg.command = "verify";
    return detail::cmd_verify(verify, cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace tetra::cli
