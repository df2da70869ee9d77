/*
   Copyright 2026 The nacf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nacf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nacf/discrim.hpp"
#include "nacf/error.hpp"
#include "nacf/galois.hpp"
#include "nacf/irred.hpp"
#include "nacf/polyz.hpp"
#include "nacf/qfield.hpp"
#include "nacf/roots.hpp"

namespace nacf {

using json = nlohmann::ordered_json;

void RunConfig::validate() const
{
  if (window_lo >= window_hi)
    throw DomainError("prime window needs lo < hi");
  if (scan_lo < 2 || scan_lo > scan_hi)
    throw DomainError("scan range needs 2 <= lo <= hi");
  if (!(tol > 0))
    throw DomainError("tol must be positive");
  if (theta_nmax < 1)
    throw DomainError("theta_nmax must be >= 1");
  if (format != "json" && format != "tsv")
    throw DomainError("format must be json or tsv");
  if (threads < 1)
    throw DomainError("threads must be >= 1");
  if (prime_budget < 1)
    throw DomainError("prime_budget must be >= 1");
}

RunConfig default_config()
{
  RunConfig cfg;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  return cfg;
}

namespace {

std::string trim(const std::string &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template<typename T>
T parse_number(const std::string &key, const std::string &value)
{
  std::istringstream is(value);
  T v{};
  is >> v;
  if (!is || !is.eof())
    throw DomainError("config: bad value for " + key + ": " + value);
  return v;
}

} // namespace

void apply_config_text(RunConfig &cfg, const std::string &text)
{
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#')
      continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "window_lo")
      cfg.window_lo = parse_number<u64>(key, value);
    else if (key == "window_hi")
      cfg.window_hi = parse_number<u64>(key, value);
    else if (key == "scan_lo")
      cfg.scan_lo = parse_number<long>(key, value);
    else if (key == "scan_hi")
      cfg.scan_hi = parse_number<long>(key, value);
    else if (key == "tol")
      cfg.tol = parse_number<double>(key, value);
    else if (key == "theta_nmax")
      cfg.theta_nmax = parse_number<long>(key, value);
    else if (key == "format")
      cfg.format = value;
    else if (key == "threads")
      cfg.threads = parse_number<unsigned>(key, value);
    else if (key == "prime_budget")
      cfg.prime_budget = parse_number<int>(key, value);
    else
      throw DomainError("config line " + std::to_string(lineno) + ": unknown key " + key);
  }
}

void apply_config_file(RunConfig &cfg, const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str());
}

namespace {

struct Report {
  std::string command;
  json params = json::object();
  json summary = json::object();
  std::vector<json> rows;
  std::vector<std::string> violations;
};

std::string tsv_value(const json &v)
{
  return v.is_string() ? v.get<std::string>() : v.dump();
}

json stringify_integers(const json &v)
{
  if (v.is_number_integer())
    return v.dump();
  if (v.is_structured()) {
    json c = v;
    for (auto &x : c)
      x = stringify_integers(x);
    return c;
  }
  return v;
}

void emit(const Report &raw, const RunConfig &cfg, std::ostream &out)
{
  Report r = raw;
  r.params = stringify_integers(r.params);
  r.summary = stringify_integers(r.summary);
  for (auto &row : r.rows)
    row = stringify_integers(row);
  if (cfg.format == "json") {
    json doc;
    doc["command"] = r.command;
    doc["params"] = r.params;
    doc["summary"] = r.summary;
    doc["rows"] = r.rows;
    doc["violations"] = r.violations;
    out << doc.dump(2) << '\n';
    return;
  }
  auto line = [&](const std::string &kind, const json &rec) {
    out << "record=" << kind;
    for (const auto &[k, v] : rec.items())
      out << '\t' << k << '=' << tsv_value(v);
    out << '\n';
  };
  json head = r.params;
  head["command"] = r.command;
  line("params", head);
  line("summary", r.summary);
  for (const auto &row : r.rows)
    line("row", row);
  for (const auto &v : r.violations)
    line("violation", json{{"detail", v}});
}

std::string str(const mpz_class &z) { return z.get_str(); }
std::string str(const mpq_class &q) { return q.get_str(); }

std::string factorization_string(const IntegerFactorization &f)
{
  std::string s = f.sign < 0 ? "-1" : "1";
  for (const auto &[p, e] : f.factors)
    s += " * " + p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
  if (!f.complete())
    s += " * [" + f.unfactored.get_str() + "]";
  return s;
}

json cycle_json(const CycleType &ct) { return ct.to_string(); }

void cmd_roots(Report &r, const RunConfig &cfg, long n)
{
  r.params = {{"n", n}, {"tol", cfg.tol}};
  IntPolynomial f = build_f1n(n);
  ComplexRootSet rs = solve_roots(f, cfg.tol);
  F1nBoundsReport b = check_bounds_f1n(n, cfg.tol);
  r.summary = {{"degree", f.degree()},
               {"precision_bits", rs.precision_bits},
               {"min_modulus", b.min_mod},
               {"max_modulus", b.max_mod},
               {"lower_bound", b.lower},
               {"upper_bound", b.upper},
               {"max_dev_from_one", b.max_dev_from_one},
               {"max_radius", b.max_radius},
               {"bound_ok", b.bound_ok}};
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    r.rows.push_back({{"index", i},
                      {"re", rs.roots[i].real()},
                      {"im", rs.roots[i].imag()},
                      {"modulus", std::abs(rs.roots[i])},
                      {"residual", rs.residuals[i]},
                      {"radius", rs.radii[i]}});
  if (!b.bound_ok)
    r.violations.push_back("root modulus outside [1, (n+1)^(2/n)) for n = " + std::to_string(n));
}

void cmd_bounds_fpn(Report &r, const RunConfig &cfg, const std::string &ps, const std::string &Ns)
{
  mpz_class p(ps), N(Ns);
  r.params = {{"p", ps}, {"N", Ns}, {"tol", cfg.tol}};
  DigitExpansion e = expand_digits(p, N);
  FpNBoundsReport b = check_bounds_fpN(p, N, cfg.tol);
  json digits = json::array();
  for (const auto &d : e.digits)
    digits.push_back(str(d));
  r.summary = {{"digits", digits},    {"degree", b.degree},     {"min_modulus", b.min_mod},
               {"max_modulus", b.max_mod}, {"lower_bound", b.lower}, {"upper_bound", b.upper},
               {"bound_ok", b.bound_ok}};
  if (!b.bound_ok)
    r.violations.push_back("root modulus outside [p, p^2) for p = " + ps + ", N = " + Ns);
}

json scan_row_json(const ScanRow &row)
{
  json j = {{"n", row.n},
            {"degree", row.degree},
            {"content", str(row.content)},
            {"verdict", to_string(row.verdict)},
            {"certificate", to_string(row.kind)}};
  json applicable = json::array();
  for (auto k : row.theory.applicable)
    applicable.push_back(to_string(k));
  j["theory"] = applicable;
  if (row.theory.shift_prime)
    j["shift_prime"] = row.theory.shift_prime;
  json primes = json::array();
  for (u64 p : row.sieve.witness_primes)
    primes.push_back(p);
  j["sieve_verdict"] = to_string(row.sieve.verdict);
  j["sieve_primes"] = primes;
  j["sieve_degrees"] = row.sieve.surviving_degrees;
  if (row.quadratic_disc)
    j["quadratic_disc"] = str(*row.quadratic_disc);
  if (row.rational_root)
    j["rational_root"] = str(*row.rational_root);
  return j;
}

void scan_into(Report &r, const RunConfig &cfg, long lo, long hi, std::optional<long> m)
{
  auto rows = conjecture_scan(lo, hi, m, cfg.prime_budget, cfg.threads);
  long irreducible = 0;
  for (const auto &row : rows) {
    r.rows.push_back(scan_row_json(row));
    if (row.verdict == Verdict::Irreducible)
      ++irreducible;
    else
      r.violations.push_back("n = " + std::to_string(row.n) + ": " + to_string(row.verdict));
  }
  r.summary = {{"rows", rows.size()}, {"irreducible", irreducible}};
}

void cmd_disc(Report &r, long n, std::optional<long> m)
{
  r.params = {{"n", n}};
  if (m)
    r.params["m"] = *m;
  IntPolynomial f = m ? build_mf1n(*m, n) : build_f1n(n);
  DiscriminantReport d = discriminant(f);
  r.summary = {{"n", n},
               {"disc", str(d.disc)},
               {"factorization", factorization_string(d.factorization)},
               {"squarefree_part", str(d.squarefree_part)},
               {"is_square", d.is_square},
               {"quad_field", d.quad_field ? str(*d.quad_field) : std::string("none")},
               {"factorization_complete", d.factorization_complete}};
  std::optional<mpz_class> closed = m ? closed_form_disc_mf1n(*m, n) : std::optional(closed_form_disc_f1n(n));
  if (closed) {
    r.summary["closed_form"] = str(*closed);
    r.summary["closed_form_agrees"] = *closed == d.disc;
    if (*closed != d.disc)
      r.violations.push_back("discriminant differs from the closed form");
  }
}

void cmd_subfield(Report &r, long n)
{
  r.params = {{"n", n}};
  QuadraticSubfield q = quadratic_subfield(n);
  r.summary = {{"n", n},
               {"radicand", q.radicand ? str(*q.radicand) : std::string("none")},
               {"table_radicand", str(q.table_radicand)},
               {"table_radicand_reduced", str(q.table_radicand_reduced)},
               {"table_radicand_unreduced", q.table_radicand_unreduced},
               {"table_agrees", q.table_agrees}};
  if (!q.table_agrees)
    r.violations.push_back("tabulated radicand gives a different field");
}

json verdict_json(const GaloisVerdict &v)
{
  json j = {{"n", v.n},
            {"degree", v.degree},
            {"kind", to_string(v.kind)},
            {"group", v.group},
            {"group_order", str(v.group_order)},
            {"irreducibility", to_string(v.irreducibility)},
            {"disc_square", v.disc_square},
            {"usable_primes", v.usable_primes},
            {"skipped_primes", v.skipped_primes}};
  if (v.proof_rule)
    j["proof_rule"] = to_string(*v.proof_rule);
  if (v.transposition_prime) {
    j["transposition_prime"] = *v.transposition_prime;
    j["transposition_shape"] = cycle_json(*v.transposition_shape);
  }
  if (v.long_cycle_prime) {
    j["long_cycle_prime"] = *v.long_cycle_prime;
    j["long_cycle_length"] = v.long_cycle_length;
  }
  if (!v.fits.empty()) {
    j["best_fit"] = v.fits[0].group;
    j["best_total_variation"] = v.fits[0].total_variation;
  }
  if (!v.diagnostic.empty())
    j["diagnostic"] = v.diagnostic;
  return j;
}

GaloisOptions galois_options(const RunConfig &cfg)
{
  GaloisOptions o;
  o.threads = cfg.threads;
  o.sieve_budget = cfg.prime_budget;
  return o;
}

void cmd_galois(Report &r, const RunConfig &cfg, long n)
{
  r.params = {{"n", n}, {"window_lo", cfg.window_lo}, {"window_hi", cfg.window_hi}};
  GaloisVerdict v = classify_galois(n, cfg.window_lo, cfg.window_hi, galois_options(cfg));
  r.summary = verdict_json(v);
  for (const auto &fit : v.fits) {
    double chi = fit.chi_square;
    r.rows.push_back({{"group", fit.group},
                      {"total_variation", fit.total_variation},
                      {"chi_square", std::isinf(chi) ? json("inf") : json(chi)}});
  }
  if (n >= 4 && n <= 22) {
    std::string expected = table1_expected(n);
    r.summary["expected"] = expected;
    r.summary["agree"] = v.kind != GaloisKind::Inconclusive && v.group == expected;
    if (!r.summary["agree"].get<bool>())
      r.violations.push_back("n = " + std::to_string(n) + ": expected " + expected + ", got " +
                             (v.group.empty() ? to_string(v.kind) : v.group));
  }
}

void cmd_table1(Report &r, const RunConfig &cfg)
{
  r.params = {{"window_lo", cfg.window_lo}, {"window_hi", cfg.window_hi}};
  auto rows = verify_table1(cfg.window_lo, cfg.window_hi, galois_options(cfg));
  long agree = 0;
  for (const auto &row : rows) {
    json j = verdict_json(row.verdict);
    j["expected"] = row.expected;
    j["agree"] = row.agree;
    r.rows.push_back(j);
    if (row.agree)
      ++agree;
    else
      r.violations.push_back("n = " + std::to_string(row.n) + ": expected " + row.expected);
  }
  r.summary = {{"rows", rows.size()}, {"agree", agree}};
}

void cmd_theta(Report &r, long n_max)
{
  r.params = {{"n_max", n_max}};
  ThetaSeries th = theta_coefficients(n_max);
  r.summary = {{"n_max", n_max}, {"all_integral", th.all_integral}, {"omega", "primitive cube root of unity"}};
  for (long n = 1; n <= n_max; ++n)
    r.rows.push_back({{"n", n}, {"a", th.coeffs[n].to_string()}});
  if (!th.all_integral)
    r.violations.push_back("non-integral theta coefficient");
}

void cmd_thm51(Report &r, u64 p_max)
{
  r.params = {{"p_max", p_max}};
  Thm51Report t = theorem51_equivalence(p_max);
  r.summary = {{"checked", t.checked}, {"split", t.split_count}, {"violations", t.violations.size()}};
  for (const auto &v : t.violations) {
    r.rows.push_back({{"p", v.p}, {"split", v.split}, {"fifteen", v.fifteen}, {"a_p", std::to_string(v.a_p)}});
    r.violations.push_back("p = " + std::to_string(v.p));
  }
  FactReport x3 = fact_xy_mod3(p_max);
  r.summary["xy_mod3_checked"] = x3.checked;
  r.summary["xy_mod3_violations"] = x3.violations.size();
  for (const auto &v : x3.violations)
    r.violations.push_back("3 does not divide xy: " + v);
}

void cmd_eta(Report &r, long n_max)
{
  r.params = {{"n_max", n_max}};
  auto rows = eta_product_mismatch(n_max);
  r.summary = {{"pairs", rows.size()},
               {"restriction", "a + b = 24, so the product starts at q^1 like theta"}};
  FactReport c5 = fact_cube_mod5(200);
  r.summary["cube_mod5_checked"] = c5.checked;
  r.summary["cube_mod5_violations"] = c5.violations.size();
  for (const auto &v : c5.violations)
    r.violations.push_back("5 does not divide XY at " + v);
  for (const auto &m : rows) {
    json j = {{"a", m.a}, {"b", m.b}};
    if (m.first_mismatch) {
      j["first_mismatch"] = *m.first_mismatch;
      j["eta_coeff"] = std::to_string(m.eta_coeff);
      j["theta_coeff"] = std::to_string(m.theta_coeff);
    } else {
      j["first_mismatch"] = nullptr;
      r.violations.push_back("eta(" + std::to_string(m.a) + "t) eta(" + std::to_string(m.b) +
                             "t) matches theta up to " + std::to_string(n_max));
    }
    j["solutions_12p"] = m.solutions_12p;
    j["solutions_24p"] = m.solutions_24p;
    if (m.solutions_12p != 0)
      r.violations.push_back("index equation solvable for a = " + std::to_string(m.a));
    r.rows.push_back(j);
  }
}

void cmd_identity(Report &r, long n_lo, long n_hi)
{
  r.params = {{"n_lo", n_lo}, {"n_hi", n_hi}};
  long checked = 0;
  for (long n = n_lo; n <= n_hi; ++n)
    for (long k = 1; k <= n; ++k) {
      ++checked;
      if (!binom_identity_check(n, k))
        r.violations.push_back("n = " + std::to_string(n) + ", k = " + std::to_string(k));
    }
  r.summary = {{"checked", checked}, {"violations", r.violations.size()}};
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  RunConfig cfg = default_config();
  CLI::App app{"Polynomial family verification tool", "nacf"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  u64 window_lo = 0, window_hi = 0;
  long scan_lo = 0, scan_hi = 0, theta_nmax = 0;
  double tol = 0;
  std::string format;
  unsigned threads = 0;
  int prime_budget = 0;
  app.add_option("--config", config_path, "key = value config file");
  auto *o_wlo = app.add_option("--window-lo", window_lo, "prime window start");
  auto *o_whi = app.add_option("--window-hi", window_hi, "prime window end");
  auto *o_slo = app.add_option("--scan-lo", scan_lo, "scan range start");
  auto *o_shi = app.add_option("--scan-hi", scan_hi, "scan range end");
  auto *o_tol = app.add_option("--tol", tol, "root residual tolerance");
  auto *o_tn = app.add_option("--theta-nmax", theta_nmax, "theta length for thm51");
  auto *o_fmt = app.add_option("--format", format, "json or tsv");
  auto *o_thr = app.add_option("--threads", threads, "worker threads");
  auto *o_pb = app.add_option("--prime-budget", prime_budget, "sieve prime budget");

  long n = 0, m = 0, nmax = 0;
  std::string p_str, N_str;
  auto *roots = app.add_subcommand("roots", "roots of f_{1,n} and their modulus bounds");
  roots->add_option("n", n)->required();
  auto *fpn = app.add_subcommand("bounds-fpn", "root modulus bounds of f_{p,N}");
  fpn->add_option("p", p_str)->required();
  fpn->add_option("N", N_str)->required();
  auto *irr = app.add_subcommand("irreducible", "irreducibility certificate for one n");
  irr->add_option("n", n)->required();
  auto *irr_m = irr->add_option("--m", m, "generalized family parameter");
  auto *scan = app.add_subcommand("scan", "irreducibility scan over the scan range");
  auto *scan_m = scan->add_option("--m", m, "generalized family parameter");
  auto *disc = app.add_subcommand("disc", "discriminant with factorization");
  disc->add_option("n", n)->required();
  auto *disc_m = disc->add_option("--m", m, "generalized family parameter");
  auto *sub = app.add_subcommand("subfield", "quadratic subfield of the splitting field");
  sub->add_option("n", n)->required();
  auto *gal = app.add_subcommand("galois", "Galois group of f_{1,n}");
  gal->add_option("n", n)->required();
  auto *tab = app.add_subcommand("verify-table1", "Galois groups for 4 <= n <= 22");
  auto *theta = app.add_subcommand("theta", "theta series coefficients");
  auto *theta_n = theta->add_option("nmax", nmax, "last coefficient (default theta_nmax)");
  auto *thm = app.add_subcommand("thm51", "split-prime equivalence up to pmax");
  thm->add_option("pmax", nmax)->required();
  auto *eta = app.add_subcommand("eta", "eta-product mismatch search");
  eta->add_option("nmax", nmax)->required();
  auto *ident = app.add_subcommand("identity-check", "binomial sum identity");
  long id_lo = 4, id_hi = 100;
  ident->add_option("--n-lo", id_lo, "first n");
  ident->add_option("--n-hi", id_hi, "last n");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      apply_config_file(cfg, config_path);
    } else if (const char *env = std::getenv("NACF_CONFIG"); env && *env) {
      apply_config_file(cfg, env);
    }
    if (o_wlo->count()) cfg.window_lo = window_lo;
    if (o_whi->count()) cfg.window_hi = window_hi;
    if (o_slo->count()) cfg.scan_lo = scan_lo;
    if (o_shi->count()) cfg.scan_hi = scan_hi;
    if (o_tol->count()) cfg.tol = tol;
    if (o_tn->count()) cfg.theta_nmax = theta_nmax;
    if (o_fmt->count()) cfg.format = format;
    if (o_thr->count()) cfg.threads = threads;
    if (o_pb->count()) cfg.prime_budget = prime_budget;
    cfg.validate();
  } catch (const DomainError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Report r;
  try {
    if (roots->parsed()) {
      r.command = "roots";
      cmd_roots(r, cfg, n);
    } else if (fpn->parsed()) {
      r.command = "bounds-fpn";
      cmd_bounds_fpn(r, cfg, p_str, N_str);
    } else if (irr->parsed()) {
      r.command = "irreducible";
      std::optional<long> mm = irr_m->count() ? std::optional(m) : std::nullopt;
      r.params = {{"n", n}, {"prime_budget", cfg.prime_budget}};
      if (mm)
        r.params["m"] = *mm;
      scan_into(r, cfg, n, n, mm);
    } else if (scan->parsed()) {
      r.command = "scan";
      std::optional<long> mm = scan_m->count() ? std::optional(m) : std::nullopt;
      long lo = mm ? std::max(3L, cfg.scan_lo) : cfg.scan_lo;
      r.params = {{"n_lo", lo}, {"n_hi", cfg.scan_hi}, {"prime_budget", cfg.prime_budget}};
      if (mm)
        r.params["m"] = *mm;
      scan_into(r, cfg, lo, cfg.scan_hi, mm);
    } else if (disc->parsed()) {
      r.command = "disc";
      cmd_disc(r, n, disc_m->count() ? std::optional(m) : std::nullopt);
    } else if (sub->parsed()) {
      r.command = "subfield";
      cmd_subfield(r, n);
    } else if (gal->parsed()) {
      r.command = "galois";
      cmd_galois(r, cfg, n);
    } else if (tab->parsed()) {
      r.command = "verify-table1";
      cmd_table1(r, cfg);
    } else if (theta->parsed()) {
      r.command = "theta";
      cmd_theta(r, theta_n->count() ? nmax : cfg.theta_nmax);
    } else if (thm->parsed()) {
      r.command = "thm51";
      if (nmax < 0)
        throw DomainError("pmax must be positive");
      cmd_thm51(r, static_cast<u64>(nmax));
    } else if (eta->parsed()) {
      r.command = "eta";
      cmd_eta(r, nmax);
    } else if (ident->parsed()) {
      r.command = "identity-check";
      if (id_lo < 1 || id_hi < id_lo)
        throw DomainError("identity-check needs 1 <= n-lo <= n-hi");
      cmd_identity(r, id_lo, id_hi);
    }
  } catch (const DomainError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "failure: " << e.what() << '\n';
    return kExitViolation;
  }

  emit(r, cfg, out);
  for (const auto &v : r.violations)
    err << "violation: " << v << '\n';
  return r.violations.empty() ? kExitOk : kExitViolation;
}

} // namespace nacf
