// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The ffprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ffprime/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

#include "ffprime/counting.hpp"
#include "ffprime/family.hpp"
#include "ffprime/heuristic.hpp"
#include "ffprime/irreducible.hpp"
#include "ffprime/report.hpp"
#include "ffprime/sweep.hpp"

namespace ffprime::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<std::uint64_t> p;
  std::uint64_t k = 1;
  std::string modulus;
  std::optional<std::size_t> n;
  std::string poly;
  std::string a;
  std::optional<unsigned> trunc_D;
  std::string format = "csv";
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  std::string sample = "all";
  std::string q_list;
  std::string problem;
  bool timing = false;
  bool witnesses = false;
  bool loose_summand = false;
  std::string output;

  std::uint64_t effective_budget() const { return budget ? *budget : default_budget(); }
  bool json() const { return format == "json"; }
};

std::vector<std::uint64_t> parse_uint_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoull(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" 0123456789") != std::string::npos)
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

Field make_field(const Options& o) {
  if (!o.p) throw UsageError("--p is required");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!o.modulus.empty()) {
    modulus.emplace();
    for (auto v : parse_uint_list(o.modulus, "--modulus"))
      modulus->push_back(static_cast<std::uint32_t>(std::min<std::uint64_t>(v, std::numeric_limits<std::uint32_t>::max())));
  }
  return Field::make(*o.p, o.k, std::move(modulus));
}

std::size_t need_n(const Options& o) {
  if (!o.n) throw UsageError("--n is required");
  return *o.n;
}

Problem need_problem(const Options& o) {
  if (o.problem.empty()) throw UsageError("--problem is required");
  return parse_problem(o.problem);
}

Sampling parse_sampling(const Options& o) {
  if (o.sample == "all") return Sampling::all();
  constexpr std::string_view prefix = "random:";
  if (o.sample.rfind(prefix, 0) == 0) {
    const auto counts = parse_uint_list(o.sample.substr(prefix.size()), "--sample count");
    if (counts.size() != 1 || counts[0] == 0) throw UsageError("--sample random:COUNT needs one positive count");
    return Sampling::random(counts[0], o.seed);
  }
  throw UsageError("--sample must be 'all' or 'random:COUNT'");
}

void warn_even_q(std::uint64_t q, std::ostream& err) {
  if (q % 2 == 0)
    err << "warning: q = " << q << " is even; the asymptotic theorems assume odd q, so the main-term "
        << "comparison is informational only\n";
}

void warn_goldbach_char2(const Field& f, std::size_t n, std::ostream& err) {
  if (f.p() == 2 && n == 2)
    err << "warning: in characteristic 2 a quadratic target t^2 + t + c has no Goldbach representation\n";
}

void warn_capped(const SeriesValue& s, std::ostream& err) {
  if (s.capped)
    err << "warning: automatic truncation capped at D = " << s.truncation_degree << "; series error bound "
        << format_real(s.err_bound, 6) << '\n';
}

Poly goldbach_target(const Options& o, const Field& f) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  Poly F = parse_poly(o.poly, f);
  if (F.degree() < Degree(2)) throw UsageError("Goldbach target must have degree n >= 2");
  if (o.n && Degree(*o.n) != F.degree())
    throw UsageError("--n " + std::to_string(*o.n) + " does not match deg F = " + F.degree().to_string());
  if (!F.is_monic()) throw UsageError("Goldbach target must be monic");
  return F;
}

Poly twin_shift(const Options& o, const Field& f, std::size_t n) {
  if (o.a.empty()) throw UsageError("--a is required");
  Poly A = parse_poly(o.a, f);
  if (A.is_zero()) throw UsageError("twin shift A must be nonzero");
  if (A.degree() >= Degree(n)) throw UsageError("twin shift A must have degree below n");
  return A;
}

nlohmann::json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

// ---------------------------------------------------------------------------
// irr

int irr_count(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const std::size_t d = need_n(o);
  if (d < 1) throw UsageError("degree must be at least 1");
  const BigInt count = count_irreducible(f.q(), d);
  if (o.json()) {
    out << nlohmann::json{{"q", f.q()}, {"d", d}, {"count", big_json(count)}}.dump(2) << '\n';
  } else {
    out << "q,d,count\n" << f.q() << ',' << d << ',' << count.str() << '\n';
  }
  return kExitOk;
}

int irr_list(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const std::size_t d = need_n(o);
  if (d < 1) throw UsageError("degree must be at least 1");
  const auto polys = enumerate_monic(f, d, MonicFilter::irreducible, o.effective_budget());
  if (o.json()) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& g : polys) list.push_back(format_poly(g));
    out << nlohmann::json{{"q", f.q()}, {"d", d}, {"count", polys.size()}, {"polys", list}}.dump(2) << '\n';
  } else {
    out << "poly,symbolic\n";
    for (const auto& g : polys) out << csv_quote(format_poly(g)) << ',' << csv_quote(format_symbolic(g)) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// count

void emit_count(const Options& o, const TableRow& row, const CountReport& rep, std::ostream& out) {
  if (o.json()) {
    nlohmann::json j = row_to_json(row);
    if (rep.witnesses) {
      nlohmann::json w = nlohmann::json::array();
      for (const auto& g : *rep.witnesses) w.push_back(format_poly(g));
      j["witnesses"] = w;
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (!rep.witnesses) {
    write_csv(out, {row});
    return;
  }
  out << "problem,q,n,input,witness\n";
  for (const auto& g : *rep.witnesses)
    out << row.problem << ',' << row.q << ',' << row.n << ',' << csv_quote(row.input) << ','
        << csv_quote(format_poly(g)) << '\n';
}

CountOptions count_options(const Options& o) {
  CountOptions c;
  c.keep_witnesses = o.witnesses;
  c.loose_summand = o.loose_summand;
  c.jobs = o.jobs;
  c.budget = o.effective_budget();
  return c;
}

int goldbach_count_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = make_field(o);
  const Poly F = goldbach_target(o, f);
  const std::size_t n = F.degree().value();
  warn_even_q(f.q(), err);
  warn_goldbach_char2(f, n, err);
  const CountReport rep = goldbach_count(F, count_options(o));
  const Comparison cmp = compare(rep, o.trunc_D);
  warn_capped(cmp.series, err);
  emit_count(o, make_row(rep, cmp, o.timing), rep, out);
  return kExitOk;
}

int twin_count_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = make_field(o);
  const std::size_t n = need_n(o);
  if (n < 1) throw UsageError("twin degree n must be at least 1");
  const Poly A = twin_shift(o, f, n);
  warn_even_q(f.q(), err);
  const CountReport rep = twin_count(f, n, A, count_options(o));
  const Comparison cmp = compare(rep, o.trunc_D);
  warn_capped(cmp.series, err);
  emit_count(o, make_row(rep, cmp, o.timing), rep, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

int sweep_cmd(Problem problem, const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.problem = problem;
  cfg.n = need_n(o);
  if (problem == Problem::goldbach && cfg.n < 2) throw UsageError("Goldbach sweep needs n >= 2");
  if (problem == Problem::twin && cfg.n < 1) throw UsageError("twin sweep needs n >= 1");
  if (!o.q_list.empty()) {
    if (o.p) throw UsageError("give either --q or --p/--k, not both");
    cfg.q_list = parse_uint_list(o.q_list, "--q");
  } else {
    cfg.q_list = {make_field(o).q()};
  }
  for (auto q : cfg.q_list) {
    Field::of_order(q);  // rejects non-prime-powers before any work starts
    warn_even_q(q, err);
    if (problem == Problem::goldbach && q % 2 == 0 && cfg.n == 2)
      err << "warning: in characteristic 2 a quadratic target t^2 + t + c has no Goldbach representation\n";
  }
  cfg.sampling = parse_sampling(o);
  cfg.trunc_D = o.trunc_D;
  cfg.jobs = o.jobs;
  cfg.budget = o.effective_budget();
  cfg.loose_summand = o.loose_summand;
  cfg.timing = o.timing;

  const auto rows = sweep(cfg);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.error.empty() ? 0 : 1;
  if (failed) err << "warning: " << failed << " of " << rows.size() << " cells failed; see the count column\n";
  if (o.json())
    out << table_to_json(rows).dump(2) << '\n';
  else
    write_csv(out, rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// heuristic

constexpr std::string_view kHeuristicHeader =
    "problem,q,n,input,main_term_exact,main_term,series_value,series_err,truncation_degree,zero_flag,capped,"
    "err_t1,err_t2";

int heuristic_cmd(Problem problem, const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = make_field(o);
  Poly input(f);
  std::size_t n = 0;
  if (problem == Problem::goldbach) {
    input = goldbach_target(o, f);
    n = input.degree().value();
  } else {
    n = need_n(o);
    if (n < 1) throw UsageError("twin degree n must be at least 1");
    input = twin_shift(o, f, n);
  }
  warn_even_q(f.q(), err);
  const BigRational main = main_term(problem, n, f.q());
  const SeriesValue s = o.trunc_D ? singular_series(problem, input, *o.trunc_D) : singular_series(problem, input);
  warn_capped(s, err);
  const BoundReport b = theorem_error_bound(problem, n, f.q());

  if (o.json()) {
    nlohmann::json j{{"problem", problem_name(problem)},
                     {"q", f.q()},
                     {"n", n},
                     {"input", format_poly(input)},
                     {"main_term_exact", main.str()},
                     {"main_term", main.convert_to<double>()},
                     {"series_value", s.value},
                     {"series_err", s.err_bound},
                     {"truncation_degree", s.truncation_degree},
                     {"zero_flag", s.zero_flag},
                     {"capped", s.capped},
                     {"err_t1", b.term1()},
                     {"err_t2", b.term2_value()}};
    out << j.dump(2) << '\n';
  } else {
    out << kHeuristicHeader << '\n'
        << problem_name(problem) << ',' << f.q() << ',' << n << ',' << csv_quote(format_poly(input)) << ','
        << main.str() << ',' << format_real(main.convert_to<double>()) << ',' << format_real(s.value, 15) << ','
        << format_real(s.err_bound, 15) << ',' << s.truncation_degree << ',' << (s.zero_flag ? "true" : "false")
        << ',' << (s.capped ? "true" : "false") << ',' << format_real(b.term1()) << ','
        << format_real(b.term2_value()) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

class Verdicts {
 public:
  explicit Verdicts(std::ostream& out) : out_(out) {}
  void check(bool ok, const std::string& line) {
    out_ << (ok ? "PASS " : "FAIL ") << line << '\n';
    failed_ = failed_ || !ok;
  }
  int exit_code() const { return failed_ ? kExitVerifyFail : kExitOk; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

std::string label(const FamilySpec& fam) {
  return std::string(problem_name(fam.problem)) + " q=" + std::to_string(fam.field.q()) + " n=" + std::to_string(fam.n);
}

int verify_fibers(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const FamilySpec fam = FamilySpec::make(need_problem(o), f, need_n(o));
  const FiberReport rep = fiber_counts(fam, o.jobs, o.effective_budget());
  Verdicts v(out);
  if (rep.constant()) {
    v.check(true, "fibers " + label(fam) + ": N_g = " + rep.expected.str() + " for all " +
                      std::to_string(rep.per_g.size()) + " monic g of degree " + std::to_string(fam.d));
  } else {
    for (const auto& [g, count] : rep.per_g)
      if (BigInt(count) != rep.expected)
        v.check(false, "fibers " + label(fam) + ": N_g = " + std::to_string(count) + " for g = " + format_poly(g) +
                           ", expected " + rep.expected.str());
  }
  const BigInt want = fam.expected_size() * f.q();
  v.check(rep.total_ok(), "fiber total " + label(fam) + ": sum N_g = " + std::to_string(rep.total_pairs) +
                              (rep.total_ok() ? " = " : " != ") + "q^(I+1) = " + want.str());
  return v.exit_code();
}

int verify_family_size(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const FamilySpec fam = FamilySpec::make(need_problem(o), f, need_n(o));
  const std::uint64_t budget = o.effective_budget();
  if (fam.expected_size() > budget) throw BudgetExceeded("family size exceeds the enumeration budget");
  const auto members = static_cast<std::uint64_t>(fam.expected_size());
  std::optional<std::uint64_t> bad;
  for (std::uint64_t idx = 0; idx < members && !bad; ++idx)
    if (!family_member(family_member_at(fam, idx), fam)) bad = idx;
  Verdicts v(out);
  v.check(!bad, "family-size " + label(fam) + ": " + std::to_string(members) + " parametrized polynomials = q^I, I = " +
                    std::to_string(fam.I) + (bad ? ", non-member at index " + std::to_string(*bad) : ", all members"));
  try {
    const std::uint64_t filtered = family_size_by_filter(fam, budget);
    v.check(filtered == members, "family-size filter " + label(fam) + ": " + std::to_string(filtered) +
                                     " members among all bivariates of total degree <= " + std::to_string(fam.d));
  } catch (const BudgetExceeded&) {
    out << "SKIP family-size filter " << label(fam) << ": exhaustive filter exceeds the budget\n";
  }
  return v.exit_code();
}

int verify_double_count(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const Problem problem = need_problem(o);
  Poly input(f);
  std::size_t n = 0;
  if (problem == Problem::goldbach) {
    input = goldbach_target(o, f);
    n = input.degree().value();
  } else {
    n = need_n(o);
    input = twin_shift(o, f, n);
  }
  const FamilySpec fam = FamilySpec::make(problem, f, n);
  const DoubleCount dc = double_count_check(fam, input, o.jobs, o.effective_budget());
  Verdicts v(out);
  const std::string what = label(fam) + " input=" + format_poly(input);
  v.check(dc.holds(), "double-count " + what + ": N_g * count = " + dc.ng.str() + " * " +
                          std::to_string(dc.direct_count) + " = " + dc.lhs.str() + (dc.holds() ? " = " : " != ") +
                          "family pair count " + dc.rhs.str());
  const bool divides = dc.ng != 0 && dc.rhs % dc.ng == 0 && dc.rhs / dc.ng == dc.direct_count;
  v.check(divides, "double-count direct " + what + ": pair count / N_g = " +
                       (dc.ng != 0 ? BigInt(dc.rhs / dc.ng).str() : std::string("?")) +
                       ", direct count = " + std::to_string(dc.direct_count));
  return v.exit_code();
}

int verify_disc_locus(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  if (o.poly.empty()) throw UsageError("--poly is required (a polynomial in t and u)");
  const BiPoly bf = parse_bipoly(o.poly, f);
  const DiscLocus loc = disc_locus(bf);
  std::string roots;
  for (auto r : loc.roots) roots += (roots.empty() ? "" : ",") + std::to_string(r);
  Verdicts v(out);
  const bool ok = loc.roots.size() <= loc.bound;
  v.check(ok, "disc-locus q=" + std::to_string(f.q()) + ": disc_t = " + format_poly(loc.discriminant) + ", roots {" +
                  roots + "}, " + std::to_string(loc.roots.size()) + (ok ? " <= " : " > ") + "bound " +
                  std::to_string(loc.bound));
  return v.exit_code();
}

int verify_identities(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const std::size_t n = need_n(o);
  std::vector<Problem> problems;
  if (!o.problem.empty())
    problems.push_back(parse_problem(o.problem));
  else
    problems = n >= 2 ? std::vector<Problem>{Problem::goldbach, Problem::twin} : std::vector<Problem>{Problem::twin};
  Verdicts v(out);
  const std::string where = " q=" + std::to_string(f.q()) + " n=" + std::to_string(n);
  for (auto p : problems) {
    if (p == Problem::goldbach) {
      if (n < 2) throw UsageError("Goldbach identity needs n >= 2");
      const auto id = goldbach_sum_identity(f, n, o.jobs, o.effective_budget());
      v.check(id.holds(), "identities goldbach" + where + ": sum R(F) = " + std::to_string(id.lhs) +
                              (id.holds() ? " = " : " != ") + "pi(n-1) pi(n) = " + std::to_string(id.rhs));
    } else {
      if (n < 1) throw UsageError("twin identity needs n >= 1");
      const auto id = twin_sum_identity(f, n, o.jobs, o.effective_budget());
      v.check(id.holds(), "identities twin" + where + ": sum pi2(A) = " + std::to_string(id.lhs) +
                              (id.holds() ? " = " : " != ") + "pi(n)^2 - pi(n) = " + std::to_string(id.rhs));
    }
  }
  return v.exit_code();
}

// ---------------------------------------------------------------------------
// wiring

void add_field(CLI::App* c, Options& o, bool modulus = true) {
  c->add_option("--p", o.p, "field characteristic");
  c->add_option("--k", o.k, "extension degree")->check(CLI::Range(1, 64));
  if (modulus) c->add_option("--modulus", o.modulus, "defining polynomial over GF(p), comma list ascending");
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  c->add_option("--output", o.output, "write to this file instead of standard output");
  c->add_option("--budget", o.budget, "enumeration budget (default FFPRIME_BUDGET or 1e8)");
}

void add_jobs(CLI::App* c, Options& o) {
  c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
}

void add_trunc(CLI::App* c, Options& o) {
  c->add_option("--trunc-D", o.trunc_D, "singular series truncation degree (default automatic)")
      ->check(CLI::Range(1u, 64u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goldbach and twin-prime polynomial counts over finite fields", "ffprime"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, std::function<int(std::ostream&)>>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    return parent->add_subcommand(name, help);
  };

  CLI::App* irr = app.add_subcommand("irr", "monic irreducible polynomials")->require_subcommand(1);
  {
    auto* c = leaf(irr, "count", "number of monic irreducibles of degree n");
    add_field(c, o);
    add_common(c, o);
    c->add_option("--n", o.n, "degree");
    leaves.emplace_back(c, [&](std::ostream& s) { return irr_count(o, s); });
    auto* l = leaf(irr, "list", "list the monic irreducibles of degree n");
    add_field(l, o);
    add_common(l, o);
    l->add_option("--n", o.n, "degree");
    leaves.emplace_back(l, [&](std::ostream& s) { return irr_list(o, s); });
  }

  for (Problem problem : {Problem::goldbach, Problem::twin}) {
    const bool gb = problem == Problem::goldbach;
    CLI::App* top = app.add_subcommand(std::string(problem_name(problem)),
                                       gb ? "Goldbach representations F = g + h" : "twin pairs F, F + A")
                        ->require_subcommand(1);
    auto* c = leaf(top, "count", "exact count for one input, with the heuristic comparison");
    add_field(c, o);
    add_common(c, o);
    add_jobs(c, o);
    add_trunc(c, o);
    c->add_option("--n", o.n, gb ? "degree of F (inferred from --poly)" : "degree of the twin pair");
    if (gb) {
      c->add_option("--poly", o.poly, "monic target F");
      c->add_flag("--loose-summand", o.loose_summand, "accept summands of any degree below n");
    } else {
      c->add_option("--a", o.a, "nonzero shift A with deg A < n");
    }
    c->add_flag("--witnesses", o.witnesses, "list the summands or twin leaders");
    c->add_flag("--timing", o.timing, "fill elapsed_ms");
    leaves.emplace_back(c, [&, problem](std::ostream& s) {
      return problem == Problem::goldbach ? goldbach_count_cmd(o, s, err) : twin_count_cmd(o, s, err);
    });

    auto* s = leaf(top, "sweep", "counts and comparisons over many inputs and fields");
    add_field(s, o, false);
    add_common(s, o);
    add_jobs(s, o);
    add_trunc(s, o);
    s->add_option("--q", o.q_list, "comma list of field orders (instead of --p/--k)");
    s->add_option("--n", o.n, "degree");
    s->add_option("--sample", o.sample, "'all' or 'random:COUNT'");
    s->add_option("--seed", o.seed, "seed for random sampling");
    if (gb) s->add_flag("--loose-summand", o.loose_summand, "accept summands of any degree below n");
    s->add_flag("--timing", o.timing, "fill elapsed_ms");
    leaves.emplace_back(s, [&, problem](std::ostream& os) { return sweep_cmd(problem, o, os, err); });
  }

  CLI::App* heur = app.add_subcommand("heuristic", "main term, singular series and error terms")->require_subcommand(1);
  for (Problem problem : {Problem::goldbach, Problem::twin}) {
    auto* c = leaf(heur, std::string(problem_name(problem)), "heuristic prediction for one input");
    add_field(c, o);
    add_common(c, o);
    add_trunc(c, o);
    c->add_option("--n", o.n, "degree");
    if (problem == Problem::goldbach)
      c->add_option("--poly", o.poly, "monic target F");
    else
      c->add_option("--a", o.a, "nonzero shift A with deg A < n");
    leaves.emplace_back(c, [&, problem](std::ostream& s) { return heuristic_cmd(problem, o, s, err); });
  }

  CLI::App* ver = app.add_subcommand("verify", "exact checks; one PASS/FAIL line per invariant")->require_subcommand(1);
  {
    auto family_opts = [&](CLI::App* c) {
      add_field(c, o);
      c->add_option("--budget", o.budget, "enumeration budget");
      c->add_option("--output", o.output, "write to this file instead of standard output");
      c->add_option("--n", o.n, "degree");
    };
    auto* fib = leaf(ver, "fibers", "constant fiber sizes of the shift-specialization family");
    family_opts(fib);
    add_jobs(fib, o);
    fib->add_option("--problem", o.problem, "goldbach or twin");
    leaves.emplace_back(fib, [&](std::ostream& s) { return verify_fibers(o, s); });

    auto* fs = leaf(ver, "family-size", "family size against q^I");
    family_opts(fs);
    fs->add_option("--problem", o.problem, "goldbach or twin");
    leaves.emplace_back(fs, [&](std::ostream& s) { return verify_family_size(o, s); });

    auto* dc = leaf(ver, "double-count", "family pair count against the direct count");
    family_opts(dc);
    add_jobs(dc, o);
    dc->add_option("--problem", o.problem, "goldbach or twin");
    dc->add_option("--poly", o.poly, "Goldbach target F");
    dc->add_option("--a", o.a, "twin shift A");
    leaves.emplace_back(dc, [&](std::ostream& s) { return verify_double_count(o, s); });

    auto* dl = leaf(ver, "disc-locus", "zeros of the t-discriminant of f(t, u)");
    add_field(dl, o);
    dl->add_option("--output", o.output, "write to this file instead of standard output");
    dl->add_option("--poly", o.poly, "f(t, u), symbolic or rows 'c,c;c,c' (row i: u-coefficients of t^i)");
    leaves.emplace_back(dl, [&](std::ostream& s) { return verify_disc_locus(o, s); });

    auto* id = leaf(ver, "identities", "global sum identities for the counts");
    family_opts(id);
    add_jobs(id, o);
    id->add_option("--problem", o.problem, "goldbach or twin (default: both that apply)");
    leaves.emplace_back(id, [&](std::ostream& s) { return verify_identities(o, s); });
  }

  std::vector<std::string> argv_store{"ffprime"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto& [cmd, fn] : leaves) {
    if (!cmd->parsed()) continue;
    try {
      std::ostringstream buffer;
      const int code = fn(buffer);
      if (o.output.empty()) {
        out << buffer.str();
      } else {
        std::ofstream file(o.output, std::ios::binary);
        file << buffer.str();
        if (!file) throw std::runtime_error("cannot write " + o.output);
      }
      return code;
    } catch (const BudgetExceeded& e) {
      err << "error: " << e.what() << '\n';
      return kExitBudget;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace ffprime::cli
