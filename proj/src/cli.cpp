#include "sumrank/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sumrank/bounds.hpp"
#include "sumrank/codes.hpp"
#include "sumrank/genericity.hpp"
#include "sumrank/volumes.hpp"

namespace sumrank::cli {

namespace {

// Cell contents: empty, text (big integers travel as decimal text), integer, real, flag.
using Cell = std::variant<std::monostate, std::string, long long, double, bool>;

struct Table {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Cell opt_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_real(v);
      return v;
    }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = t.command;
    doc["params"] = t.params;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = json_cell(r[i]);
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
    return os.str();
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
    os << '\n';
  }
  return os.str();
}

struct Config {
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 0;

  std::int64_t q = 2;
  int m = 1;
  int eta = 1;
  std::optional<int> ell;
  std::optional<int> n;

  std::optional<int> radius;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<double> epsilon;

  int grid = 64;
  std::vector<double> deltas;
  std::string sp_mode = "limit-ii";
  std::string gv_mode = "finite";

  std::vector<std::string> bounds{"A", "U", "BR"};
  std::vector<int> ells;
  int m_cap = 1 << 22;
  std::uint64_t br_bits = std::uint64_t{1} << 20;

  std::uint64_t trials = 500;
  std::string predicate = "msrd";
  std::uint64_t cap = kDefaultEnumerationCap;
};

CodeParams code_params(const Config& c) {
  int ell = 0;
  if (c.ell) {
    ell = *c.ell;
    if (c.n && *c.n != ell * c.eta) throw std::invalid_argument("--n must equal ell * eta");
  } else if (c.n) {
    if (c.eta < 1 || *c.n % c.eta != 0) throw std::invalid_argument("--n must be a multiple of --eta");
    ell = *c.n / c.eta;
  } else {
    throw std::invalid_argument("one of --ell or --n is required");
  }
  return CodeParams::make(c.q, c.m, c.eta, ell);
}

nlohmann::ordered_json params_json(const CodeParams& p) {
  return {{"q", p.q}, {"m", p.m}, {"eta", p.eta}, {"ell", p.ell}, {"n", p.n()}};
}

Table cmd_volume(const Config& c) {
  const auto p = code_params(c);
  const int radius = c.radius.value_or(p.max_weight());
  const VolumeTable table(p, radius);
  Table t{"volume", params_json(p), {"t", "sphere", "ball"}, {}};
  t.params["radius"] = radius;
  for (int r = 0; r <= radius; ++r) t.rows.push_back({static_cast<long long>(r), table.sphere(r).get_str(), table.ball(r).get_str()});
  return t;
}

Table cmd_bounds(const Config& c) {
  const auto p = code_params(c);
  const VolumeTable table(p);
  Table t{"bounds", params_json(p), {"d", "k_singleton", "k_sp_exact", "k_sp_simplified", "k_gv_exact", "k_gv_simplified"}, {}};
  if (c.k) {
    t.params["k"] = *c.k;
    for (const char* col : {"sp_holds", "sp_simplified_holds", "gv_holds", "gv_simplified_holds"}) t.columns.push_back(col);
  }
  std::vector<int> ds;
  if (c.d) {
    ds.push_back(*c.d);
  } else {
    for (int d = 1; d <= p.max_weight(); ++d) ds.push_back(d);
  }
  for (int d : ds) {
    std::vector<Cell> row{static_cast<long long>(d), static_cast<long long>(singleton_max_k(p, d)), static_cast<long long>(sp_max_k(table, d)),
                          static_cast<long long>(sp_simplified_max_k(p, d)), static_cast<long long>(gv_max_k(table, d))};
    row.push_back(d > 2 ? Cell{static_cast<long long>(gv_simplified_max_k(p, d))} : Cell{});
    if (c.k) {
      row.push_back(sp_holds(table, *c.k, d));
      row.push_back(sp_simplified_holds(p, *c.k, d));
      row.push_back(gv_holds(table, *c.k, d));
      row.push_back(d > 2 ? Cell{gv_simplified_holds(p, *c.k, d)} : Cell{});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_curve(const Config& c) {
  const auto p = code_params(c);
  std::vector<double> deltas = c.deltas;
  if (deltas.empty()) {
    if (c.grid < 1) throw std::invalid_argument("--grid must be >= 1");
    for (int i = 1; i <= c.grid; ++i) deltas.push_back(static_cast<double>(i) / c.grid);
  }
  for (double dl : deltas)
    if (!(dl > 0 && dl <= 1)) throw std::invalid_argument("delta values must lie in (0, 1]");

  CurveOptions opts;
  opts.sp_mode = c.sp_mode == "limit-i" ? SpAsymptoticMode::LimitI : c.sp_mode == "finite" ? SpAsymptoticMode::Finite : SpAsymptoticMode::LimitII;
  opts.gv_mode = c.gv_mode == "limit" ? GvAsymptoticMode::Limit : GvAsymptoticMode::Finite;

  const VolumeTable table(p);
  const auto rows = rate_curve(table, deltas, opts);
  Table t{"curve-sp-gv",
          params_json(p),
          {"delta", "d", "R_singleton", "R_sp_exact", "R_sp_simplified", "R_sp_asymptotic", "R_gv_exact", "R_gv_simplified",
           "R_gv_asymptotic", "R_sp_asymptotic_raw", "R_gv_asymptotic_raw"},
          {}};
  t.params["sp_asymptotic"] = c.sp_mode;
  t.params["gv_asymptotic"] = c.gv_mode;
  auto clamped = [](const std::optional<double>& v) { return v ? Cell{clamp_rate(*v)} : Cell{}; };
  for (const auto& r : rows) {
    t.rows.push_back({r.delta, static_cast<long long>(r.d), r.singleton, r.sp_exact, r.sp_simplified, clamp_rate(r.sp_asymptotic), r.gv_exact,
                      opt_cell(r.gv_simplified), clamped(r.gv_asymptotic), r.sp_asymptotic, opt_cell(r.gv_asymptotic)});
  }
  return t;
}

Table cmd_genericity(const Config& c) {
  const auto p = code_params(c);
  if (c.k) {
    Table t{"genericity", params_json(p), {"bound", "lower", "upper", "raw_lower", "failure_logq"}, {}};
    t.params["k"] = *c.k;
    auto add = [&](const char* name, auto&& compute) {
      try {
        const ProbabilityBound b = compute();
        t.rows.push_back({std::string(name), opt_cell(b.lower), opt_cell(b.upper), b.raw_lower, b.failure_logq});
      } catch (const std::invalid_argument&) {
        // bound not defined at these parameters
        t.rows.push_back({std::string(name), Cell{}, Cell{}, Cell{}, Cell{}});
      }
    };
    add("A", [&] { return msrd_prob_lb_A(p.q, p.m, p.eta, p.ell, *c.k); });
    add("U_lemma", [&] { return msrd_prob_lb_U(p.q, p.m, p.eta, p.ell, *c.k, UVariant::LemmaConsistent); });
    add("U_printed", [&] { return msrd_prob_lb_U(p.q, p.m, p.eta, p.ell, *c.k, UVariant::AsPrinted); });
    add("BR", [&] { return msrd_prob_bounds_BR(p, *c.k, c.br_bits); });
    if (std::all_of(t.rows.begin(), t.rows.end(), [](const auto& r) { return std::holds_alternative<std::monostate>(r[3]); }))
      throw std::invalid_argument("no bound is defined for k = " + std::to_string(*c.k));
    return t;
  }
  if (!c.d) throw std::invalid_argument("genericity needs --k (MSRD bounds) or --d (GV attainment)");
  const VolumeTable table(p, std::max(0, std::min(*c.d - 1, p.max_weight())));
  const double eps = c.epsilon.value_or(gv_attainment_epsilon_max(table, *c.d));
  const auto a = gv_attainment_dimension(table, *c.d, eps);
  Table t{"genericity", params_json(p), {"d", "epsilon", "epsilon_max", "k"}, {}};
  t.rows.push_back({static_cast<long long>(*c.d), a.epsilon, a.epsilon_max, static_cast<long long>(a.k)});
  return t;
}

Table cmd_mmin(const Config& c) {
  if (!c.n || !c.k) throw std::invalid_argument("mmin needs --n and --k");
  const int n = *c.n, k = *c.k;
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  bool want_a = false, want_u = false, want_ul = false, want_up = false, want_br = false;
  for (const auto& b : c.bounds) {
    if (b == "A")
      want_a = true;
    else if (b == "U")
      want_u = true;
    else if (b == "U_lemma")
      want_ul = true;
    else if (b == "U_printed")
      want_up = true;
    else if (b == "BR")
      want_br = true;
    else
      throw std::invalid_argument("unknown bound '" + b + "' (expected A, U, U_lemma, U_printed, BR)");
  }
  want_ul = want_ul || want_u;
  want_up = want_up || want_u;

  std::vector<int> ells = c.ells;
  if (ells.empty()) {
    for (int e = 1; e <= n; ++e)
      if (n % e == 0) ells.push_back(e);
  }
  for (int e : ells)
    if (e < 1 || n % e != 0) throw std::invalid_argument("ell = " + std::to_string(e) + " does not divide n");

  Table t{"mmin", {{"q", c.q}, {"n", n}, {"k", k}, {"m_cap", c.m_cap}}, {"ell", "mmin_A", "mmin_U_lemma", "mmin_U_printed", "mmin_BR"}, {}};
  t.rows.resize(ells.size());
  std::exception_ptr failure;
  const long count = static_cast<long>(ells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      const int ell = ells[i];
      auto solve = [&](bool wanted, BoundKind kind) -> Cell {
        if (!wanted) return {};
        const auto m = min_extension_degree(c.q, n, k, ell, kind, c.m_cap);
        return m ? Cell{static_cast<long long>(*m)} : Cell{std::string("none")};
      };
      t.rows[i] = {static_cast<long long>(ell), solve(want_a, BoundKind::A), solve(want_ul, BoundKind::ULemma), solve(want_up, BoundKind::UPrinted),
                   solve(want_br, BoundKind::BRLower)};
    } catch (...) {
#pragma omp critical(mmin_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

Table cmd_montecarlo(const Config& c) {
  const auto p = code_params(c);
  if (!c.k) throw std::invalid_argument("montecarlo needs --k");
  if (c.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  const int k = *c.k;
  if (k < 1 || k >= p.n()) throw std::invalid_argument("need 1 <= k < n");
  const ExtField field = make_ext_field(p);
  CodePredicate pred;
  int d = p.n() - k + 1;
  if (c.predicate == "msrd") {
    pred = msrd_predicate(field, c.cap);
  } else {
    if (!c.d) throw std::invalid_argument("--predicate distance needs --d");
    d = *c.d;
    pred = min_distance_predicate(field, d, c.cap);
  }
  const auto res = monte_carlo(field, p, k, c.trials, c.seed, pred);
  Table t{"montecarlo", params_json(p), {"predicate", "k", "d", "trials", "successes", "estimate", "seed", "lower_A", "lower_U"}, {}};
  auto lower = [&](auto&& f) -> Cell {
    if (c.predicate != "msrd") return {};
    try {
      return opt_cell(f().lower);
    } catch (const std::invalid_argument&) {
      return {};
    }
  };
  t.rows.push_back({c.predicate, static_cast<long long>(k), static_cast<long long>(d), static_cast<long long>(res.trials),
                    static_cast<long long>(res.successes), res.estimate, std::to_string(res.seed),
                    lower([&] { return msrd_prob_lb_A(p.q, p.m, p.eta, p.ell, k); }),
                    lower([&] { return msrd_prob_lb_U(p.q, p.m, p.eta, p.ell, k); })});
  return t;
}

void add_code_options(CLI::App* sub, Config& c) {
  sub->add_option("--q", c.q, "field size of the base field (prime power)")->required();
  sub->add_option("--m", c.m, "extension degree")->required();
  sub->add_option("--eta", c.eta, "block length")->required();
  sub->add_option("--ell", c.ell, "number of blocks");
  sub->add_option("--n", c.n, "code length, a multiple of eta");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Sum-rank-metric bounds, volumes and MSRD genericity"};
  app.name("sumrank");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out_path, "write output to this file instead of standard output");
  app.add_option("--seed", c.seed, "64-bit seed for randomized commands");

  auto* volume = app.add_subcommand("volume", "sphere and ball volumes for each radius");
  add_code_options(volume, c);
  volume->add_option("--radius", c.radius, "largest radius (default ell * mu)");

  auto* bounds = app.add_subcommand("bounds", "largest k allowed by Singleton, sphere-packing and GV at each d");
  add_code_options(bounds, c);
  bounds->add_option("--d", c.d, "single minimum distance (default: every d)");
  bounds->add_option("--k", c.k, "also test each inequality at this dimension");

  auto* curve = app.add_subcommand("curve-sp-gv", "rate curves over a grid of relative distances");
  add_code_options(curve, c);
  auto* grid_opt = curve->add_option("--grid", c.grid, "use delta = i/N for i = 1..N");
  curve->add_option("--deltas", c.deltas, "explicit comma-separated delta list")->delimiter(',')->excludes(grid_opt);
  curve->add_option("--sp-asymptotic", c.sp_mode, "asymptotic SP form")->check(CLI::IsMember({"limit-ii", "limit-i", "finite"}));
  curve->add_option("--gv-asymptotic", c.gv_mode, "asymptotic GV form")->check(CLI::IsMember({"finite", "limit"}));

  auto* gen = app.add_subcommand("genericity", "MSRD probability bounds (--k) or GV-attainment dimension (--d)");
  add_code_options(gen, c);
  auto* gen_k = gen->add_option("--k", c.k, "code dimension");
  auto* gen_d = gen->add_option("--d", c.d, "target minimum distance")->excludes(gen_k);
  gen->add_option("--epsilon", c.epsilon, "slack epsilon (default: largest admissible)")->needs(gen_d);
  gen->add_option("--br-bits", c.br_bits, "size limit in bits for the exact BR upper bound");

  auto* mmin = app.add_subcommand("mmin", "smallest extension degree with a positive MSRD bound, per divisor ell of n");
  mmin->add_option("--q", c.q, "base field size")->required();
  mmin->add_option("--n", c.n, "code length")->required();
  mmin->add_option("--k", c.k, "code dimension")->required();
  mmin->add_option("--bounds", c.bounds, "subset of A,U,U_lemma,U_printed,BR")->delimiter(',');
  mmin->add_option("--ells", c.ells, "divisors of n to evaluate (default: all)")->delimiter(',');
  mmin->add_option("--m-cap", c.m_cap, "largest m searched");

  auto* mc = app.add_subcommand("montecarlo", "empirical frequency over seeded random systematic codes");
  add_code_options(mc, c);
  mc->add_option("--k", c.k, "code dimension")->required();
  mc->add_option("--trials", c.trials, "number of trials");
  mc->add_option("--predicate", c.predicate, "msrd or distance")->check(CLI::IsMember({"msrd", "distance"}));
  mc->add_option("--d", c.d, "distance threshold for --predicate distance");
  mc->add_option("--cap", c.cap, "enumeration cap per code");

  std::vector<std::string> storage{"sumrank"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Table table;
  try {
    if (volume->parsed())
      table = cmd_volume(c);
    else if (bounds->parsed())
      table = cmd_bounds(c);
    else if (curve->parsed())
      table = cmd_curve(c);
    else if (gen->parsed())
      table = cmd_genericity(c);
    else if (mmin->parsed())
      table = cmd_mmin(c);
    else
      table = cmd_montecarlo(c);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << " (raise --cap)\n";
    return 2;
  }

  const std::string text = render(table, c.format);
  if (c.out_path.empty()) {
    out << text;
    out.flush();
    if (!out) {
      err << "error: failed writing output\n";
      return 1;
    }
    return 0;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write " << c.out_path << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace sumrank::cli
