#include "sumrank/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

namespace sumrank {

namespace {

void check_distance(const CodeParams& p, int d) {
  if (d < 1 || d > p.max_weight())
    throw std::invalid_argument("d = " + std::to_string(d) + " outside [1, " + std::to_string(p.max_weight()) + "]");
}

void check_dimension(const CodeParams& p, int k) {
  if (k < 1 || k > p.n()) throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, " + std::to_string(p.n()) + "]");
}

void check_table_radius(const VolumeTable& table, int radius) {
  if (radius > table.radius_max())
    throw std::invalid_argument("volume table too small: need radius " + std::to_string(radius));
}

// Largest k in [1, n] with holds(k), assuming holds is monotone
// non-increasing in k; 0 when holds(1) fails.
template <class Pred>
int largest_k(int n, Pred holds) {
  if (n < 1 || !holds(1)) return 0;
  int lo = 1, hi = n;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (holds(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Unchecked predicates, valid for any k >= 0.
bool sp_pred(const VolumeTable& table, int k, int d) {
  const auto& p = table.params();
  return table.ball((d - 1) / 2) <= power(p.q, static_cast<std::int64_t>(p.m) * (p.n() - k));
}

bool gv_pred(const VolumeTable& table, int k, int d) {
  const auto& p = table.params();
  return table.ball(d - 1) < power(p.q, static_cast<std::int64_t>(p.m) * (p.n() - k + 1));
}

bool sp_simplified_pred(const CodeParams& p, double log_gamma, int k, int d) {
  const double t = (d - 1) / 2;
  const double ell = p.ell;
  const double lhs = static_cast<double>(p.m) * k + (p.m + p.eta - t / ell) * t - ell / 4.0 - ell * log_gamma;
  return lhs <= static_cast<double>(p.m) * p.n();
}

double gv_simplified_offset(const CodeParams& p, double log_gamma, int d) {
  const double q = static_cast<double>(p.q);
  const double ell = p.ell;
  const double r = d - 1;
  return std::log(r) / std::log(q) + logq(binomial(p.ell + d - 2, p.ell - 1), q) + ell * log_gamma +
         r * (p.m + p.eta - r / ell);
}

bool gv_simplified_pred(const CodeParams& p, double offset, int k) {
  return static_cast<double>(p.m) * (k - 1) + offset < static_cast<double>(p.m) * p.n();
}

}  // namespace

int singleton_max_k(const CodeParams& p, int d) {
  check_distance(p, d);
  const std::int64_t first = p.n() - d + 1;
  // floor(eta (ell m - d + 1) / m); the numerator is positive since d <= ell mu <= ell m.
  const std::int64_t second = static_cast<std::int64_t>(p.eta) * (static_cast<std::int64_t>(p.ell) * p.m - d + 1) / p.m;
  return static_cast<int>(std::max<std::int64_t>(0, std::min(first, second)));
}

bool sp_holds(const VolumeTable& table, int k, int d) {
  const auto& p = table.params();
  check_dimension(p, k);
  check_distance(p, d);
  check_table_radius(table, (d - 1) / 2);
  return sp_pred(table, k, d);
}

int sp_max_k(const VolumeTable& table, int d) {
  const auto& p = table.params();
  check_distance(p, d);
  check_table_radius(table, (d - 1) / 2);
  return largest_k(p.n(), [&](int k) { return sp_pred(table, k, d); });
}

bool sp_simplified_holds(const CodeParams& p, int k, int d) {
  check_dimension(p, k);
  check_distance(p, d);
  return sp_simplified_pred(p, log_gamma_q(p.q), k, d);
}

int sp_simplified_max_k(const CodeParams& p, int d) {
  check_distance(p, d);
  const double lg = log_gamma_q(p.q);
  return largest_k(p.n(), [&](int k) { return sp_simplified_pred(p, lg, k, d); });
}

bool gv_holds(const VolumeTable& table, int k, int d) {
  const auto& p = table.params();
  check_dimension(p, k);
  check_distance(p, d);
  check_table_radius(table, d - 1);
  return gv_pred(table, k, d);
}

int gv_max_k(const VolumeTable& table, int d) {
  const auto& p = table.params();
  check_distance(p, d);
  check_table_radius(table, d - 1);
  return largest_k(p.n(), [&](int k) { return gv_pred(table, k, d); });
}

bool gv_simplified_holds(const CodeParams& p, int k, int d) {
  check_dimension(p, k);
  check_distance(p, d);
  if (d <= 2) throw std::invalid_argument("simplified GV bound requires d > 2");
  return gv_simplified_pred(p, gv_simplified_offset(p, log_gamma_q(p.q), d), k);
}

int gv_simplified_max_k(const CodeParams& p, int d) {
  check_distance(p, d);
  if (d <= 2) throw std::invalid_argument("simplified GV bound requires d > 2");
  const double offset = gv_simplified_offset(p, log_gamma_q(p.q), d);
  return largest_k(p.n(), [&](int k) { return gv_simplified_pred(p, offset, k); });
}

double sp_asymptotic_rate(double delta, const AsymptoticParams& asym, SpAsymptoticMode mode) {
  if (!(delta >= 0)) throw std::invalid_argument("delta must be >= 0");
  if (mode == SpAsymptoticMode::LimitI) {
    if (!(asym.xi > 0)) throw std::invalid_argument("xi must be > 0");
    const double xi = asym.xi;
    return delta * delta / (4 * xi) - delta / 2 * (1 + 1 / xi) + 1;
  }
  if (!asym.code) throw std::invalid_argument("this asymptotic SP form needs concrete parameters");
  const auto& p = *asym.code;
  const double eta = p.eta, m = p.m, n = p.n();
  const double tail = (0.25 + log_gamma_q(p.q)) / (eta * m);
  if (mode == SpAsymptoticMode::LimitII) return delta * delta * eta / (4 * m) - delta / 2 * (1 + eta / m) + tail + 1;
  return delta * delta * eta / (4 * m) - delta * (0.5 + eta / m * (0.5 + 1 / n)) + (1 / n) * (1 + eta / m + eta / (n * m)) +
         tail + 1;
}

double gv_asymptotic_rate(double delta, const AsymptoticParams& asym, GvAsymptoticMode mode) {
  if (!(delta >= 0)) throw std::invalid_argument("delta must be >= 0");
  if (mode == GvAsymptoticMode::Limit) {
    if (!(asym.xi > 0)) throw std::invalid_argument("xi must be > 0");
    const double xi = asym.xi;
    return delta * delta / xi - delta * (1 + 1 / xi) + 1;
  }
  if (!asym.code) throw std::invalid_argument("the finite GV form needs concrete parameters");
  const auto& p = *asym.code;
  const long d = std::lround(delta * p.n());
  if (d < 2) throw std::invalid_argument("finite GV rate needs delta n >= 2");
  const double eta = p.eta, m = p.m, n = p.n(), ell = p.ell;
  const double lnq = std::log(static_cast<double>(p.q));
  const double dl = static_cast<double>(d) / n;
  double log_sum = 0.0;
  for (long i = 1; i <= d - 1; ++i) log_sum += std::log1p((ell - 1) / static_cast<double>(i));
  log_sum = (log_sum + std::log(static_cast<double>(d - 1))) / lnq;
  return dl * dl * eta / m - dl * (1 + eta / m + 2 * eta / (n * m)) + 1 + 1 / n + eta / (n * m) + eta / (n * n * m) -
         log_sum / (m * n) - log_gamma_q(p.q) / (eta * m);
}

int delta_to_distance(const CodeParams& p, double delta) {
  const long d = std::lround(delta * p.n());
  return static_cast<int>(std::clamp<long>(d, 1, p.max_weight()));
}

double clamp_rate(double r) { return std::clamp(r, 0.0, 1.0); }

std::vector<CurveRow> rate_curve(const VolumeTable& table, std::span<const double> deltas, const CurveOptions& options) {
  const auto& p = table.params();
  check_table_radius(table, p.max_weight() - 1);
  const auto asym = AsymptoticParams::of(p);
  const double n = p.n();
  std::vector<CurveRow> rows(deltas.size());
  std::exception_ptr failure;
  const long count = static_cast<long>(deltas.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      CurveRow row;
      row.delta = deltas[i];
      row.d = delta_to_distance(p, row.delta);
      row.singleton = singleton_max_k(p, row.d) / n;
      row.sp_exact = sp_max_k(table, row.d) / n;
      row.sp_simplified = sp_simplified_max_k(p, row.d) / n;
      row.sp_asymptotic = sp_asymptotic_rate(row.delta, asym, options.sp_mode);
      row.gv_exact = gv_max_k(table, row.d) / n;
      if (row.d > 2) row.gv_simplified = gv_simplified_max_k(p, row.d) / n;
      if (options.gv_mode == GvAsymptoticMode::Limit || std::lround(row.delta * n) >= 2)
        row.gv_asymptotic = gv_asymptotic_rate(row.delta, asym, options.gv_mode);
      rows[i] = row;
    } catch (...) {
#pragma omp critical(rate_curve_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace sumrank
