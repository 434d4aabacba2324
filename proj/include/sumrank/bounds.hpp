#pragma once

// Singleton, sphere-packing (SP) and Gilbert-Varshamov (GV) bounds for
// linear sum-rank codes, in exact, simplified and asymptotic forms.
//
// Exact SP/GV compare big integers. Simplified and asymptotic forms work in
// the log_q domain because gamma_q is irrational.

#include <optional>
#include <span>
#include <vector>

#include "sumrank/params.hpp"
#include "sumrank/volumes.hpp"

namespace sumrank {

/// floor(min{n - d + 1, (eta/m)(ell m - d + 1)}), clamped to >= 0.
int singleton_max_k(const CodeParams& params, int d);

/// q^{mk} Vol_B(floor((d-1)/2)) <= q^{mn}. The table must reach that radius.
bool sp_holds(const VolumeTable& table, int k, int d);
/// Largest k in [1, n] with sp_holds, or 0.
int sp_max_k(const VolumeTable& table, int d);

/// m k + (m + eta - t/ell) t - ell/4 - ell log_q(gamma_q) <= m n, t = floor((d-1)/2).
bool sp_simplified_holds(const CodeParams& params, int k, int d);
int sp_simplified_max_k(const CodeParams& params, int d);

/// q^{m(k-1)} Vol_B(d-1) < q^{mn}. The table must reach radius d-1.
bool gv_holds(const VolumeTable& table, int k, int d);
int gv_max_k(const VolumeTable& table, int d);

/// q^{m(k-1)} (d-1) C(ell+d-2, ell-1) gamma_q^ell q^{(d-1)(m+eta-(d-1)/ell)} < q^{mn}.
/// Only stated for 2 < d <= ell mu; smaller d throws.
bool gv_simplified_holds(const CodeParams& params, int k, int d);
int gv_simplified_max_k(const CodeParams& params, int d);

/// Relative-distance/rate pair of a curve.
struct RatePoint {
  double delta;
  double rate;
};

/// xi = m / eta. The finite-length forms also need the concrete parameters.
struct AsymptoticParams {
  double xi = 1.0;
  std::optional<CodeParams> code;

  static AsymptoticParams of(const CodeParams& p) { return {static_cast<double>(p.m) / p.eta, p}; }
};

enum class SpAsymptoticMode {
  Finite,   ///< R*(delta) for the concrete (q, m, eta, n)
  LimitI,   ///< m = eta xi -> infinity
  LimitII,  ///< ell -> infinity with q, m, eta fixed
};

enum class GvAsymptoticMode {
  Finite,  ///< R_*(delta) for the concrete parameters; delta n is rounded to d >= 2
  Limit,   ///< m = eta xi -> infinity
};

/// Upper bound on the rate from the simplified SP bound. Unclamped.
double sp_asymptotic_rate(double delta, const AsymptoticParams& asym, SpAsymptoticMode mode);
/// Achievable rate from the simplified GV bound. Unclamped.
double gv_asymptotic_rate(double delta, const AsymptoticParams& asym, GvAsymptoticMode mode);

struct CurveOptions {
  SpAsymptoticMode sp_mode = SpAsymptoticMode::LimitII;
  GvAsymptoticMode gv_mode = GvAsymptoticMode::Finite;
};

/// One row of a rate-vs-distance comparison. Rates are k/n; asymptotic
/// values are raw (see clamp_rate).
struct CurveRow {
  double delta = 0;
  int d = 0;
  double singleton = 0;
  double sp_exact = 0;
  double sp_simplified = 0;
  double sp_asymptotic = 0;
  double gv_exact = 0;
  std::optional<double> gv_simplified;  ///< undefined for d <= 2
  std::optional<double> gv_asymptotic;  ///< undefined in finite mode for d < 2
};

/// d = round(delta n), clamped to [1, ell mu].
int delta_to_distance(const CodeParams& params, double delta);

double clamp_rate(double r);

/// Rows for each delta; computed in parallel, returned in input order.
/// The table must cover radius ell mu - 1.
std::vector<CurveRow> rate_curve(const VolumeTable& table, std::span<const double> deltas, const CurveOptions& options);

}  // namespace sumrank
