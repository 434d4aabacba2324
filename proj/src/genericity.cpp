#include "sumrank/genericity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sumrank {

namespace {

ProbabilityBound from_failure_logq(double failure_logq, double q) {
  ProbabilityBound b;
  b.failure_logq = failure_logq;
  b.raw_lower = -std::expm1(failure_logq * std::log(q));
  b.lower = std::clamp(b.raw_lower, 0.0, 1.0);
  return b;
}

void check_k(std::int64_t q, int m, int eta, int ell, int k) {
  if (q < 2 || m < 1 || eta < 1 || ell < 1) throw std::invalid_argument("invalid code parameters");
  const long n = static_cast<long>(ell) * eta;
  const long max_rank = static_cast<long>(ell) * std::min(m, eta);
  if (k < 1 || k > n) throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, n]");
  if (k > max_rank) throw std::invalid_argument("k exceeds ell * mu");
}

// log_q(q^a - 1) for a > 0.
double logq_pow_minus_one(double a, double q) { return a + std::log1p(-std::pow(q, -a)) / std::log(q); }

double a_failure_logq(std::int64_t q, int m, int eta, int ell, int k) {
  const double qd = static_cast<double>(q);
  return logq(BigCount(k) * binomial(k + ell - 1, ell - 1), qd) + static_cast<double>(eta) * k - m;
}

double u_failure_logq(std::int64_t q, int m, int eta, int ell, int k, UVariant variant) {
  const double qd = static_cast<double>(q);
  const double kd = k, elld = ell;
  double f = logq(BigCount(k) * binomial(k + ell - 1, ell - 1), qd) + kd * (eta - kd / elld) - m + elld * log_gamma_q(q);
  if (variant == UVariant::AsPrinted) f -= elld / 4.0;
  return f;
}

double br_failure_logq(const CodeParams& p, int k) {
  const double q = static_cast<double>(p.q);
  const int n = p.n();
  const int r = n - k;
  const double m = p.m, ell = p.ell;
  const double log_v = std::log(static_cast<double>(r)) / std::log(q) + logq(binomial(p.ell + r - 1, p.ell - 1), q) +
                       ell * log_gamma_q(p.q) + r * (m + p.eta - r / ell);
  const double log_v_minus_one = log_v + std::log1p(-std::pow(q, -log_v)) / std::log(q);
  return logq_pow_minus_one(m * k, q) - logq_pow_minus_one(m, q) - logq_pow_minus_one(m * n, q) + log_v_minus_one;
}

}  // namespace

ProbabilityBound msrd_prob_lb_A(std::int64_t q, int m, int eta, int ell, int k) {
  check_k(q, m, eta, ell, k);
  return from_failure_logq(a_failure_logq(q, m, eta, ell, k), static_cast<double>(q));
}

ProbabilityBound msrd_prob_lb_U(std::int64_t q, int m, int eta, int ell, int k, UVariant variant) {
  check_k(q, m, eta, ell, k);
  return from_failure_logq(u_failure_logq(q, m, eta, ell, k, variant), static_cast<double>(q));
}

BigCount br_alternating_sum(const BigCount& big_q, int n, int k, int h_start) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  const int dim = n - k;
  BigCount total = 0;
  for (int h = std::max(0, h_start); h <= dim; ++h) {
    BigCount inner = 0;
    for (int s = h; s <= dim; ++s) {
      const int j = s - h;
      BigCount term = q_binomial(dim - h, j, big_q) * q_binomial(n - s, n - k, big_q) * power(big_q, static_cast<std::int64_t>(j) * (j - 1) / 2);
      if (j % 2 == 0)
        inner += term;
      else
        inner -= term;
    }
    total += q_binomial(dim, h, big_q) * inner;
  }
  return total;
}

mpq_class br_upper_exact(const CodeParams& p, int k) {
  const int n = p.n();
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  const BigCount big_q = power(p.q, p.m);
  mpq_class frac(br_alternating_sum(big_q, n, k, 1), q_binomial(n, k, big_q));
  frac.canonicalize();
  return 1 - frac;
}

ProbabilityBound msrd_prob_bounds_BR(const CodeParams& p, int k, std::uint64_t upper_bit_budget) {
  const int n = p.n();
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  if (n - k + 1 > p.max_weight()) throw std::invalid_argument("d = n - k + 1 exceeds ell * mu");
  auto bound = from_failure_logq(br_failure_logq(p, k), static_cast<double>(p.q));
  const double bits = static_cast<double>(k) * (n - k) * p.m * std::log2(static_cast<double>(p.q));
  if (bits <= static_cast<double>(upper_bit_budget) && n - k <= 512) bound.upper = std::clamp(br_upper_exact(p, k).get_d(), 0.0, 1.0);
  return bound;
}

std::optional<int> min_extension_degree(std::int64_t q, int n, int k, int ell, BoundKind kind, int m_cap) {
  if (ell < 1 || n < 1 || n % ell != 0) throw std::invalid_argument("ell must divide n");
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (m_cap < 1) throw std::invalid_argument("m cap must be >= 1");
  const int eta = n / ell;
  // Each bound's raw value is non-decreasing in m and its domain grows
  // with m (mu = min(m, eta)), so positivity is monotone in m.
  auto positive = [&](int m) {
    const long max_rank = static_cast<long>(ell) * std::min(m, eta);
    switch (kind) {
      case BoundKind::A:
        return k <= max_rank && a_failure_logq(q, m, eta, ell, k) < 0;
      case BoundKind::ULemma:
        return k <= max_rank && u_failure_logq(q, m, eta, ell, k, UVariant::LemmaConsistent) < 0;
      case BoundKind::UPrinted:
        return k <= max_rank && u_failure_logq(q, m, eta, ell, k, UVariant::AsPrinted) < 0;
      case BoundKind::BRLower:
        return k < n && n - k + 1 <= max_rank && br_failure_logq(CodeParams{q, m, eta, ell}, k) < 0;
    }
    return false;
  };
  int hi = 1;
  while (!positive(hi)) {
    if (hi >= m_cap) return std::nullopt;
    hi = static_cast<int>(std::min<long>(2L * hi, m_cap));
  }
  int lo = hi / 2 + 1;
  if (hi == 1) return 1;
  // smallest m in [lo, hi] with positive(m); positive(hi) holds
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (positive(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

double gv_attainment_epsilon_max(const VolumeTable& table, int d) {
  const auto& p = table.params();
  if (d < 1 || d > p.max_weight()) throw std::invalid_argument("d outside [1, ell * mu]");
  const double mn = static_cast<double>(p.m) * p.n();
  return 1.0 - table.ball_logq(d - 1) / mn - 1.0 / p.n();
}

GvAttainment gv_attainment_dimension(const VolumeTable& table, int d, double epsilon) {
  const auto& p = table.params();
  const double eps_max = gv_attainment_epsilon_max(table, d);
  if (!(epsilon > 0) || epsilon > eps_max + 1e-12)
    throw std::invalid_argument("epsilon outside (0, " + std::to_string(eps_max) + "]");
  const double mn = static_cast<double>(p.m) * p.n();
  const double real_k = p.n() * (1.0 - table.ball_logq(d - 1) / mn - epsilon);
  // tolerate rounding at the right endpoint, where real_k is exactly 1
  const int k = static_cast<int>(std::floor(real_k + 1e-9));
  return GvAttainment{epsilon, eps_max, k};
}

}  // namespace sumrank
