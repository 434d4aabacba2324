#include "sumrank/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sumrank {

double logq(const BigCount& x, double q) {
  if (sgn(x) <= 0) throw std::domain_error("logq of a non-positive number");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return (static_cast<double>(exp) + std::log2(mant)) / std::log2(q);
}

BigCount power(std::int64_t q, std::int64_t e) {
  if (q < 0 || e < 0) throw std::invalid_argument("power: negative argument");
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return r;
}

BigCount power(const BigCount& q, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("power: negative exponent");
  BigCount r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigCount q_binomial(std::int64_t n, std::int64_t k, const BigCount& q) {
  if (q < 2) throw std::invalid_argument("q_binomial: q must be >= 2");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // After step i the running value is [n choose i+1]_q, so each division is exact.
  BigCount result = 1;
  BigCount top = power(q, n);
  BigCount bottom = q;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= top - 1;
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), BigCount(bottom - 1).get_mpz_t());
    mpz_divexact(top.get_mpz_t(), top.get_mpz_t(), q.get_mpz_t());
    bottom *= q;
  }
  return result;
}

BigCount q_binomial(std::int64_t n, std::int64_t k, std::int64_t q) { return q_binomial(n, k, BigCount(static_cast<long>(q))); }

BigCount nm_count(std::int64_t n, std::int64_t m, std::int64_t t, std::int64_t q) {
  if (n < 0 || m < 0) throw std::invalid_argument("nm_count: negative dimension");
  if (t < 0 || t > std::min(n, m)) return 0;
  BigCount result = q_binomial(n, t, q);
  const BigCount qm = power(q, m);
  BigCount qi = 1;
  for (std::int64_t i = 0; i < t; ++i) {
    result *= qm - qi;
    qi *= q;
  }
  return result;
}

double nm_lower_bound_logq(std::int64_t n, std::int64_t m, std::int64_t t, std::int64_t q) {
  if (t < 0 || t > std::min(n, m)) throw std::invalid_argument("nm_lower_bound_logq: t outside [0, min(n, m)]");
  return static_cast<double>((m + n - t) * t) - log_gamma_q(q);
}

BigCount partition_count(std::int64_t t, std::int64_t ell, std::int64_t mu) {
  if (ell < 1 || mu < 0) throw std::invalid_argument("partition_count: need ell >= 1 and mu >= 0");
  if (t < 0 || t > ell * mu) return 0;
  BigCount total = 0;
  for (std::int64_t i = 0; i <= ell; ++i) {
    const BigCount term = binomial(ell, i) * binomial(t + ell - 1 - (mu + 1) * i, ell - 1);
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

PartitionGenerator::PartitionGenerator(int t, int ell, int mu) : t_(t), ell_(ell), mu_(mu) {
  if (ell < 1 || mu < 0) throw std::invalid_argument("partitions: need ell >= 1 and mu >= 0");
  if (t < 0 || static_cast<long>(t) > static_cast<long>(ell) * mu) {
    done_ = true;
    return;
  }
  current_.assign(ell, 0);
  int rem = t;
  for (int i = 0; i < ell; ++i) {
    current_[i] = std::max(0, rem - (ell - 1 - i) * mu);
    rem -= current_[i];
  }
}

bool PartitionGenerator::advance() {
  int suffix = 0;
  for (int i = ell_ - 1; i-- > 0;) {
    suffix += current_[i + 1];
    if (current_[i] < mu_ && suffix >= 1) {
      ++current_[i];
      int rem = suffix - 1;
      for (int j = i + 1; j < ell_; ++j) {
        current_[j] = std::max(0, rem - (ell_ - 1 - j) * mu_);
        rem -= current_[j];
      }
      return true;
    }
  }
  return false;
}

std::optional<PartitionVec> PartitionGenerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return current_;
}

std::vector<PartitionVec> all_partitions(int t, int ell, int mu) {
  std::vector<PartitionVec> out;
  PartitionGenerator gen(t, ell, mu);
  while (auto p = gen.next()) out.push_back(std::move(*p));
  return out;
}

GammaQ gamma_q(std::int64_t q, int terms) {
  if (q < 2) throw std::invalid_argument("gamma_q: q must be >= 2");
  if (terms < 1) throw std::invalid_argument("gamma_q: need at least one term");
  const double qd = static_cast<double>(q);
  double log_value = 0.0;
  for (int i = 1; i <= terms; ++i) log_value -= std::log1p(-std::pow(qd, -i));
  const double err = std::expm1(std::pow(qd, -terms) * qd / (qd - 1.0));
  return GammaQ{q, std::exp(log_value), terms, err};
}

double log_gamma_q(std::int64_t q) { return std::log(gamma_q(q).value) / std::log(static_cast<double>(q)); }

}  // namespace sumrank
