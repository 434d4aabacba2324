#include "sumrank/fields.hpp"

#include <algorithm>
#include <string>

namespace sumrank {

namespace {

// Polynomials over a field K, lowest degree first, no trailing zeros.
template <class K>
using Poly = std::vector<typename K::Element>;

template <class K>
void trim(const K& k, Poly<K>& a) {
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

template <class K>
int poly_degree(const Poly<K>& a) {
  return static_cast<int>(a.size()) - 1;
}

// a mod f, f nonzero.
template <class K>
Poly<K> poly_mod(const K& k, Poly<K> a, const Poly<K>& f) {
  trim(k, a);
  const int df = poly_degree<K>(f);
  const auto lead_inv = k.inv(f.back());
  while (poly_degree<K>(a) >= df) {
    const int shift = poly_degree<K>(a) - df;
    const auto factor = k.mul(a.back(), lead_inv);
    for (int i = 0; i <= df; ++i) a[shift + i] = k.sub(a[shift + i], k.mul(factor, f[i]));
    trim(k, a);
  }
  return a;
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<K> c(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
  }
  trim(k, c);
  return c;
}

template <class K>
Poly<K> poly_sub(const K& k, Poly<K> a, const Poly<K>& b) {
  if (a.size() < b.size()) a.resize(b.size(), k.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = k.sub(a[i], b[i]);
  trim(k, a);
  return a;
}

template <class K>
Poly<K> poly_powmod(const K& k, Poly<K> base, std::uint64_t exp, const Poly<K>& f) {
  Poly<K> result{k.one()};
  base = poly_mod(k, std::move(base), f);
  while (exp > 0) {
    if (exp & 1U) result = poly_mod(k, poly_mul(k, result, base), f);
    exp >>= 1U;
    if (exp > 0) base = poly_mod(k, poly_mul(k, base, base), f);
  }
  return result;
}

template <class K>
Poly<K> poly_gcd(const K& k, Poly<K> a, Poly<K> b) {
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    auto r = poly_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree d is irreducible iff gcd(f, x^{s^i} - x) = 1 for
// every i <= d/2, where s = |K|.
template <class K>
bool is_irreducible(const K& k, const Poly<K>& f) {
  const int d = poly_degree<K>(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly<K> x{k.zero(), k.one()};
  Poly<K> h = poly_mod(k, x, f);
  for (int i = 1; i <= d / 2; ++i) {
    h = poly_powmod(k, h, k.order(), f);
    const auto g = poly_gcd(k, f, poly_sub(k, h, x));
    if (poly_degree<K>(g) >= 1) return false;
  }
  return true;
}

// Smallest monic irreducible of degree d in the order of the base-|K|
// integer sum_i c_i |K|^i (constant term least significant).
template <class K>
Poly<K> smallest_irreducible(const K& k, int d, const std::vector<typename K::Element>& alphabet) {
  std::vector<std::size_t> digit(d, 0);
  Poly<K> f(d + 1, k.zero());
  f[d] = k.one();
  // Irreducibles of degree d have density about 1/d; this bound only guards
  // against a broken field implementation.
  for (std::uint64_t attempt = 0; attempt < (std::uint64_t{1} << 40); ++attempt) {
    for (int i = 0; i < d; ++i) f[i] = alphabet[digit[i]];
    if (is_irreducible(k, f)) return f;
    int pos = 0;
    while (pos < d && ++digit[pos] == alphabet.size()) digit[pos++] = 0;
    if (pos == d) break;
  }
  throw std::logic_error("no irreducible polynomial of degree " + std::to_string(d));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, int>> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  if (p > UINT32_MAX) return std::nullopt;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // a^{p-2}
  std::uint64_t result = 1, base = a, exp = p_ - 2;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p_;
    base = base * base % p_;
    exp >>= 1U;
  }
  return static_cast<Element>(result);
}

Field Field::make(std::uint32_t p, int e) {
  PrimeField base(p);
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported maximum 2^24");
  }
  std::vector<std::uint32_t> alphabet(p);
  for (std::uint32_t i = 0; i < p; ++i) alphabet[i] = i;
  auto modulus = smallest_irreducible(base, e, alphabet);
  modulus.resize(e + 1, 0);
  return Field(base, e, std::move(modulus));
}

Field Field::of_order(std::uint64_t q) {
  const auto pe = prime_power_decompose(q);
  if (!pe) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return make(pe->first, pe->second);
}

Field::Field(PrimeField base, int e, std::vector<std::uint32_t> modulus)
    : base_(base), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e_; ++i) q_ *= base_.characteristic();
  if (q_ <= kTableLimit) {
    add_table_.resize(std::size_t{q_} * q_);
    mul_table_.resize(std::size_t{q_} * q_);
    neg_table_.resize(q_);
    inv_table_.resize(q_, 0);
    for (Element a = 0; a < q_; ++a) {
      neg_table_[a] = static_cast<std::uint16_t>(add_slow(0, a, true));
      for (Element b = 0; b < q_; ++b) {
        add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b, false));
        const Element prod = mul_slow(a, b);
        mul_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(prod);
        if (prod == 1) inv_table_[a] = static_cast<std::uint16_t>(b);
      }
    }
  }
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  std::vector<std::uint32_t> d(e_);
  const std::uint32_t p = base_.characteristic();
  for (int i = 0; i < e_; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Field::Element Field::from_digits(std::span<const std::uint32_t> d) const {
  const std::uint32_t p = base_.characteristic();
  Element a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

Field::Element Field::add_slow(Element a, Element b, bool subtract) const {
  if (e_ == 1) return subtract ? base_.sub(a, b) : base_.add(a, b);
  auto da = digits(a);
  const auto db = digits(b);
  for (int i = 0; i < e_; ++i) da[i] = subtract ? base_.sub(da[i], db[i]) : base_.add(da[i], db[i]);
  return from_digits(da);
}

Field::Element Field::mul_slow(Element a, Element b) const {
  if (e_ == 1) return base_.mul(a, b);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint32_t> c(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) c[i + j] = base_.add(c[i + j], base_.mul(da[i], db[j]));
  for (int deg = 2 * e_ - 2; deg >= e_; --deg) {
    const auto coef = c[deg];
    if (coef == 0) continue;
    for (int i = 0; i <= e_; ++i) c[deg - e_ + i] = base_.sub(c[deg - e_ + i], base_.mul(coef, modulus_[i]));
  }
  c.resize(e_);
  return from_digits(c);
}

Field::Element Field::add(Element a, Element b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  return add_slow(a, b, false);
}

Field::Element Field::sub(Element a, Element b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + neg_table_[b]];
  return add_slow(a, b, true);
}

Field::Element Field::neg(Element a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  return add_slow(0, a, true);
}

Field::Element Field::mul(Element a, Element b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
  return mul_slow(a, b);
}

Field::Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  Element result = 1, base = a;
  std::uint64_t exp = q_ - 2;
  while (exp > 0) {
    if (exp & 1U) result = mul_slow(result, base);
    base = mul_slow(base, base);
    exp >>= 1U;
  }
  return result;
}

ExtField ExtField::make(const Field& base, int m) {
  if (m < 1) throw std::invalid_argument("extension degree m must be >= 1");
  std::vector<Field::Element> alphabet(base.order());
  for (std::uint32_t i = 0; i < base.order(); ++i) alphabet[i] = i;
  auto modulus = smallest_irreducible(base, m, alphabet);
  modulus.resize(m + 1, 0);
  return ExtField(base, m, std::move(modulus));
}

std::optional<std::uint64_t> ExtField::order() const {
  std::uint64_t r = 1;
  const std::uint64_t q = base_.order();
  for (int i = 0; i < m_; ++i) {
    if (r > UINT64_MAX / q) return std::nullopt;
    r *= q;
  }
  return r;
}

void ExtField::check(const Element& a) const {
  if (static_cast<int>(a.coords.size()) != m_) throw std::invalid_argument("element does not belong to this extension field");
}

ExtField::Element ExtField::one() const {
  auto e = zero();
  e.coords[0] = 1;
  return e;
}

ExtField::Element ExtField::generator() const {
  auto e = zero();
  if (m_ == 1) {
    e.coords[0] = base_.neg(modulus_[0]);
  } else {
    e.coords[1] = 1;
  }
  return e;
}

ExtField::Element ExtField::embed(Field::Element a) const {
  auto e = zero();
  e.coords[0] = a;
  return e;
}

bool ExtField::is_zero(const Element& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](Field::Element c) { return c == 0; });
}

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
  Element r = a;
  for (int i = 0; i < m_; ++i) r.coords[i] = base_.add(a.coords[i], b.coords[i]);
  return r;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (int i = 0; i < m_; ++i) r.coords[i] = base_.sub(a.coords[i], b.coords[i]);
  return r;
}

ExtField::Element ExtField::neg(const Element& a) const {
  Element r = a;
  for (auto& c : r.coords) c = base_.neg(c);
  return r;
}

ExtField::Element ExtField::scale(Field::Element s, const Element& a) const {
  Element r = a;
  for (auto& c : r.coords) c = base_.mul(s, c);
  return r;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
  std::vector<Field::Element> c(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < m_; ++j) c[i + j] = base_.add(c[i + j], base_.mul(a.coords[i], b.coords[j]));
  }
  // modulus is monic
  for (int deg = 2 * m_ - 2; deg >= m_; --deg) {
    const auto coef = c[deg];
    if (coef == 0) continue;
    for (int i = 0; i <= m_; ++i) c[deg - m_ + i] = base_.sub(c[deg - m_ + i], base_.mul(coef, modulus_[i]));
  }
  c.resize(m_);
  return Element{std::move(c)};
}

ExtField::Element ExtField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  // Extended Euclid on (modulus, a): track s with s*a = r (mod modulus).
  Poly<Field> r0 = modulus_, r1 = a.coords;
  trim(base_, r0);
  trim(base_, r1);
  Poly<Field> s0, s1{base_.one()};
  while (poly_degree<Field>(r1) > 0) {
    Poly<Field> quot;
    Poly<Field> rem = r0;
    const int d1 = poly_degree<Field>(r1);
    const auto lead_inv = base_.inv(r1.back());
    quot.assign(std::max(0, poly_degree<Field>(rem) - d1 + 1), 0);
    while (poly_degree<Field>(rem) >= d1) {
      const int shift = poly_degree<Field>(rem) - d1;
      const auto factor = base_.mul(rem.back(), lead_inv);
      quot[shift] = factor;
      for (int i = 0; i <= d1; ++i) rem[shift + i] = base_.sub(rem[shift + i], base_.mul(factor, r1[i]));
      trim(base_, rem);
    }
    auto s2 = poly_sub(base_, s0, poly_mul(base_, quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const auto c_inv = base_.inv(r1[0]);
  Element out = zero();
  for (std::size_t i = 0; i < s1.size(); ++i) out.coords[i] = base_.mul(c_inv, s1[i]);
  return out;
}

ExtField::Element ExtField::from_coords(std::vector<Field::Element> coords) const {
  Element e{std::move(coords)};
  check(e);
  for (auto c : e.coords)
    if (c >= base_.order()) throw std::invalid_argument("coordinate outside F_q");
  return e;
}

std::uint64_t ExtField::index(const Element& a) const {
  if (!order()) throw std::out_of_range("q^m does not fit in 64 bits");
  check(a);
  std::uint64_t idx = 0;
  for (int i = m_; i-- > 0;) idx = idx * base_.order() + a.coords[i];
  return idx;
}

ExtField::Element ExtField::from_index(std::uint64_t idx) const {
  const auto ord = order();
  if (!ord || idx >= *ord) throw std::out_of_range("element index out of range");
  Element e = zero();
  for (int i = 0; i < m_; ++i) {
    e.coords[i] = static_cast<Field::Element>(idx % base_.order());
    idx /= base_.order();
  }
  return e;
}

}  // namespace sumrank
