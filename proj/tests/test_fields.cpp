#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sumrank/fields.hpp"

using namespace sumrank;

TEST_CASE("prime and prime power detection") {
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power_decompose(16) == std::pair<std::uint32_t, int>{2, 4});
  CHECK(prime_power_decompose(27) == std::pair<std::uint32_t, int>{3, 3});
  CHECK(prime_power_decompose(7) == std::pair<std::uint32_t, int>{7, 1});
  CHECK_FALSE(prime_power_decompose(12).has_value());
  CHECK_FALSE(prime_power_decompose(1).has_value());
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
}

TEST_CASE("smallest irreducible moduli") {
  CHECK(Field::of_order(4).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::of_order(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field::of_order(9).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::of_order(16).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  // Over F_4 = F_2[y]/(y^2+y+1) every element is a square and x^2+x+1 splits,
  // so the first irreducible is x^2 + x + y (y encoded as 2).
  const auto ext = ExtField::make(Field::of_order(4), 2);
  CHECK(ext.modulus() == std::vector<Field::Element>{2, 1, 1});
}

namespace {

void check_field_axioms(const Field& f) {
  const auto q = static_cast<Field::Element>(f.order());
  for (Field::Element a = 0; a < q; ++a) {
    CHECK(f.add(a, f.zero()) == a);
    CHECK(f.mul(a, f.one()) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (Field::Element b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
      if (a != 0 && b != 0) CHECK(f.mul(a, b) != 0);
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Field::Element> pick(0, q - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
    CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
}

}  // namespace

TEST_CASE("base field axioms") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 256, 343, 1024}) {
    CAPTURE(q);
    check_field_axioms(Field::of_order(q));
  }
}

TEST_CASE("multiplicative group of F_q is cyclic") {
  for (std::uint64_t q : {4, 8, 9, 16, 27}) {
    const auto f = Field::of_order(q);
    bool found = false;
    for (Field::Element g = 2; g < q && !found; ++g) {
      std::set<Field::Element> seen;
      Field::Element x = 1;
      for (std::uint64_t i = 0; i + 1 < q; ++i) {
        seen.insert(x);
        x = f.mul(x, g);
      }
      found = seen.size() == q - 1;
    }
    CHECK(found);
  }
}

TEST_CASE("extension field F_4 over F_2") {
  const auto ext = ExtField::make(Field::of_order(2), 2);
  REQUIRE(ext.order() == 4u);
  // nonzero elements form a cyclic group of order 3
  const auto g = ext.generator();
  auto x = g;
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 3; ++i) {
    seen.insert(ext.index(x));
    x = ext.mul(x, g);
  }
  CHECK(seen.size() == 3);
  CHECK(x == g);
}

TEST_CASE("extension field axioms") {
  struct Case {
    std::uint64_t q;
    int m;
  };
  for (auto [q, m] : {Case{2, 4}, Case{4, 2}, Case{3, 3}, Case{2, 6}, Case{16, 2}}) {
    CAPTURE(q);
    CAPTURE(m);
    const auto ext = ExtField::make(Field::of_order(q), m);
    const auto order = *ext.order();
    for (std::uint64_t i = 0; i < order; ++i) {
      const auto a = ext.from_index(i);
      CHECK(ext.index(a) == i);
      CHECK(ext.add(a, ext.neg(a)) == ext.zero());
      if (!ext.is_zero(a)) CHECK(ext.mul(a, ext.inv(a)) == ext.one());
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, order - 1);
    for (int i = 0; i < 1000; ++i) {
      const auto a = ext.from_index(pick(rng)), b = ext.from_index(pick(rng)), c = ext.from_index(pick(rng));
      CHECK(ext.mul(a, b) == ext.mul(b, a));
      CHECK(ext.mul(a, ext.mul(b, c)) == ext.mul(ext.mul(a, b), c));
      CHECK(ext.mul(a, ext.add(b, c)) == ext.add(ext.mul(a, b), ext.mul(a, c)));
    }
    // the embedded base field multiplies like the base field
    const auto& base = ext.base();
    for (Field::Element s = 0; s < q; ++s)
      for (Field::Element t = 0; t < q; ++t) CHECK(ext.mul(ext.embed(s), ext.embed(t)) == ext.embed(base.mul(s, t)));
    // a^{q^m} = a
    const auto a = ext.from_index(order - 1);
    auto p = a;
    for (std::uint64_t i = 1; i < order; ++i) p = ext.mul(p, a);
    CHECK(p == a);
  }
}

TEST_CASE("Gaussian rank agrees with span counting") {
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {2, 3, 4}) {
    const auto f = Field::of_order(q);
    std::uniform_int_distribution<Field::Element> pick(0, static_cast<Field::Element>(q - 1));
    for (int trial = 0; trial < 200; ++trial) {
      const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
      MatrixFq a(rows, cols);
      std::vector<std::vector<Field::Element>> vecs(rows, std::vector<Field::Element>(cols));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          // bias towards zeros to hit rank-deficient cases
          a(r, c) = pick(rng) % 2 ? pick(rng) : 0;
          vecs[r][c] = a(r, c);
        }
      CHECK(rank_fq(f, a) == oracle::span_rank(f, vecs));
      CHECK(oracle::elimination_rank(f, vecs) == oracle::span_rank(f, vecs));
      CHECK(rank_fq(f, a) == rank_fq(f, a.transposed()));
    }
  }
}
