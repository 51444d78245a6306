#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pec/bounds.hpp"
#include "pec/gf2.hpp"
#include "pec/util.hpp"

using pec::Gf2Basis;
using pec::Gf2Vector;

TEST_CASE("vector addition is xor") {
  const Gf2Vector zero(4);
  const Gf2Vector x = Gf2Vector::from_mask(0b1010, 4);
  CHECK(pec::vec_add(zero, x) == x);
  CHECK(pec::vec_add(x, x).is_zero());

  const Gf2Vector e1 = Gf2Vector::atom(1, 4);
  const Gf2Vector e2 = Gf2Vector::atom(2, 4);
  const Gf2Vector sum = e1 + e2;
  CHECK(sum.test(1));
  CHECK(sum.test(2));
  CHECK(sum.weight() == 2);
}

TEST_CASE("vector addition properties on random vectors") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto v = Gf2Vector::from_mask(rng() & 0xffff, 16);
    const auto w = Gf2Vector::from_mask(rng() & 0xffff, 16);
    const auto u = Gf2Vector::from_mask(rng() & 0xffff, 16);
    CHECK(v + w == w + v);
    CHECK((v + w) + u == v + (w + u));
    CHECK((v + v).is_zero());
  }
}

TEST_CASE("width is enforced") {
  Gf2Vector v(3);
  CHECK_THROWS_AS(v.set(4), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Vector::from_mask(0b1000, 3), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Vector::from_hex("10", 4), std::invalid_argument);
}

TEST_CASE("hex round trip") {
  const Gf2Vector v = Gf2Vector::from_mask(0xa3, 8);
  CHECK(v.to_hex() == "a3");
  CHECK(Gf2Vector::from_hex("a3", 8) == v);
  CHECK(Gf2Vector(5).to_hex() == "0");

  Gf2Vector wide(130);
  wide.set(130);
  wide.set(1);
  CHECK(Gf2Vector::from_hex(wide.to_hex(), 130) == wide);
}

TEST_CASE("basis insert tracks independence") {
  Gf2Basis basis;
  CHECK_FALSE(basis.insert(Gf2Vector(4)));  // zero is dependent on empty span
  CHECK(basis.dim() == 0);

  CHECK(basis.insert(Gf2Vector::atom(3, 4)));
  CHECK(basis.dim() == 1);

  Gf2Basis b2;
  CHECK(b2.insert(Gf2Vector::atom(1, 4)));
  CHECK(b2.insert(Gf2Vector::atom(2, 4)));
  CHECK_FALSE(b2.insert(Gf2Vector::atom(1, 4) + Gf2Vector::atom(2, 4)));
  CHECK(b2.dim() == 2);
}

TEST_CASE("reduce eliminates leading coordinates") {
  Gf2Basis basis;
  basis.insert(Gf2Vector::atom(1, 4));
  CHECK(basis.reduce(Gf2Vector(4)).is_zero());
  CHECK(basis.reduce(Gf2Vector::atom(1, 4) + Gf2Vector::atom(2, 4)) ==
        Gf2Vector::atom(2, 4));

  // Representatives are per-coset: e1 and e2 lie in the same coset of
  // span{e1+e2} and must reduce identically.
  Gf2Basis diag;
  diag.insert(Gf2Vector::atom(1, 4) + Gf2Vector::atom(2, 4));
  CHECK(diag.reduce(Gf2Vector::atom(1, 4)) == diag.reduce(Gf2Vector::atom(2, 4)));
}

TEST_CASE("reduce is idempotent and coset-stable on random input") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Gf2Basis basis;
    for (int i = 0; i < 5; ++i)
      basis.insert(Gf2Vector::from_mask(rng() & 0x3ff, 10));
    const auto v = Gf2Vector::from_mask(rng() & 0x3ff, 10);
    const auto reduced = basis.reduce(v);
    CHECK(basis.reduce(reduced) == reduced);
    CHECK(basis.contains(v + reduced));

    // Two vectors in the same coset share a representative.
    Gf2Vector shift(10);
    for (const auto& r : basis.rows())
      if (rng() & 1) shift ^= r;
    CHECK(basis.reduce(v + shift) == reduced);
  }
}

TEST_CASE("echelon invariant: rows have distinct reduced leading coordinates") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Gf2Basis basis;
    for (int i = 0; i < 8; ++i)
      basis.insert(Gf2Vector::from_mask(rng() & 0xfff, 12));
    std::set<int> leads;
    for (const auto& row : basis.rows()) {
      CHECK(!row.is_zero());
      CHECK(leads.insert(row.lowest_set()).second);
      for (const auto& other : basis.rows())
        if (&other != &row) CHECK_FALSE(other.test(row.lowest_set()));
    }
  }
}

TEST_CASE("min_sumset small cases") {
  const auto one = pec::min_sumset(1, 1, 2);
  CHECK(one.size == 1);
  REQUIRE(one.set_a.size() == 1);
  REQUIRE(one.set_b.size() == 1);
  CHECK(one.set_a[0].is_zero());
  CHECK(one.set_b[0].is_zero());

  CHECK(pec::min_sumset(2, 2, 2).size == 2);
  // 3 o 3 = 2^ceil(lg 3) = 4.
  CHECK(pec::min_sumset(3, 3, 3).size == 4);
}

TEST_CASE("min_sumset guards") {
  CHECK_THROWS_AS(pec::min_sumset(5, 1, 2), std::domain_error);
  CHECK_THROWS_AS(pec::min_sumset(40, 40, 12), pec::BudgetError);
}

TEST_CASE("min_sumset matches hopf_stiefel for s,t <= 4 at dimension 4") {
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= 4; ++t)
      CHECK(pec::min_sumset(s, t, 4).size == pec::hopf_stiefel(s, t));
}

TEST_CASE("min_sumset witnesses achieve the reported size") {
  for (int s = 2; s <= 4; ++s) {
    for (int t = s; t <= 4; ++t) {
      const auto result = pec::min_sumset(s, t, 3);
      std::set<Gf2Vector> sums;
      for (const auto& a : result.set_a)
        for (const auto& b : result.set_b) sums.insert(a + b);
      CHECK(static_cast<long long>(sums.size()) == result.size);
    }
  }
}
