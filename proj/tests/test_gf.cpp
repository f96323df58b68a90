#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "netfield/error.hpp"
#include "netfield/gf.hpp"
#include "netfield/numbertheory.hpp"
#include "oracles.hpp"

using namespace netfield;

TEST_CASE("make_field") {
  const auto f7 = make_field(7);
  CHECK(f7->p() == 7);
  CHECK(f7->m() == 1);
  CHECK(f7->modulus().empty());

  const auto f16 = make_field(16);
  CHECK(f16->p() == 2);
  CHECK(f16->m() == 4);
  CHECK(f16->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0});  // x^4 + x + 1

  CHECK_THROWS_AS(make_field(6), Error);
  try {
    make_field(6);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrimePower);
  }
  try {
    make_field(131072);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldTooLarge);
  }
  CHECK_THROWS_AS(make_field(1), Error);
}

TEST_CASE("canonical modulus is the smallest irreducible encoding") {
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256}) {
    const auto f = make_field(q);
    const int p = static_cast<int>(f->p());
    const int m = static_cast<int>(f->m());
    std::uint32_t first = 0;
    for (;; ++first) {
      auto poly = oracle::decode(first, p, m);
      poly.push_back(1);
      if (oracle::irreducible(poly, p)) break;
    }
    CAPTURE(q);
    CHECK(f->modulus_encoding() == first);
  }
}

TEST_CASE("arith") {
  const auto f7 = make_field(7);
  CHECK(arith({f7, 3}, {f7, 5}, ArithOp::Mul).value() == 1);
  const auto f5 = make_field(5);
  CHECK(arith({f5, 2}, {f5, 0}, ArithOp::Neg).value() == 3);
  const auto f16 = make_field(16);
  const FieldElement xi = primitive_element(f16);
  CHECK((xi * xi.pow(14)).value() == 1);
  CHECK(xi.pow(-1) == xi.pow(14));
  CHECK_THROWS_AS(arith({f7, 3}, {f7, 0}, ArithOp::Div), Error);
  CHECK_THROWS_AS(FieldElement(f7, 3) + FieldElement(f5, 3), Error);
  try {
    (void)(FieldElement(f7, 3) * FieldElement(f5, 3));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  CHECK(f7->pow(0, 0) == 1);
}

TEST_CASE("primitive_element") {
  CHECK(primitive_element(make_field(2)).value() == 1);
  CHECK(primitive_element(make_field(5)).value() == 2);
  CHECK(primitive_element(make_field(7)).value() == 3);
  // independent order computation in Z_p
  for (std::uint64_t p : {3, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    std::uint64_t least = 0;
    for (std::uint64_t a = 1; a < p && least == 0; ++a) {
      std::uint64_t x = a, ord = 1;
      while (x != 1) {
        x = x * a % p;
        ++ord;
      }
      if (ord == p - 1) least = a;
    }
    CHECK(make_field(p)->xi() == least);
  }
}

TEST_CASE("subgroups") {
  const auto f7 = make_field(7);
  auto g = subgroup_of_order(f7, 3);
  std::set<Elem> got(g.elements.begin(), g.elements.end());
  CHECK(got == std::set<Elem>{1, 2, 4});
  CHECK(subgroup_of_order(make_field(8), 7).elements.size() == 7);

  const auto f16 = make_field(16);
  const auto g5 = subgroup_of_order(f16, 5);
  std::set<Elem> want;
  for (int k : {0, 3, 6, 9, 12}) want.insert(f16->exp(static_cast<std::uint64_t>(k)));
  CHECK(std::set<Elem>(g5.elements.begin(), g5.elements.end()) == want);

  CHECK(proper_subgroup_orders(make_field(8)) == std::vector<std::uint32_t>{1});
  CHECK(proper_subgroup_orders(f7) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(proper_subgroup_orders(make_field(17)) == std::vector<std::uint32_t>{1, 2, 4, 8});
  CHECK_THROWS_AS(subgroup_of_order(f7, 4), Error);
}

TEST_CASE("dlog") {
  const auto f7 = make_field(7);
  CHECK(dlog(f7, {f7, 1}) == 0);
  CHECK(dlog(f7, {f7, 3}) == 1);
  CHECK(dlog(f7, {f7, 2}) == 2);
  CHECK_THROWS_AS(dlog(f7, {f7, 0}), Error);
}

TEST_CASE("field axioms on random triples for every q <= 64") {
  std::mt19937_64 rng(7);
  for (auto q : prime_powers_in(2, 64)) {
    const auto f = make_field(q);
    std::uniform_int_distribution<Elem> pick(0, f->q() - 1);
    for (int i = 0; i < 300; ++i) {
      const Elem a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("group structure for every q <= 64") {
  for (auto q : prime_powers_in(2, 64)) {
    const auto f = make_field(q);
    CAPTURE(q);
    std::set<Elem> seen;
    for (std::uint64_t k = 0; k + 1 < q; ++k) seen.insert(f->exp(k));
    CHECK(seen.size() == q - 1);
    CHECK(seen.count(0) == 0);
    for (Elem a = 1; a < f->q(); ++a) CHECK(f->exp(f->dlog(a)) == a);
    for (std::uint32_t d = 1; d <= q - 1; ++d) {
      if ((q - 1) % d != 0) continue;
      const auto g = subgroup_of_order(f, d);
      std::set<Elem> elems(g.elements.begin(), g.elements.end());
      CHECK(elems.size() == d);
      std::set<Elem> roots;
      for (Elem x = 1; x < f->q(); ++x) {
        if (f->pow(x, d) == 1) roots.insert(x);
      }
      CHECK(elems == roots);
      for (auto x : elems) {
        for (auto y : elems) CHECK(elems.count(f->mul(x, y)) == 1);
      }
    }
  }
}

TEST_CASE("determinism and shared use") {
  const auto a = make_field(243);
  const auto b = make_field(243);
  CHECK(a->modulus() == b->modulus());
  CHECK(a->xi() == b->xi());

  // first use of the tables from several threads at once
  const auto f = make_field(4096);
  std::vector<std::uint64_t> sums(4, 0);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (Elem x = 1; x < f->q(); ++x) sums[t] += f->dlog(x);
      });
    }
  }
  CHECK(sums[0] == sums[1]);
  CHECK(sums[0] == sums[3]);
}

TEST_CASE("format") {
  CHECK(make_field(7)->format(5) == "5");
  const auto f16 = make_field(16);
  CHECK(f16->format(0) == "0");
  CHECK(f16->format(1) == "1");
  CHECK(f16->format(f16->xi()) == "ξ");
  CHECK(f16->format(f16->exp(3)) == "ξ^3");
}
