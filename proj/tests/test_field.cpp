#include <vector>

#include "doctest.h"

#include "hytor/errors.hpp"
#include "hytor/field.hpp"

using namespace hytor;

TEST_CASE("order validation") {
  CHECK_THROWS_AS(Field::make(0), ParamError);
  CHECK_THROWS_AS(Field::make(1), ParamError);
  CHECK_THROWS_AS(Field::make(2), ParamError);
  CHECK_THROWS_AS(Field::make(3), ParamError);
  CHECK_THROWS_AS(Field::make(6), ParamError);
  CHECK_THROWS_AS(Field::make(10), ParamError);
  CHECK_THROWS_AS(Field::make(12), ParamError);
  CHECK_THROWS_AS(Field::make(100), ParamError);
  CHECK_THROWS_AS(Field::make(255), ParamError);  // 3 * 5 * 17
  CHECK_THROWS_AS(Field::make(257), ParamError);
  CHECK_THROWS_AS(Field::make(512), ParamError);

  // Permissive admits only the tiny orders, not composites or big ones.
  CHECK(Field::make(2, true).q() == 2);
  CHECK(Field::make(3, true).q() == 3);
  CHECK_THROWS_AS(Field::make(6, true), ParamError);
  CHECK_THROWS_AS(Field::make(257, true), ParamError);

  CHECK(Field::make(4).q() == 4);
  CHECK(Field::make(256).q() == 256);
}

TEST_CASE("prime field arithmetic is modular") {
  const Field f = Field::make(5);
  CHECK(f.p() == 5);
  CHECK(f.m() == 1);
  CHECK(f.modulus() == std::vector<unsigned>{0, 1});
  CHECK(f.units() == std::vector<Elem>{1, 2, 3, 4});
  CHECK(f.generator() == 2);
  CHECK(f.mul(2, 3) == 1);
  CHECK(f.add(4, 3) == 2);
  CHECK(f.neg(2) == 3);
  CHECK(f.inv(3) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.pow(2, 3) == 3);
  CHECK(f.pow(2, 0) == 1);
}

TEST_CASE("field of four elements") {
  const Field f = Field::make(4);
  CHECK(f.p() == 2);
  CHECK(f.m() == 2);
  CHECK(f.modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(f.generator() == 2);
  CHECK(f.units() == std::vector<Elem>{1, 2, 3});
  // g * g = g + 1 under the modulus above.
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.mul(2, 3) == 1);
  CHECK(f.mul(3, 3) == 2);
  CHECK(f.add(2, 3) == 1);
  for (Elem a = 0; a < 4; ++a) CHECK(f.add(a, a) == 0);  // characteristic 2
  CHECK(f.inv(2) == 3);
  CHECK(f.inv(3) == 2);
}

TEST_CASE("field of eight elements") {
  const Field f = Field::make(8);
  CHECK(f.modulus() == std::vector<unsigned>{1, 0, 1, 1});
  CHECK(f.generator() == 2);
  CHECK(f.units() == std::vector<Elem>{1, 2, 4, 5, 7, 3, 6});
}

TEST_CASE("field of nine elements") {
  const Field f = Field::make(9);
  CHECK(f.p() == 3);
  CHECK(f.m() == 2);
  CHECK(f.modulus() == std::vector<unsigned>{1, 0, 1});
  // 2 has order 2 and the image of x has order 4, so x + 1 generates.
  CHECK(f.generator() == 4);
  CHECK(f.units() == std::vector<Elem>{1, 4, 6, 7, 2, 8, 3, 5});
  CHECK(f.add(1, 2) == 0);
  CHECK(f.add(4, 2) == 3);  // (x + 1) + 2 = x
  CHECK(f.mul(3, 3) == 2);  // x * x = -1
}

TEST_CASE("moduli of larger extensions") {
  CHECK(Field::make(16).modulus() == std::vector<unsigned>{1, 0, 0, 1, 1});
  CHECK(Field::make(25).modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(Field::make(27).modulus() == std::vector<unsigned>{1, 0, 2, 1});
}

TEST_CASE("axioms hold on every triple for small orders") {
  for (const unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(Elem(a), 0) == Elem(a));
      CHECK(f.mul(Elem(a), 1) == Elem(a));
      CHECK(f.mul(Elem(a), 0) == 0);
      CHECK(f.add(Elem(a), f.neg(Elem(a))) == 0);
      if (a != 0) {
        CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
        CHECK(f.inv(f.inv(Elem(a))) == Elem(a));
        CHECK(f.pow(Elem(a), q - 1) == 1);
      }
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.add(Elem(a), Elem(b)) == f.add(Elem(b), Elem(a)));
        CHECK(f.mul(Elem(a), Elem(b)) == f.mul(Elem(b), Elem(a)));
        CHECK(f.sub(Elem(a), Elem(b)) == f.add(Elem(a), f.neg(Elem(b))));
        for (unsigned c = 0; c < q; ++c) {
          const Elem ab_c = f.mul(f.mul(Elem(a), Elem(b)), Elem(c));
          const Elem a_bc = f.mul(Elem(a), f.mul(Elem(b), Elem(c)));
          CHECK(ab_c == a_bc);
          const Elem lhs = f.mul(Elem(a), f.add(Elem(b), Elem(c)));
          const Elem rhs = f.add(f.mul(Elem(a), Elem(b)), f.mul(Elem(a), Elem(c)));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("unit group structure for all supported orders") {
  for (const unsigned q : {4u,  5u,  7u,  8u,  9u,  11u, 13u, 16u, 17u, 19u,
                           23u, 25u, 27u, 29u, 31u, 32u, 49u, 64u, 81u, 121u,
                           125u, 128u, 169u, 243u, 251u, 256u}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    CHECK(f.q() == q);
    unsigned pm = 1;
    for (unsigned i = 0; i < f.m(); ++i) pm *= f.p();
    CHECK(pm == q);
    CHECK(f.modulus().size() == f.m() + 1);
    CHECK(f.modulus().back() == 1);
    CHECK((f.modulus().front() != 0 || f.m() == 1));

    const auto& units = f.units();
    REQUIRE(units.size() == q - 1);
    CHECK(units[0] == 1);
    std::vector<bool> seen(q, false);
    for (const Elem u : units) {
      CHECK(u != 0);
      CHECK(!seen[u]);
      seen[u] = true;
      CHECK(f.mul(u, f.inv(u)) == 1);
    }
    for (unsigned i = 0; i < units.size(); ++i) CHECK(f.unit_index(units[i]) == i);
    // The unit list of an extension field is exactly the power sequence of
    // the generator; for primes it is 1..q-1 and the generator still has
    // full order because the powers below q-1 never return to 1.
    if (f.m() > 1) {
      Elem g = f.generator();
      Elem acc = 1;
      for (unsigned i = 0; i < units.size(); ++i) {
        CHECK(units[i] == acc);
        acc = f.mul(acc, g);
      }
      CHECK(acc == 1);
    } else {
      CHECK(f.pow(f.generator(), q - 1) == 1);
      for (unsigned k = 1; k < q - 1; ++k) CHECK(f.pow(f.generator(), k) != 1);
    }
  }
}

TEST_CASE("zero has no inverse or unit index") {
  const Field f = Field::make(7);
  CHECK_THROWS_AS(f.inv(0), DomainError);
  CHECK_THROWS_AS(f.unit_index(0), DomainError);
  CHECK_THROWS_AS(f.div(3, 0), DomainError);
}

TEST_CASE("construction is deterministic") {
  const Field a = Field::make(9);
  const Field b = Field::make(9);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.units() == b.units());
  for (unsigned x = 0; x < 9; ++x)
    for (unsigned y = 0; y < 9; ++y) {
      CHECK(a.add(Elem(x), Elem(y)) == b.add(Elem(x), Elem(y)));
      CHECK(a.mul(Elem(x), Elem(y)) == b.mul(Elem(x), Elem(y)));
    }
}

TEST_CASE("tiny permissive fields") {
  const Field f2 = Field::make(2, true);
  CHECK(f2.units() == std::vector<Elem>{1});
  CHECK(f2.add(1, 1) == 0);
  const Field f3 = Field::make(3, true);
  CHECK(f3.units() == std::vector<Elem>{1, 2});
  CHECK(f3.mul(2, 2) == 1);
}
