#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "doctest.h"

#include "hytor/errors.hpp"
#include "hytor/oracles.hpp"
#include "hytor/sqfree.hpp"

using namespace hytor;

namespace {

// Reference spectrum: walk every coefficient vector, build the polynomial,
// evaluate it from scratch.  Slow but entirely independent of the
// incremental odometer in exhaustive_spectrum.
std::map<std::uint64_t, std::uint64_t> naive_spectrum(const CodeParams& p, const Field& f) {
  const auto basis = hypersimplex_basis(p.s, p.d);
  const TorusPointSet pts(f, p.s);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= p.q;

  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SqFreePoly poly(p.s);
    std::uint64_t v = mask;
    for (const VarSet m : basis) {
      if (v % p.q) poly.set_term(m, Elem(v % p.q));
      v /= p.q;
    }
    ++hist[evaluate(poly, pts).weight];
  }
  return hist;
}

std::map<std::uint64_t, std::uint64_t> spectrum_counts(const WeightDistribution& d) {
  return d.counts;
}

}  // namespace

TEST_CASE("random code polynomials are deterministic, homogeneous and nonzero") {
  const Field f = Field::make(4);
  const CodeParams p{4, 6, 3};
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 20; ++i) {
    const SqFreePoly x = random_code_polynomial(p, f, a);
    const SqFreePoly y = random_code_polynomial(p, f, b);
    CHECK(x == y);
    CHECK(!x.is_zero());
    CHECK(x.degree() == 3);
    CHECK_NOTHROW(x.check_homogeneous());
    for (const auto& [m, c] : x.terms()) {
      CHECK(varset_degree(m) == 3);
      CHECK(c != 0);
    }
  }
  SplitMix64 c(100);
  CHECK(random_code_polynomial(p, f, c) != random_code_polynomial(p, f, c));
}

TEST_CASE("exhaustive spectrum of the full-degree code") {
  const Field f = Field::make(4);
  const WeightDistribution d = exhaustive_spectrum({4, 3, 3}, f);
  CHECK(d.total == 4);
  CHECK(d.counts == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {27, 3}});
  CHECK(d.min_nonzero() == 27);
  CHECK(!d.second_nonzero().has_value());
  CHECK(d.count(27) == 3);
  CHECK(d.count(12) == 0);
}

TEST_CASE("exhaustive spectrum agrees with direct re-evaluation") {
  const Field f = Field::make(4);
  for (const CodeParams p : {CodeParams{4, 3, 2}, CodeParams{4, 4, 3}}) {
    CAPTURE(p.s);
    CHECK(spectrum_counts(exhaustive_spectrum(p, f)) == naive_spectrum(p, f));
  }
}

TEST_CASE("spectrum pins at the smallest interesting parameters") {
  const Field f4 = Field::make(4);
  const WeightDistribution d = exhaustive_spectrum({4, 4, 3}, f4);
  CHECK(d.total == 256);
  CHECK(d.count(0) == 1);
  CHECK(d.count(54) == 54);
  CHECK(d.count(60) == 81);
  CHECK(d.min_nonzero() == 54);
  CHECK(d.second_nonzero() == 60);

  const Field f5 = Field::make(5);
  const WeightDistribution d5 = exhaustive_spectrum({5, 4, 3}, f5);
  CHECK(d5.total == 625);
  CHECK(d5.count(192) == 96);
  CHECK(d5.count(204) == 256);
  CHECK(d5.min_nonzero() == 192);
  CHECK(d5.second_nonzero() == 204);

  SUBCASE("nonzero counts come in scalar orbits") {
    for (const auto* dist : {&d, &d5})
      for (const auto& [w, c] : dist->counts)
        if (w > 0) CHECK(c % (dist->params.q - 1) == 0);
  }
}

TEST_CASE("spectrum is independent of the thread count") {
  const Field f4 = Field::make(4);
  const auto base = spectrum_counts(exhaustive_spectrum({4, 4, 3}, f4));
  for (const unsigned t : {3u, 8u})
    CHECK(spectrum_counts(exhaustive_spectrum({4, 4, 3}, f4, kDefaultCodewordGuard, t)) == base);

  const Field f5 = Field::make(5);
  CHECK(spectrum_counts(exhaustive_spectrum({5, 4, 3}, f5, kDefaultCodewordGuard, 4)) ==
        spectrum_counts(exhaustive_spectrum({5, 4, 3}, f5)));
}

TEST_CASE("spectrum guards") {
  const Field f = Field::make(4);
  // 4^56 codewords blow the default budget.
  CHECK_THROWS_AS(exhaustive_spectrum({4, 8, 3}, f), ResourceError);
  // Dimension 455 cannot even be indexed by a 64-bit counter.
  CHECK_THROWS_AS(exhaustive_spectrum({4, 15, 3}, f), ResourceError);
  // Raising the budget admits the borderline case.
  CHECK_NOTHROW(exhaustive_spectrum({4, 5, 3}, f, std::uint64_t(1) << 21, 4));
}

TEST_CASE("linear form nonzero counts match the closed form") {
  const Field f4 = Field::make(4);
  const std::array<std::uint64_t, 4> expect4{81, 54, 63, 60};
  for (int u = 1; u <= 4; ++u) {
    const std::vector<Elem> ones(std::size_t(u), 1);
    CHECK(linear_form_nonzero_bruteforce(f4, 4, ones) == expect4[std::size_t(u) - 1]);
    CHECK(linear_form_nonzero_count(4, 4, u) == expect4[std::size_t(u) - 1]);
  }

  const Field f5 = Field::make(5);
  const std::array<std::uint64_t, 3> expect5{64, 48, 52};
  for (int u = 1; u <= 3; ++u) {
    const std::vector<Elem> ones(std::size_t(u), 1);
    CHECK(linear_form_nonzero_bruteforce(f5, 3, ones) == expect5[std::size_t(u) - 1]);
    CHECK(linear_form_nonzero_count(5, 3, u) == expect5[std::size_t(u) - 1]);
  }

  SUBCASE("the count does not depend on which nonzero coefficients appear") {
    SplitMix64 rng(5);
    for (int u = 1; u <= 4; ++u) {
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Elem> coeffs(static_cast<std::size_t>(u));
        for (auto& c : coeffs) c = f4.units()[rng.below(3)];
        CHECK(linear_form_nonzero_bruteforce(f4, 4, coeffs) ==
              linear_form_nonzero_count(4, 4, u).convert_to<std::uint64_t>());
      }
    }
  }

  SUBCASE("validation") {
    const std::vector<Elem> none;
    const std::vector<Elem> too_many(5, 1);
    const std::vector<Elem> with_zero{1, 0, 1};
    CHECK_THROWS_AS(linear_form_nonzero_bruteforce(f4, 4, none), ParamError);
    CHECK_THROWS_AS(linear_form_nonzero_bruteforce(f4, 4, too_many), ParamError);
    CHECK_THROWS_AS(linear_form_nonzero_bruteforce(f4, 4, with_zero), ParamError);
  }
}

TEST_CASE("codeword sampling is reproducible and consistent with the spectrum") {
  const Field f = Field::make(4);
  const CodeParams p{4, 4, 3};
  const SampleSummary a = sample_codewords(p, f, 300, 60, 7);
  const SampleSummary b = sample_codewords(p, f, 300, 60, 7);
  CHECK(a.samples == 300);
  CHECK(a.threshold == 60);
  CHECK(a.seed == 7);
  CHECK(a.min_nonzero_weight == b.min_nonzero_weight);
  CHECK(a.below_threshold == b.below_threshold);
  CHECK(a.zero_words == b.zero_words);

  // The full spectrum at these parameters is {0, 54, 60, ...}: anything a
  // sampler reports at or below 60 must be one of the two known weights.
  REQUIRE(a.min_nonzero_weight.has_value());
  CHECK(*a.min_nonzero_weight >= 54);
  for (const auto& [w, c] : a.below_threshold) {
    CHECK((w == 54 || w == 60));
    CHECK(c > 0);
  }

  const SampleSummary other = sample_codewords(p, f, 300, 60, 8);
  CHECK(a.below_threshold != other.below_threshold);

  CHECK(sample_codewords(p, f, 0, 60, 7).samples == 0);
}

TEST_CASE("linear factor search by trial division") {
  const Field f4 = Field::make(4);

  SUBCASE("a split product is fully recovered") {
    const SqFreePoly prod =
        expand_product(4, f4, 1, {BinFactor{1, 2, 1}}, std::nullopt, var_bit(3) | var_bit(4));
    const auto found = linear_factor_search(GenPoly::from_sqfree(prod), f4);
    REQUIRE(found.size() == 3);
    const GenPoly t1t2 = GenPoly::from_sqfree(poly_parse("t1 + t2", 4, &f4));
    const GenPoly t3 = GenPoly::from_sqfree(poly_parse("t3", 4, &f4));
    const GenPoly t4 = GenPoly::from_sqfree(poly_parse("t4", 4, &f4));
    for (const auto& expect : {t1t2, t3, t4})
      CHECK(std::find(found.begin(), found.end(), expect) != found.end());
  }

  SUBCASE("the symmetric cubic has no linear factor") {
    const SqFreePoly cubic =
        poly_parse("t2*t3*t4 + t1*t3*t4 + t1*t2*t4 + t1*t2*t3", 4, &f4);
    CHECK(linear_factor_search(GenPoly::from_sqfree(cubic), f4).empty());
  }

  SUBCASE("repeated factors are reported once") {
    const Field f5 = Field::make(5);
    GenPoly sq(2);
    sq.add_term(ExpMonomial{{2, 0}}, 1, f5);
    sq.add_term(ExpMonomial{{1, 1}}, 2, f5);
    sq.add_term(ExpMonomial{{0, 2}}, 1, f5);
    const auto found = linear_factor_search(sq, f5);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == GenPoly::from_sqfree(poly_parse("t1 + t2", 2, &f5)));
  }

  SUBCASE("candidate guard") {
    const SqFreePoly prod =
        expand_product(4, f4, 1, {BinFactor{1, 2, 1}}, std::nullopt, var_bit(3) | var_bit(4));
    CHECK_THROWS_AS(linear_factor_search(GenPoly::from_sqfree(prod), f4, 10), ResourceError);
  }
}
