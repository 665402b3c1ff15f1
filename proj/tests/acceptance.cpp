// Integration suite: ten end-to-end reproduction and property criteria,
// one pass/fail line each.  Exits nonzero if any criterion fails its
// assertions or its time budget.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "hytor/families.hpp"
#include "hytor/field.hpp"
#include "hytor/formulas.hpp"
#include "hytor/groebner.hpp"
#include "hytor/oracles.hpp"
#include "hytor/rng.hpp"
#include "hytor/sqfree.hpp"
#include "hytor/torus.hpp"

using namespace hytor;

namespace {

int g_failures = 0;

struct Ctx {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& msg) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  void note(const std::string& msg) { notes.push_back(msg); }
};

template <typename Fn>
void criterion(const char* id, const char* what, double budget_s, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Ctx c;
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_budget = elapsed < budget_s;
  if (c.ok && in_budget) {
    std::printf("[PASS] %s %s (%.2f s)\n", id, what, elapsed);
  } else {
    ++g_failures;
    std::printf("[FAIL] %s %s (%.2f s, budget %.0f s)%s%s\n", id, what, elapsed, budget_s,
                c.detail.empty() ? "" : ": ", c.detail.c_str());
    if (!in_budget && c.ok) std::printf("       over time budget\n");
  }
  for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
  std::fflush(stdout);
}

// All nonzero polynomials of the code, by coefficient mask over the
// monomial basis.
template <typename Fn>
void for_each_code_polynomial(const CodeParams& p, Fn&& fn) {
  const auto basis = hypersimplex_basis(p.s, p.d);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= p.q;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    SqFreePoly poly(p.s);
    std::uint64_t v = mask;
    for (const VarSet m : basis) {
      if (v % p.q) poly.set_term(m, Elem(v % p.q));
      v /= p.q;
    }
    fn(poly);
  }
}

void spectrum_criterion(Ctx& c, const CodeParams& p, std::uint64_t a_min,
                        std::uint64_t n_min, std::uint64_t a_ntm, std::uint64_t n_ntm,
                        const char* total_str) {
  const Field f = Field::make(p.q);
  const WeightDistribution d = exhaustive_spectrum(p, f);
  c.expect(d.total.str() == total_str,
           "total " + d.total.str() + " != " + total_str);
  c.expect(d.count(0) == 1, "A_0 != 1");
  c.expect(d.count(a_min) == n_min,
           "A_" + std::to_string(a_min) + " = " + std::to_string(d.count(a_min)));
  c.expect(d.count(a_ntm) == n_ntm,
           "A_" + std::to_string(a_ntm) + " = " + std::to_string(d.count(a_ntm)));
  c.expect(d.min_nonzero() == a_min, "smallest nonzero weight off");
  c.expect(d.second_nonzero() == a_ntm, "second nonzero weight off");
  c.expect(min_distance(p) == BigInt(a_min), "closed-form minimum distance off");
  c.expect(ntm_weight(p) && *ntm_weight(p) == BigInt(a_ntm), "closed-form second weight off");
  c.expect(min_word_count(p) == BigInt(n_min), "closed-form minimal count off");
  c.expect(ntm_word_count(p) && *ntm_word_count(p) == BigInt(n_ntm),
           "closed-form second count off");
}

}  // namespace

int main() {
  criterion("C1", "exhaustive spectrum at q=4 s=4 d=3", 1.0, [](Ctx& c) {
    spectrum_criterion(c, {4, 4, 3}, 54, 54, 60, 81, "256");
  });

  criterion("C2", "exhaustive spectrum at q=5 s=4 d=3", 1.0, [](Ctx& c) {
    spectrum_criterion(c, {5, 4, 3}, 192, 96, 204, 256, "625");
  });

  criterion("C3", "million-codeword spectrum at q=4 s=5 d=3", 60.0, [](Ctx& c) {
    const CodeParams p{4, 5, 3};
    const Field f = Field::make(4);
    const WeightDistribution d =
        exhaustive_spectrum(p, f, std::uint64_t(1) << 21, 4);
    c.expect(d.total.str() == "1048576", "total " + d.total.str());
    c.expect(d.count(108) == 405, "A_108 = " + std::to_string(d.count(108)));
    c.expect(d.min_nonzero() == 108,
             "smallest nonzero weight " +
                 std::to_string(d.min_nonzero().value_or(0)));
    c.expect(min_distance(p) == BigInt(108), "closed-form minimum distance off");
    c.expect(!ntm_weight(p).has_value(), "second-weight formula should be uncovered here");
    if (d.second_nonzero())
      c.note("observed second nonzero weight (data only): " +
             std::to_string(*d.second_nonzero()) + ", count " +
             std::to_string(d.count(*d.second_nonzero())));
  });

  criterion("C4", "405 monic minimal forms at q=4 s=6 d=3, weight 216, distinct", 10.0,
            [](Ctx& c) {
    const CodeParams p{4, 6, 3};
    const Field f = Field::make(4);
    const TorusPointSet pts(f, 6);
    std::set<std::vector<Elem>> words;
    std::uint64_t bad = 0;
    const std::uint64_t count = stream_min(p, f, {true}, [&](const MinWordParams& w) {
      const Codeword cw = evaluate(expand_min(w, p, f), pts);
      if (cw.weight != 216) ++bad;
      words.insert(cw.values);
      return true;
    });
    c.expect(count == 405, "enumerated " + std::to_string(count));
    c.expect(bad == 0, std::to_string(bad) + " wrong weights");
    c.expect(words.size() == 405,
             std::to_string(words.size()) + " distinct codewords of 405");
  });

  criterion("C5", "q=4 s=8 d=3 family counts with 500-item weight samples", 120.0,
            [](Ctx& c) {
    const CodeParams p{4, 8, 3};
    const Field f = Field::make(4);
    const TorusPointSet pts(f, 8);

    std::uint64_t idx = 0, taken = 0, bad = 0;
    std::uint64_t count = stream_ntm(p, f, {true}, [&](const NtmWordParams& w) {
      if (idx++ % 102 == 0 && taken < 500) {
        ++taken;
        if (evaluate(expand_ntm(w, p, f), pts).weight != 2160) ++bad;
      }
      return true;
    });
    c.expect(count == 51030, "second-weight stream has " + std::to_string(count));
    c.expect(taken == 500 && bad == 0,
             std::to_string(bad) + " of " + std::to_string(taken) +
                 " sampled second-weight forms missed 2160");

    idx = taken = bad = 0;
    count = stream_min(p, f, {true}, [&](const MinWordParams& w) {
      if (idx++ % 22 == 0 && taken < 500) {
        ++taken;
        if (evaluate(expand_min(w, p, f), pts).weight != 1944) ++bad;
      }
      return true;
    });
    c.expect(count == 11340, "minimal stream has " + std::to_string(count));
    c.expect(taken == 500 && bad == 0,
             std::to_string(bad) + " of " + std::to_string(taken) +
                 " sampled minimal forms missed 1944");
  });

  criterion("C6", "linear-form counts, brute force vs closed form at s=6", 30.0,
            [](Ctx& c) {
    SplitMix64 rng(1234);
    for (const unsigned q : {4u, 5u}) {
      const Field f = Field::make(q);
      for (int u = 1; u <= 6; ++u) {
        const BigInt closed = linear_form_nonzero_count(q, 6, u);
        for (int trial = 0; trial < 5; ++trial) {
          std::vector<Elem> coeffs(static_cast<std::size_t>(u));
          for (auto& x : coeffs) x = f.units()[rng.below(q - 1)];
          const std::uint64_t got = linear_form_nonzero_bruteforce(f, 6, coeffs);
          c.expect(BigInt(got) == closed,
                   "q=" + std::to_string(q) + " u=" + std::to_string(u) + ": " +
                       std::to_string(got) + " vs " + closed.str());
        }
      }
      for (int k = 1; 2 * k + 2 <= 6; ++k)
        c.expect(linear_form_chain_check(q, 6, k),
                 "chain fails at q=" + std::to_string(q) + " k=" + std::to_string(k));
    }
  });

  criterion("C7", "weight >= footprint box bound on random cubics, s=3 and s=4", 120.0,
            [](Ctx& c) {
    SplitMix64 rng(77);
    for (const int s : {3, 4}) {
      const CodeParams p{4, s, 3};
      const Field f = Field::make(4);
      std::uint64_t tight = 0;
      for (int i = 0; i < 50; ++i) {
        const SqFreePoly poly = random_code_polynomial(p, f, rng);
        const FootprintCheck fc = footprint_weight_check(poly, p, f);
        c.expect(fc.bound_holds, "box bound fails for " + poly_to_text(poly));
        c.expect(BigInt(fc.weight) >= fc.lm_bound,
                 "leading-monomial bound fails for " + poly_to_text(poly));
        if (fc.bound_tight) ++tight;
      }
      c.note("s=" + std::to_string(s) + ": box bound tight for " + std::to_string(tight) +
             " of 50 random polynomials");
    }
  });

  criterion("C8", "complement pairing and permutation equivariance at q=4 s=5", 10.0,
            [](Ctx& c) {
    const CodeParams p{4, 5, 3};
    const Field f = Field::make(4);
    const TorusPointSet pts(f, 5);
    const ComplementPairing cp = complement_pairing(pts);
    SplitMix64 rng(2024);

    for (int t = 0; t < 100 && c.ok; ++t) {
      const SqFreePoly poly = random_code_polynomial(p, f, rng);
      const Codeword cw = evaluate(poly, pts);
      const Codeword cc = evaluate(complement(poly), pts);
      c.expect(cw.weight == cc.weight, "complement changed the weight of " + poly_to_text(poly));
      for (std::uint64_t i = 0; i < pts.size() && c.ok; ++i)
        c.expect(cw.values[i] == f.mul(cp.scaling[i], cc.values[cp.point_perm[i]]),
                 "pointwise pairing identity fails for " + poly_to_text(poly));
    }
    for (int t = 0; t < 10 && c.ok; ++t) {
      const Permutation sigma = Permutation::random(5, rng);
      const auto map = permutation_point_map(pts, sigma);
      const SqFreePoly poly = random_code_polynomial(p, f, rng);
      const Codeword cw = evaluate(poly, pts);
      const Codeword cs = evaluate(permute_vars(poly, sigma), pts);
      for (std::uint64_t i = 0; i < pts.size() && c.ok; ++i)
        c.expect(cs.values[i] == cw.values[map[i]],
                 "permutation identity fails for " + poly_to_text(poly));
    }
  });

  criterion("C9", "recognizers match the weight classes exactly at q=4 s=4 d=3", 10.0,
            [](Ctx& c) {
    const CodeParams p{4, 4, 3};
    const Field f = Field::make(4);
    const TorusPointSet pts(f, 4);

    for_each_code_polynomial(p, [&](const SqFreePoly& poly) {
      const std::uint64_t w = evaluate(poly, pts).weight;
      const bool is_min = recognize_min(poly, p, f).has_value();
      const bool is_ntm = recognize_ntm(poly, p, f).has_value();
      if (is_min != (w == 54))
        c.expect(false, "minimal recognizer disagrees at weight " + std::to_string(w) +
                            " for " + poly_to_text(poly));
      if (is_ntm != (w == 60))
        c.expect(false, "second-weight recognizer disagrees at weight " +
                            std::to_string(w) + " for " + poly_to_text(poly));
    });

    std::uint64_t bad = 0;
    stream_min(p, f, {false}, [&](const MinWordParams& w) {
      const auto back = recognize_min(expand_min(w, p, f), p, f);
      if (!back || !(*back == w)) ++bad;
      return true;
    });
    stream_ntm(p, f, {false}, [&](const NtmWordParams& w) {
      const auto back = recognize_ntm(expand_ntm(w, p, f), p, f);
      if (!back || !(*back == w)) ++bad;
      return true;
    });
    const CodeParams p6{4, 6, 3};
    stream_min(p6, f, {false}, [&](const MinWordParams& w) {
      const auto back = recognize_min(expand_min(w, p6, f), p6, f);
      if (!back || !(*back == w)) ++bad;
      return true;
    });
    c.expect(bad == 0, std::to_string(bad) + " roundtrips failed");
  });

  criterion("C10", "symmetric cubics have no linear factors; weight 60 at q=4", 60.0,
            [](Ctx& c) {
    for (const unsigned q : {4u, 5u, 7u, 8u, 9u}) {
      const Field f = Field::make(q);
      std::uint64_t searched = 0;
      for (const Elem a1 : f.units())
        for (const Elem a2 : f.units())
          for (const Elem a3 : f.units()) {
            SqFreePoly poly(4);
            poly.set_term(var_bit(1) | var_bit(2) | var_bit(3), 1);
            poly.set_term(var_bit(1) | var_bit(2) | var_bit(4), a1);
            poly.set_term(var_bit(1) | var_bit(3) | var_bit(4), a2);
            poly.set_term(var_bit(2) | var_bit(3) | var_bit(4), a3);
            if (!linear_factor_search(GenPoly::from_sqfree(poly), f).empty())
              c.expect(false, "linear factor found at q=" + std::to_string(q) + " for " +
                                  poly_to_text(poly));
            ++searched;
          }
      c.expect(searched == bigint_pow(q - 1, 3), "search count off");
      if (q == 4) {
        const TorusPointSet pts(f, 4);
        for (const Elem a1 : f.units())
          for (const Elem a2 : f.units())
            for (const Elem a3 : f.units()) {
              SqFreePoly poly(4);
              poly.set_term(var_bit(1) | var_bit(2) | var_bit(3), 1);
              poly.set_term(var_bit(1) | var_bit(2) | var_bit(4), a1);
              poly.set_term(var_bit(1) | var_bit(3) | var_bit(4), a2);
              poly.set_term(var_bit(2) | var_bit(3) | var_bit(4), a3);
              const std::uint64_t w = evaluate(poly, pts).weight;
              if (w != 60)
                c.expect(false, "weight " + std::to_string(w) + " for " + poly_to_text(poly));
            }
      }
    }
  });

  if (g_failures == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
