#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hytor/field.hpp"
#include "hytor/formulas.hpp"
#include "hytor/sqfree.hpp"
#include "hytor/torus.hpp"

namespace hytor {

// Monomial with arbitrary exponents, for the full polynomial ring.
struct ExpMonomial {
  std::vector<int> e;

  int degree() const;
  bool divides(const ExpMonomial& other) const;

  bool operator==(const ExpMonomial& o) const { return e == o.e; }
};

// Graded lex with t_1 > ... > t_s: total degree first, then the exponent
// of t_1, t_2, ... decides.  Returns <0, 0, >0.
int grlex_compare(const ExpMonomial& a, const ExpMonomial& b);

struct ExpGrlexGreater {
  bool operator()(const ExpMonomial& a, const ExpMonomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

ExpMonomial exp_lcm(const ExpMonomial& a, const ExpMonomial& b);
bool exp_coprime(const ExpMonomial& a, const ExpMonomial& b);

// General polynomial in F_q[t_1..t_s], terms in descending graded lex.
class GenPoly {
public:
  explicit GenPoly(int s);

  static GenPoly from_sqfree(const SqFreePoly& f);
  static GenPoly monomial(int s, ExpMonomial m, Elem c);
  // t_i^(q-1) - 1 for every i: the vanishing relations of the torus.
  static std::vector<GenPoly> torus_relations(const Field& f, int s);

  int svars() const { return s_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpMonomial, Elem, ExpGrlexGreater>& terms() const { return terms_; }

  const ExpMonomial& leading_monomial() const;
  Elem leading_coeff() const;

  void add_term(const ExpMonomial& m, Elem c, const Field& f);

  bool operator==(const GenPoly& o) const { return s_ == o.s_ && terms_ == o.terms_; }

private:
  int s_;
  std::map<ExpMonomial, Elem, ExpGrlexGreater> terms_;
};

GenPoly gen_add(const GenPoly& a, const GenPoly& b, const Field& f);
GenPoly gen_scale(const GenPoly& a, Elem c, const Field& f);
GenPoly gen_monic(const GenPoly& a, const Field& f);
// a * c * t^m.
GenPoly gen_mul_term(const GenPoly& a, const ExpMonomial& m, Elem c, const Field& f);

struct DivisionResult {
  std::vector<GenPoly> quotients;  // aligned with the divisor list
  GenPoly remainder;
};

// Multivariate division: repeatedly cancel the leading term of the running
// polynomial against the first divisor whose leading monomial divides it;
// leading terms nothing divides move to the remainder.  Guarantees
// f = sum quotients[i] * divisors[i] + remainder, and no remainder term is
// divisible by any divisor's leading monomial.
DivisionResult gen_divide(const GenPoly& f, const std::vector<GenPoly>& divisors,
                          const Field& fld);

GenPoly spoly(const GenPoly& a, const GenPoly& b, const Field& f);

inline constexpr std::uint64_t kDefaultPairGuard = 1'000'000;

// Buchberger with the normal selection strategy (smallest lcm first) and
// the coprime-leading-monomial skip, followed by reduction to the unique
// reduced basis: minimal, monic, every tail term irreducible, sorted by
// descending leading monomial.  Throws ResourceError when more than
// max_pairs S-pairs are processed.
std::vector<GenPoly> buchberger(std::vector<GenPoly> gens, const Field& f,
                                std::uint64_t max_pairs = kDefaultPairGuard);

inline constexpr std::uint64_t kDefaultBoxGuard = std::uint64_t(1) << 24;

// Count exponent vectors in [0, q-2]^s divisible by no basis leading
// monomial.  Requires every variable to have a pure-power leading monomial
// in the basis (throws DomainError otherwise: the count would be infinite)
// and (q-1)^s within the guard.
std::uint64_t footprint_size(const std::vector<GenPoly>& basis, const Field& f,
                             std::uint64_t max_boxes = kDefaultBoxGuard);

// Closed-form weight bound read off the leading monomial of f alone:
// prod over variables of (q - 1 - exponent), which for a square-free
// leading monomial of degree d is (q-2)^d (q-1)^(s-d).
BigInt lm_weight_bound(const SqFreePoly& f, const CodeParams& p);

// Full pipeline on one polynomial: evaluate its weight on the torus, run
// Buchberger on the torus relations plus f, count the footprint, and
// report weight >= (q-1)^s - footprint alongside the leading-monomial
// bound.  Meant for small s; guards are inherited from the pieces.
struct FootprintCheck {
  std::uint64_t weight = 0;
  std::uint64_t footprint = 0;
  std::uint64_t box_bound = 0;   // (q-1)^s - footprint
  BigInt lm_bound;
  bool bound_holds = false;      // weight >= box_bound
  bool bound_tight = false;      // weight == box_bound
};

FootprintCheck footprint_weight_check(const SqFreePoly& f, const CodeParams& p,
                                      const Field& fld,
                                      std::uint64_t max_pairs = kDefaultPairGuard,
                                      std::uint64_t max_elements = kDefaultElemGuard);

}  // namespace hytor
