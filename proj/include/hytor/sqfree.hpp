#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hytor/errors.hpp"
#include "hytor/field.hpp"

namespace hytor {

// A square-free monomial in variables t_1..t_s as a bitmask: bit i-1 set
// means t_i divides the monomial.  The empty mask is the constant 1.
using VarSet = std::uint32_t;

inline constexpr int kMaxVars = 30;

inline VarSet var_bit(int i) { return VarSet(1) << (i - 1); }
inline int varset_degree(VarSet m) { return __builtin_popcount(m); }

// Graded lex order with t_1 > t_2 > ... > t_s: higher total degree wins;
// at equal degree the monomial owning the smallest-index differing
// variable is the larger one.
bool grlex_less(VarSet a, VarSet b);

struct GrlexGreater {
  bool operator()(VarSet a, VarSet b) const { return grlex_less(b, a); }
};

// Variable permutation on {1..s}.  image(i) is the index i maps to.
class Permutation {
public:
  // images[i-1] = image of i; must be a bijection of 1..s.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int s);

  int s() const { return int(images_.size()); }
  int image(int i) const { return images_[std::size_t(i) - 1]; }
  Permutation inverse() const;

  // Sample a uniform permutation from the given stream.
  static Permutation random(int s, class SplitMix64& rng);

private:
  std::vector<int> images_;
};

// Homogeneous polynomial whose monomials are all square-free of one common
// degree.  Terms are kept in descending graded lex order with nonzero
// coefficients only.
class SqFreePoly {
public:
  explicit SqFreePoly(int s);

  static SqFreePoly monomial(int s, VarSet vars, Elem coeff);

  int svars() const { return s_; }
  bool is_zero() const { return terms_.empty(); }
  // Common degree of the terms; -1 for the zero polynomial.
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }

  Elem coeff(VarSet vars) const;
  const std::map<VarSet, Elem, GrlexGreater>& terms() const { return terms_; }

  // Accumulate coeff onto the monomial, dropping the term if it cancels.
  // Enforces square-freeness within t_1..t_s but not homogeneity; callers
  // building polynomials term by term finish with check_homogeneous().
  void add_term(VarSet vars, Elem coeff, const Field& f);

  // Overwrite the coefficient of a monomial (erase on zero).  For builders
  // that already know their monomials are distinct.
  void set_term(VarSet vars, Elem coeff);

  void check_homogeneous() const;

  bool operator==(const SqFreePoly& o) const {
    return s_ == o.s_ && terms_ == o.terms_;
  }

private:
  int s_;
  std::map<VarSet, Elem, GrlexGreater> terms_;
};

// Largest monomial of f; throws DomainError on the zero polynomial.
VarSet leading_monomial(const SqFreePoly& f);
Elem leading_coeff(const SqFreePoly& f);

SqFreePoly poly_add(const SqFreePoly& a, const SqFreePoly& b, const Field& f);
SqFreePoly poly_scale(const SqFreePoly& a, Elem c, const Field& f);
// Scale so the leading coefficient is 1; throws DomainError on zero.
SqFreePoly poly_monic(const SqFreePoly& a, const Field& f);

// Apply sigma to the variables: the monomial prod t_j becomes
// prod t_sigma(j), coefficients unchanged.
SqFreePoly permute_vars(const SqFreePoly& a, const Permutation& sigma);

// Complement map on monomials: each support set is replaced by its
// complement in {1..s}.  Linear on polynomials, an involution, and sends
// degree d to degree s - d.
SqFreePoly complement(const SqFreePoly& a);

// All square-free monomials of degree d in s variables, descending graded
// lex order.  d = 0 gives {1}; requires 0 <= d <= s.
std::vector<VarSet> hypersimplex_basis(int s, int d);

// One binomial factor t_b + alpha * t_c.
struct BinFactor {
  int b;
  int c;
  Elem alpha;

  bool operator==(const BinFactor&) const = default;
};

// One four-term linear factor t_anchor + a2 t_i2 + a3 t_i3 + a4 t_i4.
struct FourTermFactor {
  int anchor;
  int i2, i3, i4;
  Elem a2, a3, a4;
};

// Expand scalar * prod(binomials) * (four-term factor, if present) * prod
// of tail variables.  Every variable index across all factors and the tail
// must be distinct and in [1, s]; all coefficients must be nonzero.  The
// result has exactly 2^#binomials * (4 if four-term) terms.
SqFreePoly expand_product(int s, const Field& f, Elem scalar,
                          const std::vector<BinFactor>& binomials,
                          const std::optional<FourTermFactor>& four_term,
                          VarSet tail);

// Text form: terms in descending graded lex order joined by " + ", each
// term "c*t_i*t_j" with the coefficient omitted when it is 1 (unless the
// term is constant).  Example: "t1*t2 + 3*t1*t3".
std::string poly_to_text(const SqFreePoly& a);

// Parse the text form.  Whitespace is free; coefficients are element
// encodings.  With a field, coefficients are validated and accumulated in
// it; without, coefficients must be in [1, 255] and monomials distinct.
SqFreePoly poly_parse(const std::string& text, int s, const Field* f = nullptr);

}  // namespace hytor
