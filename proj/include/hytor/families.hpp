#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hytor/field.hpp"
#include "hytor/formulas.hpp"
#include "hytor/sqfree.hpp"

namespace hytor {

// Canonical parameters of a minimal-weight codeword polynomial.  With
// e = min(d, s-d), the polynomial is
//   scalar * prod_i (t_{b_i} + alpha_i t_{c_i}) * prod_{j in tail} t_j
// over e binomial factors whose 2e variable indices are all distinct, with
// b_i < c_i inside each pair and b_1 < b_2 < ... across pairs.  The tail
// is empty when 2d <= s and is the complement of the pair variables (so
// the degree comes out to d) when s < 2d < 2s.
struct MinWordParams {
  MinRegime regime = MinRegime::Low;
  std::vector<BinFactor> pairs;
  Elem scalar = 1;

  bool operator==(const MinWordParams&) const = default;
};

// Canonical parameters of a second-weight codeword polynomial.  With
// e = min(d, s-d), there are e-1 binomial factors (same conventions) plus
// one distinguished variable quadruple quad = (v1, v2, v3, v4), strictly
// ascending, disjoint from the pairs, with three unit coefficients a2, a3,
// a4.  When 2d + 2 <= s the quadruple contributes the linear factor
//   t_{v1} + a2 t_{v2} + a3 t_{v3} + a4 t_{v4}.
// When 2d - 2 >= s it contributes the cubic factor
//   t_{v2} t_{v3} t_{v4} + a2 t_{v1} t_{v3} t_{v4}
//   + a3 t_{v1} t_{v2} t_{v4} + a4 t_{v1} t_{v2} t_{v3}
// and the remaining variables appear as a tail monomial.  The gap band
// 2d - 1 <= s <= 2d + 1 has no canonical family.
struct NtmWordParams {
  NtmRegime regime = NtmRegime::Low;
  std::vector<BinFactor> pairs;
  std::array<int, 4> quad{0, 0, 0, 0};
  std::array<Elem, 3> quad_alphas{1, 1, 1};
  Elem scalar = 1;

  bool operator==(const NtmWordParams&) const = default;
};

// Variables forced into the tail monomial (empty in the low regimes).
VarSet min_tail_vars(const MinWordParams& w, int s);
VarSet ntm_tail_vars(const NtmWordParams& w, int s);

// Expand canonical parameters to the polynomial.  Validates the canonical
// constraints (ordering, distinctness, nonzero coefficients, regime
// matching (s, d)) and throws ParamError on violations.
SqFreePoly expand_min(const MinWordParams& w, const CodeParams& p, const Field& f);
SqFreePoly expand_ntm(const NtmWordParams& w, const CodeParams& p, const Field& f);

// Inverse of expansion.  Returns the unique canonical parameters whose
// expansion equals f, or nullopt when f is not in the family.  The ntm
// variant throws UnsupportedRegimeError in the gap band.
std::optional<MinWordParams> recognize_min(const SqFreePoly& f, const CodeParams& p,
                                           const Field& fld);
std::optional<NtmWordParams> recognize_ntm(const SqFreePoly& f, const CodeParams& p,
                                           const Field& fld);

// Deterministic enumeration order for both families: index structures
// first (pair index lists in lexicographic order on (b_1, c_1, b_2, c_2,
// ...), then the quadruple ascending), coefficients last.  Each coefficient
// runs through the unit list, the scalar fastest, then the quadruple
// coefficients a4, a3, a2, then the pair coefficients from the last pair
// backwards.
struct MinStreamOptions {
  bool monic_only = false;  // fix scalar = 1 instead of all units
};

// Visit every canonical parameter set in order; stop early if the visitor
// returns false.  Returns the number of items visited.
std::uint64_t stream_min(const CodeParams& p, const Field& f, const MinStreamOptions& opt,
                         const std::function<bool(const MinWordParams&)>& visit);
std::uint64_t stream_ntm(const CodeParams& p, const Field& f, const MinStreamOptions& opt,
                         const std::function<bool(const NtmWordParams&)>& visit);

}  // namespace hytor
