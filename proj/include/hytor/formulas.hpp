#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hytor/errors.hpp"

namespace hytor {

using BigInt = boost::multiprecision::cpp_int;

// Parameters of one evaluation code: field order q, variable count s,
// square-free degree d.  Codewords live in F_q^n with n = (q-1)^s and the
// code has dimension binomial(s, d).
struct CodeParams {
  unsigned q = 0;
  int s = 0;
  int d = 0;
};

// Validated mode requires 4 <= q <= 256, 1 <= s <= 30, 3 <= d <= s.
// Permissive keeps the structural constraints (prime-power q <= 256,
// 1 <= d <= s) but admits q in {2, 3} and d < 3; closed forms evaluated
// outside their hypotheses are the caller's risk (see out_of_hypothesis).
void validate_params(const CodeParams& p, bool permissive = false);

// True when (q, s, d) is outside the range the closed forms are stated
// for, i.e. q < 4 or d < 3 or d = s.
bool out_of_hypothesis(const CodeParams& p);

// Which closed form applies to the minimum distance.
enum class MinRegime { Low, High };
// Which closed form applies to the second-smallest nonzero weight; Gap is
// the uncovered band 2d - 1 <= s <= 2d + 1 (with d < s).
enum class NtmRegime { Low, High, Gap };

MinRegime min_regime(int s, int d);
NtmRegime ntm_regime(int s, int d);

std::string regime_label(MinRegime r);  // "min-low" / "min-high"
std::string regime_label(NtmRegime r);  // "ntm-low" / "ntm-high" / "ntm-gap"

BigInt binomial(int n, int k);
BigInt bigint_pow(BigInt base, int exp);

// Length n = (q-1)^s and dimension binomial(s, d).
BigInt code_length(const CodeParams& p);
BigInt code_dimension(const CodeParams& p);

// Minimum distance:
//   (q-2)^d (q-1)^(s-d)  when 2d <= s,
//   (q-2)^(s-d) (q-1)^d  when s < 2d < 2s,
//   (q-1)^s              when d = s (the code is one-dimensional).
BigInt min_distance(const CodeParams& p);

// Second-smallest nonzero weight, min_distance + (q-2)^e (q-1)^(m-2) with
// e = min(d, s-d) and m = max(d, s-d); covered only when 2d + 2 <= s or
// 2d - 2 >= s (and d < s).  nullopt means not covered.
std::optional<BigInt> ntm_weight(const CodeParams& p);

// Number of codewords of weight exactly min_distance:
//   (q-1)^(e+1) * s(s-1)...(s-2e+1) / (e! 2^e),  e = min(d, s-d).
// Requires d < s (for d = s every nonzero codeword has minimal weight).
BigInt min_word_count(const CodeParams& p);

// Number of codewords of weight exactly ntm_weight:
//   (q-1)^(e+3) * s(s-1)...(s-2e) / ((e-1)! 2^(e+2) 3).
// nullopt when the regime is not covered.
std::optional<BigInt> ntm_word_count(const CodeParams& p);

// Number of points of the torus (F_q*)^s where a linear form in u of the
// variables with all-nonzero coefficients does not vanish:
//   ( ((q-1)^(u+1) + (-1)^u) / q + (-1)^(u+1) ) * (q-1)^(s-u).
// Requires 1 <= u <= s.  Independent of which coefficients are chosen.
BigInt linear_form_nonzero_count(unsigned q, int s, int u);

// The alternating chain around (q-1)^(s+1)/q: with N(u) the count above,
//   N(2k-1) > N(2k+1),   N(2k+1) * q > (q-1)^(s+1) > N(2k+2) * q,
//   N(2k+2) > N(2k).
// Verified exactly by cross-multiplication; requires k >= 1, 2k+2 <= s.
bool linear_form_chain_check(unsigned q, int s, int k);

}  // namespace hytor
