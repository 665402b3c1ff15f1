#include "hytor/formulas.hpp"

#include "hytor/sqfree.hpp"

namespace hytor {

void validate_params(const CodeParams& p, bool permissive) {
  if (p.q > 256)
    throw ParamError("unsupported field order " + std::to_string(p.q) + " (maximum 256)");
  const unsigned qmin = permissive ? 2 : 4;
  if (p.q < qmin)
    throw ParamError("field order " + std::to_string(p.q) + " below validated minimum 4");
  unsigned t = p.q, pr = 0;
  for (unsigned c = 2; c <= t; ++c)
    if (t % c == 0) {
      pr = c;
      break;
    }
  while (t > 1 && t % pr == 0) t /= pr;
  if (t != 1) throw ParamError(std::to_string(p.q) + " is not a prime power");
  if (p.s < 1 || p.s > kMaxVars)
    throw ParamError("variable count s out of range [1, " + std::to_string(kMaxVars) + "]");
  const int dmin = permissive ? 1 : 3;
  if (p.d < dmin || p.d > p.s)
    throw ParamError("degree d out of range [" + std::to_string(dmin) + ", s]");
}

bool out_of_hypothesis(const CodeParams& p) {
  return p.q < 4 || p.d < 3 || p.d == p.s;
}

MinRegime min_regime(int s, int d) {
  return 2 * d <= s ? MinRegime::Low : MinRegime::High;
}

NtmRegime ntm_regime(int s, int d) {
  if (2 * d + 2 <= s) return NtmRegime::Low;
  if (2 * d - 2 >= s && d < s) return NtmRegime::High;
  return NtmRegime::Gap;
}

std::string regime_label(MinRegime r) {
  return r == MinRegime::Low ? "min-low" : "min-high";
}

std::string regime_label(NtmRegime r) {
  switch (r) {
    case NtmRegime::Low: return "ntm-low";
    case NtmRegime::High: return "ntm-high";
    default: return "ntm-gap";
  }
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt bigint_pow(BigInt base, int exp) {
  if (exp < 0) throw ParamError("negative exponent");
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

BigInt code_length(const CodeParams& p) { return bigint_pow(p.q - 1, p.s); }

BigInt code_dimension(const CodeParams& p) { return binomial(p.s, p.d); }

BigInt min_distance(const CodeParams& p) {
  const BigInt q1 = p.q - 1, q2 = p.q - 2;
  if (p.d == p.s) return bigint_pow(q1, p.s);
  if (2 * p.d <= p.s) return bigint_pow(q2, p.d) * bigint_pow(q1, p.s - p.d);
  return bigint_pow(q2, p.s - p.d) * bigint_pow(q1, p.d);
}

std::optional<BigInt> ntm_weight(const CodeParams& p) {
  if (ntm_regime(p.s, p.d) == NtmRegime::Gap || p.d == p.s) return std::nullopt;
  const int e = std::min(p.d, p.s - p.d);
  const int m = std::max(p.d, p.s - p.d);
  return min_distance(p) + bigint_pow(p.q - 2, e) * bigint_pow(p.q - 1, m - 2);
}

BigInt min_word_count(const CodeParams& p) {
  if (p.d >= p.s)
    throw UnsupportedRegimeError("minimal-weight word count requires d < s");
  const int e = std::min(p.d, p.s - p.d);
  BigInt num = bigint_pow(p.q - 1, e + 1);
  for (int i = 0; i < 2 * e; ++i) num *= p.s - i;
  BigInt den = 1;
  for (int i = 2; i <= e; ++i) den *= i;
  den <<= e;
  if (num % den != 0) throw DomainError("minimal word count is not an integer");
  return num / den;
}

std::optional<BigInt> ntm_word_count(const CodeParams& p) {
  if (ntm_regime(p.s, p.d) == NtmRegime::Gap || p.d == p.s) return std::nullopt;
  const int e = std::min(p.d, p.s - p.d);
  if (e < 1) return std::nullopt;
  BigInt num = bigint_pow(p.q - 1, e + 3);
  for (int i = 0; i <= 2 * e + 1; ++i) num *= p.s - i;
  BigInt den = 3;
  for (int i = 2; i <= e - 1; ++i) den *= i;
  den <<= (e + 2);
  if (num % den != 0) throw DomainError("second-weight word count is not an integer");
  return num / den;
}

BigInt linear_form_nonzero_count(unsigned q, int s, int u) {
  if (u < 1 || u > s) throw ParamError("u out of range [1, s]");
  const BigInt q1 = q - 1;
  const int sign = (u % 2 == 0) ? 1 : -1;
  BigInt inner = bigint_pow(q1, u + 1) + sign;
  if (inner % q != 0) throw DomainError("count formula divisibility failed");
  inner /= q;
  inner += -sign;
  return inner * bigint_pow(q1, s - u);
}

bool linear_form_chain_check(unsigned q, int s, int k) {
  if (k < 1 || 2 * k + 2 > s) throw ParamError("chain requires k >= 1 and 2k + 2 <= s");
  const BigInt mid = bigint_pow(q - 1, s + 1);  // compared against q * N(u)
  const BigInt odd_lo = linear_form_nonzero_count(q, s, 2 * k - 1);
  const BigInt odd_hi = linear_form_nonzero_count(q, s, 2 * k + 1);
  const BigInt even_lo = linear_form_nonzero_count(q, s, 2 * k);
  const BigInt even_hi = linear_form_nonzero_count(q, s, 2 * k + 2);
  return odd_lo > odd_hi && odd_hi * q > mid && mid > even_hi * q && even_hi > even_lo;
}

}  // namespace hytor
