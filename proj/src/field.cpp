#include "hytor/field.hpp"

#include <algorithm>
#include <numeric>

namespace hytor {
namespace {

// Digits of the encoding, constant term first, length m.
std::vector<unsigned> to_digits(unsigned value, unsigned p, unsigned m) {
  std::vector<unsigned> d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Product of two F_p[x] polynomials given as digit vectors.
std::vector<unsigned> poly_mul(const std::vector<unsigned>& a,
                               const std::vector<unsigned>& b, unsigned p) {
  std::vector<unsigned> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

std::size_t poly_degree(const std::vector<unsigned>& a) {
  std::size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const std::vector<unsigned>& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Remainder of a modulo b over F_p; b must be nonzero.
std::vector<unsigned> poly_rem(std::vector<unsigned> a,
                               const std::vector<unsigned>& b, unsigned p) {
  const std::size_t db = poly_degree(b);
  const unsigned lead = b[db];
  // Inverse of the leading coefficient in F_p by scan (p <= 251).
  unsigned lead_inv = 1;
  for (unsigned t = 1; t < p; ++t)
    if (lead * t % p == 1) {
      lead_inv = t;
      break;
    }
  while (!poly_is_zero(a) && poly_degree(a) >= db) {
    const std::size_t da = poly_degree(a);
    const unsigned f = a[da] * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::size_t k = da - db + i;
      a[k] = (a[k] + p * p - f * b[i] % p) % p;
    }
  }
  return a;
}

// True if the monic polynomial f (degree >= 1) has no factor of degree in
// [1, deg(f)/2]; trial division by every monic polynomial of those degrees.
bool poly_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const std::size_t deg = poly_degree(f);
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    unsigned count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      std::vector<unsigned> cand = to_digits(low, p, unsigned(dd));
      cand.push_back(1);
      if (poly_is_zero(poly_rem(f, cand, p))) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m over F_p,
// coefficient tuples compared from the constant term upward.
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned m) {
  unsigned count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (unsigned n = 0; n < count; ++n) {
    // Read n as the coefficient tuple with the constant term most
    // significant, so ascending n scans tuples in lexicographic order.
    std::vector<unsigned> cand(m);
    unsigned v = n;
    for (unsigned i = m; i-- > 0;) {
      cand[i] = v % p;
      v /= p;
    }
    cand.push_back(1);
    if (poly_irreducible(cand, p)) return cand;
  }
  throw ParamError("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field Field::make(unsigned q, bool permissive) {
  if (q > 256) throw ParamError("unsupported field order " + std::to_string(q) + " (maximum 256)");
  const unsigned lower = permissive ? 2 : 4;
  if (q < lower)
    throw ParamError("field order " + std::to_string(q) + " below validated minimum 4");

  unsigned p = 0;
  for (unsigned c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  unsigned m = 0, t = q;
  while (t > 1 && t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1) throw ParamError(std::to_string(q) + " is not a prime power");

  Field f;
  f.q_ = q;
  f.p_ = p;
  f.m_ = m;
  f.modulus_ = m == 1 ? std::vector<unsigned>{0, 1} : smallest_irreducible(p, m);

  f.add_.resize(std::size_t(q) * q);
  f.mul_.resize(std::size_t(q) * q);
  f.neg_.resize(q);
  f.inv_.resize(q, 0);

  for (unsigned a = 0; a < q; ++a) {
    const auto da = to_digits(a, p, m);
    std::vector<unsigned> nd(m);
    for (unsigned i = 0; i < m; ++i) nd[i] = (p - da[i]) % p;
    f.neg_[a] = Elem(from_digits(nd, p));
    for (unsigned b = 0; b < q; ++b) {
      const auto db = to_digits(b, p, m);
      std::vector<unsigned> sum(m);
      for (unsigned i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_[std::size_t(a) * q + b] = Elem(from_digits(sum, p));
      auto prod = poly_rem(poly_mul(da, db, p), f.modulus_, p);
      prod.resize(m);
      f.mul_[std::size_t(a) * q + b] = Elem(from_digits(prod, p));
    }
  }

  // Smallest primitive element by direct order computation.
  f.generator_ = 1;
  if (q > 2) {
    for (unsigned g = 2; g < q; ++g) {
      unsigned order = 1;
      Elem x = Elem(g);
      while (x != 1) {
        x = f.mul_[std::size_t(x) * q + g];
        ++order;
      }
      if (order == q - 1) {
        f.generator_ = Elem(g);
        break;
      }
    }
  }

  f.units_.reserve(q - 1);
  if (m == 1) {
    for (unsigned u = 1; u < q; ++u) f.units_.push_back(Elem(u));
  } else {
    Elem x = 1;
    for (unsigned i = 0; i < q - 1; ++i) {
      f.units_.push_back(x);
      x = f.mul_[std::size_t(x) * q + f.generator_];
    }
  }
  f.unit_index_.resize(q, 0);
  for (unsigned i = 0; i < q - 1; ++i) f.unit_index_[f.units_[i]] = i;

  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (f.mul_[std::size_t(a) * q + b] == 1) {
        f.inv_[a] = Elem(b);
        break;
      }

  return f;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace hytor
