#pragma once

#include <cstdint>
#include <vector>

#include "hytor/errors.hpp"

namespace hytor {

// Field element handle.  Elements of F_q (q = p^m <= 256) are encoded as
// integers in [0, q): the element sum a_i x^i with digits a_i in [0, p)
// is encoded as sum a_i p^i, so 0 and 1 are the additive and
// multiplicative identities in every field.
using Elem = std::uint8_t;

// Arithmetic table for one finite field of order q = p^m with q <= 256.
//
// The representation is fixed deterministically from q alone:
//   * modulus = the monic irreducible polynomial of degree m over F_p whose
//     coefficient tuple (constant term first) is lexicographically smallest;
//   * the unit list enumerates F_q* as 1..q-1 when m = 1 and as the powers
//     g^0, g^1, ..., g^(q-2) of the smallest primitive element g otherwise.
//
// All binary operations are table lookups, so kernels can stream through
// codewords without branching on the field structure.
class Field {
public:
  // Validated mode requires 4 <= q <= 256; permissive additionally admits
  // q = 2 and q = 3 for plumbing tests.  Throws ParamError if q is not a
  // prime power and ResourceError never (tables are at most 64 KiB).
  static Field make(unsigned q, bool permissive = false);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned m() const { return m_; }

  // Coefficients of the defining polynomial, constant term first, length
  // m + 1, leading coefficient 1.  For m = 1 this is x, i.e. {0, 1}.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }

  Elem inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return inv_[a];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const;

  // The q-1 units in canonical order; units()[0] == 1 always.
  const std::vector<Elem>& units() const { return units_; }

  // Position of a unit in units(); throws DomainError for 0.
  unsigned unit_index(Elem a) const {
    if (a == 0) throw DomainError("unit index of zero");
    return unit_index_[a];
  }

  // Smallest primitive element (generator of F_q*).
  Elem generator() const { return generator_; }

  // Row pointers into the full q*q tables, for inner loops.
  const Elem* add_row(Elem a) const { return add_.data() + std::size_t(a) * q_; }
  const Elem* mul_row(Elem a) const { return mul_.data() + std::size_t(a) * q_; }

private:
  Field() = default;
  std::size_t idx(Elem a, Elem b) const { return std::size_t(a) * q_ + b; }

  unsigned q_ = 0, p_ = 0, m_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_, mul_;
  std::vector<Elem> neg_, inv_;
  std::vector<Elem> units_;
  std::vector<unsigned> unit_index_;
  Elem generator_ = 0;
};

}  // namespace hytor
