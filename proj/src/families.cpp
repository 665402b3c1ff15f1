#include "hytor/families.hpp"

#include <algorithm>
#include <map>

namespace hytor {
namespace {

int min_factor_count(const CodeParams& p) { return std::min(p.d, p.s - p.d); }

VarSet pair_vars(const std::vector<BinFactor>& pairs) {
  VarSet v = 0;
  for (const auto& bf : pairs) v |= var_bit(bf.b) | var_bit(bf.c);
  return v;
}

void validate_pairs(const std::vector<BinFactor>& pairs, int s) {
  VarSet used = 0;
  int prev_b = 0;
  for (const auto& bf : pairs) {
    if (bf.b < 1 || bf.b > s || bf.c < 1 || bf.c > s)
      throw ParamError("pair variable index out of range");
    if (bf.b >= bf.c) throw ParamError("pair must have b < c");
    if (bf.b <= prev_b) throw ParamError("pair first indices must be strictly ascending");
    prev_b = bf.b;
    const VarSet bits = var_bit(bf.b) | var_bit(bf.c);
    if (used & bits) throw ParamError("repeated variable across pairs");
    used |= bits;
    if (bf.alpha == 0) throw ParamError("pair coefficient must be nonzero");
  }
}

}  // namespace

VarSet min_tail_vars(const MinWordParams& w, int s) {
  if (w.regime == MinRegime::Low) return 0;
  const VarSet full = (VarSet(1) << s) - 1;
  return full & ~pair_vars(w.pairs);
}

VarSet ntm_tail_vars(const NtmWordParams& w, int s) {
  if (w.regime != NtmRegime::High) return 0;
  const VarSet full = (VarSet(1) << s) - 1;
  VarSet used = pair_vars(w.pairs);
  for (int v : w.quad) used |= var_bit(v);
  return full & ~used;
}

SqFreePoly expand_min(const MinWordParams& w, const CodeParams& p, const Field& f) {
  if (p.d >= p.s)
    throw UnsupportedRegimeError("minimal-weight family requires d < s");
  if (w.regime != min_regime(p.s, p.d))
    throw ParamError("parameter regime does not match (s, d)");
  const int e = min_factor_count(p);
  if (int(w.pairs.size()) != e) throw ParamError("expected exactly min(d, s-d) pairs");
  validate_pairs(w.pairs, p.s);
  if (w.scalar == 0) throw ParamError("scalar must be nonzero");
  return expand_product(p.s, f, w.scalar, w.pairs, std::nullopt, min_tail_vars(w, p.s));
}

SqFreePoly expand_ntm(const NtmWordParams& w, const CodeParams& p, const Field& f) {
  const NtmRegime reg = ntm_regime(p.s, p.d);
  if (reg == NtmRegime::Gap)
    throw UnsupportedRegimeError("no second-weight family in the band 2d-1 <= s <= 2d+1");
  if (w.regime != reg) throw ParamError("parameter regime does not match (s, d)");
  const int e = min_factor_count(p);
  if (int(w.pairs.size()) != e - 1)
    throw ParamError("expected exactly min(d, s-d) - 1 pairs");
  validate_pairs(w.pairs, p.s);
  VarSet used = pair_vars(w.pairs);
  int prev = 0;
  for (int v : w.quad) {
    if (v < 1 || v > p.s) throw ParamError("quadruple index out of range");
    if (v <= prev) throw ParamError("quadruple must be strictly ascending");
    if (used & var_bit(v)) throw ParamError("quadruple overlaps a pair");
    used |= var_bit(v);
    prev = v;
  }
  for (const Elem a : w.quad_alphas)
    if (a == 0) throw ParamError("quadruple coefficient must be nonzero");
  if (w.scalar == 0) throw ParamError("scalar must be nonzero");

  const FourTermFactor four{w.quad[0], w.quad[1], w.quad[2], w.quad[3],
                            w.quad_alphas[0], w.quad_alphas[1], w.quad_alphas[2]};
  if (reg == NtmRegime::Low)
    return expand_product(p.s, f, w.scalar, w.pairs, four, 0);

  // High regime: expand the mirrored low-style product and take the
  // monomial complement, which swaps each binomial's roles back, turns
  // the four-term factor into the cubic, and emits the tail monomial.
  std::vector<BinFactor> mirrored;
  mirrored.reserve(w.pairs.size());
  for (const auto& bf : w.pairs) mirrored.push_back(BinFactor{bf.c, bf.b, bf.alpha});
  const SqFreePoly low = expand_product(p.s, f, 1, mirrored, four, 0);
  return poly_scale(complement(low), w.scalar, f);
}

namespace {

// Single-swap partner table: for every support monomial at symmetric
// difference exactly {v, x} from the leading monomial (v inside it, x
// outside), record x as a partner of v.
std::map<int, std::vector<int>> partner_table(const SqFreePoly& core) {
  const VarSet lm = leading_monomial(core);
  std::map<int, std::vector<int>> partners;
  for (const auto& [m, c] : core.terms()) {
    (void)c;
    const VarSet diff = m ^ lm;
    if (varset_degree(diff) != 2) continue;
    const VarSet inside = diff & lm, outside = diff & ~lm;
    const int v = __builtin_ctz(inside) + 1;
    const int x = __builtin_ctz(outside) + 1;
    partners[v].push_back(x);
  }
  for (auto& [v, xs] : partners) {
    (void)v;
    std::sort(xs.begin(), xs.end());
  }
  return partners;
}

// Remove the common tail from every monomial; requires tail subset of all.
SqFreePoly strip_tail(const SqFreePoly& f, VarSet tail) {
  SqFreePoly r(f.svars());
  for (const auto& [m, c] : f.terms()) r.set_term(m & ~tail, c);
  return r;
}

VarSet support_intersection(const SqFreePoly& f) {
  VarSet t = (VarSet(1) << f.svars()) - 1;
  for (const auto& [m, c] : f.terms()) {
    (void)c;
    t &= m;
  }
  return t;
}

}  // namespace

std::optional<MinWordParams> recognize_min(const SqFreePoly& f, const CodeParams& p,
                                           const Field& fld) {
  if (f.svars() != p.s) throw ParamError("variable count mismatch");
  if (p.d >= p.s || f.is_zero() || f.degree() != p.d) return std::nullopt;
  const int e = min_factor_count(p);
  const MinRegime reg = min_regime(p.s, p.d);

  SqFreePoly core = f;
  if (reg == MinRegime::High) {
    const VarSet tail = support_intersection(f);
    if (varset_degree(tail) != p.s - 2 * e) return std::nullopt;
    core = strip_tail(f, tail);
  }
  if (core.term_count() != (std::size_t(1) << e)) return std::nullopt;
  const VarSet lm = leading_monomial(core);
  if (varset_degree(lm) != e) return std::nullopt;

  const auto partners = partner_table(core);
  MinWordParams w;
  w.regime = reg;
  w.scalar = leading_coeff(core);
  for (int v = 1; v <= p.s; ++v) {
    if (!(lm & var_bit(v))) continue;
    const auto it = partners.find(v);
    if (it == partners.end() || it->second.size() != 1) return std::nullopt;
    const int c = it->second[0];
    const Elem alpha = fld.div(core.coeff((lm & ~var_bit(v)) | var_bit(c)), w.scalar);
    w.pairs.push_back(BinFactor{v, c, alpha});
  }

  try {
    if (expand_min(w, p, fld) == f) return w;
  } catch (const ParamError&) {
  }
  return std::nullopt;
}

std::optional<NtmWordParams> recognize_ntm(const SqFreePoly& f, const CodeParams& p,
                                           const Field& fld) {
  if (f.svars() != p.s) throw ParamError("variable count mismatch");
  const NtmRegime reg = ntm_regime(p.s, p.d);
  if (reg == NtmRegime::Gap)
    throw UnsupportedRegimeError("no second-weight family in the band 2d-1 <= s <= 2d+1");
  if (f.is_zero() || f.degree() != p.d) return std::nullopt;
  const int e = min_factor_count(p);

  SqFreePoly core = f;
  if (reg == NtmRegime::High) {
    const VarSet tail = support_intersection(f);
    if (varset_degree(tail) != p.s - 2 * e - 2) return std::nullopt;
    core = strip_tail(f, tail);
  }
  if (core.term_count() != (std::size_t(2) << e)) return std::nullopt;
  const VarSet lm = leading_monomial(core);
  const int lm_deg = varset_degree(lm);
  if (lm_deg != (reg == NtmRegime::Low ? e : e + 2)) return std::nullopt;

  const auto partners = partner_table(core);

  NtmWordParams w;
  w.regime = reg;
  if (reg == NtmRegime::Low) {
    // One leading variable (the quad anchor) has exactly three partners;
    // the others have one each.
    int anchor = 0;
    for (int v = 1; v <= p.s; ++v) {
      if (!(lm & var_bit(v))) continue;
      const auto it = partners.find(v);
      if (it == partners.end()) return std::nullopt;
      if (it->second.size() == 3) {
        if (anchor != 0) return std::nullopt;
        anchor = v;
      } else if (it->second.size() != 1) {
        return std::nullopt;
      }
    }
    if (anchor == 0) return std::nullopt;
    w.scalar = leading_coeff(core);
    for (int v = 1; v <= p.s; ++v) {
      if (!(lm & var_bit(v)) || v == anchor) continue;
      const int c = partners.at(v)[0];
      const Elem alpha = fld.div(core.coeff((lm & ~var_bit(v)) | var_bit(c)), w.scalar);
      w.pairs.push_back(BinFactor{v, c, alpha});
    }
    const auto& qs = partners.at(anchor);
    w.quad = {anchor, qs[0], qs[1], qs[2]};
    for (int k = 0; k < 3; ++k)
      w.quad_alphas[std::size_t(k)] =
          fld.div(core.coeff((lm & ~var_bit(anchor)) | var_bit(qs[std::size_t(k)])), w.scalar);
  } else {
    // Three leading variables share one common partner (the variable the
    // cubic factor omits from the leading term); pair variables keep
    // singleton distinct partners.  Group leading variables by partner.
    std::map<int, std::vector<int>> by_partner;
    for (int v = 1; v <= p.s; ++v) {
      if (!(lm & var_bit(v))) continue;
      const auto it = partners.find(v);
      if (it == partners.end() || it->second.size() != 1) return std::nullopt;
      by_partner[it->second[0]].push_back(v);
    }
    int common = 0;
    std::vector<int> trio;
    for (const auto& [x, vs] : by_partner) {
      if (vs.size() == 3) {
        if (common != 0) return std::nullopt;
        common = x;
        trio = vs;
      } else if (vs.size() != 1) {
        return std::nullopt;
      }
    }
    if (common == 0) return std::nullopt;
    w.quad = {trio[0], trio[1], trio[2], common};

    const VarSet lm_small = (lm & ~var_bit(trio[0])) | var_bit(common);
    w.scalar = core.coeff(lm_small);
    w.quad_alphas[0] =
        fld.div(core.coeff((lm & ~var_bit(trio[1])) | var_bit(common)), w.scalar);
    w.quad_alphas[1] =
        fld.div(core.coeff((lm & ~var_bit(trio[2])) | var_bit(common)), w.scalar);
    w.quad_alphas[2] = fld.div(core.coeff(lm), w.scalar);
    for (const auto& [x, vs] : by_partner) {
      if (vs.size() != 1 || x == common) continue;
      const int v = vs[0];
      const Elem alpha = fld.div(core.coeff((lm & ~var_bit(v)) | var_bit(x)), core.coeff(lm));
      w.pairs.push_back(BinFactor{v, x, alpha});
    }
    std::sort(w.pairs.begin(), w.pairs.end(),
              [](const BinFactor& a, const BinFactor& b) { return a.b < b.b; });
  }

  try {
    if (expand_ntm(w, p, fld) == f) return w;
  } catch (const ParamError&) {
  }
  return std::nullopt;
}

namespace {

// Enumerate canonical pair lists over the variable set `avail` in
// lexicographic order on (b_1, c_1, b_2, c_2, ...).
bool enumerate_pairs(VarSet avail, int s, int remaining, std::vector<BinFactor>& pairs,
                     int min_b, const std::function<bool()>& emit) {
  if (remaining == 0) return emit();
  for (int b = min_b; b <= s; ++b) {
    if (!(avail & var_bit(b))) continue;
    for (int c = b + 1; c <= s; ++c) {
      if (!(avail & var_bit(c))) continue;
      pairs.push_back(BinFactor{b, c, 1});
      const VarSet rest = avail & ~(var_bit(b) | var_bit(c));
      if (!enumerate_pairs(rest, s, remaining - 1, pairs, b + 1, emit)) return false;
      pairs.pop_back();
    }
  }
  return true;
}

bool enumerate_quads(VarSet avail, int s, std::array<int, 4>& quad,
                     const std::function<bool()>& emit) {
  std::vector<int> vars;
  for (int v = 1; v <= s; ++v)
    if (avail & var_bit(v)) vars.push_back(v);
  const int n = int(vars.size());
  if (n < 4) return true;
  for (int a = 0; a < n - 3; ++a)
    for (int b = a + 1; b < n - 2; ++b)
      for (int c = b + 1; c < n - 1; ++c)
        for (int d = c + 1; d < n; ++d) {
          quad = {vars[std::size_t(a)], vars[std::size_t(b)], vars[std::size_t(c)],
                  vars[std::size_t(d)]};
          if (!emit()) return false;
        }
  return true;
}

// Odometer over coefficient slots, each running through the unit list,
// the last slot fastest.  Returns false if the visitor stopped.
bool enumerate_units_from(const Field& f, std::vector<Elem*>& slots, std::size_t i,
                          const std::function<bool()>& emit) {
  if (i == slots.size()) return emit();
  for (const Elem u : f.units()) {
    *slots[i] = u;
    if (!enumerate_units_from(f, slots, i + 1, emit)) return false;
  }
  return true;
}

bool enumerate_units(const Field& f, std::vector<Elem*> slots,
                     const std::function<bool()>& emit) {
  return enumerate_units_from(f, slots, 0, emit);
}

}  // namespace

std::uint64_t stream_min(const CodeParams& p, const Field& f, const MinStreamOptions& opt,
                         const std::function<bool(const MinWordParams&)>& visit) {
  if (p.d >= p.s)
    throw UnsupportedRegimeError("minimal-weight family requires d < s");
  if (f.q() != p.q) throw ParamError("field order mismatch");
  const int e = min_factor_count(p);
  const VarSet full = (VarSet(1) << p.s) - 1;
  MinWordParams w;
  w.regime = min_regime(p.s, p.d);
  std::uint64_t seen = 0;

  auto coeffs = [&]() {
    std::vector<Elem*> slots;
    for (auto& bf : w.pairs) slots.push_back(&bf.alpha);
    if (!opt.monic_only) slots.push_back(&w.scalar);
    return enumerate_units(f, slots, [&]() {
      ++seen;
      return visit(w);
    });
  };
  enumerate_pairs(full, p.s, e, w.pairs, 1, coeffs);
  return seen;
}

std::uint64_t stream_ntm(const CodeParams& p, const Field& f, const MinStreamOptions& opt,
                         const std::function<bool(const NtmWordParams&)>& visit) {
  const NtmRegime reg = ntm_regime(p.s, p.d);
  if (reg == NtmRegime::Gap)
    throw UnsupportedRegimeError("no second-weight family in the band 2d-1 <= s <= 2d+1");
  if (f.q() != p.q) throw ParamError("field order mismatch");
  const int e = min_factor_count(p);
  const VarSet full = (VarSet(1) << p.s) - 1;
  NtmWordParams w;
  w.regime = reg;
  std::uint64_t seen = 0;

  auto coeffs = [&]() {
    std::vector<Elem*> slots;
    for (auto& bf : w.pairs) slots.push_back(&bf.alpha);
    for (auto& a : w.quad_alphas) slots.push_back(&a);
    if (!opt.monic_only) slots.push_back(&w.scalar);
    return enumerate_units(f, slots, [&]() {
      ++seen;
      return visit(w);
    });
  };
  auto quads = [&]() {
    const VarSet rest = full & ~pair_vars(w.pairs);
    return enumerate_quads(rest, p.s, w.quad, coeffs);
  };
  enumerate_pairs(full, p.s, e - 1, w.pairs, 1, quads);
  return seen;
}

}  // namespace hytor
