#include "hytor/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hytor {

int ExpMonomial::degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool ExpMonomial::divides(const ExpMonomial& other) const {
  if (e.size() != other.e.size()) throw ParamError("variable count mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

int grlex_compare(const ExpMonomial& a, const ExpMonomial& b) {
  if (a.e.size() != b.e.size()) throw ParamError("variable count mismatch");
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

ExpMonomial exp_lcm(const ExpMonomial& a, const ExpMonomial& b) {
  ExpMonomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

bool exp_coprime(const ExpMonomial& a, const ExpMonomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

GenPoly::GenPoly(int s) : s_(s) {
  if (s < 1 || s > kMaxVars) throw ParamError("variable count out of range");
}

GenPoly GenPoly::from_sqfree(const SqFreePoly& f) {
  GenPoly r(f.svars());
  for (const auto& [m, c] : f.terms()) {
    ExpMonomial em{std::vector<int>(std::size_t(f.svars()), 0)};
    for (int i = 1; i <= f.svars(); ++i)
      if (m & var_bit(i)) em.e[std::size_t(i) - 1] = 1;
    r.terms_.emplace(std::move(em), c);
  }
  return r;
}

GenPoly GenPoly::monomial(int s, ExpMonomial m, Elem c) {
  GenPoly r(s);
  if (int(m.e.size()) != s) throw ParamError("variable count mismatch");
  for (int x : m.e)
    if (x < 0) throw ParamError("negative exponent");
  if (c != 0) r.terms_.emplace(std::move(m), c);
  return r;
}

std::vector<GenPoly> GenPoly::torus_relations(const Field& f, int s) {
  std::vector<GenPoly> out;
  out.reserve(std::size_t(s));
  for (int i = 1; i <= s; ++i) {
    GenPoly g(s);
    ExpMonomial m{std::vector<int>(std::size_t(s), 0)};
    m.e[std::size_t(i) - 1] = int(f.q()) - 1;
    g.terms_.emplace(std::move(m), Elem(1));
    ExpMonomial one{std::vector<int>(std::size_t(s), 0)};
    g.terms_.emplace(std::move(one), f.neg(1));
    out.push_back(std::move(g));
  }
  return out;
}

const ExpMonomial& GenPoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of zero");
  return terms_.begin()->first;
}

Elem GenPoly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero");
  return terms_.begin()->second;
}

void GenPoly::add_term(const ExpMonomial& m, Elem c, const Field& f) {
  if (int(m.e.size()) != s_) throw ParamError("variable count mismatch");
  if (c == 0) return;
  const auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  const Elem sum = f.add(it->second, c);
  if (sum == 0)
    terms_.erase(it);
  else
    it->second = sum;
}

GenPoly gen_add(const GenPoly& a, const GenPoly& b, const Field& f) {
  GenPoly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c, f);
  return r;
}

GenPoly gen_scale(const GenPoly& a, Elem c, const Field& f) {
  GenPoly r(a.svars());
  if (c == 0) return r;
  for (const auto& [m, co] : a.terms()) r.add_term(m, f.mul(co, c), f);
  return r;
}

GenPoly gen_monic(const GenPoly& a, const Field& f) {
  return gen_scale(a, f.inv(a.leading_coeff()), f);
}

GenPoly gen_mul_term(const GenPoly& a, const ExpMonomial& m, Elem c, const Field& f) {
  GenPoly r(a.svars());
  if (c == 0) return r;
  for (const auto& [ma, ca] : a.terms()) {
    ExpMonomial prod = ma;
    for (std::size_t i = 0; i < prod.e.size(); ++i) prod.e[i] += m.e[i];
    r.add_term(prod, f.mul(ca, c), f);
  }
  return r;
}

DivisionResult gen_divide(const GenPoly& f, const std::vector<GenPoly>& divisors,
                          const Field& fld) {
  for (const auto& d : divisors)
    if (d.is_zero()) throw ParamError("zero divisor in division");
  DivisionResult res{std::vector<GenPoly>(divisors.size(), GenPoly(f.svars())),
                     GenPoly(f.svars())};
  GenPoly work = f;
  while (!work.is_zero()) {
    const ExpMonomial& lm = work.leading_monomial();
    const Elem lc = work.leading_coeff();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const ExpMonomial& dm = divisors[i].leading_monomial();
      if (!dm.divides(lm)) continue;
      ExpMonomial quot = lm;
      for (std::size_t j = 0; j < quot.e.size(); ++j) quot.e[j] -= dm.e[j];
      const Elem coeff = fld.div(lc, divisors[i].leading_coeff());
      res.quotients[i].add_term(quot, coeff, fld);
      work = gen_add(work, gen_mul_term(divisors[i], quot, fld.neg(coeff), fld), fld);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(lm, lc, fld);
      work.add_term(lm, fld.neg(lc), fld);
    }
  }
  return res;
}

GenPoly spoly(const GenPoly& a, const GenPoly& b, const Field& f) {
  const ExpMonomial l = exp_lcm(a.leading_monomial(), b.leading_monomial());
  ExpMonomial qa = l, qb = l;
  for (std::size_t i = 0; i < l.e.size(); ++i) {
    qa.e[i] -= a.leading_monomial().e[i];
    qb.e[i] -= b.leading_monomial().e[i];
  }
  const GenPoly ta = gen_mul_term(a, qa, f.inv(a.leading_coeff()), f);
  const GenPoly tb = gen_mul_term(b, qb, f.inv(b.leading_coeff()), f);
  return gen_add(ta, gen_scale(tb, f.neg(1), f), f);
}

namespace {

struct PairEntry {
  ExpMonomial lcm;
  std::size_t i, j;

  bool operator<(const PairEntry& o) const {
    const int c = grlex_compare(lcm, o.lcm);
    if (c != 0) return c < 0;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

std::vector<GenPoly> buchberger(std::vector<GenPoly> gens, const Field& f,
                                std::uint64_t max_pairs) {
  std::vector<GenPoly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  if (basis.empty()) throw ParamError("no nonzero generators");

  std::set<PairEntry> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (exp_coprime(basis[i].leading_monomial(), basis[j].leading_monomial()))
        continue;
      queue.insert(PairEntry{
          exp_lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  std::uint64_t processed = 0;
  while (!queue.empty()) {
    if (++processed > max_pairs)
      throw ResourceError("S-pair budget of " + std::to_string(max_pairs) + " exhausted");
    const PairEntry pe = *queue.begin();
    queue.erase(queue.begin());
    const GenPoly s = spoly(basis[pe.i], basis[pe.j], f);
    if (s.is_zero()) continue;
    GenPoly r = gen_divide(s, basis, f).remainder;
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    push_pairs(basis.size() - 1);
  }

  // Minimalize: drop any element whose leading monomial another divides.
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return grlex_compare(basis[x].leading_monomial(), basis[y].leading_monomial()) < 0;
  });
  std::vector<GenPoly> minimal;
  for (const std::size_t idx : order) {
    const ExpMonomial& lm = basis[idx].leading_monomial();
    bool dominated = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(lm)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(gen_monic(basis[idx], f));
  }

  // Tail-reduce each element against the others for the reduced basis.
  std::vector<GenPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GenPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(gen_divide(minimal[i], others, f).remainder);
  }
  std::sort(reduced.begin(), reduced.end(), [](const GenPoly& a, const GenPoly& b) {
    return grlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

std::uint64_t footprint_size(const std::vector<GenPoly>& basis, const Field& f,
                             std::uint64_t max_boxes) {
  if (basis.empty()) throw ParamError("empty basis");
  const int s = basis[0].svars();
  // A finite footprint needs a pure power of every variable among the
  // leading monomials; a constant leading monomial makes it empty.
  std::vector<ExpMonomial> lms;
  lms.reserve(basis.size());
  for (const auto& g : basis) lms.push_back(g.leading_monomial());
  for (const auto& lm : lms)
    if (lm.degree() == 0) return 0;
  for (int v = 0; v < s; ++v) {
    bool pure = false;
    for (const auto& lm : lms) {
      if (lm.e[std::size_t(v)] == 0) continue;
      bool others = false;
      for (int w = 0; w < s; ++w)
        if (w != v && lm.e[std::size_t(w)] > 0) others = true;
      if (!others) {
        pure = true;
        break;
      }
    }
    if (!pure)
      throw DomainError("footprint is infinite: no pure power of t_" +
                        std::to_string(v + 1) + " among the leading monomials");
  }

  const unsigned base = f.q() - 1;
  std::uint64_t boxes = 1;
  for (int i = 0; i < s; ++i) {
    boxes *= base;
    if (boxes > max_boxes) throw ResourceError("footprint box scan exceeds the guard");
  }
  std::uint64_t count = 0;
  ExpMonomial probe{std::vector<int>(std::size_t(s), 0)};
  for (std::uint64_t idx = 0; idx < boxes; ++idx) {
    bool divisible = false;
    for (const auto& lm : lms)
      if (lm.divides(probe)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
    // Odometer step through [0, q-2]^s.
    for (int v = s - 1; v >= 0; --v) {
      if (++probe.e[std::size_t(v)] < int(base)) break;
      probe.e[std::size_t(v)] = 0;
    }
  }
  return count;
}

BigInt lm_weight_bound(const SqFreePoly& f, const CodeParams& p) {
  if (f.is_zero()) throw DomainError("weight bound of the zero polynomial");
  if (f.svars() != p.s) throw ParamError("variable count mismatch");
  const VarSet lm = leading_monomial(f);
  BigInt r = 1;
  for (int i = 1; i <= p.s; ++i)
    r *= (lm & var_bit(i)) ? p.q - 2 : p.q - 1;
  return r;
}

FootprintCheck footprint_weight_check(const SqFreePoly& f, const CodeParams& p,
                                      const Field& fld, std::uint64_t max_pairs,
                                      std::uint64_t max_elements) {
  if (f.is_zero()) throw DomainError("footprint check of the zero polynomial");
  TorusPointSet pts(fld, p.s, max_elements);
  FootprintCheck out;
  out.weight = evaluate(f, pts).weight;
  std::vector<GenPoly> gens = GenPoly::torus_relations(fld, p.s);
  gens.push_back(GenPoly::from_sqfree(f));
  const auto gb = buchberger(std::move(gens), fld, max_pairs);
  out.footprint = footprint_size(gb, fld);
  out.box_bound = pts.size() - out.footprint;
  out.lm_bound = lm_weight_bound(f, p);
  out.bound_holds = out.weight >= out.box_bound;
  out.bound_tight = out.weight == out.box_bound;
  return out;
}

}  // namespace hytor
