#include "hytor/sqfree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hytor/rng.hpp"

namespace hytor {

bool grlex_less(VarSet a, VarSet b) {
  const int da = varset_degree(a), db = varset_degree(b);
  if (da != db) return da < db;
  if (a == b) return false;
  // At equal degree, the first variable (lowest index) where the supports
  // differ decides: whichever monomial contains it is the larger one.
  const VarSet diff = a ^ b;
  const VarSet lowest = diff & (~diff + 1);
  return (b & lowest) != 0;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int s = int(images_.size());
  if (s < 1 || s > kMaxVars) throw ParamError("permutation size out of range");
  std::vector<bool> seen(std::size_t(s) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > s || seen[std::size_t(v)])
      throw ParamError("permutation images are not a bijection of 1..s");
    seen[std::size_t(v)] = true;
  }
}

Permutation Permutation::identity(int s) {
  std::vector<int> im(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) im[std::size_t(i) - 1] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= s(); ++i) im[std::size_t(image(i)) - 1] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::random(int s, SplitMix64& rng) {
  std::vector<int> im(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) im[std::size_t(i)] = i + 1;
  for (int i = s - 1; i > 0; --i)
    std::swap(im[std::size_t(i)], im[rng.below(std::uint64_t(i) + 1)]);
  return Permutation(std::move(im));
}

SqFreePoly::SqFreePoly(int s) : s_(s) {
  if (s < 1 || s > kMaxVars) throw ParamError("variable count out of range");
}

SqFreePoly SqFreePoly::monomial(int s, VarSet vars, Elem coeff) {
  SqFreePoly p(s);
  if (coeff != 0) {
    if (vars >> s) throw ParamError("monomial uses a variable beyond t_s");
    p.terms_.emplace(vars, coeff);
  }
  return p;
}

int SqFreePoly::degree() const {
  return terms_.empty() ? -1 : varset_degree(terms_.begin()->first);
}

Elem SqFreePoly::coeff(VarSet vars) const {
  const auto it = terms_.find(vars);
  return it == terms_.end() ? Elem(0) : it->second;
}

void SqFreePoly::add_term(VarSet vars, Elem coeff, const Field& f) {
  if (vars >> s_) throw ParamError("monomial uses a variable beyond t_s");
  if (coeff == 0) return;
  const auto it = terms_.find(vars);
  if (it == terms_.end()) {
    terms_.emplace(vars, coeff);
    return;
  }
  const Elem sum = f.add(it->second, coeff);
  if (sum == 0)
    terms_.erase(it);
  else
    it->second = sum;
}

void SqFreePoly::set_term(VarSet vars, Elem coeff) {
  if (vars >> s_) throw ParamError("monomial uses a variable beyond t_s");
  if (coeff == 0)
    terms_.erase(vars);
  else
    terms_[vars] = coeff;
}

void SqFreePoly::check_homogeneous() const {
  if (terms_.empty()) return;
  const int d = varset_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (varset_degree(m) != d)
      throw ParamError("polynomial is not homogeneous");
  }
}

VarSet leading_monomial(const SqFreePoly& f) {
  if (f.is_zero()) throw DomainError("leading monomial of zero");
  return f.terms().begin()->first;
}

Elem leading_coeff(const SqFreePoly& f) {
  if (f.is_zero()) throw DomainError("leading coefficient of zero");
  return f.terms().begin()->second;
}

SqFreePoly poly_add(const SqFreePoly& a, const SqFreePoly& b, const Field& f) {
  if (a.svars() != b.svars()) throw ParamError("variable count mismatch");
  SqFreePoly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c, f);
  return r;
}

SqFreePoly poly_scale(const SqFreePoly& a, Elem c, const Field& f) {
  SqFreePoly r(a.svars());
  if (c == 0) return r;
  for (const auto& [m, co] : a.terms()) r.add_term(m, f.mul(co, c), f);
  return r;
}

SqFreePoly poly_monic(const SqFreePoly& a, const Field& f) {
  return poly_scale(a, f.inv(leading_coeff(a)), f);
}

SqFreePoly permute_vars(const SqFreePoly& a, const Permutation& sigma) {
  if (sigma.s() != a.svars()) throw ParamError("permutation size mismatch");
  SqFreePoly r(a.svars());
  for (const auto& [m, c] : a.terms()) {
    VarSet im = 0;
    for (int i = 1; i <= a.svars(); ++i)
      if (m & var_bit(i)) im |= var_bit(sigma.image(i));
    // Distinct monomials stay distinct under a bijection, so plain insert.
    r.set_term(im, c);
  }
  return r;
}

SqFreePoly complement(const SqFreePoly& a) {
  const VarSet full = (VarSet(1) << a.svars()) - 1;
  SqFreePoly r(a.svars());
  for (const auto& [m, c] : a.terms()) r.set_term(full & ~m, c);
  return r;
}

std::vector<VarSet> hypersimplex_basis(int s, int d) {
  if (s < 1 || s > kMaxVars) throw ParamError("variable count out of range");
  if (d < 0 || d > s) throw ParamError("degree out of range [0, s]");
  if (d == 0) return {0};
  // Enumerate d-subsets of {0..s-1} as bitmasks via Gosper's hack, then
  // sort into descending graded lex order.
  std::vector<VarSet> out;
  VarSet v = (VarSet(1) << d) - 1;
  const VarSet limit = VarSet(1) << s;
  while (v < limit) {
    out.push_back(v);
    const VarSet c = v & (~v + 1);
    const VarSet r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  std::sort(out.begin(), out.end(), [](VarSet x, VarSet y) { return grlex_less(y, x); });
  return out;
}

SqFreePoly expand_product(int s, const Field& f, Elem scalar,
                          const std::vector<BinFactor>& binomials,
                          const std::optional<FourTermFactor>& four_term,
                          VarSet tail) {
  if (scalar == 0) throw ParamError("zero scalar in product");
  VarSet used = tail;
  if (tail >> s) throw ParamError("tail variable beyond t_s");
  auto claim = [&](int i) {
    if (i < 1 || i > s) throw ParamError("variable index out of range");
    if (used & var_bit(i)) throw ParamError("repeated variable across factors");
    used |= var_bit(i);
  };
  for (const auto& bf : binomials) {
    claim(bf.b);
    claim(bf.c);
    if (bf.alpha == 0) throw ParamError("zero coefficient in binomial factor");
  }
  if (four_term) {
    claim(four_term->anchor);
    claim(four_term->i2);
    claim(four_term->i3);
    claim(four_term->i4);
    if (four_term->a2 == 0 || four_term->a3 == 0 || four_term->a4 == 0)
      throw ParamError("zero coefficient in four-term factor");
  }

  std::vector<std::pair<VarSet, Elem>> terms{{tail, scalar}};
  for (const auto& bf : binomials) {
    std::vector<std::pair<VarSet, Elem>> next;
    next.reserve(terms.size() * 2);
    for (const auto& [m, c] : terms) {
      next.emplace_back(m | var_bit(bf.b), c);
      next.emplace_back(m | var_bit(bf.c), f.mul(c, bf.alpha));
    }
    terms = std::move(next);
  }
  if (four_term) {
    std::vector<std::pair<VarSet, Elem>> next;
    next.reserve(terms.size() * 4);
    for (const auto& [m, c] : terms) {
      next.emplace_back(m | var_bit(four_term->anchor), c);
      next.emplace_back(m | var_bit(four_term->i2), f.mul(c, four_term->a2));
      next.emplace_back(m | var_bit(four_term->i3), f.mul(c, four_term->a3));
      next.emplace_back(m | var_bit(four_term->i4), f.mul(c, four_term->a4));
    }
    terms = std::move(next);
  }

  SqFreePoly r(s);
  for (const auto& [m, c] : terms) r.set_term(m, c);
  return r;
}

std::string poly_to_text(const SqFreePoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || m == 0) os << unsigned(c);
    bool star = c != 1 || m == 0;
    for (int i = 1; i <= a.svars(); ++i)
      if (m & var_bit(i)) {
        if (star) os << '*';
        star = true;
        os << 't' << i;
      }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  unsigned number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParamError("expected a number in polynomial text");
    unsigned v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + unsigned(text[pos] - '0');
      if (v > 100000) throw ParamError("number too large in polynomial text");
      ++pos;
    }
    return v;
  }
};

}  // namespace

SqFreePoly poly_parse(const std::string& text, int s, const Field* f) {
  SqFreePoly r(s);
  Cursor cur{text};
  if (cur.done()) throw ParamError("empty polynomial text");
  bool any = false;
  while (true) {
    // One term: optional coefficient, then variables joined by '*'.
    unsigned coeff = 1;
    VarSet vars = 0;
    bool saw_factor = false;
    if (cur.done()) throw ParamError("dangling '+' in polynomial text");
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.number();
      saw_factor = true;
    }
    while (!cur.done() && (cur.peek() == '*' || cur.peek() == 't')) {
      if (cur.peek() == '*') {
        ++cur.pos;
        if (!saw_factor) throw ParamError("term starts with '*'");
        cur.skip_ws();
      } else if (saw_factor) {
        throw ParamError("missing '*' between factors");
      }
      if (cur.done() || cur.peek() != 't')
        throw ParamError("expected a variable after '*'");
      ++cur.pos;
      const unsigned i = cur.number();
      if (i < 1 || int(i) > s)
        throw ParamError("variable index out of range in polynomial text");
      if (vars & var_bit(int(i)))
        throw ParamError("repeated variable in a monomial");
      vars |= var_bit(int(i));
      saw_factor = true;
    }
    if (!saw_factor) throw ParamError("empty term in polynomial text");
    if (f != nullptr) {
      if (coeff >= f->q()) throw ParamError("coefficient is not a field element encoding");
      r.add_term(vars, Elem(coeff), *f);
    } else {
      if (coeff == 0) throw ParamError("zero coefficient in polynomial text");
      if (coeff > 255) throw ParamError("coefficient exceeds the element encoding range");
      if (r.coeff(vars) != 0) throw ParamError("repeated monomial needs a field to combine");
      r.set_term(vars, Elem(coeff));
    }
    any = true;
    if (cur.done()) break;
    if (cur.peek() != '+') throw ParamError("expected '+' between terms");
    ++cur.pos;
  }
  if (!any) throw ParamError("empty polynomial text");
  r.check_homogeneous();
  return r;
}

}  // namespace hytor
