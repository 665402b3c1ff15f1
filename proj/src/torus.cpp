#include "hytor/torus.hpp"

namespace hytor {
namespace {

std::uint64_t checked_point_count(unsigned q, int s, std::uint64_t max_elements) {
  std::uint64_t n = 1;
  for (int i = 0; i < s; ++i) {
    n *= q - 1;
    if (n > max_elements)
      throw ResourceError("torus point count (q-1)^s exceeds the element guard (" +
                          std::to_string(max_elements) + ")");
  }
  if (std::uint64_t(s) * n > max_elements)
    throw ResourceError("torus point set of " + std::to_string(n) +
                        " points times " + std::to_string(s) +
                        " columns exceeds the element guard (" +
                        std::to_string(max_elements) + ")");
  return n;
}

}  // namespace

TorusPointSet::TorusPointSet(const Field& f, int s, std::uint64_t max_elements)
    : field_(&f), s_(s) {
  if (s < 1 || s > kMaxVars) throw ParamError("variable count out of range");
  n_ = checked_point_count(f.q(), s, max_elements);
  const unsigned base = f.q() - 1;
  columns_.assign(std::size_t(s), std::vector<Elem>(n_));
  // Column j cycles through the unit list with period (q-1)^(s-j), i.e.
  // index digits are read most significant first.
  std::uint64_t period = n_;
  for (int j = 0; j < s; ++j) {
    period /= base;
    auto& col = columns_[std::size_t(j)];
    std::uint64_t i = 0;
    while (i < n_) {
      for (unsigned u = 0; u < base; ++u)
        for (std::uint64_t r = 0; r < period; ++r) col[i++] = f.units()[u];
    }
  }
}

std::vector<Elem> TorusPointSet::point(std::uint64_t index) const {
  std::vector<Elem> p(static_cast<std::size_t>(s_));
  for (int j = 1; j <= s_; ++j) p[std::size_t(j) - 1] = coord(index, j);
  return p;
}

std::uint64_t TorusPointSet::index_of(std::span<const Elem> coords) const {
  if (int(coords.size()) != s_) throw ParamError("coordinate count mismatch");
  std::uint64_t idx = 0;
  for (int j = 0; j < s_; ++j)
    idx = idx * (field_->q() - 1) + field_->unit_index(coords[std::size_t(j)]);
  return idx;
}

Codeword evaluate(const SqFreePoly& f, const TorusPointSet& pts) {
  if (f.svars() != pts.svars()) throw ParamError("variable count mismatch");
  Codeword cw;
  cw.values.assign(pts.size(), 0);
  const Field& fld = pts.field();
  for (const auto& [m, c] : f.terms()) {
    // Accumulate c * prod of columns in m.
    std::vector<const std::vector<Elem>*> cols;
    for (int j = 1; j <= pts.svars(); ++j)
      if (m & var_bit(j)) cols.push_back(&pts.column(j));
    for (std::uint64_t i = 0; i < pts.size(); ++i) {
      Elem v = c;
      for (const auto* col : cols) v = fld.mul(v, (*col)[i]);
      cw.values[i] = fld.add(cw.values[i], v);
    }
  }
  for (const Elem v : cw.values)
    if (v != 0) ++cw.weight;
  return cw;
}

GeneratorMatrix generator_matrix(const Field& f, int s, int d, std::uint64_t max_elements) {
  TorusPointSet pts(f, s, max_elements);
  GeneratorMatrix g;
  g.params = CodeParams{f.q(), s, d};
  g.basis = hypersimplex_basis(s, d);
  g.n = pts.size();
  if (g.basis.size() * g.n > max_elements)
    throw ResourceError("generator matrix exceeds the element guard");
  g.data.assign(g.basis.size() * g.n, 0);
  for (std::size_t r = 0; r < g.basis.size(); ++r) {
    const Codeword cw = evaluate(SqFreePoly::monomial(s, g.basis[r], 1), pts);
    std::copy(cw.values.begin(), cw.values.end(), g.data.begin() + std::ptrdiff_t(r * g.n));
  }
  return g;
}

std::size_t matrix_rank(const GeneratorMatrix& g, const Field& f) {
  std::vector<std::vector<Elem>> rows(g.k());
  for (std::size_t r = 0; r < g.k(); ++r)
    rows[r].assign(g.row(r), g.row(r) + g.n);
  std::size_t rank = 0;
  for (std::uint64_t col = 0; col < g.n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Elem inv = f.inv(rows[rank][col]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Elem factor = f.mul(rows[r][col], inv);
      for (std::uint64_t j = col; j < g.n; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint64_t> permutation_point_map(const TorusPointSet& pts,
                                                 const Permutation& sigma) {
  if (sigma.s() != pts.svars()) throw ParamError("permutation size mismatch");
  std::vector<std::uint64_t> out(pts.size());
  std::vector<Elem> pulled(std::size_t(pts.svars()));
  for (std::uint64_t i = 0; i < pts.size(); ++i) {
    for (int v = 1; v <= pts.svars(); ++v)
      pulled[std::size_t(v) - 1] = pts.coord(i, sigma.image(v));
    out[i] = pts.index_of(pulled);
  }
  return out;
}

ComplementPairing complement_pairing(const TorusPointSet& pts) {
  const Field& f = pts.field();
  ComplementPairing cp;
  cp.point_perm.resize(pts.size());
  cp.scaling.resize(pts.size());
  std::vector<Elem> inv_pt(std::size_t(pts.svars()));
  for (std::uint64_t i = 0; i < pts.size(); ++i) {
    Elem prod = 1;
    for (int j = 1; j <= pts.svars(); ++j) {
      const Elem c = pts.coord(i, j);
      prod = f.mul(prod, c);
      inv_pt[std::size_t(j) - 1] = f.inv(c);
    }
    cp.point_perm[i] = pts.index_of(inv_pt);
    cp.scaling[i] = prod;
  }
  return cp;
}

}  // namespace hytor
