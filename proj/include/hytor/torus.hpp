#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hytor/field.hpp"
#include "hytor/formulas.hpp"
#include "hytor/sqfree.hpp"

namespace hytor {

inline constexpr std::uint64_t kDefaultElemGuard = std::uint64_t(1) << 28;

// The point set (F_q*)^s in a fixed enumeration: point index i, written in
// base q-1 with s digits and the most significant digit first, selects
// units()[digit_j] as coordinate j.  Point 0 is the all-ones point.
// Coordinate columns are materialized once; everything else reads them.
class TorusPointSet {
public:
  // Throws ResourceError if s * (q-1)^s exceeds max_elements.
  TorusPointSet(const Field& f, int s, std::uint64_t max_elements = kDefaultElemGuard);

  const Field& field() const { return *field_; }
  int svars() const { return s_; }
  std::uint64_t size() const { return n_; }

  // Coordinate var (1-based) of point index.
  Elem coord(std::uint64_t index, int var) const {
    return columns_[std::size_t(var) - 1][index];
  }
  const std::vector<Elem>& column(int var) const { return columns_[std::size_t(var) - 1]; }

  std::vector<Elem> point(std::uint64_t index) const;

  // Index of the point with the given coordinates (all nonzero).
  std::uint64_t index_of(std::span<const Elem> coords) const;

private:
  const Field* field_;
  int s_;
  std::uint64_t n_;
  std::vector<std::vector<Elem>> columns_;
};

// A codeword with its weight and support precomputed.
struct Codeword {
  std::vector<Elem> values;
  std::uint64_t weight = 0;

  bool operator==(const Codeword& o) const { return values == o.values; }
};

// Evaluate f at every torus point.
Codeword evaluate(const SqFreePoly& f, const TorusPointSet& pts);

// Rows evaluate the degree-d square-free monomial basis (descending graded
// lex order, matching hypersimplex_basis) at every torus point.
struct GeneratorMatrix {
  CodeParams params;
  std::vector<VarSet> basis;
  std::uint64_t n = 0;
  std::vector<Elem> data;  // basis.size() rows of n entries each

  std::size_t k() const { return basis.size(); }
  const Elem* row(std::size_t r) const { return data.data() + r * n; }
};

GeneratorMatrix generator_matrix(const Field& f, int s, int d,
                                 std::uint64_t max_elements = kDefaultElemGuard);

// Rank over F_q by Gaussian elimination on a copy.
std::size_t matrix_rank(const GeneratorMatrix& g, const Field& f);

// The weight-preserving pairing between the codeword of f and that of its
// complement polynomial: for every point index i,
//   evaluate(f)[i] == scaling[i] * evaluate(complement(f))[point_perm[i]],
// where point_perm[i] indexes the coordinate-wise inverse point and
// scaling[i] is the product of the coordinates of point i.  Since the
// scalings are units and point_perm is a bijection, f and complement(f)
// always share one weight.
struct ComplementPairing {
  std::vector<std::uint64_t> point_perm;
  std::vector<Elem> scaling;
};

ComplementPairing complement_pairing(const TorusPointSet& pts);

// Point pullback of a variable permutation: entry i is the index of the
// point whose coordinate v equals coordinate sigma(v) of point i, so that
// for every polynomial f and every point index i,
//   evaluate(permute_vars(f, sigma))[i] == evaluate(f)[map[i]].
// In particular permuting variables never changes the weight.
std::vector<std::uint64_t> permutation_point_map(const TorusPointSet& pts,
                                                 const Permutation& sigma);

}  // namespace hytor
