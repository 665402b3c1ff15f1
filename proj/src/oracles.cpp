#include "hytor/oracles.hpp"

#include <algorithm>
#include <thread>

#include "hytor/rng.hpp"

namespace hytor {

SqFreePoly random_code_polynomial(const CodeParams& p, const Field& f, SplitMix64& rng) {
  const auto basis = hypersimplex_basis(p.s, p.d);
  while (true) {
    SqFreePoly poly(p.s);
    for (const VarSet m : basis) {
      const Elem c = Elem(rng.below(f.q()));
      if (c != 0) poly.set_term(m, c);
    }
    if (!poly.is_zero()) return poly;
  }
}

std::optional<std::uint64_t> WeightDistribution::min_nonzero() const {
  for (const auto& [w, c] : counts)
    if (w > 0 && c > 0) return w;
  return std::nullopt;
}

std::optional<std::uint64_t> WeightDistribution::second_nonzero() const {
  bool seen_first = false;
  for (const auto& [w, c] : counts) {
    if (w == 0 || c == 0) continue;
    if (seen_first) return w;
    seen_first = true;
  }
  return std::nullopt;
}

namespace {

// Add delta * row r to the codeword, keeping the weight counter in step.
void apply_row_delta(const GeneratorMatrix& g, const Field& f, std::size_t r, Elem delta,
                     std::vector<Elem>& cw, std::uint64_t& weight) {
  const Elem* row = g.row(r);
  const Elem* mul = f.mul_row(delta);
  const std::uint64_t n = g.n;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Elem old = cw[i];
    const Elem nv = f.add(old, mul[row[i]]);
    weight += std::uint64_t(nv != 0) - std::uint64_t(old != 0);
    cw[i] = nv;
  }
}

// Walk codeword indices [begin, end) of the base-q odometer over the k
// coefficient digits (digit r scales generator row r; digit 0 fastest) and
// add each codeword's weight to hist.
void spectrum_block(const GeneratorMatrix& g, const Field& f, std::uint64_t begin,
                    std::uint64_t end, std::vector<std::uint64_t>& hist) {
  const std::size_t k = g.k();
  const std::uint64_t n = g.n;
  const unsigned q = f.q();

  std::vector<Elem> digits(k, 0);
  {
    std::uint64_t v = begin;
    for (std::size_t r = 0; r < k && v > 0; ++r) {
      digits[r] = Elem(v % q);
      v /= q;
    }
  }
  // Seed the walk by direct evaluation of the starting codeword.
  std::vector<Elem> cw(n, 0);
  std::uint64_t weight = 0;
  for (std::size_t r = 0; r < k; ++r) {
    if (digits[r] == 0) continue;
    const Elem* row = g.row(r);
    const Elem* mul = f.mul_row(digits[r]);
    for (std::uint64_t i = 0; i < n; ++i) cw[i] = f.add(cw[i], mul[row[i]]);
  }
  for (std::uint64_t i = 0; i < n; ++i)
    if (cw[i] != 0) ++weight;
  hist[weight] += 1;

  for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
    // Advance the odometer; every rolled-over digit changes the codeword.
    std::size_t r = 0;
    while (digits[r] == q - 1) {
      apply_row_delta(g, f, r, f.neg(Elem(q - 1)), cw, weight);
      digits[r] = 0;
      ++r;
    }
    const Elem old = digits[r];
    digits[r] = Elem(old + 1);
    apply_row_delta(g, f, r, f.sub(digits[r], old), cw, weight);
    hist[weight] += 1;
  }
}

}  // namespace

WeightDistribution exhaustive_spectrum(const CodeParams& p, const Field& f,
                                       std::uint64_t max_codewords, unsigned threads,
                                       std::uint64_t max_elements) {
  const BigInt dim = code_dimension(p);
  if (dim > 63)
    throw ResourceError("codeword count q^" + dim.str() + " exceeds the guard (" +
                        std::to_string(max_codewords) + ")");
  const BigInt total = bigint_pow(p.q, dim.convert_to<int>());
  if (total > max_codewords)
    throw ResourceError("codeword count q^" + dim.str() + " = " + total.str() +
                        " exceeds the guard (" + std::to_string(max_codewords) +
                        "); raise --max-codewords deliberately if intended");
  const GeneratorMatrix g = generator_matrix(f, p.s, p.d, max_elements);
  const std::uint64_t count = total.convert_to<std::uint64_t>();

  if (threads == 0) threads = 1;
  threads = unsigned(std::min<std::uint64_t>(threads, 64));
  // Block boundaries at multiples of q^j keep re-seeding cost negligible,
  // but arbitrary contiguous blocks are already correct.
  std::vector<std::vector<std::uint64_t>> hists(
      threads, std::vector<std::uint64_t>(g.n + 1, 0));
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::uint64_t(t) * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    if (begin >= end) continue;
    if (threads == 1)
      spectrum_block(g, f, begin, end, hists[t]);
    else
      workers.emplace_back(spectrum_block, std::cref(g), std::cref(f), begin, end,
                           std::ref(hists[t]));
  }
  for (auto& w : workers) w.join();

  WeightDistribution dist;
  dist.params = p;
  dist.total = total;
  for (const auto& h : hists)
    for (std::uint64_t w = 0; w <= g.n; ++w)
      if (h[w] > 0) dist.counts[w] += h[w];
  return dist;
}

std::uint64_t linear_form_nonzero_bruteforce(const Field& f, int s,
                                             std::span<const Elem> coeffs,
                                             std::uint64_t max_elements) {
  const int u = int(coeffs.size());
  if (u < 1 || u > s) throw ParamError("coefficient count out of range [1, s]");
  for (const Elem c : coeffs)
    if (c == 0) throw ParamError("linear form coefficients must be nonzero");
  TorusPointSet pts(f, s, max_elements);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < pts.size(); ++i) {
    Elem acc = 0;
    for (int j = 0; j < u; ++j) acc = f.add(acc, f.mul(coeffs[std::size_t(j)], pts.coord(i, j + 1)));
    if (acc != 0) ++count;
  }
  return count;
}

SampleSummary sample_codewords(const CodeParams& p, const Field& f, std::uint64_t samples,
                               std::uint64_t threshold, std::uint64_t seed,
                               std::uint64_t max_elements) {
  SampleSummary sum;
  sum.params = p;
  sum.seed = seed;
  sum.samples = samples;
  sum.threshold = threshold;
  if (samples == 0) return sum;
  const GeneratorMatrix g = generator_matrix(f, p.s, p.d, max_elements);
  SplitMix64 rng(seed);
  std::vector<Elem> cw(g.n);
  for (std::uint64_t it = 0; it < samples; ++it) {
    std::fill(cw.begin(), cw.end(), 0);
    bool zero_vector = true;
    for (std::size_t r = 0; r < g.k(); ++r) {
      const Elem digit = Elem(rng.below(p.q));
      if (digit == 0) continue;
      zero_vector = false;
      const Elem* row = g.row(r);
      const Elem* mul = f.mul_row(digit);
      for (std::uint64_t i = 0; i < g.n; ++i) cw[i] = f.add(cw[i], mul[row[i]]);
    }
    if (zero_vector) {
      ++sum.zero_words;
      continue;
    }
    std::uint64_t weight = 0;
    for (std::uint64_t i = 0; i < g.n; ++i)
      if (cw[i] != 0) ++weight;
    if (weight > 0 && (!sum.min_nonzero_weight || weight < *sum.min_nonzero_weight))
      sum.min_nonzero_weight = weight;
    if (weight > 0 && weight <= threshold) ++sum.below_threshold[weight];
  }
  return sum;
}

std::vector<GenPoly> linear_factor_search(const GenPoly& f, const Field& fld,
                                          std::uint64_t max_candidates) {
  const int s = f.svars();
  const unsigned q = fld.q();
  std::uint64_t candidates = 1;
  for (int i = 0; i < s; ++i) {
    candidates *= q;
    if ((candidates - 1) / (q - 1) > max_candidates)
      throw ResourceError("linear form candidate count exceeds the guard");
  }

  std::vector<GenPoly> found;
  // Monic representatives: leading variable t_j with coefficient 1, then
  // arbitrary coefficients on t_(j+1)..t_s, enumerated low index first.
  for (int j = 1; j <= s; ++j) {
    const int free = s - j;
    std::uint64_t combos = 1;
    for (int i = 0; i < free; ++i) combos *= q;
    for (std::uint64_t c = 0; c < combos; ++c) {
      GenPoly ell(s);
      ExpMonomial lead{std::vector<int>(std::size_t(s), 0)};
      lead.e[std::size_t(j) - 1] = 1;
      ell.add_term(lead, 1, fld);
      std::uint64_t v = c;
      for (int i = j + 1; i <= s; ++i) {
        const Elem coeff = Elem(v % q);
        v /= q;
        if (coeff == 0) continue;
        ExpMonomial m{std::vector<int>(std::size_t(s), 0)};
        m.e[std::size_t(i) - 1] = 1;
        ell.add_term(m, coeff, fld);
      }
      if (gen_divide(f, {ell}, fld).remainder.is_zero()) found.push_back(std::move(ell));
    }
  }
  return found;
}

}  // namespace hytor
