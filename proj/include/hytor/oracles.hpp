#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hytor/field.hpp"
#include "hytor/formulas.hpp"
#include "hytor/groebner.hpp"
#include "hytor/rng.hpp"
#include "hytor/torus.hpp"

namespace hytor {

// Uniform nonzero polynomial from the degree-d square-free span: every
// basis coefficient drawn uniformly from F_q, resampled if all vanish.
SqFreePoly random_code_polynomial(const CodeParams& p, const Field& f, SplitMix64& rng);

inline constexpr std::uint64_t kDefaultCodewordGuard = std::uint64_t(1) << 24;

// Full weight distribution of the code: counts[w] = number of codewords of
// weight w, summing to q^k.
struct WeightDistribution {
  CodeParams params;
  std::map<std::uint64_t, std::uint64_t> counts;
  BigInt total = 0;

  std::uint64_t count(std::uint64_t w) const {
    const auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
  }
  // Smallest/second-smallest nonzero weight present, if any.
  std::optional<std::uint64_t> min_nonzero() const;
  std::optional<std::uint64_t> second_nonzero() const;
};

// Enumerate all q^k codewords with an incremental base-q odometer over the
// coefficient vector: each step changes one coefficient, so the codeword
// and its weight are updated with a single generator-row pass.  Throws
// ResourceError when q^k exceeds max_codewords.  With threads > 1 the
// coefficient space is split into contiguous blocks whose partial
// histograms are merged; the result is independent of the thread count.
WeightDistribution exhaustive_spectrum(const CodeParams& p, const Field& f,
                                       std::uint64_t max_codewords = kDefaultCodewordGuard,
                                       unsigned threads = 1,
                                       std::uint64_t max_elements = kDefaultElemGuard);

// Count the torus points where sum coeffs[i] * t_(i+1) is nonzero, by
// direct evaluation over all (q-1)^s points.  All coefficients must be
// nonzero; u = coeffs.size() must satisfy 1 <= u <= s.
std::uint64_t linear_form_nonzero_bruteforce(const Field& f, int s,
                                             std::span<const Elem> coeffs,
                                             std::uint64_t max_elements = kDefaultElemGuard);

// Weight statistics of uniformly sampled codewords (coefficient vectors
// drawn from SplitMix64(seed)).  below_threshold collects the full weight
// histogram of samples with 0 < weight <= threshold.
struct SampleSummary {
  CodeParams params;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t threshold = 0;
  std::optional<std::uint64_t> min_nonzero_weight;
  std::map<std::uint64_t, std::uint64_t> below_threshold;
  std::uint64_t zero_words = 0;
};

SampleSummary sample_codewords(const CodeParams& p, const Field& f, std::uint64_t samples,
                               std::uint64_t threshold, std::uint64_t seed,
                               std::uint64_t max_elements = kDefaultElemGuard);

// All monic linear forms (first nonzero coefficient 1, constant term zero)
// dividing f, found by trial division.  The candidate count is
// (q^s - 1) / (q - 1); throws ResourceError beyond max_candidates.
std::vector<GenPoly> linear_factor_search(const GenPoly& f, const Field& fld,
                                          std::uint64_t max_candidates = std::uint64_t(1) << 21);

}  // namespace hytor
