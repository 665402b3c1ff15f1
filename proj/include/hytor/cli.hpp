#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hytor/formulas.hpp"

namespace hytor::cli {

// Process exit codes shared by every command.
inline constexpr int kExitOk = 0;          // command ran, all checks passed
inline constexpr int kExitCheckFailed = 1; // command ran, some check failed
inline constexpr int kExitResource = 2;    // a size or iteration guard tripped
inline constexpr int kExitUsage = 64;      // bad arguments, parse errors,
                                           // unsupported regime or order

// Options every command shares.  `format` is "text", "json" or "csv";
// `output` empty means stdout.  A relative output path is resolved against
// the HYTOR_OUTPUT_DIR environment variable when that is set.
struct CommonOpts {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 0;
  bool permissive = false;
};

struct SpectrumOpts {
  unsigned threads = 1;
  std::uint64_t max_codewords = std::uint64_t(1) << 24;
};

struct FamilyOpts {
  bool ntm = false;         // second-weight family instead of minimal
  bool monic_only = false;  // fix the scalar to 1
  std::uint64_t limit = 0;  // 0 = no limit
  bool check_weights = false;
  bool expand = false;      // include the polynomial text per item
};

struct SampleOpts {
  std::uint64_t samples = 500;
  std::uint64_t threshold = 0;  // 0 = pick automatically
};

int run_params(const CodeParams& p, const CommonOpts& o);
int run_spectrum(const CodeParams& p, const CommonOpts& o, const SpectrumOpts& so);
int run_verify(const CodeParams& p, const CommonOpts& o, const std::string& level);
int run_family(const CodeParams& p, const CommonOpts& o, const FamilyOpts& fo);
int run_sample(const CodeParams& p, const CommonOpts& o, const SampleOpts& so);
int run_recognize(const CodeParams& p, const CommonOpts& o, const std::string& poly_text);
int run_du(unsigned q, int s, int u, const CommonOpts& o);  // u = 0 means all
int run_footprint(const CodeParams& p, const CommonOpts& o, const std::string& poly_text);
int run_weight(const CodeParams& p, const CommonOpts& o, const std::string& poly_text);
int run_complement(int s, const CommonOpts& o, const std::string& poly_text);

// Render the report produced by the command that just ran on `os` instead
// of the configured destination (test hook): every run_* above has a
// sibling that takes an explicit stream.
void set_output_stream_for_tests(std::ostream* os);

}  // namespace hytor::cli
