// Command line front end.  All real work happens in hytor::cli; this file
// only parses arguments and maps exceptions to exit codes.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hytor/cli.hpp"
#include "hytor/errors.hpp"

namespace {

using hytor::cli::CommonOpts;
using hytor::cli::FamilyOpts;
using hytor::cli::SampleOpts;
using hytor::cli::SpectrumOpts;

struct ParamArgs {
  unsigned q = 0;
  int s = 0;
  int d = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "Write the report to a file instead of stdout");
  cmd->add_option("--seed", opts.seed, "Seed for randomized checks")->capture_default_str();
  cmd->add_flag("--permissive", opts.permissive, "Accept parameters outside the supported range");
}

void add_code_params(CLI::App* cmd, ParamArgs& args) {
  cmd->add_option("--q", args.q, "Field size (prime power)")->required();
  cmd->add_option("--s", args.s, "Number of variables")->required();
  cmd->add_option("--d", args.d, "Degree of the evaluated monomials")->required();
}

hytor::CodeParams to_params(const ParamArgs& a) {
  return hytor::CodeParams{a.q, a.s, a.d};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hytor: toric codes over hypersimplices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  ParamArgs pa;
  CommonOpts common;
  SpectrumOpts spectrum;
  FamilyOpts family;
  SampleOpts sample;
  std::string level = "quick";
  std::string poly_text;
  int du_u = 0;
  int comp_s = 0;

  CLI::App* c_params = app.add_subcommand("params", "Report length, dimension and weight formulas");
  add_code_params(c_params, pa);
  add_common(c_params, common);

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "Exhaustive weight distribution of the code");
  add_code_params(c_spectrum, pa);
  add_common(c_spectrum, common);
  c_spectrum->add_option("--threads", spectrum.threads, "Worker threads")->capture_default_str();
  c_spectrum->add_option("--max-codewords", spectrum.max_codewords,
                         "Abort if the code has more codewords than this")
      ->capture_default_str();

  CLI::App* c_verify = app.add_subcommand("verify", "Cross-check formulas against computed data");
  add_code_params(c_verify, pa);
  add_common(c_verify, common);
  c_verify->add_option("--level", level, "Check depth")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  CLI::App* c_min = app.add_subcommand("min-words", "Enumerate the minimum weight family");
  add_code_params(c_min, pa);
  add_common(c_min, common);
  c_min->add_flag("--monic", family.monic_only, "Only canonical representatives, no scalar multiples");
  c_min->add_option("--limit", family.limit, "Stop after this many words (0 = all)")
      ->capture_default_str();
  c_min->add_flag("--check", family.check_weights, "Evaluate each word and check its weight");
  c_min->add_flag("--expand", family.expand, "Include the expanded polynomial in each record");

  CLI::App* c_ntm = app.add_subcommand("ntm-words", "Enumerate the next-to-minimum weight family");
  add_code_params(c_ntm, pa);
  add_common(c_ntm, common);
  c_ntm->add_flag("--monic", family.monic_only, "Only canonical representatives, no scalar multiples");
  c_ntm->add_option("--limit", family.limit, "Stop after this many words (0 = all)")
      ->capture_default_str();
  c_ntm->add_flag("--check", family.check_weights, "Evaluate each word and check its weight");
  c_ntm->add_flag("--expand", family.expand, "Include the expanded polynomial in each record");

  CLI::App* c_sample = app.add_subcommand("sample", "Random codeword weights below a threshold");
  add_code_params(c_sample, pa);
  add_common(c_sample, common);
  c_sample->add_option("--samples", sample.samples, "Number of random codewords")
      ->capture_default_str();
  c_sample->add_option("--threshold", sample.threshold,
                       "Record weights up to this value (0 = automatic)")
      ->capture_default_str();

  CLI::App* c_recognize = app.add_subcommand("recognize", "Test membership in the weight families");
  add_code_params(c_recognize, pa);
  add_common(c_recognize, common);
  c_recognize->add_option("--poly", poly_text, "Polynomial, e.g. \"t1*t2 + 2*t1*t3\"")->required();

  CLI::App* c_du = app.add_subcommand("du", "Nonzero counts of linear forms on the torus");
  c_du->add_option("--q", pa.q, "Field size (prime power)")->required();
  c_du->add_option("--s", pa.s, "Number of variables")->required();
  c_du->add_option("--u", du_u, "Number of terms in the form (0 = all of 1..s)")
      ->capture_default_str();
  add_common(c_du, common);

  CLI::App* c_footprint = app.add_subcommand("footprint", "Footprint bound for one polynomial");
  add_code_params(c_footprint, pa);
  add_common(c_footprint, common);
  c_footprint->add_option("--poly", poly_text, "Polynomial to bound")->required();

  CLI::App* c_weight = app.add_subcommand("weight", "Evaluate one polynomial on the torus");
  add_code_params(c_weight, pa);
  add_common(c_weight, common);
  c_weight->add_option("--poly", poly_text, "Polynomial to evaluate")->required();

  CLI::App* c_complement = app.add_subcommand("complement", "Complement of a square-free polynomial");
  c_complement->add_option("--s", comp_s, "Number of variables")->required();
  add_common(c_complement, common);
  c_complement->add_option("--poly", poly_text, "Polynomial to complement")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hytor::cli::kExitUsage;
  }

  try {
    if (c_params->parsed()) return hytor::cli::run_params(to_params(pa), common);
    if (c_spectrum->parsed()) return hytor::cli::run_spectrum(to_params(pa), common, spectrum);
    if (c_verify->parsed()) return hytor::cli::run_verify(to_params(pa), common, level);
    if (c_min->parsed()) {
      family.ntm = false;
      return hytor::cli::run_family(to_params(pa), common, family);
    }
    if (c_ntm->parsed()) {
      family.ntm = true;
      return hytor::cli::run_family(to_params(pa), common, family);
    }
    if (c_sample->parsed()) return hytor::cli::run_sample(to_params(pa), common, sample);
    if (c_recognize->parsed()) return hytor::cli::run_recognize(to_params(pa), common, poly_text);
    if (c_du->parsed()) return hytor::cli::run_du(pa.q, pa.s, du_u, common);
    if (c_footprint->parsed()) return hytor::cli::run_footprint(to_params(pa), common, poly_text);
    if (c_weight->parsed()) return hytor::cli::run_weight(to_params(pa), common, poly_text);
    if (c_complement->parsed()) return hytor::cli::run_complement(comp_s, common, poly_text);
  } catch (const hytor::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return hytor::cli::kExitResource;
  } catch (const hytor::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hytor::cli::kExitUsage;
  } catch (const hytor::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hytor::cli::kExitUsage;
  }
  std::cerr << "error: no command selected\n";
  return hytor::cli::kExitUsage;
}
