#include "hytor/cli.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hytor/families.hpp"
#include "hytor/groebner.hpp"
#include "hytor/oracles.hpp"
#include "hytor/rng.hpp"
#include "hytor/sqfree.hpp"
#include "hytor/torus.hpp"

namespace hytor::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kToolVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

std::ostream* g_test_stream = nullptr;

std::string resolve_output(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("HYTOR_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string d = dir;
  if (d.back() != '/') d += '/';
  return d + path;
}

struct Report {
  Json j;
  std::vector<std::string> text;
  std::vector<std::string> csv;
  Clock::time_point start = Clock::now();

  Report(const std::string& command, const CommonOpts& o) {
    j["schema_version"] = kSchemaVersion;
    j["tool"] = "hytor";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["seed"] = o.seed;
    if (o.permissive) j["permissive"] = true;
  }

  void set_params(const CodeParams& p) {
    j["params"] = Json{{"q", p.q}, {"s", p.s}, {"d", p.d}};
  }
  void set_params_qs(unsigned q, int s) {
    j["params"] = Json{{"q", q}, {"s", s}};
  }
  void line(const std::string& t) { text.push_back(t); }
};

Json big_result(const BigInt& v, const char* provenance) {
  return Json{{"value", v.str()}, {"provenance", provenance}};
}

Json num_result(std::uint64_t v, const char* provenance) {
  return Json{{"value", v}, {"provenance", provenance}};
}

struct CheckList {
  Json arr = Json::array();
  int fails = 0;
  std::vector<std::string>* text;

  explicit CheckList(std::vector<std::string>* text_lines) : text(text_lines) {}

  void add(const std::string& name, const std::string& status, const std::string& detail) {
    arr.push_back(Json{{"name", name}, {"status", status}, {"detail", detail}});
    if (status == "FAIL") ++fails;
    text->push_back("[" + status + "] " + name + (detail.empty() ? "" : ": " + detail));
  }
  void pass(const std::string& name, const std::string& detail = "") {
    add(name, "PASS", detail);
  }
  void fail(const std::string& name, const std::string& detail = "") {
    add(name, "FAIL", detail);
  }
  void result(bool ok, const std::string& name, const std::string& detail = "") {
    add(name, ok ? "PASS" : "FAIL", detail);
  }
  void skip(const std::string& name, const std::string& reason) {
    add(name, "SKIPPED(" + reason + ")", "");
  }
};

int finish(Report& r, const CommonOpts& o, int code) {
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - r.start);
  r.j["exit_code"] = code;
  r.j["duration_ms"] = ms.count();

  std::string payload;
  if (o.format == "json") {
    payload = r.j.dump(2);
    payload += '\n';
  } else if (o.format == "csv") {
    for (const auto& row : r.csv) payload += row + '\n';
  } else if (o.format == "text") {
    for (const auto& t : r.text) payload += t + '\n';
  } else {
    throw ParamError("unknown format '" + o.format + "' (text, json, csv)");
  }

  if (g_test_stream != nullptr) {
    *g_test_stream << payload;
    return code;
  }
  const std::string path = resolve_output(o.output);
  if (path.empty()) {
    std::cout << payload;
    return code;
  }
  std::ofstream out(path);
  if (!out) throw ParamError("cannot open output file '" + path + "'");
  out << payload;
  std::cout << "wrote " << path << "\n";
  return code;
}

std::string elem_str(Elem e) { return std::to_string(unsigned(e)); }

std::vector<int> varset_list(VarSet v, int s) {
  std::vector<int> out;
  for (int i = 1; i <= s; ++i)
    if (v & var_bit(i)) out.push_back(i);
  return out;
}

Json min_params_json(const MinWordParams& w, int s) {
  Json j;
  j["regime"] = regime_label(w.regime);
  Json pairs = Json::array();
  for (const auto& bf : w.pairs)
    pairs.push_back(Json::array({bf.b, bf.c, unsigned(bf.alpha)}));
  j["pairs"] = std::move(pairs);
  const auto tail = varset_list(min_tail_vars(w, s), s);
  if (!tail.empty()) j["tail"] = tail;
  j["scalar"] = unsigned(w.scalar);
  return j;
}

Json ntm_params_json(const NtmWordParams& w, int s) {
  Json j;
  j["regime"] = regime_label(w.regime);
  Json pairs = Json::array();
  for (const auto& bf : w.pairs)
    pairs.push_back(Json::array({bf.b, bf.c, unsigned(bf.alpha)}));
  j["pairs"] = std::move(pairs);
  j["quad"] = Json::array({w.quad[0], w.quad[1], w.quad[2], w.quad[3]});
  j["quad_alphas"] = Json::array(
      {unsigned(w.quad_alphas[0]), unsigned(w.quad_alphas[1]), unsigned(w.quad_alphas[2])});
  const auto tail = varset_list(ntm_tail_vars(w, s), s);
  if (!tail.empty()) j["tail"] = tail;
  j["scalar"] = unsigned(w.scalar);
  return j;
}

std::string pairs_compact(const std::vector<BinFactor>& pairs) {
  std::string out;
  for (const auto& bf : pairs) {
    if (!out.empty()) out += '|';
    out += std::to_string(bf.b) + ':' + std::to_string(bf.c) + ':' + elem_str(bf.alpha);
  }
  return out.empty() ? "-" : out;
}

std::string min_params_text(const MinWordParams& w) {
  return "regime=" + regime_label(w.regime) + " pairs=" + pairs_compact(w.pairs) +
         " scalar=" + elem_str(w.scalar);
}

std::string ntm_params_text(const NtmWordParams& w) {
  return "regime=" + regime_label(w.regime) + " pairs=" + pairs_compact(w.pairs) +
         " quad=" + std::to_string(w.quad[0]) + ':' + std::to_string(w.quad[1]) + ':' +
         std::to_string(w.quad[2]) + ':' + std::to_string(w.quad[3]) +
         " quad_alphas=" + elem_str(w.quad_alphas[0]) + ':' + elem_str(w.quad_alphas[1]) +
         ':' + elem_str(w.quad_alphas[2]) + " scalar=" + elem_str(w.scalar);
}

// Deterministic index-stepped sample positions: every ceil(total/target)-th
// stream item, at most target of them.
struct StrideSampler {
  std::uint64_t stride = 1;
  std::uint64_t taken = 0, target = 0, index = 0;

  StrideSampler(const BigInt& total, std::uint64_t want) {
    target = want;
    if (total > 0 && BigInt(want) < total)
      stride = ((total + want - 1) / want).convert_to<std::uint64_t>();
  }
  bool take() {
    const bool yes = taken < target && index % stride == 0;
    ++index;
    if (yes) ++taken;
    return yes;
  }
};

BigInt u64_big(std::uint64_t v) { return BigInt(v); }

}  // namespace

void set_output_stream_for_tests(std::ostream* os) { g_test_stream = os; }

int run_params(const CodeParams& p, const CommonOpts& o) {
  validate_params(p, o.permissive);
  Report r("params", o);
  r.set_params(p);

  const BigInt n = code_length(p), k = code_dimension(p);
  const BigInt delta = min_distance(p);
  const auto delta2 = ntm_weight(p);
  Json res;
  res["length"] = big_result(n, "closed-form");
  res["dimension"] = big_result(k, "closed-form");
  res["min_regime"] = regime_label(min_regime(p.s, p.d));
  res["ntm_regime"] = regime_label(ntm_regime(p.s, p.d));
  res["min_distance"] = big_result(delta, "closed-form");
  if (delta2)
    res["ntm_weight"] = big_result(*delta2, "closed-form");
  else
    res["ntm_weight"] = Json{{"status", "not-covered"}};
  if (p.d < p.s) {
    res["min_word_count"] = big_result(min_word_count(p), "closed-form");
    const auto nc = ntm_word_count(p);
    if (nc)
      res["ntm_word_count"] = big_result(*nc, "closed-form");
    else
      res["ntm_word_count"] = Json{{"status", "not-covered"}};
  } else {
    res["min_word_count"] = Json{{"status", "not-covered"}};
    res["ntm_word_count"] = Json{{"status", "not-covered"}};
  }
  if (out_of_hypothesis(p)) res["out_of_hypothesis"] = true;
  r.j["results"] = res;

  r.line("code over F_" + std::to_string(p.q) + " with s=" + std::to_string(p.s) +
         ", d=" + std::to_string(p.d));
  r.line("length ............ " + n.str());
  r.line("dimension ......... " + k.str());
  r.line("min regime ........ " + regime_label(min_regime(p.s, p.d)));
  r.line("ntm regime ........ " + regime_label(ntm_regime(p.s, p.d)));
  r.line("min distance ...... " + delta.str());
  r.line("ntm weight ........ " + (delta2 ? delta2->str() : std::string("not covered")));
  if (p.d < p.s) {
    r.line("min word count .... " + min_word_count(p).str());
    const auto nc = ntm_word_count(p);
    r.line("ntm word count .... " + (nc ? nc->str() : std::string("not covered")));
  } else {
    r.line("min word count .... not covered (d = s)");
    r.line("ntm word count .... not covered (d = s)");
  }
  if (out_of_hypothesis(p))
    r.line("warning: parameters are outside the hypotheses of the closed forms");

  r.csv.push_back("key,value");
  r.csv.push_back("length," + n.str());
  r.csv.push_back("dimension," + k.str());
  r.csv.push_back("min_regime," + regime_label(min_regime(p.s, p.d)));
  r.csv.push_back("ntm_regime," + regime_label(ntm_regime(p.s, p.d)));
  r.csv.push_back("min_distance," + delta.str());
  r.csv.push_back("ntm_weight," + (delta2 ? delta2->str() : std::string("not-covered")));
  if (p.d < p.s) {
    r.csv.push_back("min_word_count," + min_word_count(p).str());
    const auto nc = ntm_word_count(p);
    r.csv.push_back("ntm_word_count," + (nc ? nc->str() : std::string("not-covered")));
  }
  return finish(r, o, kExitOk);
}

int run_spectrum(const CodeParams& p, const CommonOpts& o, const SpectrumOpts& so) {
  validate_params(p, o.permissive);
  if (so.max_codewords > (std::uint64_t(1) << 30))
    throw ParamError("--max-codewords may not exceed 2^30");
  const Field f = Field::make(p.q, o.permissive);
  Report r("spectrum", o);
  r.set_params(p);

  const WeightDistribution dist = exhaustive_spectrum(p, f, so.max_codewords, so.threads);

  Json arr = Json::array();
  for (const auto& [w, c] : dist.counts) arr.push_back(Json::array({w, c}));
  Json res;
  res["total_codewords"] = big_result(dist.total, "exhaustive-oracle");
  res["distribution"] = Json{{"value", std::move(arr)}, {"provenance", "exhaustive-oracle"}};
  r.line("weight distribution for q=" + std::to_string(p.q) + " s=" + std::to_string(p.s) +
         " d=" + std::to_string(p.d) + " (" + dist.total.str() + " codewords)");
  r.csv.push_back("weight,count");
  for (const auto& [w, c] : dist.counts) {
    r.line("  A_" + std::to_string(w) + " = " + std::to_string(c));
    r.csv.push_back(std::to_string(w) + ',' + std::to_string(c));
  }

  CheckList checks(&r.text);
  BigInt sum = 0;
  for (const auto& [w, c] : dist.counts) sum += c;
  checks.result(sum == dist.total, "distribution-total",
                "weights sum to " + sum.str() + " of " + dist.total.str());
  checks.result(dist.count(0) == 1, "zero-word", "A_0 = " + std::to_string(dist.count(0)));
  {
    bool ok = true;
    for (const auto& [w, c] : dist.counts)
      if (w > 0 && c % (p.q - 1) != 0) ok = false;
    checks.result(ok, "scalar-orbits", "every nonzero count divisible by q-1");
  }
  if (out_of_hypothesis(p)) {
    checks.skip("min-distance-formula", "out-of-hypothesis");
    checks.skip("min-count-formula", "out-of-hypothesis");
    checks.skip("ntm-weight-formula", "out-of-hypothesis");
    checks.skip("ntm-count-formula", "out-of-hypothesis");
  } else {
    const BigInt delta = min_distance(p);
    const auto observed_min = dist.min_nonzero();
    checks.result(observed_min && u64_big(*observed_min) == delta, "min-distance-formula",
                  "smallest nonzero weight " +
                      (observed_min ? std::to_string(*observed_min) : std::string("none")) +
                      " vs closed form " + delta.str());
    if (p.d < p.s) {
      const BigInt want = min_word_count(p);
      const std::uint64_t got =
          observed_min ? dist.count(*observed_min) : 0;
      checks.result(observed_min && u64_big(got) == want, "min-count-formula",
                    "A_min " + std::to_string(got) + " vs closed form " + want.str());
    }
    const auto delta2 = ntm_weight(p);
    const auto observed_second = dist.second_nonzero();
    if (delta2) {
      checks.result(observed_second && u64_big(*observed_second) == *delta2,
                    "ntm-weight-formula",
                    "second nonzero weight " +
                        (observed_second ? std::to_string(*observed_second)
                                         : std::string("none")) +
                        " vs closed form " + delta2->str());
      const BigInt want = *ntm_word_count(p);
      const std::uint64_t got = observed_second ? dist.count(*observed_second) : 0;
      checks.result(observed_second && u64_big(got) == want, "ntm-count-formula",
                    "A_second " + std::to_string(got) + " vs closed form " + want.str());
    } else {
      checks.skip("ntm-weight-formula", "gap");
      checks.skip("ntm-count-formula", "gap");
      if (observed_second)
        r.line("observed second nonzero weight (data only): " +
               std::to_string(*observed_second));
      if (observed_second)
        res["observed_second_weight"] = num_result(*observed_second, "exhaustive-oracle");
    }
  }
  r.j["results"] = std::move(res);
  r.j["checks"] = std::move(checks.arr);
  return finish(r, o, checks.fails == 0 ? kExitOk : kExitCheckFailed);
}

int run_family(const CodeParams& p, const CommonOpts& o, const FamilyOpts& fo) {
  validate_params(p, o.permissive);
  const Field f = Field::make(p.q, o.permissive);
  Report r(fo.ntm ? "ntm-words" : "min-words", o);
  r.set_params(p);

  const BigInt full_total = fo.ntm ? [&] {
    const auto c = ntm_word_count(p);
    if (!c)
      throw UnsupportedRegimeError(
          "no second-weight family in the band 2d-1 <= s <= 2d+1");
    return *c;
  }()
                                   : min_word_count(p);
  const BigInt expected =
      fo.monic_only ? full_total / (p.q - 1) : full_total;

  const BigInt target_weight_big =
      fo.ntm ? *ntm_weight(p) : min_distance(p);

  std::optional<TorusPointSet> pts;
  std::uint64_t target_weight = 0;
  if (fo.check_weights) {
    pts.emplace(f, p.s);  // throws ResourceError when too large
    target_weight = target_weight_big.convert_to<std::uint64_t>();
  }

  Json items = Json::array();
  CheckList checks(&r.text);
  std::uint64_t bad_weights = 0;
  std::uint64_t emitted = 0;
  r.csv.push_back(fo.ntm ? "index,regime,pairs,quad,quad_alphas,scalar,weight,poly"
                         : "index,regime,pairs,scalar,weight,poly");

  const MinStreamOptions sopt{fo.monic_only};
  auto handle = [&](Json jitem, const std::string& titem, std::string csvrow,
                    const SqFreePoly* poly) {
    std::string suffix;
    if (fo.check_weights && poly != nullptr) {
      const std::uint64_t w = evaluate(*poly, *pts).weight;
      if (w != target_weight) ++bad_weights;
      jitem["weight"] = w;
      suffix = " weight=" + std::to_string(w);
      csvrow += ',' + std::to_string(w);
    } else {
      csvrow += ",";
    }
    if (fo.expand && poly != nullptr) {
      const std::string pt = poly_to_text(*poly);
      jitem["poly"] = pt;
      suffix += "  " + pt;
      csvrow += ',' + pt;
    } else {
      csvrow += ",";
    }
    items.push_back(std::move(jitem));
    r.line("#" + std::to_string(emitted) + " " + titem + suffix);
    r.csv.push_back(std::to_string(emitted) + ',' + csvrow);
    ++emitted;
    return fo.limit == 0 || emitted < fo.limit;
  };

  if (fo.ntm) {
    stream_ntm(p, f, sopt, [&](const NtmWordParams& w) {
      std::optional<SqFreePoly> poly;
      if (fo.check_weights || fo.expand) poly = expand_ntm(w, p, f);
      std::string csvrow = regime_label(w.regime) + ',' + pairs_compact(w.pairs) + ',' +
                           std::to_string(w.quad[0]) + ':' + std::to_string(w.quad[1]) +
                           ':' + std::to_string(w.quad[2]) + ':' +
                           std::to_string(w.quad[3]) + ',' + elem_str(w.quad_alphas[0]) +
                           ':' + elem_str(w.quad_alphas[1]) + ':' +
                           elem_str(w.quad_alphas[2]) + ',' + elem_str(w.scalar);
      return handle(ntm_params_json(w, p.s), ntm_params_text(w), std::move(csvrow),
                    poly ? &*poly : nullptr);
    });
  } else {
    if (p.d >= p.s)
      throw UnsupportedRegimeError("minimal-weight family requires d < s");
    stream_min(p, f, sopt, [&](const MinWordParams& w) {
      std::optional<SqFreePoly> poly;
      if (fo.check_weights || fo.expand) poly = expand_min(w, p, f);
      std::string csvrow =
          regime_label(w.regime) + ',' + pairs_compact(w.pairs) + ',' + elem_str(w.scalar);
      return handle(min_params_json(w, p.s), min_params_text(w), std::move(csvrow),
                    poly ? &*poly : nullptr);
    });
  }

  Json res;
  res["expected_total"] = big_result(expected, "closed-form");
  res["emitted"] = num_result(emitted, "family-enumeration");
  res["target_weight"] = big_result(target_weight_big, "closed-form");
  res["items"] = Json{{"value", std::move(items)}, {"provenance", "family-enumeration"}};
  r.j["results"] = std::move(res);

  r.line("emitted " + std::to_string(emitted) + " of " + expected.str() +
         (fo.monic_only ? " monic items" : " items"));
  if (fo.limit == 0)
    checks.result(u64_big(emitted) == expected, "enumeration-count",
                  std::to_string(emitted) + " of " + expected.str());
  if (fo.check_weights)
    checks.result(bad_weights == 0, "family-weights",
                  std::to_string(emitted - bad_weights) + " of " + std::to_string(emitted) +
                      " items have weight " + target_weight_big.str());
  r.j["checks"] = std::move(checks.arr);
  return finish(r, o, checks.fails == 0 ? kExitOk : kExitCheckFailed);
}

int run_sample(const CodeParams& p, const CommonOpts& o, const SampleOpts& so) {
  validate_params(p, o.permissive);
  const Field f = Field::make(p.q, o.permissive);
  Report r("sample", o);
  r.set_params(p);

  const BigInt delta = min_distance(p);
  const auto delta2 = ntm_weight(p);
  std::uint64_t threshold = so.threshold;
  if (threshold == 0)
    threshold = (delta2 ? *delta2 : delta).convert_to<std::uint64_t>();

  const SampleSummary sum = sample_codewords(p, f, so.samples, threshold, o.seed);

  Json res;
  res["samples"] = num_result(sum.samples, "sampled");
  res["threshold"] = num_result(sum.threshold, "sampled");
  res["zero_words"] = num_result(sum.zero_words, "sampled");
  if (sum.min_nonzero_weight)
    res["min_sampled_weight"] = num_result(*sum.min_nonzero_weight, "sampled");
  Json hist = Json::array();
  for (const auto& [w, c] : sum.below_threshold) hist.push_back(Json::array({w, c}));
  res["below_threshold"] = Json{{"value", std::move(hist)}, {"provenance", "sampled"}};
  r.j["results"] = std::move(res);

  r.line("sampled " + std::to_string(sum.samples) + " codewords (seed " +
         std::to_string(sum.seed) + ", threshold " + std::to_string(sum.threshold) + ")");
  if (sum.min_nonzero_weight)
    r.line("smallest nonzero sampled weight: " + std::to_string(*sum.min_nonzero_weight));
  r.csv.push_back("weight,count");
  for (const auto& [w, c] : sum.below_threshold) {
    r.line("  weight " + std::to_string(w) + " seen " + std::to_string(c) + " times");
    r.csv.push_back(std::to_string(w) + ',' + std::to_string(c));
  }

  CheckList checks(&r.text);
  if (out_of_hypothesis(p)) {
    checks.skip("sampled-weights-at-least-min", "out-of-hypothesis");
  } else {
    bool ok = true;
    for (const auto& [w, c] : sum.below_threshold) {
      (void)c;
      if (u64_big(w) < delta) ok = false;
    }
    checks.result(ok, "sampled-weights-at-least-min",
                  "no sampled weight below " + delta.str());
  }
  r.j["checks"] = std::move(checks.arr);
  return finish(r, o, checks.fails == 0 ? kExitOk : kExitCheckFailed);
}

int run_recognize(const CodeParams& p, const CommonOpts& o, const std::string& poly_text) {
  validate_params(p, o.permissive);
  const Field f = Field::make(p.q, o.permissive);
  Report r("recognize", o);
  r.set_params(p);
  r.j["input"] = poly_text;

  const SqFreePoly poly = poly_parse(poly_text, p.s, &f);
  Json res;
  std::optional<MinWordParams> wmin;
  if (p.d < p.s) wmin = recognize_min(poly, p, f);
  res["min"] = wmin ? min_params_json(*wmin, p.s) : Json(nullptr);
  r.line(wmin ? "minimal-weight family member: " + min_params_text(*wmin)
              : "not a minimal-weight family member");
  r.csv.push_back("family,matched,params");
  r.csv.push_back(std::string("min,") + (wmin ? "yes," + pairs_compact(wmin->pairs) : "no,"));
  if (ntm_regime(p.s, p.d) == NtmRegime::Gap) {
    res["ntm"] = Json{{"status", "not-covered"}};
    r.line("second-weight family: not covered for these parameters");
    r.csv.push_back("ntm,not-covered,");
  } else {
    const auto wntm = recognize_ntm(poly, p, f);
    res["ntm"] = wntm ? ntm_params_json(*wntm, p.s) : Json(nullptr);
    r.line(wntm ? "second-weight family member: " + ntm_params_text(*wntm)
                : "not a second-weight family member");
    r.csv.push_back(std::string("ntm,") +
                    (wntm ? "yes," + pairs_compact(wntm->pairs) : "no,"));
  }
  r.j["results"] = std::move(res);
  return finish(r, o, kExitOk);
}

int run_du(unsigned q, int s, int u, const CommonOpts& o) {
  const Field f = Field::make(q, o.permissive);
  if (s < 1 || s > kMaxVars) throw ParamError("variable count s out of range");
  if (u < 0 || u > s) throw ParamError("u out of range [1, s]");
  Report r("du", o);
  r.set_params_qs(q, s);

  CheckList checks(&r.text);
  Json rows = Json::array();
  r.csv.push_back("u,closed,bruteforce");
  SplitMix64 rng(o.seed);

  std::uint64_t n = 1;
  bool brute_ok = true;
  for (int i = 0; i < s; ++i) {
    n *= q - 1;
    if (n > kDefaultElemGuard) brute_ok = false;
  }

  const int lo = u == 0 ? 1 : u, hi = u == 0 ? s : u;
  for (int uu = lo; uu <= hi; ++uu) {
    const BigInt closed = linear_form_nonzero_count(q, s, uu);
    Json row;
    row["u"] = uu;
    row["closed"] = closed.str();
    std::string brute_text = "-";
    if (brute_ok) {
      bool match = true;
      std::uint64_t first = 0;
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Elem> coeffs(static_cast<std::size_t>(uu));
        for (auto& c : coeffs)
          c = trial == 0 ? Elem(1) : f.units()[rng.below(q - 1)];
        const std::uint64_t got = linear_form_nonzero_bruteforce(f, s, coeffs);
        if (trial == 0) first = got;
        if (u64_big(got) != closed) match = false;
      }
      row["bruteforce"] = first;
      row["match"] = match;
      brute_text = std::to_string(first);
      checks.result(match, "closed-vs-bruteforce-u" + std::to_string(uu),
                    "closed " + closed.str() + ", bruteforce " + brute_text +
                        " (4 coefficient choices)");
    } else {
      checks.skip("closed-vs-bruteforce-u" + std::to_string(uu), "size");
    }
    rows.push_back(std::move(row));
    r.line("u=" + std::to_string(uu) + "  closed=" + closed.str() +
           "  bruteforce=" + brute_text);
    r.csv.push_back(std::to_string(uu) + ',' + closed.str() + ',' + brute_text);
  }

  Json chain = Json::array();
  for (int k = 1; 2 * k + 2 <= s; ++k) {
    const bool ok = linear_form_chain_check(q, s, k);
    chain.push_back(Json{{"k", k}, {"holds", ok}});
    checks.result(ok, "alternating-chain-k" + std::to_string(k),
                  "N(2k-1) > N(2k+1) > (q-1)^(s+1)/q > N(2k+2) > N(2k)");
  }

  Json res;
  res["counts"] = Json{{"value", std::move(rows)}, {"provenance", "closed-form"}};
  res["chain"] = Json{{"value", std::move(chain)}, {"provenance", "closed-form"}};
  r.j["results"] = std::move(res);
  r.j["checks"] = std::move(checks.arr);
  return finish(r, o, checks.fails == 0 ? kExitOk : kExitCheckFailed);
}

int run_footprint(const CodeParams& p, const CommonOpts& o, const std::string& poly_text) {
  validate_params(p, o.permissive);
  const Field f = Field::make(p.q, o.permissive);
  Report r("footprint", o);
  r.set_params(p);
  r.j["input"] = poly_text;

  const SqFreePoly poly = poly_parse(poly_text, p.s, &f);
  if (poly.is_zero()) throw ParamError("footprint of the zero polynomial");
  const FootprintCheck fc = footprint_weight_check(poly, p, f);

  Json res;
  res["weight"] = num_result(fc.weight, "exhaustive-oracle");
  res["footprint"] = num_result(fc.footprint, "exhaustive-oracle");
  res["box_bound"] = num_result(fc.box_bound, "exhaustive-oracle");
  res["lm_bound"] = big_result(fc.lm_bound, "closed-form");
  r.j["results"] = std::move(res);

  r.line("weight " + std::to_string(fc.weight) + ", footprint " +
         std::to_string(fc.footprint) + ", box bound " + std::to_string(fc.box_bound) +
         ", leading-monomial bound " + fc.lm_bound.str());
  r.csv.push_back("key,value");
  r.csv.push_back("weight," + std::to_string(fc.weight));
  r.csv.push_back("footprint," + std::to_string(fc.footprint));
  r.csv.push_back("box_bound," + std::to_string(fc.box_bound));
  r.csv.push_back("lm_bound," + fc.lm_bound.str());

  CheckList checks(&r.text);
  checks.result(fc.bound_holds, "weight-at-least-box-bound",
                std::to_string(fc.weight) + " >= " + std::to_string(fc.box_bound));
  checks.result(u64_big(fc.box_bound) >= fc.lm_bound, "box-bound-at-least-lm-bound",
                std::to_string(fc.box_bound) + " >= " + fc.lm_bound.str());
  if (fc.bound_tight) r.line("the box bound is tight for this polynomial");
  r.j["checks"] = std::move(checks.arr);
  return finish(r, o, checks.fails == 0 ? kExitOk : kExitCheckFailed);
}

int run_weight(const CodeParams& p, const CommonOpts& o, const std::string& poly_text) {
  validate_params(p, o.permissive);
  const Field f = Field::make(p.q, o.permissive);
  Report r("weight", o);
  r.set_params(p);
  r.j["input"] = poly_text;

  const SqFreePoly poly = poly_parse(poly_text, p.s, &f);
  if (!poly.is_zero() && poly.degree() != p.d)
    throw ParamError("polynomial degree does not match d");
  TorusPointSet pts(f, p.s);
  const Codeword cw = evaluate(poly, pts);
  const BigInt delta = min_distance(p);

  Json res;
  res["weight"] = num_result(cw.weight, "exhaustive-oracle");
  res["min_distance"] = big_result(delta, "closed-form");
  r.j["results"] = std::move(res);
  r.line("weight " + std::to_string(cw.weight) + " over " + std::to_string(pts.size()) +
         " torus points; minimum distance " + delta.str());
  r.csv.push_back("key,value");
  r.csv.push_back("weight," + std::to_string(cw.weight));
  r.csv.push_back("min_distance," + delta.str());

  CheckList checks(&r.text);
  if (poly.is_zero())
    checks.skip("weight-at-least-min", "zero-polynomial");
  else if (out_of_hypothesis(p))
    checks.skip("weight-at-least-min", "out-of-hypothesis");
  else
    checks.result(u64_big(cw.weight) >= delta, "weight-at-least-min",
                  std::to_string(cw.weight) + " >= " + delta.str());
  r.j["checks"] = std::move(checks.arr);
  return finish(r, o, checks.fails == 0 ? kExitOk : kExitCheckFailed);
}

int run_verify(const CodeParams& p, const CommonOpts& o, const std::string& level) {
  validate_params(p, o.permissive);
  if (level != "quick" && level != "full")
    throw ParamError("level must be 'quick' or 'full'");
  const bool full = level == "full";
  const Field f = Field::make(p.q, o.permissive);
  Report r("verify", o);
  r.set_params(p);
  r.j["level"] = level;
  CheckList checks(&r.text);
  SplitMix64 rng(o.seed);

  const std::uint64_t family_target = full ? 2000 : 200;
  const std::uint64_t roundtrip_target = full ? 500 : 100;
  const std::uint64_t pairing_trials = full ? 50 : 10;
  const std::uint64_t sigma_trials = full ? 30 : 10;
  const std::uint64_t footprint_trials = full ? 30 : 8;

  std::optional<TorusPointSet> pts;
  try {
    pts.emplace(f, p.s);
  } catch (const ResourceError&) {
  }

  const BigInt delta = min_distance(p);
  const auto delta2 = ntm_weight(p);

  // Minimal-weight family: weights, distinctness, recognition roundtrip.
  if (p.d >= p.s) {
    checks.skip("min-family-weights", "degenerate");
    checks.skip("min-family-distinct", "degenerate");
    checks.skip("recognize-min-roundtrip", "degenerate");
  } else {
    const std::uint64_t want_w = delta.convert_to<std::uint64_t>();
    StrideSampler samp(min_word_count(p), family_target);
    std::uint64_t sampled = 0, bad_weight = 0, roundtrips = 0, bad_roundtrip = 0;
    std::set<std::vector<Elem>> words;
    bool duplicate = false;
    stream_min(p, f, MinStreamOptions{}, [&](const MinWordParams& w) {
      if (!samp.take()) return true;
      ++sampled;
      const SqFreePoly poly = expand_min(w, p, f);
      if (pts) {
        Codeword cw = evaluate(poly, *pts);
        if (cw.weight != want_w) ++bad_weight;
        if (!words.insert(std::move(cw.values)).second) duplicate = true;
      }
      if (roundtrips < roundtrip_target) {
        ++roundtrips;
        const auto back = recognize_min(poly, p, f);
        if (!back || !(*back == w)) ++bad_roundtrip;
      }
      return true;
    });
    if (pts) {
      checks.result(bad_weight == 0, "min-family-weights",
                    std::to_string(sampled - bad_weight) + " of " + std::to_string(sampled) +
                        " sampled members have weight " + delta.str());
      checks.result(!duplicate, "min-family-distinct",
                    std::to_string(words.size()) + " distinct codewords from " +
                        std::to_string(sampled) + " sampled parameter sets");
    } else {
      checks.skip("min-family-weights", "size");
      checks.skip("min-family-distinct", "size");
    }
    checks.result(bad_roundtrip == 0, "recognize-min-roundtrip",
                  std::to_string(roundtrips - bad_roundtrip) + " of " +
                      std::to_string(roundtrips) + " roundtrips returned the parameters");
  }

  // Second-weight family, when covered.
  if (!delta2) {
    checks.skip("ntm-family-weights", "gap");
    checks.skip("ntm-family-distinct", "gap");
    checks.skip("recognize-ntm-roundtrip", "gap");
  } else {
    const std::uint64_t want_w = delta2->convert_to<std::uint64_t>();
    StrideSampler samp(*ntm_word_count(p), family_target);
    std::uint64_t sampled = 0, bad_weight = 0, roundtrips = 0, bad_roundtrip = 0;
    std::set<std::vector<Elem>> words;
    bool duplicate = false;
    stream_ntm(p, f, MinStreamOptions{}, [&](const NtmWordParams& w) {
      if (!samp.take()) return true;
      ++sampled;
      const SqFreePoly poly = expand_ntm(w, p, f);
      if (pts) {
        Codeword cw = evaluate(poly, *pts);
        if (cw.weight != want_w) ++bad_weight;
        if (!words.insert(std::move(cw.values)).second) duplicate = true;
      }
      if (roundtrips < roundtrip_target) {
        ++roundtrips;
        const auto back = recognize_ntm(poly, p, f);
        if (!back || !(*back == w)) ++bad_roundtrip;
      }
      return true;
    });
    if (pts) {
      checks.result(bad_weight == 0, "ntm-family-weights",
                    std::to_string(sampled - bad_weight) + " of " + std::to_string(sampled) +
                        " sampled members have weight " + delta2->str());
      checks.result(!duplicate, "ntm-family-distinct",
                    std::to_string(words.size()) + " distinct codewords from " +
                        std::to_string(sampled) + " sampled parameter sets");
    } else {
      checks.skip("ntm-family-weights", "size");
      checks.skip("ntm-family-distinct", "size");
    }
    checks.result(bad_roundtrip == 0, "recognize-ntm-roundtrip",
                  std::to_string(roundtrips - bad_roundtrip) + " of " +
                      std::to_string(roundtrips) + " roundtrips returned the parameters");
  }

  // Linear-form counts: closed form against brute force, then the chain.
  if (pts) {
    bool ok = true;
    std::string detail;
    for (int u = 1; u <= p.s; ++u) {
      const BigInt closed = linear_form_nonzero_count(p.q, p.s, u);
      for (int trial = 0; trial < (full ? 5 : 2); ++trial) {
        std::vector<Elem> coeffs(static_cast<std::size_t>(u));
        for (auto& c : coeffs)
          c = trial == 0 ? Elem(1) : f.units()[rng.below(p.q - 1)];
        const std::uint64_t got = linear_form_nonzero_bruteforce(f, p.s, coeffs);
        if (u64_big(got) != closed) {
          ok = false;
          detail = "mismatch at u=" + std::to_string(u) + ": closed " + closed.str() +
                   ", bruteforce " + std::to_string(got);
        }
      }
    }
    checks.result(ok, "linear-form-counts",
                  ok ? "closed form matches brute force for u=1.." + std::to_string(p.s)
                     : detail);
  } else {
    checks.skip("linear-form-counts", "size");
  }
  if (p.s >= 4) {
    bool ok = true;
    for (int k = 1; 2 * k + 2 <= p.s; ++k)
      if (!linear_form_chain_check(p.q, p.s, k)) ok = false;
    checks.result(ok, "linear-form-chain", "alternating chain for every valid k");
  }

  // Complement pairing and weight preservation.
  if (pts) {
    const ComplementPairing cp = complement_pairing(*pts);
    bool ok = true;
    for (std::uint64_t t = 0; ok && t < pairing_trials; ++t) {
      const SqFreePoly poly = random_code_polynomial(p, f, rng);
      const Codeword cw = evaluate(poly, *pts);
      const Codeword cc = evaluate(complement(poly), *pts);
      if (cw.weight != cc.weight) ok = false;
      for (std::uint64_t i = 0; ok && i < pts->size(); ++i)
        if (cw.values[i] != f.mul(cp.scaling[i], cc.values[cp.point_perm[i]])) ok = false;
    }
    checks.result(ok, "complement-pairing",
                  std::to_string(pairing_trials) +
                      " random polynomials satisfy the pointwise identity");
  } else {
    checks.skip("complement-pairing", "size");
  }

  // Variable permutations act by permuting evaluation points.
  if (pts) {
    bool ok = true;
    for (std::uint64_t t = 0; ok && t < sigma_trials; ++t) {
      const Permutation sigma = Permutation::random(p.s, rng);
      const auto map = permutation_point_map(*pts, sigma);
      const SqFreePoly poly = random_code_polynomial(p, f, rng);
      const Codeword cw = evaluate(poly, *pts);
      const Codeword cs = evaluate(permute_vars(poly, sigma), *pts);
      for (std::uint64_t i = 0; ok && i < pts->size(); ++i)
        if (cs.values[i] != cw.values[map[i]]) ok = false;
    }
    checks.result(ok, "permutation-equivariance",
                  std::to_string(sigma_trials) +
                      " random permutations permute the codeword entries");
  } else {
    checks.skip("permutation-equivariance", "size");
  }

  // Scalar multiples keep the weight.
  if (pts) {
    bool ok = true;
    for (int t = 0; ok && t < 5; ++t) {
      const SqFreePoly poly = random_code_polynomial(p, f, rng);
      const Elem a = f.units()[rng.below(p.q - 1)];
      if (evaluate(poly, *pts).weight != evaluate(poly_scale(poly, a, f), *pts).weight)
        ok = false;
    }
    checks.result(ok, "scalar-invariance", "weight unchanged under unit scaling");
  } else {
    checks.skip("scalar-invariance", "size");
  }

  // Footprint bound on random polynomials (small systems only).
  if (p.s <= 4 && pts) {
    bool ok = true;
    std::string detail = std::to_string(footprint_trials) +
                         " random polynomials satisfy weight >= box bound >= "
                         "leading-monomial bound";
    for (std::uint64_t t = 0; ok && t < footprint_trials; ++t) {
      const SqFreePoly poly = random_code_polynomial(p, f, rng);
      const FootprintCheck fc = footprint_weight_check(poly, p, f);
      if (!fc.bound_holds || u64_big(fc.box_bound) < fc.lm_bound) {
        ok = false;
        detail = "violated for " + poly_to_text(poly);
      }
    }
    checks.result(ok, "footprint-bound", detail);
  } else {
    checks.skip("footprint-bound", "size");
  }

  r.j["checks"] = std::move(checks.arr);
  r.csv.push_back("check,status");
  for (const auto& c : r.j["checks"])
    r.csv.push_back(c["name"].get<std::string>() + ',' + c["status"].get<std::string>());
  r.line("verify level=" + level + ": " +
         std::to_string(r.j["checks"].size() - std::size_t(checks.fails)) + " of " +
         std::to_string(r.j["checks"].size()) + " checks passed or skipped");
  return finish(r, o, checks.fails == 0 ? kExitOk : kExitCheckFailed);
}

int run_complement(int s, const CommonOpts& o, const std::string& poly_text) {
  if (s < 1 || s > kMaxVars) throw ParamError("variable count s out of range");
  Report r("complement", o);
  r.j["params"] = Json{{"s", s}};
  r.j["input"] = poly_text;

  const SqFreePoly poly = poly_parse(poly_text, s, nullptr);
  const std::string out = poly_to_text(complement(poly));
  r.j["results"] = Json{{"complement", out}};
  r.line(out);
  r.csv.push_back("key,value");
  r.csv.push_back("complement," + out);
  return finish(r, o, kExitOk);
}

}  // namespace hytor::cli
