#include <climits>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "periplectic/cache.hpp"
#include "periplectic/report.hpp"

using namespace peri;
using json = nlohmann::ordered_json;

namespace {

struct Config {
  int p = 5;
  int n = 3;
  std::string chi = "chi3";
  std::vector<int> params;
  std::string lambda = "all";
  std::string out;
  std::string format = "json";
  std::string cache = default_cache_dir();
  std::uint64_t seed = 1;
  bool no_timing = false;
  int jobs = 1;
  bool allow_large = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_setting_options(CLI::App* app, Config& c, bool with_lambda) {
  app->add_option("--p", c.p, "characteristic (prime > 3)")->capture_default_str();
  app->add_option("--chi", c.chi, "p-character kind: chi1..chi6")->capture_default_str();
  app->add_option("--params", c.params, "chi parameters, comma separated")->delimiter(',');
  if (with_lambda) app->add_option("--lambda", c.lambda, "weight r,s (entries like t+1 allowed) or 'all'")->capture_default_str();
}

void add_output_options(CLI::App* app, Config& c) {
  app->add_option("--out", c.out, "write the report to this file instead of stdout");
  app->add_option("--format", c.format, "json, csv or markdown")->capture_default_str();
}

void add_run_options(CLI::App* app, Config& c) {
  app->add_option("--cache", c.cache, "matrix cache directory (default $PERI_CACHE_DIR)");
  app->add_option("--seed", c.seed, "seed for random search vectors")->capture_default_str();
  app->add_flag("--no-timing", c.no_timing, "report runtime_ms as 0 (byte-identical output)");
  app->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
  app->add_flag("--allow-large", c.allow_large, "lift the module dimension limit");
}

Setting make_setting(const Config& c) {
  if (c.p <= 3) throw UsageError("--p must be a prime greater than 3");
  for (int d = 2; d * d <= c.p; ++d)
    if (c.p % d == 0) throw UsageError("--p must be prime");
  const ChiKind kind = parse_chi_kind(c.chi);
  if (kind == ChiKind::Custom) throw UsageError("custom characters are not available from the command line");
  return Setting::make(c.p, kind, c.params);
}

std::vector<Weight> parse_lambdas(const Setting& s, const std::string& text) {
  if (text == "all") return s.lambdas();
  Weight w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) w.push_back(s.field->parse(part));
  if (w.size() != 2) throw UsageError("--lambda needs two coordinates r,s");
  s.require_lambda(w);
  return {w};
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

std::unique_ptr<MatrixCache> open_cache(const Config& c) {
  if (c.cache.empty()) return nullptr;
  return std::make_unique<MatrixCache>(c.cache);
}

int max_dim(const Config& c) { return c.allow_large ? INT_MAX : SeriesOptions{}.max_dim; }

int run_lambda_list(const Config& c) {
  const Setting s = make_setting(c);
  json arr = json::array();
  for (const auto& w : s.lambdas()) arr.push_back(weight_json(*s.field, w));
  emit(c, json_text(arr));
  return 0;
}

int run_delta(const Config& c) {
  const Setting s = make_setting(c);
  json arr = json::array();
  for (const auto& w : parse_lambdas(s, c.lambda)) {
    const Fe d = delta(*s.field, w);
    arr.push_back({{"lambda", weight_json(*s.field, w)}, {"delta", fe_json(*s.field, d)}, {"typical", d.v != 0}});
  }
  emit(c, json_text(arr));
  return 0;
}

int run_typicality(const Config& c) {
  if (c.n < 3 || c.n > 5) throw UsageError("--n must be 3, 4 or 5");
  if (c.p < c.n + 1) throw UsageError("--p must be at least n + 1");
  const TypicalityScan scan = weyl_typicality_scan(c.n, c.p);
  json arr = json::array();
  for (const auto& ce : scan.counterexamples) arr.push_back({{"lambda", ce.lambda}, {"reason", ce.reason}});
  emit(c, json_text(arr));
  std::cerr << scan.counterexamples.size() << " counterexamples (n=" << c.n << ", p=" << c.p << ", " << scan.weights
            << " weights, " << scan.delta_zero << " atypical, " << scan.route_mismatches << " route mismatches)\n";
  return scan.counterexamples.empty() && scan.route_mismatches == 0 ? 0 : 1;
}

int run_kac_build(const Config& c) {
  const Setting s = make_setting(c);
  auto cache = open_cache(c);
  json arr = json::array();
  bool ok = true;
  for (const auto& w : parse_lambdas(s, c.lambda)) {
    const int base_dim = simple_g0(s, w).dim();
    if (8 * base_dim > max_dim(c))
      throw ResourceError("module dimension " + std::to_string(8 * base_dim) + " exceeds the limit");
    const bool cached = cache && cache->load(s, w).has_value();
    const KacModule k = obtain_kac(s, w, cache.get());
    const KacReport r = verify_module(k, s.chi);
    ok = ok && r.ok();
    json census = json::object();
    for (const auto& [g, n] : grading_census(k)) census[std::to_string(g)] = n;
    arr.push_back({{"p", s.field->p()},
                   {"chi", chi_json(s.chi)},
                   {"lambda", weight_json(*s.field, w)},
                   {"dim", k.dim()},
                   {"base_dim", k.base.dim()},
                   {"grading", census},
                   {"cached", cached},
                   {"checks",
                    {{"homomorphism", r.homomorphism.ok()},
                     {"pchar", r.pchar.ok()},
                     {"weights", r.weights.ok()},
                     {"grading", r.grading.ok()},
                     {"structural", r.structural}}}});
  }
  emit(c, json_text(c.lambda == "all" ? arr : arr[0]));
  return ok ? 0 : 1;
}

int run_maxvec(const Config& c) {
  const Setting s = make_setting(c);
  if (c.lambda == "all") throw UsageError("maxvec needs --lambda r,s");
  const Weight w = parse_lambdas(s, c.lambda)[0];
  auto cache = open_cache(c);
  if (8 * simple_g0(s, w).dim() > max_dim(c)) throw ResourceError("module dimension exceeds the limit");
  const KacModule k = obtain_kac(s, w, cache.get());
  emit(c, maxvec_text(k, maximal_vectors(k), parse_format(c.format)));
  return 0;
}

int run_series(const Config& c) {
  const Setting s = make_setting(c);
  const Format fmt = parse_format(c.format);
  auto cache = open_cache(c);
  HeadCache heads;
  SeriesOptions o;
  o.seed = c.seed;
  o.max_dim = max_dim(c);
  o.cache = &heads;
  o.matrices = cache.get();
  o.timing = !c.no_timing;
  const auto lambdas = parse_lambdas(s, c.lambda);
  bool ok = true;
  if (lambdas.size() == 1) {
    const auto r = composition_series(s, lambdas[0], o);
    emit(c, series_text(s, r, fmt));
    return r.ok() ? 0 : 1;
  }
  std::string text;
  json arr = json::array();
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto r = composition_series(s, lambdas[i], o);
    ok = ok && r.ok();
    if (fmt == Format::Json) {
      arr.push_back(series_json(s, r));
    } else {
      std::string t = series_text(s, r, fmt);
      if (fmt == Format::Csv && i > 0) t = t.substr(t.find('\n') + 1);
      text += t;
      if (fmt == Format::Markdown) text += "\n";
    }
  }
  emit(c, fmt == Format::Json ? json_text(arr) : text);
  return ok ? 0 : 1;
}

int run_verify(const Config& c, const std::string& kinds) {
  VerifyOptions o;
  if (c.p <= 3) throw UsageError("--p must be a prime greater than 3");
  o.p = c.p;
  o.jobs = std::max(1, c.jobs);
  o.seed = c.seed;
  o.max_dim = max_dim(c);
  if (kinds != "all") {
    o.kinds.clear();
    std::stringstream ss(kinds);
    std::string k;
    while (std::getline(ss, k, ',')) o.kinds.push_back(parse_chi_kind(k));
  }
  auto cache = open_cache(c);
  o.matrices = cache.get();
  const VerifySummary sum = verify_all(o);
  emit(c, verify_text(sum, parse_format(c.format)));
  std::cerr << sum.passed << " pass, " << sum.failed << " fail, " << sum.uncovered << " uncovered\n";
  return sum.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac modules of the restricted Lie superalgebra p(3)"};
  app.require_subcommand(1);
  Config c;
  std::string verify_kinds = "all";

  auto* ll = app.add_subcommand("lambda-list", "list Lambda_chi");
  add_setting_options(ll, c, false);
  add_output_options(ll, c);

  auto* dl = app.add_subcommand("delta", "delta(lambda) and typicality");
  add_setting_options(dl, c, true);
  add_output_options(dl, c);

  auto* ts = app.add_subcommand("typicality-scan", "exhaustive check of typical Weyl-dot translates");
  ts->add_option("--n", c.n, "rank + 1")->capture_default_str();
  ts->add_option("--p", c.p, "characteristic")->capture_default_str();
  add_output_options(ts, c);

  auto* kac = app.add_subcommand("kac", "Kac module operations");
  kac->require_subcommand(1);
  auto* kb = kac->add_subcommand("build", "build and check K_chi(lambda)");
  add_setting_options(kb, c, true);
  add_output_options(kb, c);
  add_run_options(kb, c);

  auto* mv = app.add_subcommand("maxvec", "maximal vectors of K_chi(lambda)");
  add_setting_options(mv, c, true);
  add_output_options(mv, c);
  add_run_options(mv, c);

  auto* se = app.add_subcommand("series", "composition factors of K_chi(lambda)");
  add_setting_options(se, c, true);
  add_output_options(se, c);
  add_run_options(se, c);

  auto* ve = app.add_subcommand("verify", "compare every K_chi(lambda) with the multiplicity table");
  ve->add_option("--p", c.p, "characteristic")->capture_default_str();
  ve->add_option("--chi", verify_kinds, "kinds to check, comma separated, or 'all'")->capture_default_str();
  add_output_options(ve, c);
  add_run_options(ve, c);
  c.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    parse_format(c.format);
    if (*ll) return run_lambda_list(c);
    if (*dl) return run_delta(c);
    if (*ts) return run_typicality(c);
    if (*kb) return run_kac_build(c);
    if (*mv) return run_maxvec(c);
    if (*se) return run_series(c);
    if (*ve) return run_verify(c, verify_kinds);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << " (use --allow-large to override)\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
