#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "periplectic/cache.hpp"
#include "periplectic/report.hpp"

using namespace peri;
namespace fs = std::filesystem;

namespace {

Weight ints(const Setting& s, int r, int t) { return weight_from_ints(*s.field, std::vector{r, t}); }

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("peri-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void check_same_module(const WeightModule& a, const WeightModule& b) {
  REQUIRE(a.dim() == b.dim());
  CHECK(a.natural_weights() == b.natural_weights());
  CHECK(a.grades() == b.grades());
  CHECK(a.labels() == b.labels());
  CHECK(a.acting() == b.acting());
  for (int x : a.acting())
    for (int w = 0; w < a.num_weights(); ++w) {
      const Block& ba = a.block(x, w);
      const int wb = b.find_weight(a.weight(w));
      REQUIRE(wb >= 0);
      const Block& bb = b.block(x, wb);
      if (ba.target < 0 || ba.m.is_zero()) {
        CHECK((bb.target < 0 || bb.m.is_zero()));
        continue;
      }
      CHECK(ba.m == bb.m);
    }
}

std::string text_of(const KacModule& k) {
  std::ostringstream os;
  write_kac(os, k);
  return os.str();
}

}  // namespace

TEST_CASE("Kac modules survive a text round trip") {
  for (auto [kind, lambda] : {std::pair{ChiKind::Chi3, std::string("0,1")}, std::pair{ChiKind::Chi2, std::string("0,t+1")},
                              std::pair{ChiKind::Chi5, std::string("1,2")}}) {
    const Setting s = Setting::make(5, kind);
    const Weight l = {s.field->parse(lambda.substr(0, lambda.find(','))), s.field->parse(lambda.substr(lambda.find(',') + 1))};
    const KacModule k = build_kac(s, l);
    const std::string text = text_of(k);
    std::istringstream in(text);
    const KacModule back = read_kac(in, s.field, s.alg);
    CHECK(back.lambda == k.lambda);
    check_same_module(k.base, back.base);
    check_same_module(k.rep, back.rep);
    CHECK(text_of(back) == text);
    CHECK(verify_module(back, s.chi).ok());
  }
}

TEST_CASE("malformed module files are rejected") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const std::string text = text_of(build_kac(s, ints(s, 1, 1)));
  std::istringstream truncated(text.substr(0, text.size() / 2));
  CHECK_THROWS(read_kac(truncated, s.field, s.alg));
  std::istringstream wrong("periplectic-kac 7\n");
  CHECK_THROWS(read_kac(wrong, s.field, s.alg));
  const Setting s2 = Setting::make(5, ChiKind::Chi2);
  std::istringstream other_field(text);
  CHECK_THROWS(read_kac(other_field, s2.field, s2.alg));
}

TEST_CASE("matrix cache stores, reloads and rebuilds") {
  TempDir tmp;
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const Weight l = ints(s, 0, 2);
  MatrixCache cache(tmp.path);
  CHECK(cache.size() == 0);
  CHECK(!cache.load(s, l));
  const KacModule built = obtain_kac(s, l, &cache);
  CHECK(cache.size() == 1);
  const auto file = tmp.path / (cache.key(s, l) + ".kac");
  REQUIRE(fs::exists(file));

  std::ifstream meta_in(tmp.path / "meta.json");
  const auto meta = nlohmann::json::parse(meta_in);
  const auto& entry = meta.at("entries").at(cache.key(s, l));
  CHECK(entry.at("dim") == built.dim());
  CHECK(entry.at("chi") == "chi3");
  CHECK(entry.at("lambda") == std::vector<std::string>{"0", "2"});

  const auto loaded = cache.load(s, l);
  REQUIRE(loaded);
  check_same_module(built.rep, loaded->rep);
  CHECK(!cache.load(s, ints(s, 0, 3)));

  // a different lambda under the same file name is not accepted
  fs::copy_file(file, tmp.path / (cache.key(s, ints(s, 0, 3)) + ".kac"));
  CHECK(!cache.load(s, ints(s, 0, 3)));

  {
    std::ofstream broken(file, std::ios::trunc);
    broken << "periplectic-kac 1\nlambda 2 0\n";
  }
  CHECK(!cache.load(s, l));
  const KacModule rebuilt = obtain_kac(s, l, &cache);
  check_same_module(built.rep, rebuilt.rep);
  CHECK(cache.load(s, l));
  CHECK(cache.size() == 1);
}

TEST_CASE("series through the cache matches a fresh build") {
  TempDir tmp;
  MatrixCache cache(tmp.path);
  const Setting s = Setting::make(5, ChiKind::Chi5);
  SeriesOptions o;
  o.timing = false;
  const auto fresh = series_text(s, composition_series(s, ints(s, 0, 2), o), Format::Json);
  o.matrices = &cache;
  const auto first = series_text(s, composition_series(s, ints(s, 0, 2), o), Format::Json);
  CHECK(cache.size() > 0);
  const auto second = series_text(s, composition_series(s, ints(s, 0, 2), o), Format::Json);
  CHECK(fresh == first);
  CHECK(first == second);
}

TEST_CASE("builtin table parses and matches") {
  const TheoremTable& t = TheoremTable::builtin();
  CHECK(t.version() == 1);
  CHECK(t.rules().size() == 12);
  auto rule_for = [&](ChiKind kind, const std::string& r, const std::string& v) -> std::string {
    const Setting s = Setting::make(5, kind);
    const Weight l = {s.field->parse(r), s.field->parse(v)};
    const TheoremRule* m = t.match(*s.field, kind, l, delta(*s.field, l).v != 0);
    return m ? m->id : "";
  };
  CHECK(rule_for(ChiKind::Chi3, "2", "2") == "chi3-line");
  CHECK(rule_for(ChiKind::Chi3, "0", "4") == "chi3-r0-s2");
  CHECK(rule_for(ChiKind::Chi3, "0", "1") == "chi3-r0-s1");
  CHECK(rule_for(ChiKind::Chi3, "0", "0") == "chi3-zero");
  CHECK(rule_for(ChiKind::Chi3, "1", "0") == "chi3-s0-r1");
  CHECK(rule_for(ChiKind::Chi3, "3", "0") == "chi3-s0-r2");
  CHECK(rule_for(ChiKind::Chi5, "0", "4") == "chi5-r0-top");
  CHECK(rule_for(ChiKind::Chi5, "0", "2") == "chi5-r0");
  CHECK(rule_for(ChiKind::Chi2, "0", "t+1") == "chi2-r0");
  CHECK(rule_for(ChiKind::Chi6, "0", "0") == "chi1-chi4-chi6");
  // every typical weight lands on the typical rule
  for (auto kind : {ChiKind::Chi2, ChiKind::Chi3, ChiKind::Chi5}) {
    const Setting s = Setting::make(5, kind);
    for (const auto& l : s.lambdas())
      if (delta(*s.field, l).v) CHECK(t.match(*s.field, kind, l, true)->id == "typical");
  }
}

TEST_CASE("table parse errors") {
  CHECK_THROWS(TheoremTable::parse("{"));
  CHECK_THROWS(TheoremTable::parse(R"({"rules": []})"));
  CHECK_THROWS(TheoremTable::parse(R"({"version": 1, "rules": [{"id": "x", "factors": []}]})"));
  CHECK_THROWS(TheoremTable::parse(R"({"version": 1, "rules": [{"id": "x", "factors": [[0, 0]]}]})"));
  CHECK_THROWS(TheoremTable::parse(R"({"version": 1, "rules": [{"id": "x", "when": {"q": 1}, "factors": [[0, 0, 0]]}]})"));
  CHECK_THROWS(TheoremTable::parse(R"({"version": 1, "rules": [{"id": "x", "when": {"r": "p"}, "factors": [[0, 0, 0]]}]})"));
  CHECK_THROWS(TheoremTable::parse(R"({"version": 1, "rules": [{"id": "x", "chi": ["chi9"], "factors": [[0, 0, 0]]}]})"));
  const auto ok = TheoremTable::parse(
      R"({"version": 3, "rules": [{"id": "top", "chi": ["chi5"], "when": {"r": 0, "s": "p-1"}, "factors": [[0, 0, 0]]}]})");
  CHECK(ok.version() == 3);
  const Setting s = Setting::make(7, ChiKind::Chi5);
  CHECK(ok.match(*s.field, ChiKind::Chi5, ints(s, 0, 6), false));
  CHECK(!ok.match(*s.field, ChiKind::Chi5, ints(s, 0, 5), false));
  CHECK(!ok.match(*s.field, ChiKind::Chi3, ints(s, 0, 6), false));
}

TEST_CASE("trivial chi3 weight: listed factors coincide on h") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const Weight l = ints(s, 0, 0);
  const TheoremRule* rule = TheoremTable::builtin().match(*s.field, ChiKind::Chi3, l, false);
  REQUIRE(rule);
  std::mt19937_64 rng(1);
  const Expectation e = expectation_for(s, l, *rule, rng);
  CHECK(e.collision);
  CHECK(rule->collision);
  CHECK(e.total_dim == build_kac(s, l).dim());
  VerifyOptions o;
  HeadCache heads;
  const VerifyRow row = verify_one(s, l, o, heads);
  CHECK(row.status == RowStatus::Pass);
}

TEST_CASE("verify is independent of the worker count") {
  VerifyOptions o;
  o.kinds = {ChiKind::Chi3, ChiKind::Chi5};
  o.jobs = 1;
  const std::string one = verify_json(verify_all(o)).dump();
  o.jobs = 3;
  const VerifySummary three = verify_all(o);
  CHECK(verify_json(three).dump() == one);
  CHECK(three.passed + three.failed + three.uncovered == static_cast<int>(three.rows.size()));
  CHECK(three.uncovered == 0);
}

TEST_CASE("reports without timing are byte-identical") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  SeriesOptions o;
  o.timing = false;
  for (auto fmt : {Format::Json, Format::Csv, Format::Markdown}) {
    const auto a = series_text(s, composition_series(s, ints(s, 0, 1), o), fmt);
    const auto b = series_text(s, composition_series(s, ints(s, 0, 1), o), fmt);
    CHECK(a == b);
  }
}

TEST_CASE("report formats") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  SeriesOptions o;
  o.timing = false;
  const auto r = composition_series(s, ints(s, 0, 1), o);

  const auto j = nlohmann::json::parse(series_text(s, r, Format::Json));
  CHECK(j.at("p") == 5);
  CHECK(j.at("chi").at("kind") == "chi3");
  CHECK(j.at("lambda") == std::vector<int>{0, 1});
  CHECK(j.at("typical") == false);
  CHECK(j.at("length") == r.length);
  CHECK(j.at("runtime_ms") == 0);
  CHECK(j.at("factors").size() == r.factors.size());
  CHECK(j.at("checks").at("dims") == true);

  const auto csv = series_text(s, r, Format::Csv);
  CHECK(csv.rfind("p,chi,lambda,label,dim,mult\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.factors.size() + 1));

  const auto md = series_text(s, r, Format::Markdown);
  CHECK(md.find("`[K(0,1)] = ") == 0);
  CHECK(md.find("| label | dim | mult |") != std::string::npos);

  const Setting s2 = Setting::make(5, ChiKind::Chi2);
  const Weight l2 = {s2.field->zero(), s2.field->parse("t+1")};
  const auto j2 = series_json(s2, composition_series(s2, l2, o));
  CHECK(j2.at("lambda")[0] == 0);
  CHECK(j2.at("lambda")[1] == "t+1");

  const KacModule k = build_kac(s, ints(s, 0, 1));
  const auto mv = maximal_vectors(k);
  const auto mj = nlohmann::json::parse(maxvec_text(k, mv, Format::Json));
  REQUIRE(mj.size() == mv.size());
  for (std::size_t i = 0; i < mv.size(); ++i) {
    CHECK(mj[i].at("degree") == mv[i].degree);
    CHECK(mj[i].at("support").size() == mj[i].at("coefficients").size());
  }
  CHECK(maxvec_text(k, mv, Format::Csv).rfind("weight,degree,basis,coefficient\n", 0) == 0);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  CHECK(parse_format("md") == Format::Markdown);
}

TEST_CASE("bracket notation") {
  const Setting s = Setting::make(5, ChiKind::Chi3);
  const Field& f = *s.field;
  const std::vector<FactorEntry> fs = {{ints(s, 0, 0), 1, 2}, {ints(s, 1, 3), 10, 1}};
  CHECK(bracket_notation(f, ints(s, 0, 0), fs) == "[K(0,0)] = 2[L(0,0)] + [L(1,3)]");
}
