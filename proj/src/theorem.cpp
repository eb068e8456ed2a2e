#include "periplectic/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "periplectic/cache.hpp"

namespace peri {

extern const std::string_view kTheoremTable;

namespace {

using nlohmann::json;

RuleValue parse_value(const json& j) {
  if (j.is_number_integer()) return {j.get<int>(), false};
  if (j.is_string() && j.get<std::string>() == "p-1") return {0, true};
  throw std::invalid_argument("theorem table: bad value " + j.dump());
}

std::vector<RuleValue> parse_values(const json& j) {
  std::vector<RuleValue> out;
  if (j.is_array())
    for (const auto& x : j) out.push_back(parse_value(x));
  else
    out.push_back(parse_value(j));
  return out;
}

RulePredicate parse_predicate(const std::string& name, const json& j) {
  static const std::map<std::string, std::pair<RulePredicate::Kind, int>> kinds = {
      {"r", {RulePredicate::Kind::Equal, 0}},      {"s", {RulePredicate::Kind::Equal, 1}},
      {"r_min", {RulePredicate::Kind::AtLeast, 0}}, {"s_min", {RulePredicate::Kind::AtLeast, 1}},
      {"r_not", {RulePredicate::Kind::NotIn, 0}},   {"s_not", {RulePredicate::Kind::NotIn, 1}},
      {"r_plus_s", {RulePredicate::Kind::SumEqual, 0}},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw std::invalid_argument("theorem table: unknown predicate '" + name + "'");
  return {it->second.first, it->second.second, parse_values(j)};
}

// Integer value of a coordinate, when it lies in GF(p).
std::optional<int> coord(const Field& f, const Weight& lambda, int i) {
  if (!f.in_prime_field(lambda[i])) return std::nullopt;
  return f.to_int(lambda[i]);
}

bool holds(const RulePredicate& pr, const Field& f, const Weight& lambda) {
  const int p = f.p();
  switch (pr.kind) {
    case RulePredicate::Kind::Equal: {
      const auto c = coord(f, lambda, pr.coord);
      return c && *c == pr.values.at(0).resolve(p);
    }
    case RulePredicate::Kind::AtLeast: {
      const auto c = coord(f, lambda, pr.coord);
      return c && *c >= pr.values.at(0).resolve(p);
    }
    case RulePredicate::Kind::NotIn: {
      const auto c = coord(f, lambda, pr.coord);
      if (!c) return true;
      return std::none_of(pr.values.begin(), pr.values.end(), [&](const RuleValue& v) { return *c == v.resolve(p); });
    }
    case RulePredicate::Kind::SumEqual: {
      const auto r = coord(f, lambda, 0), s = coord(f, lambda, 1);
      return r && s && *r + *s == pr.values.at(0).resolve(p);
    }
  }
  return false;
}

}  // namespace

TheoremTable TheoremTable::parse(std::string_view json_text) {
  const json doc = json::parse(json_text);
  TheoremTable t;
  t.version_ = doc.at("version").get<int>();
  for (const auto& r : doc.at("rules")) {
    TheoremRule rule;
    rule.id = r.at("id").get<std::string>();
    if (r.contains("chi"))
      for (const auto& c : r.at("chi")) rule.chis.push_back(parse_chi_kind(c.get<std::string>()));
    if (r.contains("when"))
      for (const auto& [name, value] : r.at("when").items()) {
        if (name == "typical") rule.typical = value.get<bool>();
        else rule.when.push_back(parse_predicate(name, value));
      }
    for (const auto& f : r.at("factors")) {
      auto off = f.get<std::vector<int>>();
      if (off.size() != 3) throw std::invalid_argument("theorem table: factor offsets need 3 epsilon coordinates");
      rule.factors.push_back(std::move(off));
    }
    if (rule.factors.empty()) throw std::invalid_argument("theorem table: rule '" + rule.id + "' lists no factors");
    rule.collision = r.value("collision", false);
    t.rules_.push_back(std::move(rule));
  }
  return t;
}

const TheoremTable& TheoremTable::builtin() {
  static const TheoremTable table = parse(kTheoremTable);
  return table;
}

const TheoremRule* TheoremTable::match(const Field& f, ChiKind kind, const Weight& lambda, bool typical) const {
  for (const auto& r : rules_) {
    if (!r.chis.empty() && std::find(r.chis.begin(), r.chis.end(), kind) == r.chis.end()) continue;
    if (r.typical && *r.typical != typical) continue;
    if (std::all_of(r.when.begin(), r.when.end(), [&](const RulePredicate& pr) { return holds(pr, f, lambda); }))
      return &r;
  }
  return nullptr;
}

Expectation expectation_for(const Setting& s, const Weight& lambda, const TheoremRule& rule, std::mt19937_64& rng,
                            HeadCache* cache, MatrixCache* matrices) {
  const Field& f = *s.field;
  Expectation e;
  e.rule = rule.id;
  std::vector<Leaf> leaves;
  for (const auto& off : rule.factors) {
    const Weight mu = weight_shift(f, lambda, eps_to_coords(off));
    if (std::find(e.weights.begin(), e.weights.end(), mu) != e.weights.end()) e.collision = true;
    e.weights.push_back(mu);
    const HeadInfo h = kac_head(s, mu, rng, cache, matrices);
    leaves.push_back({h.label, h.dim, h.character, CertificateKind::Trivial});
    e.total_dim += h.dim;
  }
  e.factors = factor_multiset(f, leaves);
  return e;
}

std::string row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Uncovered: return "uncovered";
  }
  return "?";
}

VerifyRow verify_one(const Setting& s, const Weight& lambda, const VerifyOptions& opts, HeadCache& heads) {
  const Field& f = *s.field;
  const TheoremTable& table = opts.table ? *opts.table : TheoremTable::builtin();
  VerifyRow row;
  row.kind = s.chi.kind;
  row.lambda = lambda;
  SeriesOptions so;
  so.seed = opts.seed;
  so.max_dim = opts.max_dim;
  so.cross_check = opts.cross_check;
  so.cache = &heads;
  so.matrices = opts.matrices;
  so.timing = false;
  row.report = composition_series(s, lambda, so);
  const CompositionReport& r = row.report;
  if (!r.dims_ok) row.reasons.push_back("factor dimensions do not add up to dim K");
  if (!r.character_ok) row.reasons.push_back("factor characters do not add up to the character of K");
  if (!r.cross_check_ok) row.reasons.push_back("a factor differs from the head of its own Kac module");
  if (!r.head_confirmed) row.reasons.push_back("the head of K is not the top factor");

  const TheoremRule* rule = table.match(f, s.chi.kind, lambda, r.typical);
  if (rule) {
    std::mt19937_64 rng(opts.seed);
    row.expected = expectation_for(s, lambda, *rule, rng, &heads, opts.matrices);
    const Expectation& e = *row.expected;
    if (e.total_dim != r.dim)
      row.reasons.push_back("listed factors have total dimension " + std::to_string(e.total_dim) + ", dim K is " +
                            std::to_string(r.dim));
    const bool same = e.factors.size() == r.factors.size() &&
                      std::equal(e.factors.begin(), e.factors.end(), r.factors.begin(),
                                 [](const FactorEntry& a, const FactorEntry& b) {
                                   return a.label == b.label && a.dim == b.dim && a.mult == b.mult;
                                 });
    if (!same) row.reasons.push_back("factor multiset differs from rule " + e.rule);
    if (e.collision) row.report.notes.push_back("listed factors coincide on h (rule " + e.rule + ")");
  }
  if (!row.reasons.empty()) row.status = RowStatus::Fail;
  else row.status = rule ? RowStatus::Pass : RowStatus::Uncovered;
  return row;
}

VerifySummary verify_all(const VerifyOptions& opts) {
  struct Job {
    const Setting* setting;
    Weight lambda;
  };
  std::vector<Setting> settings;
  settings.reserve(opts.kinds.size());
  for (ChiKind k : opts.kinds) settings.push_back(Setting::make(opts.p, k));
  std::vector<Job> jobs;
  for (const auto& s : settings)
    for (const auto& l : s.lambdas()) jobs.push_back({&s, l});

  VerifySummary sum;
  sum.p = opts.p;
  sum.table_version = (opts.table ? *opts.table : TheoremTable::builtin()).version();
  sum.rows.resize(jobs.size());
  std::vector<HeadCache> heads(settings.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        const auto idx = static_cast<std::size_t>(jobs[i].setting - settings.data());
        sum.rows[i] = verify_one(*jobs[i].setting, jobs[i].lambda, opts, heads[idx]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const int n = std::max(1, std::min<int>(opts.jobs, static_cast<int>(jobs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  for (const auto& r : sum.rows) {
    if (r.status == RowStatus::Pass) ++sum.passed;
    else if (r.status == RowStatus::Fail) ++sum.failed;
    else ++sum.uncovered;
  }
  return sum;
}

}  // namespace peri
