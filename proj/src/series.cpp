#include "periplectic/series.hpp"

#include "periplectic/cache.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace peri {

namespace {

Vec column(const Matrix& m, std::size_t c) {
  Vec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
  return v;
}

void leaves_rec(const WeightModule& m, std::mt19937_64& rng, std::vector<Leaf>& out) {
  const auto r = is_irreducible(m, rng);
  if (r.irreducible) {
    out.push_back({canonical_label(m, r.max_spaces), m.dim(), m.character(), r.kind});
    return;
  }
  leaves_rec(submodule(m, *r.submodule), rng, out);
  leaves_rec(quotient(m, *r.submodule), rng, out);
}

std::vector<std::uint32_t> key(const Field& f, const Weight& w) {
  std::vector<std::uint32_t> k;
  for (Fe x : w) k.push_back(f.packed(x));
  return k;
}

}  // namespace

std::vector<Leaf> composition_leaves(const WeightModule& m, std::mt19937_64& rng) {
  std::vector<Leaf> out;
  leaves_rec(m, rng, out);
  return out;
}

std::optional<HeadInfo> HeadCache::find(const Field& f, const Weight& mu) const {
  std::lock_guard lock(mutex_);
  auto it = heads_.find(key(f, mu));
  if (it == heads_.end()) return std::nullopt;
  return it->second;
}

void HeadCache::insert(const Field& f, const Weight& mu, HeadInfo h) {
  std::lock_guard lock(mutex_);
  heads_.emplace(key(f, mu), std::move(h));
}

RadicalCheck unique_max_submodule_check(const WeightModule& m, const std::vector<Subspace>& extra) {
  RadicalCheck rc;
  rc.sum = zero_subspace(m);
  for (const auto& sp : maximal_vector_spaces(m))
    for (std::size_t c = 0; c < sp.basis.cols(); ++c) {
      const Subspace s = spin(m, {{sp.weight, column(sp.basis, c)}});
      if (is_full(m, s)) continue;
      ++rc.generators;
      rc.sum = subspace_sum(m, rc.sum, s);
    }
  for (const auto& s : extra)
    if (!is_full(m, s)) rc.sum = subspace_sum(m, rc.sum, s);
  rc.proper = !is_full(m, rc.sum);
  return rc;
}

HeadInfo kac_head(const Setting& s, const Weight& mu, std::mt19937_64& rng, HeadCache* cache, MatrixCache* matrices) {
  if (cache)
    if (auto h = cache->find(*s.field, mu)) return *h;
  const KacModule k = obtain_kac(s, mu, matrices);
  const RadicalCheck rc = unique_max_submodule_check(k.rep);
  const WeightModule top = simple_top(k.rep, rng, rc.proper ? &rc.sum : nullptr);
  HeadInfo h{canonical_label(top), top.dim(), top.character()};
  if (cache) cache->insert(*s.field, mu, h);
  return h;
}

std::vector<FactorEntry> factor_multiset(const Field& f, const std::vector<Leaf>& leaves) {
  std::vector<FactorEntry> out;
  for (const auto& l : leaves) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const FactorEntry& e) { return e.label == l.label && e.dim == l.dim; });
    if (it != out.end()) ++it->mult;
    else out.push_back({l.label, l.dim, 1});
  }
  std::sort(out.begin(), out.end(), [&](const FactorEntry& a, const FactorEntry& b) {
    if (a.label != b.label) return weight_less(f, a.label, b.label);
    return a.dim < b.dim;
  });
  return out;
}

CompositionReport composition_series(const Setting& s, const KacModule& k, const SeriesOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field& f = *s.field;
  if (k.dim() > opts.max_dim)
    throw ResourceError("module dimension " + std::to_string(k.dim()) + " exceeds the limit " +
                        std::to_string(opts.max_dim));
  std::mt19937_64 rng(opts.seed);
  CompositionReport rep;
  rep.chi = s.chi;
  rep.lambda = k.lambda;
  rep.delta = delta(f, k.lambda);
  rep.typical = rep.delta.v != 0;
  rep.dim = k.dim();
  const auto top = is_irreducible(k.rep, rng);
  std::vector<Subspace> found;
  if (top.irreducible) {
    rep.leaves.push_back({canonical_label(k.rep, top.max_spaces), k.dim(), k.rep.character(), top.kind});
  } else {
    found.push_back(*top.submodule);
    leaves_rec(submodule(k.rep, *top.submodule), rng, rep.leaves);
    leaves_rec(quotient(k.rep, *top.submodule), rng, rep.leaves);
  }
  rep.length = static_cast<int>(rep.leaves.size());
  rep.factors = factor_multiset(f, rep.leaves);

  int total = 0;
  std::map<std::vector<std::uint32_t>, int> chars;
  for (const auto& l : rep.leaves) {
    total += l.dim;
    for (const auto& [w, c] : l.character) chars[key(f, w)] += c;
  }
  rep.dims_ok = total == k.dim();
  std::map<std::vector<std::uint32_t>, int> kc;
  for (const auto& [w, c] : k.rep.character()) kc[key(f, w)] += c;
  rep.character_ok = chars == kc;

  // radical and head
  HeadInfo hinfo;
  if (top.irreducible) {
    rep.unique_max_ok = true;
    rep.head_confirmed = true;
    hinfo = {rep.leaves[0].label, rep.leaves[0].dim, rep.leaves[0].character};
  } else {
    const RadicalCheck rc = unique_max_submodule_check(k.rep, found);
    rep.unique_max_ok = rc.proper;
    if (!rc.proper) rep.notes.push_back("the proper submodules found add up to the whole module");
    if (rc.proper) {
      const WeightModule head = simple_top(k.rep, rng, &rc.sum);
      if (head.dim() + rc.sum.dim() != k.dim())
        rep.notes.push_back("the radical is larger than the sum of the submodules generated by maximal vectors");
      hinfo = {canonical_label(head), head.dim(), head.character()};
      rep.head_confirmed = !rep.leaves.empty() && rep.leaves.back().label == hinfo.label &&
                           rep.leaves.back().dim == hinfo.dim && rep.leaves.back().character == hinfo.character;
      if (!rep.head_confirmed) rep.notes.push_back("the head is not the top composition factor");
    }
  }
  if (opts.cache && rep.head_confirmed) opts.cache->insert(f, k.lambda, hinfo);

  if (opts.cross_check) {
    for (const auto& l : rep.leaves) {
      const HeadInfo h = kac_head(s, l.label, rng, opts.cache, opts.matrices);
      if (h.label != l.label || h.dim != l.dim || h.character != l.character) {
        rep.cross_check_ok = false;
        rep.notes.push_back("factor " + weight_to_string(f, l.label) + " (dim " + std::to_string(l.dim) +
                            ") differs from the head of K(" + weight_to_string(f, l.label) + ") (dim " +
                            std::to_string(h.dim) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < rep.leaves.size(); ++i)
    for (std::size_t j = i + 1; j < rep.leaves.size(); ++j) {
      const Leaf &a = rep.leaves[i], &b = rep.leaves[j];
      if (a.label != b.label && a.character == b.character)
        rep.notes.push_back("ambiguous labels: " + weight_to_string(f, a.label) + " and " +
                            weight_to_string(f, b.label) + " have identical characters");
    }
  if (opts.timing)
    rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CompositionReport composition_series(const Setting& s, const Weight& lambda, const SeriesOptions& opts) {
  s.require_lambda(lambda);
  if (opts.matrices)
    if (auto k = opts.matrices->load(s, lambda)) return composition_series(s, *k, opts);
  WeightModule base = simple_g0(s, lambda);
  if (8 * base.dim() > opts.max_dim)
    throw ResourceError("module dimension " + std::to_string(8 * base.dim()) + " exceeds the limit " +
                        std::to_string(opts.max_dim));
  const KacModule k = build_kac(s, lambda, std::move(base));
  if (opts.matrices) opts.matrices->store(s, lambda, k);
  return composition_series(s, k, opts);
}

}  // namespace peri
