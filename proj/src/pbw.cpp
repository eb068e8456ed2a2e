#include "periplectic/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace peri {

Straightener::Straightener(const Algebra& alg, const PChar& chi, std::vector<int> negs, std::vector<int> b)
    : alg_(alg), chi_(chi), negs_(std::move(negs)) {
  if (alg.p >= 16) throw std::invalid_argument("monomial encoding supports p < 16");
  if (negs_.size() > 16) throw std::invalid_argument("at most 16 negative generators");
  neg_pos_.assign(alg.dim(), -1);
  in_b_.assign(alg.dim(), 0);
  for (std::size_t k = 0; k < negs_.size(); ++k) {
    neg_pos_.at(negs_[k]) = static_cast<int>(k);
    radix_.push_back(alg.parity(negs_[k]) ? 2 : alg.p);
    count_ *= static_cast<std::size_t>(radix_.back());
  }
  for (int x : b) {
    if (neg_pos_.at(x) >= 0) throw std::invalid_argument("B and the negative part overlap");
    in_b_.at(x) = 1;
  }
  inv2_ = (alg.p + 1) / 2;
}

std::uint64_t Straightener::with_exponent(std::uint64_t mono, int k, int e) const {
  const std::uint64_t mask = std::uint64_t{15} << (4 * k);
  return (mono & ~mask) | (static_cast<std::uint64_t>(e) << (4 * k));
}

std::uint64_t Straightener::monomial(std::size_t index) const {
  std::uint64_t mono = 0;
  for (std::size_t k = 0; k < negs_.size(); ++k) {
    mono = with_exponent(mono, static_cast<int>(k), static_cast<int>(index % radix_[k]));
    index /= radix_[k];
  }
  return mono;
}

std::size_t Straightener::monomial_index(std::uint64_t mono) const {
  std::size_t index = 0;
  for (std::size_t k = negs_.size(); k-- > 0;) index = index * radix_[k] + exponent(mono, static_cast<int>(k));
  return index;
}

void Straightener::add_scaled(Expr& out, const Expr& in, int c, const Word& suffix) const {
  const int p = alg_.p;
  c = ((c % p) + p) % p;
  if (!c) return;
  for (const auto& [key, v] : in) {
    Key k = key;
    k.second.insert(k.second.end(), suffix.begin(), suffix.end());
    int& slot = out[k];
    slot = (slot + v * c) % p;
    if (!slot) out.erase(k);
  }
}

const Straightener::Expr& Straightener::left_mul(int x, std::uint64_t mono) {
  const auto key = std::make_pair(x, mono);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (busy_[key]) throw std::logic_error("straightening does not terminate for this ordering");
  busy_[key] = true;
  const int p = alg_.p;
  const Word none;
  Expr out;
  const int j = neg_pos_[x];
  int i = 0;
  while (i < static_cast<int>(negs_.size()) && exponent(mono, i) == 0) ++i;
  if (i == static_cast<int>(negs_.size())) {
    if (j >= 0) out[{with_exponent(0, j, 1), none}] = 1;
    else if (in_b_[x]) out[{0, Word{static_cast<std::uint8_t>(x)}}] = 1;
    else throw std::logic_error(alg_.basis[x].name + " is neither in B nor in the negative part");
  } else if (j >= 0 && j < i) {
    out[{with_exponent(mono, j, 1), none}] = 1;
  } else if (j == i) {
    const int e = exponent(mono, i);
    if (e + 1 < radix_[i]) {
      out[{with_exponent(mono, i, e + 1), none}] = 1;
    } else {
      const std::uint64_t rest = with_exponent(mono, i, 0);
      if (alg_.parity(x)) {
        for (const auto& t : alg_.bracket(x, x)) add_scaled(out, left_mul(t.index, rest), t.coeff * inv2_, none);
      } else {
        for (const auto& t : alg_.p_power[x]) add_scaled(out, left_mul(t.index, rest), t.coeff, none);
        if (chi_.value(x)) add_scaled(out, Expr{{{rest, none}, 1}}, chi_.value(x), none);
      }
    }
  } else {
    const int y = negs_[i];
    const std::uint64_t rest = with_exponent(mono, i, exponent(mono, i) - 1);
    const int sign = (alg_.parity(x) & alg_.parity(y)) ? p - 1 : 1;
    const Expr inner = left_mul(x, rest);
    for (const auto& [k, c] : inner) add_scaled(out, left_mul(y, k.first), sign * c, k.second);
    for (const auto& t : alg_.bracket(x, y)) add_scaled(out, left_mul(t.index, rest), t.coeff, none);
  }
  busy_.erase(key);
  return memo_.emplace(key, std::move(out)).first->second;
}

std::string monomial_label(const Algebra& alg, const std::vector<int>& negs, const std::vector<int>& exps) {
  std::string s;
  for (std::size_t k = 0; k < negs.size(); ++k) {
    if (!exps[k]) continue;
    if (!s.empty()) s += ' ';
    s += alg.basis[negs[k]].name;
    if (exps[k] > 1) s += "^" + std::to_string(exps[k]);
  }
  return s;
}

WeightModule induce(const WeightModule& w, const PChar& chi, const InducedOptions& opts) {
  const Algebra& alg = w.algebra();
  const Field& f = w.field();
  for (int a : w.acting())
    if (std::find(opts.b.begin(), opts.b.end(), a) == opts.b.end())
      throw std::invalid_argument("induce: W is acted on by an element outside B");
  Straightener st(alg, chi, opts.negs, opts.b);
  const int dw = w.dim();
  const std::size_t nm = st.num_monomials();

  std::vector<int> acting = opts.negs;
  acting.insert(acting.end(), opts.b.begin(), opts.b.end());
  WeightModule out(w.field_ptr(), w.algebra_ptr(), acting);

  const auto wn = w.natural_weights();
  std::vector<Weight> nat;
  std::vector<std::string> labels;
  std::vector<int> grades;
  nat.reserve(nm * dw);
  for (std::size_t s = 0; s < nm; ++s) {
    const std::uint64_t mono = st.monomial(s);
    std::vector<int> offset(alg.n - 1, 0);
    std::vector<int> exps;
    int total = 0;
    for (std::size_t k = 0; k < opts.negs.size(); ++k) {
      const int e = st.exponent(mono, static_cast<int>(k));
      exps.push_back(e);
      total += e;
      const auto r = alg.root_coords(opts.negs[k]);
      for (int c = 0; c + 1 < alg.n; ++c) offset[c] += e * r[c];
    }
    const std::string ml = monomial_label(alg, opts.negs, exps);
    for (int j = 0; j < dw; ++j) {
      nat.push_back(weight_shift(f, wn[j], offset));
      const std::string wl = w.labels().empty() ? "v" + std::to_string(j) : w.labels()[j];
      labels.push_back(ml.empty() ? wl : ml + " " + wl);
      if (opts.grade_step) grades.push_back(opts.grade_step * total + (w.graded() ? w.grades()[j] : 0));
    }
  }
  out.set_basis(nat);
  out.set_labels(std::move(labels));
  out.set_grades(std::move(grades));

  std::map<int, Matrix> wdense;
  for (int a : w.acting()) wdense[a] = w.dense(a);
  std::map<Straightener::Word, std::optional<Matrix>> word_cache;
  auto eval = [&](const Straightener::Word& word) -> const std::optional<Matrix>& {
    auto it = word_cache.find(word);
    if (it != word_cache.end()) return it->second;
    std::optional<Matrix> acc = Matrix::identity(dw);
    for (auto it2 = word.rbegin(); it2 != word.rend(); ++it2) {
      auto m = wdense.find(*it2);
      if (m == wdense.end()) {
        acc.reset();
        break;
      }
      acc = multiply(f, m->second, *acc);
      if (acc->is_zero()) {
        acc.reset();
        break;
      }
    }
    return word_cache.emplace(word, std::move(acc)).first->second;
  };

  for (int x : acting)
    for (std::size_t s = 0; s < nm; ++s) {
      const auto& expr = st.left_mul(x, st.monomial(s));
      for (const auto& [key, c] : expr) {
        const auto& r = eval(key.second);
        if (!r) continue;
        const std::size_t t = st.monomial_index(key.first);
        const Fe cf = f.from_int(c);
        for (int i = 0; i < dw; ++i)
          for (int j = 0; j < dw; ++j) {
            const Fe v = (*r)(i, j);
            if (v.v)
              out.add_entry(x, static_cast<int>(t * dw + i), static_cast<int>(s * dw + j), f.mul(cf, v));
          }
      }
    }
  return out;
}

}  // namespace peri
