#include "periplectic/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace peri {

namespace {

constexpr int kFormat = 1;

void expect_token(std::istream& in, const std::string& want) {
  std::string tok;
  if (!(in >> tok) || tok != want) throw std::runtime_error("module file: expected '" + want + "', got '" + tok + "'");
}

void write_weight(std::ostream& out, const Field& f, const Weight& w) {
  out << w.size();
  for (Fe x : w) out << ' ' << f.packed(x);
}

Weight read_weight(std::istream& in, const Field& f) {
  std::size_t n = 0;
  if (!(in >> n)) throw std::runtime_error("module file: malformed weight");
  Weight w(n);
  for (auto& x : w) {
    std::uint32_t v = 0;
    if (!(in >> v) || v >= f.order()) throw std::runtime_error("module file: malformed weight");
    x = f.from_packed(v);
  }
  return w;
}

}  // namespace

void write_module(std::ostream& out, const WeightModule& m) {
  const Field& f = m.field();
  out << "periplectic-module " << kFormat << '\n';
  out << "field " << f.p() << ' ' << f.ext() << '\n';
  out << "acting " << m.acting().size();
  for (int a : m.acting()) out << ' ' << a;
  out << '\n';
  const auto nat = m.natural_weights();
  out << "basis " << nat.size() << '\n';
  for (const auto& w : nat) {
    write_weight(out, f, w);
    out << '\n';
  }
  out << "grades " << m.grades().size() << '\n';
  for (int g : m.grades()) out << g << '\n';
  out << "labels " << m.labels().size() << '\n';
  for (const auto& l : m.labels()) out << l << '\n';
  int blocks = 0;
  for (int a : m.acting())
    for (int w = 0; w < m.num_weights(); ++w)
      if (m.block(a, w).target >= 0 && !m.block(a, w).m.is_zero()) ++blocks;
  out << "blocks " << blocks << '\n';
  for (int a : m.acting())
    for (int w = 0; w < m.num_weights(); ++w) {
      const Block& b = m.block(a, w);
      if (b.target < 0 || b.m.is_zero()) continue;
      out << "block " << a << ' ';
      write_weight(out, f, m.weight(w));
      out << '\n';
      write_matrix(out, f, b.m);
    }
  out << "end\n";
}

WeightModule read_module(std::istream& in, std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg) {
  const Field& f = *field;
  expect_token(in, "periplectic-module");
  int format = 0;
  in >> format;
  if (format != kFormat) throw std::runtime_error("module file: unsupported format " + std::to_string(format));
  expect_token(in, "field");
  int p = 0, ext = 0;
  in >> p >> ext;
  if (p != f.p() || ext != f.ext()) throw std::runtime_error("module file: field mismatch");
  expect_token(in, "acting");
  std::size_t n = 0;
  in >> n;
  std::vector<int> acting(n);
  for (auto& a : acting) in >> a;
  expect_token(in, "basis");
  in >> n;
  std::vector<Weight> nat;
  nat.reserve(n);
  for (std::size_t i = 0; i < n; ++i) nat.push_back(read_weight(in, f));
  WeightModule m(field, alg, acting);
  m.set_basis(nat);
  expect_token(in, "grades");
  in >> n;
  std::vector<int> grades(n);
  for (auto& g : grades) in >> g;
  if (n) m.set_grades(std::move(grades));
  expect_token(in, "labels");
  in >> n;
  std::string line;
  std::getline(in, line);
  std::vector<std::string> labels(n);
  for (auto& l : labels) std::getline(in, l);
  if (n) m.set_labels(std::move(labels));
  expect_token(in, "blocks");
  in >> n;
  for (std::size_t i = 0; i < n; ++i) {
    expect_token(in, "block");
    int a = 0;
    in >> a;
    const int w = m.find_weight(read_weight(in, f));
    if (w < 0 || !m.acts(a)) throw std::runtime_error("module file: block outside the module");
    m.set_block(a, w, read_matrix(in, f));
  }
  expect_token(in, "end");
  if (!in) throw std::runtime_error("module file: truncated");
  return m;
}

void write_kac(std::ostream& out, const KacModule& k) {
  out << "periplectic-kac " << kFormat << '\n' << "lambda ";
  write_weight(out, k.rep.field(), k.lambda);
  out << '\n';
  write_module(out, k.base);
  write_module(out, k.rep);
}

KacModule read_kac(std::istream& in, std::shared_ptr<const Field> field, std::shared_ptr<const Algebra> alg) {
  expect_token(in, "periplectic-kac");
  int format = 0;
  in >> format;
  if (format != kFormat) throw std::runtime_error("kac file: unsupported format " + std::to_string(format));
  expect_token(in, "lambda");
  KacModule k;
  k.lambda = read_weight(in, *field);
  k.base = read_module(in, field, alg);
  k.rep = read_module(in, field, alg);
  return k;
}

MatrixCache::MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string MatrixCache::key(const Setting& s, const Weight& lambda) const {
  std::ostringstream os;
  os << "p" << s.field->p() << "-" << chi_kind_name(s.chi.kind);
  for (int v : s.chi.params) os << "_" << v;
  os << "-l";
  for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "_" : "") << s.field->packed(lambda[i]);
  return os.str();
}

std::optional<KacModule> MatrixCache::load(const Setting& s, const Weight& lambda) const {
  const auto path = dir_ / (key(s, lambda) + ".kac");
  std::lock_guard lock(mutex_);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    KacModule k = read_kac(in, s.field, s.alg);
    if (k.lambda != lambda) return std::nullopt;
    return k;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are rebuilt
  }
}

void MatrixCache::store(const Setting& s, const Weight& lambda, const KacModule& k) {
  const std::string name = key(s, lambda);
  std::ostringstream body;
  write_kac(body, k);
  std::lock_guard lock(mutex_);
  const auto tmp = dir_ / (name + ".kac.tmp");
  {
    std::ofstream out(tmp);
    out << body.str();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, dir_ / (name + ".kac"));

  const auto meta_path = dir_ / "meta.json";
  nlohmann::json meta = {{"format", kFormat}, {"entries", nlohmann::json::object()}};
  if (std::ifstream in(meta_path); in) {
    try {
      meta = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception&) {
    }
  }
  std::vector<std::string> lam;
  for (Fe x : lambda) lam.push_back(s.field->to_string(x));
  meta["entries"][name] = {{"p", s.field->p()},
                           {"chi", chi_kind_name(s.chi.kind)},
                           {"params", s.chi.params},
                           {"lambda", lam},
                           {"dim", k.dim()},
                           {"base_dim", k.base.dim()},
                           {"file", name + ".kac"}};
  const auto meta_tmp = dir_ / "meta.json.tmp";
  {
    std::ofstream out(meta_tmp);
    out << meta.dump(2) << '\n';
  }
  std::filesystem::rename(meta_tmp, meta_path);
}

int MatrixCache::size() const {
  std::lock_guard lock(mutex_);
  std::ifstream in(dir_ / "meta.json");
  if (!in) return 0;
  try {
    return static_cast<int>(nlohmann::json::parse(in).at("entries").size());
  } catch (const nlohmann::json::exception&) {
    return 0;
  }
}

std::string default_cache_dir() {
  const char* env = std::getenv("PERI_CACHE_DIR");
  return env ? env : "";
}

KacModule obtain_kac(const Setting& s, const Weight& lambda, MatrixCache* cache) {
  if (cache)
    if (auto k = cache->load(s, lambda)) return std::move(*k);
  KacModule k = build_kac(s, lambda);
  if (cache) cache->store(s, lambda, k);
  return k;
}

}  // namespace peri
