#include "periplectic/field.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace peri {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Tables are indexed by 32-bit values; GF(7^7) is the largest field we need.
constexpr std::uint64_t kMaxOrder = 1u << 24;

std::vector<int> unpack(std::uint32_t packed, int p, int ext) {
  std::vector<int> c(ext);
  for (int i = 0; i < ext; ++i) {
    c[i] = static_cast<int>(packed % p);
    packed /= p;
  }
  return c;
}

std::uint32_t pack(const std::vector<int>& c, int p) {
  std::uint32_t v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + static_cast<std::uint32_t>(*it);
  return v;
}

// Product modulo t^ext - t - 1 (or plain product mod p when ext == 1).
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, int p) {
  const int e = static_cast<int>(a.size());
  std::vector<long long> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e; ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
  }
  for (auto& x : prod) x %= p;
  if (e > 1) {
    // t^k = t^(k-e) * (t + 1) for k >= e
    for (int k = 2 * e - 2; k >= e; --k) {
      const long long c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      prod[k - e + 1] = (prod[k - e + 1] + c) % p;
      prod[k - e] = (prod[k - e] + c) % p;
    }
  }
  std::vector<int> r(e);
  for (int i = 0; i < e; ++i) r[i] = static_cast<int>(prod[i] % p);
  return r;
}

}  // namespace

void FieldParams::validate() const {
  if (!is_prime(p) || p <= 3) throw FieldError("characteristic must be a prime > 3, got " + std::to_string(p));
  if (ext != 1 && ext != p)
    throw FieldError("extension degree must be 1 or p, got " + std::to_string(ext));
  std::uint64_t q = 1;
  for (int i = 0; i < ext; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxOrder)
      throw FieldError("GF(" + std::to_string(p) + "^" + std::to_string(ext) +
                       ") exceeds the table-based arithmetic limit");
  }
}

std::shared_ptr<const Field> Field::get(int p, int ext) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, ext}];
  if (!slot) slot = std::make_shared<const Field>(FieldParams{p, ext});
  return slot;
}

Field::Field(FieldParams params) : params_(params) {
  params_.validate();
  const int p = params_.p;
  const int e = params_.ext;
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= static_cast<std::uint32_t>(p);
  qm1_ = q_ - 1;
  half_ = qm1_ / 2;

  exp_packed_.assign(qm1_, 0);
  log_packed_.assign(q_, 0);
  std::vector<int> one(e, 0);
  one[0] = 1;

  // Search for a primitive element; candidates start at t (or 2 in GF(p)).
  bool found = false;
  for (std::uint32_t cand = (e == 1 ? 2u : static_cast<std::uint32_t>(p)); cand < q_ && !found; ++cand) {
    const auto g = unpack(cand, p, e);
    auto cur = one;
    std::uint32_t k = 0;
    for (; k < qm1_; ++k) {
      exp_packed_[k] = pack(cur, p);
      cur = poly_mulmod(cur, g, p);
      if (cur == one) break;
    }
    found = (k == qm1_ - 1);
  }
  if (!found) throw FieldError("no primitive element found");
  for (std::uint32_t k = 0; k < qm1_; ++k) log_packed_[exp_packed_[k]] = k;

  zech_.assign(qm1_, -1);
  for (std::uint32_t d = 0; d < qm1_; ++d) {
    const std::uint32_t x = exp_packed_[d];
    const std::uint32_t c0 = x % p;
    const std::uint32_t y = x - c0 + (c0 + 1) % p;
    zech_[d] = y == 0 ? -1 : static_cast<std::int32_t>(log_packed_[y]);
  }

  lane_bits_ = e == 1 ? 64 : 64 / e;
  lanes_.assign(q_, 0);
  for (std::uint32_t v = 1; v < q_; ++v) {
    const auto c = unpack(exp_packed_[v - 1], p, e);
    std::uint64_t l = 0;
    for (int i = 0; i < e; ++i) l |= static_cast<std::uint64_t>(c[i]) << (i * lane_bits_);
    lanes_[v] = l;
  }
  if (e == 1) {
    lane_capacity_ = 1u << 30;
  } else {
    const std::uint64_t lane_max = (1ull << lane_bits_) - 1;
    lane_capacity_ = static_cast<std::uint32_t>(lane_max / static_cast<std::uint64_t>(p - 1));
  }
}

Fe Field::from_packed(std::uint32_t packed) const {
  if (packed >= q_) throw FieldError("packed value out of range");
  if (packed == 0) return Fe{0};
  return Fe{log_packed_[packed] + 1};
}

Fe Field::from_int(long long n) const {
  long long r = n % params_.p;
  if (r < 0) r += params_.p;
  return from_packed(static_cast<std::uint32_t>(r));
}

Fe Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > params_.ext) throw FieldError("too many coefficients");
  std::vector<int> c(params_.ext, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = ((coeffs[i] % params_.p) + params_.p) % params_.p;
  return from_packed(pack(c, params_.p));
}

std::vector<int> Field::coeffs(Fe a) const { return unpack(packed(a), params_.p, params_.ext); }

Fe Field::theta() const {
  if (params_.ext == 1) throw FieldError("prime field has no Artin-Schreier generator");
  return from_packed(static_cast<std::uint32_t>(params_.p));
}

int Field::to_int(Fe a) const {
  if (!in_prime_field(a)) throw FieldError("element " + to_string(a) + " is not in the prime field");
  return static_cast<int>(packed(a));
}

std::string Field::to_string(Fe a) const {
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (int i = params_.ext - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i];
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

Fe Field::parse(const std::string& text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty field element");
  auto bad = [&] { return std::invalid_argument("malformed field element '" + text + "'"); };
  Fe acc = zero();
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw bad();
    }
    long long c = 1;
    bool has_c = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        c = (c * 10 + (s[i] - '0')) % params_.p;
        ++i;
      }
      has_c = true;
    }
    int e = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_c) throw bad();
      ++i;
      if (i >= s.size() || s[i] != 't') throw bad();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
        e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
      }
    } else if (!has_c) {
      throw bad();
    }
    if (e > 0 && params_.ext == 1) throw std::invalid_argument("'" + text + "' needs the extension field");
    Fe term = from_int(negative ? -c : c);
    if (e > 0) term = mul(term, pow(theta(), static_cast<std::uint64_t>(e)));
    acc = add(acc, term);
  }
  return acc;
}

std::optional<Fe> Field::try_inv(Fe a) const {
  if (a.v == 0) return std::nullopt;
  const std::uint32_t k = a.v - 1;
  return Fe{(k == 0 ? 0 : qm1_ - k) + 1};
}

Fe Field::inv(Fe a) const {
  auto r = try_inv(a);
  if (!r) throw FieldError("inversion of zero");
  return *r;
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return a;
  const std::uint64_t k = (static_cast<std::uint64_t>(a.v - 1) * (e % qm1_)) % qm1_;
  return Fe{static_cast<std::uint32_t>(k) + 1};
}

Fe Field::from_lanes(std::uint64_t acc) const {
  const int p = params_.p;
  if (params_.ext == 1) return from_packed(static_cast<std::uint32_t>(acc % static_cast<std::uint64_t>(p)));
  const std::uint64_t mask = (1ull << lane_bits_) - 1;
  std::uint32_t packed = 0;
  std::uint32_t scale = 1;
  for (int i = 0; i < params_.ext; ++i) {
    const auto c = static_cast<std::uint32_t>(((acc >> (i * lane_bits_)) & mask) % static_cast<std::uint64_t>(p));
    packed += c * scale;
    scale *= static_cast<std::uint32_t>(p);
  }
  return from_packed(packed);
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fe{1};
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Fe x) { return x.v == 0; });
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  const std::uint32_t cap = f.lane_capacity();
  std::vector<std::uint64_t> acc(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint32_t used = 0;
    const Fe* ar = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe s = ar[k];
      if (s.v == 0) continue;
      if (used == cap) {
        for (auto& x : acc) x = f.lanes(f.from_lanes(x));
        used = 1;
      }
      ++used;
      const Fe* br = b.row(k);
      for (std::size_t j = 0; j < n; ++j) acc[j] += f.lanes(f.mul(s, br[j]));
    }
    Fe* cr = c.row(i);
    for (std::size_t j = 0; j < n; ++j) cr[j] = f.from_lanes(acc[j]);
  }
  return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) c.data()[i] = f.add(a.data()[i], b.data()[i]);
  return c;
}

Matrix sub(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sub: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) c.data()[i] = f.sub(a.data()[i], b.data()[i]);
  return c;
}

Matrix scale(const Field& f, Fe s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) c.data()[i] = f.mul(s, a.data()[i]);
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix power(const Field& f, const Matrix& a, std::uint64_t e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("power: matrix must be square");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = multiply(f, result, base);
    e >>= 1;
    if (e) base = multiply(f, base, base);
  }
  return result;
}

Vec apply(const Field& f, const Matrix& a, std::span<const Fe> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("apply: shape mismatch");
  Vec y(a.rows());
  const std::uint32_t cap = f.lane_capacity();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    std::uint32_t used = 0;
    const Fe* ar = a.row(i);
    for (std::size_t k = 0; k < x.size(); ++k) {
      const Fe prod = f.mul(ar[k], x[k]);
      if (prod.v == 0) continue;
      if (used == cap) {
        acc = f.lanes(f.from_lanes(acc));
        used = 1;
      }
      acc += f.lanes(prod);
      ++used;
    }
    y[i] = f.from_lanes(acc);
  }
  return y;
}

void axpy(const Field& f, std::span<Fe> y, Fe c, std::span<const Fe> x) {
  if (c.v == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i].v != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

RrefResult rref(const Field& f, Matrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).v == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Fe s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Fe factor = m(i, c);
      if (factor.v == 0) continue;
      const Fe nf = f.neg(factor);
      Fe* ri = m.row(i);
      const Fe* rr = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (rr[j].v != 0) ri[j] = f.add(ri[j], f.mul(nf, rr[j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank; }

Matrix kernel_rows(const Field& f, const Matrix& m) {
  const auto rr = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Matrix k(m.cols() - rr.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = f.one();
    for (std::size_t i = 0; i < rr.rank; ++i) k(out, rr.pivots[i]) = f.neg(rr.reduced(i, free));
    ++out;
  }
  return k;
}

Matrix nullspace(const Field& f, const Matrix& m) { return transpose(kernel_rows(f, m)); }

std::optional<Matrix> solve(const Field& f, const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong row count");
  Matrix aug(m.rows(), m.cols() + b.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, m.cols() + j) = b(i, j);
  }
  const auto rr = rref(f, std::move(aug));
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    const std::size_t c = rr.pivots[i];
    if (c >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = rr.reduced(i, m.cols() + j);
  }
  return x;
}

std::vector<Fe> charpoly(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix must be square");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t target = col + 1;
    std::size_t i = target;
    while (i < n && h(i, col).v == 0) ++i;
    if (i == n) continue;
    if (i != target) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(target, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, target));
    }
    const Fe t = f.inv(h(target, col));
    for (std::size_t r = target + 1; r < n; ++r) {
      const Fe u = f.mul(h(r, col), t);
      if (u.v == 0) continue;
      const Fe nu = f.neg(u);
      for (std::size_t j = 0; j < n; ++j) h(r, j) = f.add(h(r, j), f.mul(nu, h(target, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, target) = f.add(h(j, target), f.mul(u, h(j, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}
  std::vector<std::vector<Fe>> polys(n + 1);
  polys[0] = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t kk = k - 1;
    auto& pk = polys[k];
    pk.assign(k + 1, f.zero());
    const auto& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] = f.add(pk[d + 1], prev[d]);
      pk[d] = f.sub(pk[d], f.mul(h(kk, kk), prev[d]));
    }
    Fe t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(kk - i + 1, kk - i));
      const Fe c = f.mul(t, h(kk - i, kk));
      if (c.v == 0) continue;
      const auto& q = polys[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) pk[d] = f.sub(pk[d], f.mul(c, q[d]));
    }
  }
  return polys[n];
}

Fe eval_poly(const Field& f, std::span<const Fe> coeffs, Fe x) {
  Fe acc = f.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

bool EchelonBasis::reduce(const Field& f, Vec& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Fe c = v[pivots_[k]];
    if (c.v == 0) continue;
    const Fe nc = f.neg(c);
    const Vec& r = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j].v != 0) v[j] = f.add(v[j], f.mul(nc, r[j]));
  }
  return std::all_of(v.begin(), v.end(), [](Fe x) { return x.v == 0; });
}

bool EchelonBasis::insert(const Field& f, Vec v) {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis::insert: dimension mismatch");
  if (reduce(f, v)) return false;
  std::size_t piv = 0;
  while (v[piv].v == 0) ++piv;
  const Fe s = f.inv(v[piv]);
  for (auto& x : v) x = f.mul(x, s);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

Matrix EchelonBasis::to_rref(const Field& f) const {
  Matrix m(rows_.size(), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i) std::copy(rows_[i].begin(), rows_[i].end(), m.row(i));
  auto rr = rref(f, std::move(m));
  Matrix out(rr.rank, dim_);
  for (std::size_t i = 0; i < rr.rank; ++i) std::copy(rr.reduced.row(i), rr.reduced.row(i) + dim_, out.row(i));
  return out;
}

// ---------------------------------------------------------------------------

void write_matrix(std::ostream& out, const Field& f, const Matrix& m) {
  out << f.p() << ' ' << f.ext() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (const Fe x : m.data()) {
    const auto c = f.coeffs(x);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

FieldParams peek_matrix_params(std::istream& in) {
  const auto pos = in.tellg();
  FieldParams fp;
  if (!(in >> fp.p >> fp.ext)) throw FieldError("matrix file: malformed header");
  in.seekg(pos);
  return fp;
}

Matrix read_matrix(std::istream& in, const Field& f) {
  int p = 0, ext = 0;
  std::size_t rows = 0, cols = 0;
  if (!(in >> p >> ext >> rows >> cols)) throw FieldError("matrix file: malformed header");
  if (p != f.p() || ext != f.ext()) throw FieldError("matrix file: field mismatch");
  Matrix m(rows, cols);
  std::vector<int> c(ext);
  for (auto& x : m.data()) {
    for (auto& ci : c)
      if (!(in >> ci)) throw FieldError("matrix file: truncated");
    x = f.from_coeffs(c);
  }
  return m;
}

}  // namespace peri
