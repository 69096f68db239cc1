#include "dx/superlinalg.hpp"

#include <utility>

namespace dx {

SuperSpace::SuperSpace(std::vector<Parity> parities) : parities_(std::move(parities)) {
  for (Parity p : parities_)
    if (p > 1) throw std::invalid_argument("SuperSpace: parity must be 0 or 1");
}

SuperSpace tensor(const SuperSpace& a, const SuperSpace& b) {
  std::vector<Parity> ps;
  ps.reserve(a.dim() * b.dim());
  for (Parity pa : a.parities())
    for (Parity pb : b.parities()) ps.push_back(static_cast<Parity>(pa ^ pb));
  return SuperSpace(std::move(ps));
}

SuperSpace tensor_power(const SuperSpace& m, int k) {
  SuperSpace r = SuperSpace::unit();
  for (int i = 0; i < k; ++i) r = tensor(r, m);
  return r;
}

std::vector<std::size_t> parity_indices(const SuperSpace& s, Parity p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.parity(i) == p) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

SuperMap::SuperMap(SuperSpace domain, SuperSpace codomain, Parity parity)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), parity_(parity), columns_(domain_.dim()) {
  if (parity > 1) throw std::invalid_argument("SuperMap: parity must be 0 or 1");
}

SuperMap SuperMap::identity(const SuperSpace& space) { return scalar(space, RatFunc(1)); }

SuperMap SuperMap::scalar(const SuperSpace& space, const RatFunc& value) {
  SuperMap m(space, space);
  if (!value.is_zero())
    for (std::size_t i = 0; i < space.dim(); ++i) m.columns_[i].emplace(i, value);
  return m;
}

SuperMap SuperMap::diagonal(const SuperSpace& space, const std::vector<RatFunc>& entries) {
  if (entries.size() != space.dim()) throw ShapeMismatch("diagonal: wrong number of entries");
  SuperMap m(space, space);
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (!entries[i].is_zero()) m.columns_[i].emplace(i, entries[i]);
  return m;
}

void SuperMap::check_entry(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols()) throw ShapeMismatch("SuperMap: index out of range");
  if ((codomain_.parity(r) ^ domain_.parity(c)) != parity_)
    throw ParityViolation("SuperMap: nonzero entry (" + std::to_string(r) + ", " + std::to_string(c) +
                          ") breaks homogeneity of parity " + std::to_string(parity_));
}

RatFunc SuperMap::get(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols()) throw ShapeMismatch("SuperMap: index out of range");
  auto it = columns_[c].find(r);
  return it == columns_[c].end() ? RatFunc() : it->second;
}

void SuperMap::set(std::size_t r, std::size_t c, const RatFunc& value) {
  if (value.is_zero()) {
    if (r >= rows() || c >= cols()) throw ShapeMismatch("SuperMap: index out of range");
    columns_[c].erase(r);
    return;
  }
  check_entry(r, c);
  columns_[c][r] = value;
}

void SuperMap::add_to(std::size_t r, std::size_t c, const RatFunc& value) {
  if (value.is_zero()) return;
  check_entry(r, c);
  auto [it, inserted] = columns_[c].emplace(r, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) columns_[c].erase(it);
  }
}

std::size_t SuperMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

bool SuperMap::is_zero() const {
  for (const auto& col : columns_)
    if (!col.empty()) return false;
  return true;
}

SuperMap& SuperMap::operator+=(const SuperMap& o) {
  if (domain_ != o.domain_ || codomain_ != o.codomain_) throw ShapeMismatch("SuperMap +: shape mismatch");
  if (parity_ != o.parity_ && !o.is_zero()) {
    if (is_zero()) {
      parity_ = o.parity_;
    } else {
      throw ParityViolation("SuperMap +: mixing parities");
    }
  }
  for (std::size_t c = 0; c < o.columns_.size(); ++c)
    for (const auto& [r, v] : o.columns_[c]) add_to(r, c, v);
  return *this;
}

SuperMap& SuperMap::operator-=(const SuperMap& o) { return *this += -o; }

SuperMap& SuperMap::operator*=(const RatFunc& s) {
  if (s.is_zero()) {
    for (auto& col : columns_) col.clear();
    return *this;
  }
  for (auto& col : columns_)
    for (auto& [r, v] : col) v *= s;
  return *this;
}

SuperMap SuperMap::operator-() const {
  SuperMap m = *this;
  for (auto& col : m.columns_)
    for (auto& [r, v] : col) v = -v;
  return m;
}

bool operator==(const SuperMap& a, const SuperMap& b) {
  if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.parity_ == b.parity_ && a.columns_ == b.columns_;
}

std::vector<std::vector<Rational>> SuperMap::at_one() const {
  std::vector<std::vector<Rational>> out(rows(), std::vector<Rational>(cols(), Rational(0)));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) out[r][c] = v.at_one();
  return out;
}

SuperMap SuperMap::block(const std::vector<std::size_t>& row_indices,
                         const std::vector<std::size_t>& col_indices) const {
  std::vector<Parity> rp, cp;
  for (auto r : row_indices) rp.push_back(codomain_.parity(r));
  for (auto c : col_indices) cp.push_back(domain_.parity(c));
  SuperMap out(SuperSpace(cp), SuperSpace(rp), parity_);
  for (std::size_t j = 0; j < col_indices.size(); ++j)
    for (std::size_t i = 0; i < row_indices.size(); ++i) {
      RatFunc v = get(row_indices[i], col_indices[j]);
      if (!v.is_zero()) out.set(i, j, v);
    }
  return out;
}

// ---------------------------------------------------------------------------

SuperMap compose(const SuperMap& f, const SuperMap& g) {
  if (g.codomain() != f.domain()) throw ShapeMismatch("compose: codomain(g) != domain(f)");
  SuperMap out(g.domain(), f.codomain(), static_cast<Parity>(f.parity() ^ g.parity()));
  for (std::size_t c = 0; c < g.cols(); ++c) {
    for (const auto& [k, gv] : g.column(c))
      for (const auto& [r, fv] : f.column(k)) out.add_to(r, c, fv * gv);
  }
  return out;
}

Vector apply(const SuperMap& f, const Vector& v) {
  if (v.size() != f.cols()) throw ShapeMismatch("apply: vector length mismatch");
  Vector out(f.rows());
  for (std::size_t c = 0; c < f.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, fv] : f.column(c)) out[r] += fv * v[c];
  }
  return out;
}

SuperMap supercommutator(const SuperMap& a, const SuperMap& b) { return qbracket(a, b, RatFunc(1)); }

SuperMap qbracket(const SuperMap& a, const SuperMap& b, const RatFunc& s) {
  const bool both_odd = a.parity() == 1 && b.parity() == 1;
  SuperMap ab = a * b;
  SuperMap ba = b * a;
  ba *= both_odd ? -s : s;
  return ab - ba;
}

SuperMap tensor_map(const SuperMap& f, const SuperMap& g) {
  const SuperSpace dom = tensor(f.domain(), g.domain());
  const SuperSpace cod = tensor(f.codomain(), g.codomain());
  SuperMap out(dom, cod, static_cast<Parity>(f.parity() ^ g.parity()));
  const std::size_t gd = g.cols();
  const std::size_t gc = g.rows();
  for (std::size_t a = 0; a < f.cols(); ++a) {
    const bool flip = g.parity() == 1 && f.domain().parity(a) == 1;
    for (std::size_t b = 0; b < gd; ++b) {
      for (const auto& [r, fv] : f.column(a))
        for (const auto& [s, gv] : g.column(b)) {
          RatFunc v = fv * gv;
          out.add_to(r * gc + s, a * gd + b, flip ? -v : v);
        }
    }
  }
  return out;
}

SuperMap volte(const SuperSpace& m, const SuperSpace& n) {
  SuperMap out(tensor(m, n), tensor(n, m));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      const bool odd = m.parity(i) == 1 && n.parity(j) == 1;
      out.set(j * m.dim() + i, i * n.dim() + j, RatFunc(odd ? -1 : 1));
    }
  return out;
}

SuperMap embed_at(const SuperMap& f, int left, int right, const SuperSpace& factor) {
  if (left < 0 || right < 0) throw ShapeMismatch("embed_at: negative padding");
  SuperMap out = f;
  if (left > 0) out = tensor_map(SuperMap::identity(tensor_power(factor, left)), out);
  if (right > 0) out = tensor_map(out, SuperMap::identity(tensor_power(factor, right)));
  return out;
}

namespace {

using Dense = std::vector<std::vector<RatFunc>>;

Dense to_dense(const SuperMap& f) {
  Dense d(f.rows(), std::vector<RatFunc>(f.cols()));
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (const auto& [r, v] : f.column(c)) d[r][c] = v;
  return d;
}

}  // namespace

std::size_t rank_over_fractions(const SuperMap& f) {
  Dense m = to_dense(f);
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const RatFunc inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const RatFunc factor = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m[rank][k].is_zero()) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

SuperMap inverse(const SuperMap& f) {
  if (f.rows() != f.cols()) throw std::domain_error("inverse: map is not square");
  const std::size_t n = f.rows();
  Dense m = to_dense(f);
  Dense inv(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == n) throw std::domain_error("inverse: singular map");
    std::swap(m[pivot], m[c]);
    std::swap(inv[pivot], inv[c]);
    const RatFunc p = m[c][c].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      if (!m[c][k].is_zero()) m[c][k] *= p;
      if (!inv[c][k].is_zero()) inv[c][k] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const RatFunc factor = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        if (!m[c][k].is_zero()) m[r][k] -= factor * m[c][k];
        if (!inv[c][k].is_zero()) inv[r][k] -= factor * inv[c][k];
      }
    }
  }
  SuperMap out(f.codomain(), f.domain(), f.parity());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!inv[r][c].is_zero()) out.set(r, c, inv[r][c]);
  return out;
}

}  // namespace dx
