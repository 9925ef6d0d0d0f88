#include "cactus/subspace.hpp"

#include <stdexcept>

namespace cactus {

Subspace Subspace::zero(FieldSpec fs, std::size_t ambient) {
  return Subspace(Mat(fs, 0, ambient));
}

Subspace Subspace::full(FieldSpec fs, std::size_t ambient) {
  return Subspace(Mat::identity(fs, ambient));
}

Subspace Subspace::span_of(const Mat& rows) {
  Rref rr = rref(rows);
  Mat basis(rows.field(), rr.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = rr.mat(i, j);
  return Subspace(std::move(basis));
}

Subspace Subspace::span_of(FieldSpec fs, std::size_t ambient, const std::vector<Vec>& rows) {
  return span_of(Mat::from_rows(fs, ambient, rows));
}

Subspace Subspace::line(const Vec& v) {
  if (is_zero_vec(v)) throw std::invalid_argument("line: zero vector");
  return span_of(v[0].field(), v.size(), {v});
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("reduce: length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // pivot column of row i = first nonzero entry (basis is RREF)
    std::size_t c = 0;
    while (c < basis_.cols() && basis_(i, c).is_zero()) ++c;
    if (c == basis_.cols()) continue;
    if (r[c].is_zero()) continue;
    Scalar f = r[c];
    for (std::size_t j = 0; j < basis_.cols(); ++j) r[j] = r[j] - f * basis_(i, j);
  }
  return r;
}

Subspace kernel(const Mat& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[f] = Scalar::from_int(m.field(), 1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.mat(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span_of(m.field(), m.cols(), basis);
}

Subspace image(const Mat& m) { return Subspace::span_of(m.transpose()); }

Subspace preimage(const Mat& m, const Subspace& u) {
  if (u.ambient_dim() != m.rows())
    throw std::invalid_argument("preimage: ambient dimension must equal row count");
  Subspace cond = annihilator(u);  // y in u  iff  cond.basis * y = 0
  if (cond.dim() == 0) return Subspace::full(m.field(), m.cols());
  return kernel(cond.basis() * m);
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  return Subspace::span_of(u.basis().vstack(w.basis()));
}

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  return annihilator(sum(annihilator(u), annihilator(w)));
}

bool contains(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("contains: ambient dimension mismatch");
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!u.contains_vector(w.basis().row(i))) return false;
  return true;
}

std::pair<Subspace, std::vector<std::size_t>> complete_with_indices(const Subspace& u,
                                                                    std::size_t d) {
  if (d < u.dim() || d > u.ambient_dim())
    throw std::invalid_argument("complete: target dimension out of range");
  Mat rows = u.basis();
  std::vector<std::size_t> adjoined;
  for (std::size_t t = 0; t < u.ambient_dim() && rows.rows() < d; ++t) {
    Vec e = zero_vec(u.field(), u.ambient_dim());
    e[t] = Scalar::from_int(u.field(), 1);
    Mat cand = rows.vstack(Mat::from_rows(u.field(), u.ambient_dim(), {e}));
    if (rank(cand) > rows.rows()) {
      rows = std::move(cand);
      adjoined.push_back(t);
    }
  }
  return {Subspace::span_of(rows), std::move(adjoined)};
}

Subspace complete(const Subspace& u, std::size_t d) {
  return complete_with_indices(u, d).first;
}

unsigned long long gaussian_binomial(std::size_t m, std::size_t k, std::uint32_t p) {
  if (k > m) return 0;
  // q-Pascal: [m k] = [m-1 k-1] + q^k [m-1 k]
  std::vector<std::vector<unsigned long long>> g(m + 1,
                                                 std::vector<unsigned long long>(k + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) g[i][0] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= std::min(i, k); ++j) {
      unsigned long long qk = 1;
      for (std::size_t t = 0; t < j; ++t) qk *= p;
      g[i][j] = g[i - 1][j - 1] + qk * g[i - 1][j];
    }
  return g[m][k];
}

SubspaceStream::SubspaceStream(Subspace u, std::size_t k)
    : u_(std::move(u)), k_(k), d_(u_.dim()) {
  if (!u_.field().is_prime_field())
    throw std::invalid_argument("subspace enumeration requires a prime field");
  if (k_ > d_) throw std::invalid_argument("subspace enumeration: k exceeds dim");
  p_ = u_.field().p;
  restart();
}

void SubspaceStream::restart() {
  done_ = false;
  emitted_current_ = false;
  pivots_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
  init_cells();
}

void SubspaceStream::init_cells() {
  cells_.clear();
  std::vector<bool> is_pivot(d_, false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = pivots_[i] + 1; j < d_; ++j)
      if (!is_pivot[j]) cells_.push_back({i, j});
  vals_.assign(cells_.size(), 0);
}

bool SubspaceStream::advance_pattern() {
  // base-p odometer, last cell least significant
  for (std::size_t t = cells_.size(); t-- > 0;) {
    if (++vals_[t] < p_) return true;
    vals_[t] = 0;
  }
  return false;
}

bool SubspaceStream::advance_combination() {
  // next k-combination of {0..d-1} in lexicographic order
  if (k_ == 0) return false;
  std::size_t i = k_;
  while (i-- > 0) {
    if (pivots_[i] != i + d_ - k_) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      init_cells();
      return true;
    }
  }
  return false;
}

Subspace SubspaceStream::current() const {
  Mat rel(u_.field(), k_, d_);
  for (std::size_t i = 0; i < k_; ++i)
    rel(i, pivots_[i]) = Scalar::from_int(u_.field(), 1);
  for (std::size_t t = 0; t < cells_.size(); ++t)
    rel(cells_[t].row, cells_[t].col) = Scalar::from_int(u_.field(), vals_[t]);
  return Subspace::span_of(rel * u_.basis());
}

std::optional<Subspace> SubspaceStream::next() {
  if (done_) return std::nullopt;
  if (emitted_current_) {
    if (!advance_pattern() && !advance_combination()) {
      done_ = true;
      return std::nullopt;
    }
  }
  emitted_current_ = true;
  return current();
}

unsigned long long SubspaceStream::total_count() const {
  return gaussian_binomial(d_, k_, p_);
}

std::vector<Subspace> all_subspaces(const Subspace& u, std::size_t k,
                                    unsigned long long budget) {
  SubspaceStream s(u, k);
  if (s.total_count() > budget)
    throw budget_exceeded("subspace enumeration of " + std::to_string(s.total_count()) +
                          " objects exceeds budget " + std::to_string(budget));
  std::vector<Subspace> out;
  while (auto v = s.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace cactus
