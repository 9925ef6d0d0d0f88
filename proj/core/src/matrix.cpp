#include "cactus/matrix.hpp"

#include <stdexcept>

namespace cactus {

Vec zero_vec(FieldSpec fs, std::size_t n) { return Vec(n, Scalar(fs)); }

bool is_zero_vec(const Vec& v) {
  for (const Scalar& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  if (a.empty()) throw std::invalid_argument("dot: empty vectors");
  Scalar s(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (Scalar& x : r) x = c * x;
  return r;
}

Mat Mat::identity(FieldSpec fs, std::size_t n) {
  Mat m(fs, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::from_int(fs, 1);
  return m;
}

Mat Mat::from_rows(FieldSpec fs, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(fs, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Vec Mat::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Mat Mat::transpose() const {
  Mat t(fs_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Mat r(fs_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
    }
  return r;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vec r = zero_vec(fs_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * x[j];
  return r;
}

Mat Mat::vstack(const Mat& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
  Mat r(fs_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = below(i, j);
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  if (!(a.fs_ == b.fs_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (!(a.e_[i] == b.e_[i])) return false;
  return true;
}

bool operator<(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    int c = Scalar::compare(a.e_[i], b.e_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Rref rref(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = inv * a(r, j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: length mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref rr = rref(aug);
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // inconsistent row
    x[rr.pivots[i]] = rr.mat(i, m.cols());
  }
  return x;
}

std::optional<Mat> invert(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: not square");
  std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::from_int(m.field(), 1);
  }
  Rref rr = rref(aug);
  if (rr.pivots.size() != n || rr.pivots.back() != n - 1) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.mat(i, n + j);
  return inv;
}

}  // namespace cactus
