#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cactus/field.hpp"

namespace cactus {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec fs, std::size_t n);
bool is_zero_vec(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);

// Dense row-major matrix over a single field.
class Mat {
 public:
  Mat(FieldSpec fs, std::size_t rows, std::size_t cols)
      : fs_(fs), rows_(rows), cols_(cols), e_(rows * cols, Scalar(fs)) {}

  static Mat identity(FieldSpec fs, std::size_t n);
  static Mat from_rows(FieldSpec fs, std::size_t cols, const std::vector<Vec>& rows);

  FieldSpec field() const { return fs_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& x) const;  // matrix-vector product
  Mat vstack(const Mat& below) const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b);  // canonical sort order

 private:
  FieldSpec fs_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct Rref {
  Mat mat;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form: pivots are 1 with zeros above and below,
// pivot columns strictly increasing.  Unique for a given row space.
Rref rref(const Mat& m);

std::size_t rank(const Mat& m);

// One solution of m x = b (free coordinates set to 0), or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Inverse of a square matrix, or nullopt if singular.
std::optional<Mat> invert(const Mat& m);

}  // namespace cactus
