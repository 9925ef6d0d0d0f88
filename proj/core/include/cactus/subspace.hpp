#pragma once

#include <optional>
#include <vector>

#include "cactus/matrix.hpp"

namespace cactus {

// A linear subspace of k^n, stored as a canonical RREF basis so that equal
// subspaces have identical representations.
class Subspace {
 public:
  static Subspace zero(FieldSpec fs, std::size_t ambient);
  static Subspace full(FieldSpec fs, std::size_t ambient);
  static Subspace span_of(const Mat& rows);  // canonicalizes
  static Subspace span_of(FieldSpec fs, std::size_t ambient, const std::vector<Vec>& rows);
  static Subspace line(const Vec& v);  // v != 0

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }

  // Residual of v after eliminating against the basis; zero iff v is a member.
  Vec reduce(const Vec& v) const;
  bool contains_vector(const Vec& v) const { return is_zero_vec(reduce(v)); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

 private:
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;  // dim x ambient, canonical RREF, no zero rows
};

Subspace kernel(const Mat& m);  // {x : m x = 0} in k^cols
Subspace image(const Mat& m);   // column space, in k^rows

// {x : m x in u}; requires u.ambient_dim == m.rows.
Subspace preimage(const Mat& m, const Subspace& u);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
bool contains(const Subspace& u, const Subspace& w);  // w subset of u

// Annihilator in the dual coordinate space under the standard pairing.
Subspace annihilator(const Subspace& u);

// Extends u to dimension d by adjoining standard basis vectors in
// increasing index order whenever independent.
Subspace complete(const Subspace& u, std::size_t d);
// Same, also reporting which standard basis vectors were adjoined.
std::pair<Subspace, std::vector<std::size_t>> complete_with_indices(const Subspace& u,
                                                                    std::size_t d);

// Number of k-dimensional subspaces of an m-dimensional space over F_p.
unsigned long long gaussian_binomial(std::size_t m, std::size_t k, std::uint32_t p);

// Streams every k-dimensional subspace of u exactly once (prime fields
// only), in a fixed deterministic order; restartable.
class SubspaceStream {
 public:
  SubspaceStream(Subspace u, std::size_t k);

  std::optional<Subspace> next();
  void restart();
  unsigned long long total_count() const;

 private:
  struct Cell {
    std::size_t row, col;
  };

  bool advance_pattern();     // odometer over free cells
  bool advance_combination();  // next pivot-column combination
  void init_cells();
  Subspace current() const;

  Subspace u_;
  std::size_t k_, d_;
  std::uint32_t p_;
  std::vector<std::size_t> pivots_;  // combination of relative pivot columns
  std::vector<Cell> cells_;          // free positions for this combination
  std::vector<std::uint32_t> vals_;  // current free-cell values
  bool done_ = false;
  bool emitted_current_ = false;
};

// Budget-checked materialization of a stream.
std::vector<Subspace> all_subspaces(const Subspace& u, std::size_t k,
                                    unsigned long long budget);

}  // namespace cactus
