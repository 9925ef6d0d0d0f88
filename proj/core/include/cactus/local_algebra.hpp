#pragma once

#include <string>
#include <vector>

#include "cactus/subspace.hpp"

namespace cactus {

struct ValidationReport {
  bool ok = true;
  std::string violation;              // empty when ok
  std::vector<std::size_t> witness;   // offending basis / component indices

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string what, std::vector<std::size_t> w = {}) {
    return {false, std::move(what), std::move(w)};
  }
};

// A finite local commutative unital algebra, given by structure constants
// on a basis with basis[0] = 1 and span{basis[1..]} the maximal ideal.
class LocalAlgebra {
 public:
  static LocalAlgebra from_table(FieldSpec fs, std::size_t dim, std::vector<Scalar> table,
                                 std::vector<std::string> labels = {});
  static LocalAlgebra jet(FieldSpec fs, std::size_t length);  // k[t]/(t^length)
  static LocalAlgebra point(FieldSpec fs);                    // the ground field
  // k[x_1..x_vars] / (monomial ideal generated by `leads`), finite staircase.
  static LocalAlgebra monomial_quotient(FieldSpec fs, std::size_t vars,
                                        const std::vector<std::vector<unsigned>>& leads);

  FieldSpec field() const { return fs_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Scalar>& table() const { return table_; }

  // structure constant c[a][b][c] of e_a * e_b = sum_c c[a][b][c] e_c
  const Scalar& structure(std::size_t a, std::size_t b, std::size_t c) const {
    return table_[(a * dim_ + b) * dim_ + c];
  }

  Vec one() const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Mat mult_matrix(const Vec& v) const;          // x -> v * x
  Mat basis_mult_matrix(std::size_t a) const;   // x -> e_a * x
  Vec power(const Vec& v, unsigned e) const;

  // An element is a unit iff its residue (coefficient of e_0) is nonzero.
  bool is_unit(const Vec& v) const;
  Vec unit_inverse(const Vec& v) const;

  // Checks unit, commutativity, associativity, closure of the maximal
  // ideal, and its nilpotency; reports the first violation found.
  ValidationReport validate() const;

  // Ann(m) = {v : v * e_j = 0 for all j >= 1}; canonical basis.
  Subspace socle() const;

 private:
  LocalAlgebra(FieldSpec fs, std::size_t dim, std::vector<Scalar> table,
               std::vector<std::string> labels)
      : fs_(fs), dim_(dim), table_(std::move(table)), labels_(std::move(labels)) {}

  FieldSpec fs_;
  std::size_t dim_;
  std::vector<Scalar> table_;  // flattened (a * dim + b) * dim + c
  std::vector<std::string> labels_;
};

}  // namespace cactus
