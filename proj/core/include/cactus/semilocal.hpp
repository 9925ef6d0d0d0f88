#pragma once

#include "cactus/local_algebra.hpp"

namespace cactus {

// An element of a product algebra: one coordinate vector per component.
using AlgebraElement = std::vector<Vec>;

// Coordinate ring of a finite scheme: a disjoint union of local algebras.
class SemilocalAlgebra {
 public:
  explicit SemilocalAlgebra(std::vector<LocalAlgebra> components);

  FieldSpec field() const { return comps_.front().field(); }
  std::size_t component_count() const { return comps_.size(); }
  const LocalAlgebra& component(std::size_t i) const { return comps_[i]; }
  const std::vector<LocalAlgebra>& components() const { return comps_; }

  std::size_t total_dim() const;
  std::size_t offset(std::size_t i) const;  // start of component i in product coords
  std::size_t socdim() const;               // max over components of dim socle

  ValidationReport validate() const;

 private:
  std::vector<LocalAlgebra> comps_;
};

// One ideal subspace per component; cuts out a closed subscheme.
class ProductIdeal {
 public:
  ProductIdeal(const SemilocalAlgebra& s, std::vector<Subspace> comps);
  static ProductIdeal zero(const SemilocalAlgebra& s);

  std::size_t component_count() const { return comps_.size(); }
  const Subspace& component(std::size_t i) const { return comps_[i]; }
  std::size_t total_dim() const;

  friend bool operator==(const ProductIdeal&, const ProductIdeal&);
  friend bool operator<(const ProductIdeal& a, const ProductIdeal& b) { return a.comps_ < b.comps_; }
  friend ProductIdeal intersect_ideals(const ProductIdeal& a, const ProductIdeal& b);

 private:
  explicit ProductIdeal(std::vector<Subspace> comps) : comps_(std::move(comps)) {}
  std::vector<Subspace> comps_;
};

// Checks that every component subspace is closed under multiplication by
// the component's basis elements.
ValidationReport validate_ideal(const SemilocalAlgebra& s, const ProductIdeal& i);

// Smallest ideal containing the generators: closes the span under
// multiplication by all basis elements until stable.
ProductIdeal ideal_generated(const SemilocalAlgebra& s, const std::vector<AlgebraElement>& gens);

ProductIdeal intersect_ideals(const ProductIdeal& a, const ProductIdeal& b);

struct Quotient {
  SemilocalAlgebra algebra;
  std::vector<std::size_t> surviving;  // original component index per new component
  std::vector<Mat> projection;         // per new component: new_dim x old_dim
};

// Componentwise quotient by a validated ideal; components with I_i = A_i
// are dropped.  Throws domain_failure if nothing survives.
Quotient quotient(const SemilocalAlgebra& s, const ProductIdeal& i);

}  // namespace cactus
