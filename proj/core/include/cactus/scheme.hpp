#pragma once

#include "cactus/semilocal.hpp"

namespace cactus {

// A finite scheme embedded in P(V): a semilocal coordinate ring plus, per
// component, the evaluation of the dual coordinates X_0..X_n in that
// component (row j of ev(i) = the element ev_i(X_j) in component i's basis).
class EmbeddedFiniteScheme {
 public:
  EmbeddedFiniteScheme(std::size_t ambient_dim, SemilocalAlgebra algebra, std::vector<Mat> ev);

  std::size_t ambient_dim() const { return ambient_; }
  FieldSpec field() const { return alg_.field(); }
  const SemilocalAlgebra& algebra() const { return alg_; }
  const Mat& ev(std::size_t i) const { return ev_[i]; }
  std::size_t component_count() const { return alg_.component_count(); }

 private:
  std::size_t ambient_;
  SemilocalAlgebra alg_;
  std::vector<Mat> ev_;
};

// The stacked evaluation map V* -> prod A_i as a (total_dim x ambient) matrix.
Mat stacked_ev(const EmbeddedFiniteScheme& r);

// Checks: residue of some linear form is a unit in each component, support
// points are pairwise distinct, and the dehomogenized dual images generate
// each component algebra (closed embedding).
ValidationReport validate_scheme(const EmbeddedFiniteScheme& r);

std::size_t degree(const EmbeddedFiniteScheme& r);

// Linear span <R> as a subspace of V.
Subspace span(const EmbeddedFiniteScheme& r);

// Support points as canonical lines in V, one per component.
std::vector<Subspace> support_points(const EmbeddedFiniteScheme& r);

struct SubschemeResult {
  EmbeddedFiniteScheme scheme;
  Quotient quot;
};

// Closed subscheme cut out by a validated product ideal.
EmbeddedFiniteScheme subscheme(const EmbeddedFiniteScheme& r, const ProductIdeal& i);
SubschemeResult subscheme_with_quotient(const EmbeddedFiniteScheme& r, const ProductIdeal& i);

// The degree-(r-1) subscheme cut by the line through a nonzero socle
// element of one component; invariant under scaling of s.
EmbeddedFiniteScheme codim1_subscheme(const EmbeddedFiniteScheme& r, std::size_t comp,
                                      const Vec& s);

// Scheme-theoretic union of the subschemes cut by i1 and i2.
EmbeddedFiniteScheme union_of(const EmbeddedFiniteScheme& r, const ProductIdeal& i1,
                              const ProductIdeal& i2);

// Re-embedding by all monomials of degree d in the dual coordinates,
// ordered graded-lexicographically with X_0 > ... > X_n.
EmbeddedFiniteScheme veronese(const EmbeddedFiniteScheme& r, unsigned d);

// Degree-d monomial exponents in `vars` variables, in the veronese order.
std::vector<std::vector<unsigned>> degree_monomials(std::size_t vars, unsigned d);

}  // namespace cactus
