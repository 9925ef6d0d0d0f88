#include "cactus/semilocal.hpp"

#include <stdexcept>

namespace cactus {

SemilocalAlgebra::SemilocalAlgebra(std::vector<LocalAlgebra> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("semilocal algebra needs a component");
  for (const LocalAlgebra& c : comps_)
    if (!(c.field() == comps_.front().field()))
      throw std::invalid_argument("semilocal algebra: component field mismatch");
}

std::size_t SemilocalAlgebra::total_dim() const {
  std::size_t d = 0;
  for (const LocalAlgebra& c : comps_) d += c.dim();
  return d;
}

std::size_t SemilocalAlgebra::offset(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < i; ++j) d += comps_[j].dim();
  return d;
}

std::size_t SemilocalAlgebra::socdim() const {
  std::size_t m = 0;
  for (const LocalAlgebra& c : comps_) m = std::max(m, c.socle().dim());
  return m;
}

ValidationReport SemilocalAlgebra::validate() const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    ValidationReport r = comps_[i].validate();
    if (!r.ok) {
      r.witness.insert(r.witness.begin(), i);
      r.violation = "component " + std::to_string(i) + ": " + r.violation;
      return r;
    }
  }
  return ValidationReport::pass();
}

ProductIdeal::ProductIdeal(const SemilocalAlgebra& s, std::vector<Subspace> comps)
    : comps_(std::move(comps)) {
  if (comps_.size() != s.component_count())
    throw std::invalid_argument("product ideal: component count mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].ambient_dim() != s.component(i).dim())
      throw std::invalid_argument("product ideal: component dimension mismatch");
}

ProductIdeal ProductIdeal::zero(const SemilocalAlgebra& s) {
  std::vector<Subspace> c;
  for (std::size_t i = 0; i < s.component_count(); ++i)
    c.push_back(Subspace::zero(s.field(), s.component(i).dim()));
  return ProductIdeal(s, std::move(c));
}

std::size_t ProductIdeal::total_dim() const {
  std::size_t d = 0;
  for (const Subspace& u : comps_) d += u.dim();
  return d;
}

bool operator==(const ProductIdeal& a, const ProductIdeal& b) { return a.comps_ == b.comps_; }

ValidationReport validate_ideal(const SemilocalAlgebra& s, const ProductIdeal& i) {
  for (std::size_t c = 0; c < s.component_count(); ++c) {
    const LocalAlgebra& a = s.component(c);
    const Subspace& u = i.component(c);
    for (std::size_t g = 0; g < u.dim(); ++g) {
      Vec v = u.basis().row(g);
      for (std::size_t e = 0; e < a.dim(); ++e)
        if (!u.contains_vector(a.basis_mult_matrix(e).apply(v)))
          return ValidationReport::fail(
              "component " + std::to_string(c) + ": not closed under multiplication", {c, e, g});
    }
  }
  return ValidationReport::pass();
}

ProductIdeal ideal_generated(const SemilocalAlgebra& s, const std::vector<AlgebraElement>& gens) {
  std::vector<Subspace> out;
  for (std::size_t c = 0; c < s.component_count(); ++c) {
    const LocalAlgebra& a = s.component(c);
    std::vector<Vec> rows;
    for (const AlgebraElement& g : gens) {
      if (g.size() != s.component_count())
        throw std::invalid_argument("ideal_generated: element component count mismatch");
      rows.push_back(g[c]);
    }
    Subspace span = Subspace::span_of(s.field(), a.dim(), rows);
    while (true) {
      std::vector<Vec> next;
      for (std::size_t i = 0; i < span.dim(); ++i) {
        Vec v = span.basis().row(i);
        next.push_back(v);
        for (std::size_t e = 0; e < a.dim(); ++e)
          next.push_back(a.basis_mult_matrix(e).apply(v));
      }
      Subspace closed = Subspace::span_of(s.field(), a.dim(), next);
      if (closed.dim() == span.dim()) break;
      span = std::move(closed);
    }
    out.push_back(std::move(span));
  }
  return ProductIdeal(s, std::move(out));
}

ProductIdeal intersect_ideals(const ProductIdeal& a, const ProductIdeal& b) {
  if (a.component_count() != b.component_count())
    throw std::invalid_argument("intersect_ideals: shape mismatch");
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < a.component_count(); ++i) {
    if (a.component(i).ambient_dim() != b.component(i).ambient_dim())
      throw std::invalid_argument("intersect_ideals: shape mismatch");
    out.push_back(intersect(a.component(i), b.component(i)));
  }
  return ProductIdeal(std::move(out));
}

Quotient quotient(const SemilocalAlgebra& s, const ProductIdeal& ideal) {
  std::vector<LocalAlgebra> comps;
  std::vector<std::size_t> surviving;
  std::vector<Mat> projections;
  for (std::size_t c = 0; c < s.component_count(); ++c) {
    const LocalAlgebra& a = s.component(c);
    const Subspace& I = ideal.component(c);
    std::size_t r = a.dim(), d = I.dim();
    if (d == r) continue;  // point deleted
    // complement of the ideal, chosen deterministically
    auto [whole, adjoined] = complete_with_indices(I, r);
    (void)whole;
    std::size_t nr = adjoined.size();
    if (nr != r - d) throw std::logic_error("quotient: complement has wrong dimension");
    if (adjoined[0] != 0)
      throw std::invalid_argument("quotient: ideal is not contained in the maximal ideal");
    // change of basis: columns = ideal basis, then adjoined standard vectors
    Mat b(s.field(), r, r);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < r; ++i) b(i, j) = I.basis()(j, i);
    for (std::size_t j = 0; j < nr; ++j)
      b(adjoined[j], d + j) = Scalar::from_int(s.field(), 1);
    auto binv = invert(b);
    if (!binv) throw std::logic_error("quotient: change of basis is singular");
    // projection = last nr rows of b^{-1}
    Mat proj(s.field(), nr, r);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < r; ++j) proj(i, j) = (*binv)(d + i, j);
    // induced structure constants on the complement classes
    std::vector<Scalar> table(nr * nr * nr, Scalar(s.field()));
    for (std::size_t x = 0; x < nr; ++x)
      for (std::size_t y = 0; y < nr; ++y) {
        Vec ex = zero_vec(s.field(), r);
        ex[adjoined[x]] = Scalar::from_int(s.field(), 1);
        Vec ey = zero_vec(s.field(), r);
        ey[adjoined[y]] = Scalar::from_int(s.field(), 1);
        Vec prod = proj.apply(a.multiply(ex, ey));
        for (std::size_t z = 0; z < nr; ++z) table[(x * nr + y) * nr + z] = prod[z];
      }
    std::vector<std::string> labels;
    for (std::size_t j : adjoined) labels.push_back(a.labels()[j]);
    LocalAlgebra q = LocalAlgebra::from_table(s.field(), nr, std::move(table), std::move(labels));
    ValidationReport check = q.validate();
    if (!check.ok) throw std::logic_error("quotient is not local: " + check.violation);
    comps.push_back(std::move(q));
    surviving.push_back(c);
    projections.push_back(std::move(proj));
  }
  if (comps.empty()) throw domain_failure("quotient is the empty scheme");
  return Quotient{SemilocalAlgebra(std::move(comps)), std::move(surviving),
                  std::move(projections)};
}

}  // namespace cactus
