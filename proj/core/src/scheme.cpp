#include "cactus/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactus {

EmbeddedFiniteScheme::EmbeddedFiniteScheme(std::size_t ambient_dim, SemilocalAlgebra algebra,
                                           std::vector<Mat> ev)
    : ambient_(ambient_dim), alg_(std::move(algebra)), ev_(std::move(ev)) {
  if (ambient_ == 0) throw std::invalid_argument("ambient dimension must be >= 1");
  if (ev_.size() != alg_.component_count())
    throw std::invalid_argument("scheme: one evaluation matrix per component required");
  for (std::size_t i = 0; i < ev_.size(); ++i) {
    if (ev_[i].rows() != ambient_ || ev_[i].cols() != alg_.component(i).dim())
      throw std::invalid_argument("scheme: evaluation matrix shape mismatch at component " +
                                  std::to_string(i));
    if (!(ev_[i].field() == alg_.field()))
      throw std::invalid_argument("scheme: evaluation field mismatch");
  }
}

Mat stacked_ev(const EmbeddedFiniteScheme& r) {
  Mat m(r.field(), 0, r.ambient_dim());
  for (std::size_t i = 0; i < r.component_count(); ++i) m = m.vstack(r.ev(i).transpose());
  return m;
}

std::size_t degree(const EmbeddedFiniteScheme& r) { return r.algebra().total_dim(); }

namespace {

// Support of component i: the residues of the dual coordinates, i.e. the
// first column of ev(i), read as a vector in V.
Vec support_vector(const EmbeddedFiniteScheme& r, std::size_t i) { return r.ev(i).col(0); }

}  // namespace

std::vector<Subspace> support_points(const EmbeddedFiniteScheme& r) {
  std::vector<Subspace> pts;
  for (std::size_t i = 0; i < r.component_count(); ++i) {
    Vec c = support_vector(r, i);
    if (is_zero_vec(c)) throw domain_failure("component " + std::to_string(i) + " has no support");
    pts.push_back(Subspace::line(c));
  }
  return pts;
}

ValidationReport validate_scheme(const EmbeddedFiniteScheme& r) {
  ValidationReport alg = r.algebra().validate();
  if (!alg.ok) return alg;
  // residues: some linear form must be a unit on each component
  for (std::size_t i = 0; i < r.component_count(); ++i)
    if (is_zero_vec(support_vector(r, i)))
      return ValidationReport::fail(
          "component " + std::to_string(i) + ": no linear form evaluates to a unit", {i});
  // supports pairwise distinct
  std::vector<Subspace> pts = support_points(r);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        return ValidationReport::fail("support points of components " + std::to_string(i) +
                                          " and " + std::to_string(j) + " collide",
                                      {i, j});
  // closed embedding: dehomogenized dual images generate each component
  for (std::size_t i = 0; i < r.component_count(); ++i) {
    const LocalAlgebra& a = r.algebra().component(i);
    std::size_t j0 = 0;
    while (r.ev(i)(j0, 0).is_zero()) ++j0;  // exists by the residue check
    Vec u_inv = a.unit_inverse(r.ev(i).row(j0));
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < r.ambient_dim(); ++j)
      gens.push_back(a.multiply(r.ev(i).row(j), u_inv));
    Subspace sub = Subspace::span_of(a.field(), a.dim(), gens);
    while (sub.dim() < a.dim()) {
      std::vector<Vec> next;
      for (std::size_t x = 0; x < sub.dim(); ++x) {
        next.push_back(sub.basis().row(x));
        for (std::size_t y = 0; y < sub.dim(); ++y)
          next.push_back(a.multiply(sub.basis().row(x), sub.basis().row(y)));
      }
      Subspace closed = Subspace::span_of(a.field(), a.dim(), next);
      if (closed.dim() == sub.dim()) break;
      sub = std::move(closed);
    }
    if (sub.dim() != a.dim())
      return ValidationReport::fail(
          "component " + std::to_string(i) + ": dual images do not generate the algebra", {i});
  }
  return ValidationReport::pass();
}

Subspace span(const EmbeddedFiniteScheme& r) { return annihilator(kernel(stacked_ev(r))); }

SubschemeResult subscheme_with_quotient(const EmbeddedFiniteScheme& r, const ProductIdeal& i) {
  ValidationReport ok = validate_ideal(r.algebra(), i);
  if (!ok.ok) throw std::invalid_argument("subscheme: not an ideal: " + ok.violation);
  Quotient q = quotient(r.algebra(), i);
  std::vector<Mat> ev;
  for (std::size_t n = 0; n < q.surviving.size(); ++n)
    ev.push_back(r.ev(q.surviving[n]) * q.projection[n].transpose());
  EmbeddedFiniteScheme sub(r.ambient_dim(), q.algebra, std::move(ev));
  return SubschemeResult{std::move(sub), std::move(q)};
}

EmbeddedFiniteScheme subscheme(const EmbeddedFiniteScheme& r, const ProductIdeal& i) {
  return subscheme_with_quotient(r, i).scheme;
}

EmbeddedFiniteScheme codim1_subscheme(const EmbeddedFiniteScheme& r, std::size_t comp,
                                      const Vec& s) {
  if (comp >= r.component_count()) throw std::invalid_argument("codim1: no such component");
  if (is_zero_vec(s)) throw std::invalid_argument("codim1: socle element is zero");
  const LocalAlgebra& a = r.algebra().component(comp);
  if (!a.socle().contains_vector(s))
    throw std::invalid_argument("codim1: element is not in the socle");
  std::vector<Subspace> comps;
  for (std::size_t i = 0; i < r.component_count(); ++i)
    comps.push_back(i == comp ? Subspace::line(s)
                              : Subspace::zero(r.field(), r.algebra().component(i).dim()));
  return subscheme(r, ProductIdeal(r.algebra(), std::move(comps)));
}

EmbeddedFiniteScheme union_of(const EmbeddedFiniteScheme& r, const ProductIdeal& i1,
                              const ProductIdeal& i2) {
  return subscheme(r, intersect_ideals(i1, i2));
}

std::vector<std::vector<unsigned>> degree_monomials(std::size_t vars, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(vars, 0);
  // descending lexicographic: X_0 exponent from d down, then recurse
  auto rec = [&](auto&& self, std::size_t v, unsigned rest) -> void {
    if (v + 1 == vars) {
      cur[v] = rest;
      out.push_back(cur);
      return;
    }
    for (unsigned e = rest + 1; e-- > 0;) {
      cur[v] = e;
      self(self, v + 1, rest - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

EmbeddedFiniteScheme veronese(const EmbeddedFiniteScheme& r, unsigned d) {
  if (d == 0) throw std::invalid_argument("veronese: degree must be >= 1");
  auto monomials = degree_monomials(r.ambient_dim(), d);
  std::vector<Mat> ev;
  for (std::size_t i = 0; i < r.component_count(); ++i) {
    const LocalAlgebra& a = r.algebra().component(i);
    Mat m(r.field(), monomials.size(), a.dim());
    for (std::size_t row = 0; row < monomials.size(); ++row) {
      Vec val = a.one();
      for (std::size_t j = 0; j < r.ambient_dim(); ++j)
        for (unsigned t = 0; t < monomials[row][j]; ++t) val = a.multiply(val, r.ev(i).row(j));
      m.set_row(row, val);
    }
    ev.push_back(std::move(m));
  }
  return EmbeddedFiniteScheme(monomials.size(), r.algebra(), std::move(ev));
}

}  // namespace cactus
