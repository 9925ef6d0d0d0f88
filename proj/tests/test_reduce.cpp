#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cactus/fixtures.hpp"
#include "cactus/io.hpp"
#include "cactus/oracle.hpp"
#include "cactus/reduce.hpp"

using namespace cactus;

namespace {

Vec vec_of(FieldSpec f, std::vector<long long> entries) {
  Vec v;
  for (long long e : entries) v.push_back(Scalar::from_int(f, e));
  return v;
}

Subspace span_rows(FieldSpec f, std::size_t ambient, std::vector<std::vector<long long>> rows) {
  std::vector<Vec> vs;
  for (auto& r : rows) vs.push_back(vec_of(f, r));
  return Subspace::span_of(f, ambient, vs);
}

EmbeddedFiniteScheme jet3_p1(FieldSpec f) {
  // X0 -> 1, X1 -> t: the socle element t^2 is invisible to the embedding
  Mat ev(f, 2, 3);
  ev(0, 0) = Scalar::from_int(f, 1);
  ev(1, 1) = Scalar::from_int(f, 1);
  return EmbeddedFiniteScheme(2, SemilocalAlgebra({LocalAlgebra::jet(f, 3)}), {ev});
}

}  // namespace

TEST_CASE("can_shrink solves the fat-point hyperplane system") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(q);
  Subspace e = span_rows(q, 3, {{0, 1, 1}});
  auto cand = can_shrink(r, e, 0);
  REQUIRE(cand.has_value());
  CHECK(cand->tag == ShrinkCase::solved_hyperplane);
  CHECK(cand->socle_element == vec_of(q, {0, 1, -1}));  // x - y
  // independent recomputation of the cut subscheme's span
  EmbeddedFiniteScheme sub = codim1_subscheme(r, 0, cand->socle_element);
  CHECK(span(sub) == span_rows(q, 3, {{1, 0, 0}, {0, 1, 1}}));
  CHECK(contains(span(sub), e));
}

TEST_CASE("can_shrink with the zero plane always finds an element") {
  FieldSpec q = FieldSpec::rationals();
  for (const auto& [name, r] : fixtures::bundled_schemes(q)) {
    INFO(name);
    if (degree(r) == 1) continue;
    Subspace zero = Subspace::zero(q, r.ambient_dim());
    bool some = false;
    for (std::size_t c = 0; c < r.component_count(); ++c) some |= can_shrink(r, zero, c).has_value();
    CHECK(some);
  }
}

TEST_CASE("can_shrink on a reduced point deletes it iff the rest spans e") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::two_points_p2(q);
  // e = support of the second point: deleting the first keeps e
  auto del_first = can_shrink(r, span_rows(q, 3, {{0, 1, 0}}), 0);
  REQUIRE(del_first.has_value());
  CHECK(del_first->socle_element == vec_of(q, {1}));
  // e = support of the first point: the first component cannot shrink
  CHECK_FALSE(can_shrink(r, span_rows(q, 3, {{1, 0, 0}}), 0).has_value());
}

TEST_CASE("can_shrink uses the span-preserving case when the socle is invisible") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = jet3_p1(q);
  REQUIRE(validate_scheme(r).ok);
  CHECK(span(r) == Subspace::full(q, 2));
  Subspace e = span_rows(q, 2, {{1, 0}});
  auto cand = can_shrink(r, e, 0);
  REQUIRE(cand.has_value());
  CHECK(cand->tag == ShrinkCase::span_preserving);
  CHECK(cand->socle_element == vec_of(q, {0, 0, 1}));  // t^2
  EmbeddedFiniteScheme sub = codim1_subscheme(r, 0, cand->socle_element);
  CHECK(span(sub) == span(r));
  CHECK(degree(sub) == 2);
}

TEST_CASE("can_shrink errors when the plane leaves the span") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::two_points_p2(q);
  CHECK_THROWS_AS(can_shrink(r, span_rows(q, 3, {{0, 0, 1}}), 0), domain_failure);
}

TEST_CASE("can_shrink never empties the scheme") {
  FieldSpec q = FieldSpec::rationals();
  Mat ev(q, 3, 1);
  ev(0, 0) = Scalar::from_int(q, 1);
  EmbeddedFiniteScheme point(3, SemilocalAlgebra({LocalAlgebra::point(q)}), {ev});
  CHECK_FALSE(can_shrink(point, Subspace::zero(q, 3), 0).has_value());
}

TEST_CASE("shrink_once on the fat point") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(q);
  Subspace e = span_rows(q, 3, {{0, 1, 1}});
  ShrinkOutcome out = shrink_once(r, e);
  CHECK(degree(out.scheme) == 2);
  CHECK(out.step.component == 0);
  CHECK(out.step.degree_before == 3);
  CHECK(out.step.degree_after == 2);
  CHECK(span(out.scheme) == span_rows(q, 3, {{1, 0, 0}, {0, 1, 1}}));
  CHECK(contains(span(out.scheme), e));
}

TEST_CASE("shrink_once rejects schemes of small socle dimension") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::jet3_conic(q);  // Gorenstein
  Subspace e = span_rows(q, 3, {{0, 1, 0}});
  CHECK_THROWS_AS(shrink_once(r, e), domain_failure);
}

TEST_CASE("reduce on a Gorenstein scheme is the identity") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::jet3_conic(q);
  Subspace e = span_rows(q, 3, {{0, 1, 0}});
  ReduceResult res = reduce_to_socdim(r, e);
  CHECK(res.trace.steps.empty());
  CHECK(res.trace.initial_digest == res.trace.final_digest);
  CHECK(io::digest(res.scheme) == io::digest(r));
  CHECK(res.cut.total_dim() == 0);
}

TEST_CASE("reduce of the fat point is a single curvilinear step") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(q);
  Subspace e = span_rows(q, 3, {{0, 1, 1}});
  ReduceResult res = reduce_to_socdim(r, e);
  REQUIRE(res.trace.steps.size() == 1);
  CHECK(degree(res.scheme) == 2);
  CHECK(res.scheme.algebra().socdim() == 1);
  CHECK(contains(span(res.scheme), e));
  // the cut is the solved socle line and carves the same subscheme
  CHECK(res.cut.total_dim() == 1);
  CHECK(res.cut.component(0) == Subspace::line(vec_of(q, {0, 1, -1})));
  CHECK(io::digest(subscheme(r, res.cut)) == io::digest(res.scheme));
}

TEST_CASE("reduce of the triple-socle scheme takes two steps") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::triple_socle_p3(q);
  Subspace e = span_rows(q, 4, {{0, 1, 1, 1}});
  ReduceResult res = reduce_to_socdim(r, e);
  CHECK(res.trace.steps.size() == 2);
  CHECK(degree(res.scheme) == 2);
  CHECK(res.scheme.algebra().socdim() == 1);
  CHECK(contains(span(res.scheme), e));
  for (const ShrinkStep& s : res.trace.steps)
    CHECK(s.degree_after + 1 == s.degree_before);
  // composed cut: a validated ideal carving a scheme with the same data
  CHECK(validate_ideal(r.algebra(), res.cut).ok);
  EmbeddedFiniteScheme again = subscheme(r, res.cut);
  CHECK(degree(again) == degree(res.scheme));
  CHECK(span(again) == span(res.scheme));
  CHECK(again.algebra().socdim() == res.scheme.algebra().socdim());
}

TEST_CASE("reduce keeps 2-planes of the triple-socle scheme") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::triple_socle_p3(q);
  Subspace e = span_rows(q, 4, {{0, 1, 0, 2}, {1, 0, 1, 0}});
  ReduceResult res = reduce_to_socdim(r, e);
  CHECK(res.scheme.algebra().socdim() <= 2);
  CHECK(contains(span(res.scheme), e));
  CHECK(res.trace.steps.size() <= degree(r) - 1);
}

TEST_CASE("reduce across components of a semilocal scheme") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::mixed_deg6_p3(q);
  Subspace e = span_rows(q, 4, {{1, 1, 1, 1}});
  ReduceResult res = reduce_to_socdim(r, e);
  CHECK(res.scheme.algebra().socdim() <= 1);
  CHECK(contains(span(res.scheme), e));
  CHECK(validate_ideal(r.algebra(), res.cut).ok);
  CHECK(degree(res.scheme) == degree(r) - res.cut.total_dim());
}

TEST_CASE("reduce errors when the plane leaves the span") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::two_points_p2(q);
  CHECK_THROWS_AS(reduce_to_socdim(r, span_rows(q, 3, {{0, 0, 1}})), domain_failure);
}

TEST_CASE("traces are deterministic") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::triple_socle_p3(q);
  Subspace e = span_rows(q, 4, {{0, 1, 1, 1}});
  ReduceResult a = reduce_to_socdim(r, e);
  ReduceResult b = reduce_to_socdim(r, e);
  CHECK(io::trace_to_json(a.trace).dump() == io::trace_to_json(b.trace).dump());
  ReduceResult c = prune_minimal(r, e);
  ReduceResult d = prune_minimal(r, e);
  CHECK(io::trace_to_json(c.trace).dump() == io::trace_to_json(d.trace).dump());
}

TEST_CASE("prune reaches a single supporting point") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::three_points_p2(q);
  Subspace e = span_rows(q, 3, {{1, 0, 0}});
  ReduceResult res = prune_minimal(r, e);
  CHECK(degree(res.scheme) == 1);
  CHECK(support_points(res.scheme)[0] == e);
  CHECK(contains(span(res.scheme), e));
}

TEST_CASE("prune cannot move below a full-span plane") {
  FieldSpec q = FieldSpec::rationals();
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(q);
  ReduceResult res = prune_minimal(r, Subspace::full(q, 3));
  CHECK(res.trace.steps.empty());
  CHECK(io::digest(res.scheme) == io::digest(r));
}

TEST_CASE("prune output admits no further shrink over F_2") {
  FieldSpec f2 = FieldSpec::prime(2);
  for (const auto& [name, r] : fixtures::bundled_schemes(f2)) {
    INFO(name);
    Subspace sp = span(r);
    for (std::size_t k = 1; k <= std::min<std::size_t>(2, sp.dim()); ++k) {
      SubspaceStream planes(sp, k);
      while (auto e = planes.next()) {
        ReduceResult res = prune_minimal(r, *e);
        CHECK(contains(span(res.scheme), *e));
        CHECK(res.scheme.algebra().socdim() <= k);
        // raw cross-check: no corank-1 ideal of the output keeps e
        for (const auto& [comp, line] : oracle::raw_codegree_one_ideals(res.scheme)) {
          if (degree(res.scheme) == 1) break;
          std::vector<Subspace> comps;
          for (std::size_t i = 0; i < res.scheme.component_count(); ++i)
            comps.push_back(i == comp ? line
                                      : Subspace::zero(f2, res.scheme.algebra()
                                                               .component(i)
                                                               .dim()));
          EmbeddedFiniteScheme smaller =
              subscheme(res.scheme, ProductIdeal(res.scheme.algebra(), std::move(comps)));
          CHECK_FALSE(contains(span(smaller), *e));
        }
      }
    }
  }
}

TEST_CASE("the codegree-one spans are exactly the hyperplanes through the core") {
  // literal form of the hyperplane argument, checked exhaustively over F_2:
  // spans of the socle-line subschemes of the fat point = hyperplanes of
  // span(R) containing span(Q), where Q removes the socle
  FieldSpec f2 = FieldSpec::prime(2);
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(f2);
  ProductIdeal socle_ideal(r.algebra(), {r.algebra().component(0).socle()});
  Subspace qspan = span(subscheme(r, socle_ideal));
  std::set<Subspace> family_spans;
  SubspaceStream lines(r.algebra().component(0).socle(), 1);
  while (auto l = lines.next()) family_spans.insert(span(codim1_subscheme(r, 0, l->basis().row(0))));
  std::set<Subspace> hyperplanes;
  Subspace sp = span(r);
  SubspaceStream hp(sp, sp.dim() - 1);
  while (auto h = hp.next())
    if (contains(*h, qspan)) hyperplanes.insert(*h);
  CHECK(family_spans == hyperplanes);
  CHECK(family_spans.size() == 3);
}
