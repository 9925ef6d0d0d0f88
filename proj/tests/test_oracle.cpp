#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cactus/fixtures.hpp"
#include "cactus/io.hpp"
#include "cactus/oracle.hpp"

using namespace cactus;
using oracle::CheckOptions;
using oracle::VerificationReport;

namespace {

Vec vec_of(FieldSpec f, std::vector<long long> entries) {
  Vec v;
  for (long long e : entries) v.push_back(Scalar::from_int(f, e));
  return v;
}

}  // namespace

TEST_CASE("corank-1 ideal lines of the basic algebras") {
  FieldSpec f2 = FieldSpec::prime(2);
  auto jet2_lines = oracle::corank1_ideal_lines(LocalAlgebra::jet(f2, 2));
  REQUIRE(jet2_lines.size() == 1);
  CHECK(jet2_lines[0] == Subspace::line(vec_of(f2, {0, 1})));  // the line (t)

  CHECK(oracle::corank1_ideal_lines(LocalAlgebra::point(f2)).size() == 1);

  auto fat_lines = oracle::corank1_ideal_lines(fixtures::fat2(f2));
  CHECK(fat_lines.size() == 3);
  Subspace socle = fixtures::fat2(f2).socle();
  for (const Subspace& l : fat_lines) CHECK(contains(socle, l));
}

TEST_CASE("corank-1 enumeration preconditions") {
  CHECK_THROWS_AS(oracle::corank1_ideal_lines(LocalAlgebra::jet(FieldSpec::rationals(), 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::corank1_ideal_lines(LocalAlgebra::jet(FieldSpec::prime(7), 2)),
                  std::invalid_argument);
  CheckOptions tight;
  tight.budget = 1;
  CHECK_THROWS_AS(oracle::corank1_ideal_lines(fixtures::fat2(FieldSpec::prime(2)), tight),
                  budget_exceeded);
  CheckOptions small_bound;
  small_bound.dim_bound = 2;
  CHECK_THROWS_AS(oracle::corank1_ideal_lines(fixtures::fat2(FieldSpec::prime(2)), small_bound),
                  std::invalid_argument);
}

TEST_CASE("raw socle membership agrees with the structured socle") {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f = FieldSpec::prime(p);
    for (const LocalAlgebra& a : fixtures::bundled_local_algebras(f)) {
      Subspace socle = a.socle();
      for (std::size_t i = 0; i < socle.dim(); ++i)
        CHECK(oracle::raw_in_socle(a, socle.basis().row(i)));
      if (a.dim() > 1) {
        Vec one = a.one();
        CHECK(oracle::raw_in_socle(a, one) == (a.dim() == 1));
      }
    }
  }
}

TEST_CASE("lemma of one-dimensional ideals on the stated instances") {
  VerificationReport fat = oracle::check_lemma_subschemes(fixtures::fat2(FieldSpec::prime(2)));
  CHECK(fat.pass);
  CHECK(fat.counts.at("ideal_lines") == 3);
  CHECK(fat.counts.at("socle_lines") == 3);

  VerificationReport jet = oracle::check_lemma_subschemes(LocalAlgebra::jet(FieldSpec::prime(3), 4));
  CHECK(jet.pass);
  CHECK(jet.counts.at("ideal_lines") == 1);

  VerificationReport triple = oracle::check_lemma_subschemes(fixtures::fat3(FieldSpec::prime(2)));
  CHECK(triple.pass);
  CHECK(triple.counts.at("ideal_lines") == 7);  // (2^3 - 1)/(2 - 1)
}

TEST_CASE("lemma suite over the bundled algebra zoo") {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f = FieldSpec::prime(p);
    for (const LocalAlgebra& a : fixtures::bundled_local_algebras(f)) {
      VerificationReport rep = oracle::check_lemma_subschemes(a);
      INFO(rep.instance);
      CHECK(rep.pass);
      unsigned long long l = a.socle().dim(), expect = 1, pw = 1;
      for (unsigned long long i = 0; i < l; ++i) pw *= p;
      expect = (pw - 1) / (p - 1);
      CHECK(rep.counts.at("ideal_lines") == expect);
    }
  }
}

TEST_CASE("codegree-one family decomposes componentwise") {
  FieldSpec f2 = FieldSpec::prime(2);
  for (const auto& [name, r] : fixtures::bundled_schemes(f2)) {
    INFO(name);
    VerificationReport rep = oracle::check_codegree_family(r);
    CHECK(rep.pass);
  }
}

TEST_CASE("union check on the fat point covers the seven points") {
  VerificationReport rep = oracle::check_union(fixtures::fat_point_p2(FieldSpec::prime(2)), 1);
  CHECK(rep.pass);
  CHECK(rep.counts.at("lhs_planes") == 7);
  CHECK(rep.counts.at("rhs_all_planes") == 7);
  CHECK(rep.counts.at("rhs_through_q_planes") == 7);
}

TEST_CASE("union check on the triple-socle scheme") {
  EmbeddedFiniteScheme r = fixtures::triple_socle_p3(FieldSpec::prime(2));
  VerificationReport k1 = oracle::check_union(r, 1);
  CHECK(k1.pass);
  CHECK(k1.counts.at("lhs_planes") == 15);  // points of P^3(F_2)
  VerificationReport k2 = oracle::check_union(r, 2);
  CHECK(k2.pass);
  CHECK(k2.counts.at("lhs_planes") == 35);  // [4 choose 2]_2
}

TEST_CASE("union check on semilocal schemes") {
  FieldSpec f2 = FieldSpec::prime(2);
  CHECK(oracle::check_union(fixtures::fat_plus_point_p3(f2), 1).pass);
  CHECK(oracle::check_union(fixtures::mixed_deg6_p3(f2), 1).pass);
}

TEST_CASE("union check preconditions") {
  FieldSpec f2 = FieldSpec::prime(2);
  // Gorenstein scheme: socle dimension 1 is not above k = 1
  CHECK_THROWS_AS(oracle::check_union(fixtures::jet3_conic(f2), 1), std::invalid_argument);
  // socle dimension exactly k is not enough either
  CHECK_THROWS_AS(oracle::check_union(fixtures::fat_point_p2(f2), 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle::check_union(fixtures::fat_point_p2(FieldSpec::rationals()), 1),
                  std::invalid_argument);
}

TEST_CASE("finite cactus sets equal the grassmannian of the span") {
  FieldSpec f2 = FieldSpec::prime(2);
  VerificationReport two = oracle::check_cactus_finite(fixtures::two_points_p2(f2), 1);
  CHECK(two.pass);
  CHECK(two.counts.at("grassmannian_planes") == 3);

  VerificationReport fat3 = oracle::check_cactus_finite(fixtures::fat_point_p2(FieldSpec::prime(3)), 1);
  CHECK(fat3.pass);
  CHECK(fat3.counts.at("grassmannian_planes") == 13);

  // k = dim span: the single full plane
  VerificationReport full = oracle::check_cactus_finite(fixtures::fat_point_p2(f2), 3);
  CHECK(full.pass);
  CHECK(full.counts.at("grassmannian_planes") == 1);
}

TEST_CASE("theorem check runs exhaustively over F_2") {
  FieldSpec f2 = FieldSpec::prime(2);
  VerificationReport fat = oracle::check_reduce(fixtures::fat_point_p2(f2), 1);
  CHECK(fat.pass);
  CHECK(fat.counts.at("planes_checked") == 7);

  VerificationReport triple = oracle::check_reduce(fixtures::triple_socle_p3(f2), 2);
  CHECK(triple.pass);
  CHECK(triple.counts.at("planes_checked") == 35);

  VerificationReport gorenstein = oracle::check_reduce(fixtures::jet3_conic(f2), 1);
  CHECK(gorenstein.pass);
}

TEST_CASE("theorem check samples planes over the rationals") {
  CheckOptions opts;
  opts.samples = 25;
  VerificationReport rep = oracle::check_reduce(fixtures::fat_point_p2(FieldSpec::rationals()), 1, opts);
  CHECK(rep.pass);
  CHECK(rep.counts.at("planes_checked") == 25);
  CHECK(rep.seed == oracle::kDefaultSeed);
}

TEST_CASE("parallel plane checking merges deterministically") {
  FieldSpec f2 = FieldSpec::prime(2);
  CheckOptions serial;
  CheckOptions parallel;
  parallel.jobs = 3;
  VerificationReport a = oracle::check_reduce(fixtures::triple_socle_p3(f2), 1, serial);
  VerificationReport b = oracle::check_reduce(fixtures::triple_socle_p3(f2), 1, parallel);
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("reports are byte-identical across repeated runs") {
  FieldSpec f2 = FieldSpec::prime(2);
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(f2);
  CHECK(oracle::check_union(r, 1).to_json().dump() == oracle::check_union(r, 1).to_json().dump());
  CheckOptions opts;
  opts.samples = 10;
  EmbeddedFiniteScheme rq = fixtures::fat_point_p2(FieldSpec::rationals());
  CHECK(oracle::check_reduce(rq, 1, opts).to_json().dump() ==
        oracle::check_reduce(rq, 1, opts).to_json().dump());
}

TEST_CASE("report serialization carries the stable field names") {
  VerificationReport rep = oracle::check_lemma_subschemes(fixtures::fat2(FieldSpec::prime(2)));
  auto j = rep.to_json();
  CHECK(j.contains("claim"));
  CHECK(j.contains("status"));
  CHECK(j.contains("counts"));
  CHECK(j.contains("counterexample"));
  CHECK(j.contains("seed"));
  CHECK(j.contains("instance"));
  CHECK(j["status"] == "pass");
  CHECK(j["counterexample"].is_null());
}

TEST_CASE("all-subscheme enumeration covers the fat point lattice") {
  FieldSpec f2 = FieldSpec::prime(2);
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(f2);
  auto cuts = oracle::raw_all_subscheme_ideals(r);
  // ideals of k[x,y]/(x^2,xy,y^2) over F_2: 0, three socle lines, the socle,
  // and the whole algebra is excluded only when it would empty the scheme
  CHECK(cuts.size() == 5);
  std::size_t by_dim[4] = {0, 0, 0, 0};
  for (const ProductIdeal& c : cuts) ++by_dim[c.total_dim()];
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 1);
  CHECK(by_dim[3] == 0);
}

TEST_CASE("a failing report carries a self-validating counterexample") {
  // F_2 x F_2 with basis {1, (0,1)} is semisimple, not local: the
  // one-dimensional-ideal lemma genuinely fails on it, which exercises the
  // fail path (the precondition "validated local algebra" is deliberately
  // bypassed)
  FieldSpec f2 = FieldSpec::prime(2);
  std::vector<Scalar> table(8, Scalar(f2));
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, long long v) {
    table[(a * 2 + b) * 2 + c] = Scalar::from_int(f2, v);
  };
  set(0, 0, 0, 1);
  set(0, 1, 1, 1);
  set(1, 0, 1, 1);
  set(1, 1, 1, 1);  // e1 idempotent
  LocalAlgebra a = LocalAlgebra::from_table(f2, 2, table);
  REQUIRE_FALSE(a.validate().ok);

  VerificationReport rep = oracle::check_lemma_subschemes(a);
  CHECK_FALSE(rep.pass);
  CHECK(rep.to_json()["status"] == "fail");
  REQUIRE(rep.counterexample.contains("line"));
  // re-execute the counterexample in isolation: the reported line must lie
  // in exactly one of the two sets
  Subspace line = Subspace::span_of(
      Mat::from_rows(f2, 2, {io::vec_from_json(rep.counterexample["line"][0], f2)}));
  auto raw = oracle::corank1_ideal_lines(a);
  bool in_raw = std::find(raw.begin(), raw.end(), line) != raw.end();
  bool in_socle = contains(a.socle(), line);
  CHECK(in_raw != in_socle);
}
