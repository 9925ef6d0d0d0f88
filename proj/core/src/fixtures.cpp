#include "cactus/fixtures.hpp"

namespace cactus::fixtures {

namespace {

// Evaluation matrix from explicit rows (one per dual coordinate X_j).
Mat ev_rows(FieldSpec f, std::size_t dim, std::vector<std::vector<long long>> rows) {
  Mat m(f, rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Scalar::from_int(f, rows[i][j]);
  return m;
}

}  // namespace

LocalAlgebra fat2(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(f, 2, {{2, 0}, {1, 1}, {0, 2}});
}

LocalAlgebra square(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(f, 2, {{2, 0}, {0, 2}});
}

LocalAlgebra fat3(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(
      f, 3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
}

LocalAlgebra curly(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(f, 2, {{3, 0}, {1, 1}, {0, 2}});
}

LocalAlgebra long6(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(f, 2, {{3, 0}, {0, 2}});
}

std::vector<LocalAlgebra> bundled_local_algebras(FieldSpec f) {
  std::vector<LocalAlgebra> out;
  out.push_back(LocalAlgebra::point(f));
  out.push_back(LocalAlgebra::jet(f, 2));
  out.push_back(LocalAlgebra::jet(f, 3));
  out.push_back(LocalAlgebra::jet(f, 4));
  out.push_back(fat2(f));
  out.push_back(square(f));
  out.push_back(fat3(f));
  out.push_back(curly(f));
  out.push_back(long6(f));
  return out;
}

EmbeddedFiniteScheme fat_point_p2(FieldSpec f) {
  // X0 -> 1, X1 -> x, X2 -> y
  std::vector<Mat> ev{ev_rows(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  return EmbeddedFiniteScheme(3, SemilocalAlgebra({fat2(f)}), std::move(ev));
}

EmbeddedFiniteScheme jet3_conic(FieldSpec f) {
  // X0 -> 1, X1 -> t, X2 -> t^2
  std::vector<Mat> ev{ev_rows(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  return EmbeddedFiniteScheme(3, SemilocalAlgebra({LocalAlgebra::jet(f, 3)}), std::move(ev));
}

EmbeddedFiniteScheme two_points_p2(FieldSpec f) {
  std::vector<Mat> ev{ev_rows(f, 1, {{1}, {0}, {0}}), ev_rows(f, 1, {{0}, {1}, {0}})};
  return EmbeddedFiniteScheme(
      3, SemilocalAlgebra({LocalAlgebra::point(f), LocalAlgebra::point(f)}), std::move(ev));
}

EmbeddedFiniteScheme three_points_p2(FieldSpec f) {
  std::vector<Mat> ev{ev_rows(f, 1, {{1}, {0}, {0}}), ev_rows(f, 1, {{0}, {1}, {0}}),
                      ev_rows(f, 1, {{0}, {0}, {1}})};
  return EmbeddedFiniteScheme(
      3,
      SemilocalAlgebra({LocalAlgebra::point(f), LocalAlgebra::point(f), LocalAlgebra::point(f)}),
      std::move(ev));
}

EmbeddedFiniteScheme triple_socle_p3(FieldSpec f) {
  // X0 -> 1, X1 -> x, X2 -> y, X3 -> z
  std::vector<Mat> ev{
      ev_rows(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})};
  return EmbeddedFiniteScheme(4, SemilocalAlgebra({fat3(f)}), std::move(ev));
}

EmbeddedFiniteScheme fat_plus_point_p3(FieldSpec f) {
  std::vector<Mat> ev{ev_rows(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                      ev_rows(f, 1, {{0}, {0}, {0}, {1}})};
  return EmbeddedFiniteScheme(4, SemilocalAlgebra({fat2(f), LocalAlgebra::point(f)}),
                              std::move(ev));
}

EmbeddedFiniteScheme mixed_deg6_p3(FieldSpec f) {
  std::vector<Mat> ev{ev_rows(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                      ev_rows(f, 2, {{0, 0}, {1, 0}, {0, 1}, {0, 0}}),
                      ev_rows(f, 1, {{0}, {0}, {0}, {1}})};
  return EmbeddedFiniteScheme(
      4, SemilocalAlgebra({fat2(f), LocalAlgebra::jet(f, 2), LocalAlgebra::point(f)}),
      std::move(ev));
}

EmbeddedFiniteScheme jet4_twisted_cubic(FieldSpec f) {
  std::vector<Mat> ev{
      ev_rows(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})};
  return EmbeddedFiniteScheme(4, SemilocalAlgebra({LocalAlgebra::jet(f, 4)}), std::move(ev));
}

std::vector<std::pair<std::string, EmbeddedFiniteScheme>> bundled_schemes(FieldSpec f) {
  std::vector<std::pair<std::string, EmbeddedFiniteScheme>> out;
  out.emplace_back("fat-point-p2", fat_point_p2(f));
  out.emplace_back("jet3-conic", jet3_conic(f));
  out.emplace_back("two-points-p2", two_points_p2(f));
  out.emplace_back("three-points-p2", three_points_p2(f));
  out.emplace_back("triple-socle-p3", triple_socle_p3(f));
  out.emplace_back("fat-plus-point-p3", fat_plus_point_p3(f));
  out.emplace_back("mixed-deg6-p3", mixed_deg6_p3(f));
  out.emplace_back("jet4-twisted-cubic", jet4_twisted_cubic(f));
  return out;
}

}  // namespace cactus::fixtures
