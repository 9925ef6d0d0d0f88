#include "cactus/sample.hpp"

#include <random>
#include <stdexcept>

namespace cactus::sample {

namespace {

// mt19937_64 with explicit modulo keeps draws identical across platforms.
long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scalar draw_scalar(std::mt19937_64& rng, FieldSpec fs) {
  if (fs.is_prime_field()) return Scalar::from_int(fs, draw_int(rng, 0, fs.p - 1));
  return Scalar::from_int(fs, draw_int(rng, -9, 9));
}

struct CatalogEntry {
  const char* name;
  std::size_t dim;
  std::size_t vars;  // variables that must appear among the dual images
  LocalAlgebra (*build)(FieldSpec);
};

LocalAlgebra build_point(FieldSpec f) { return LocalAlgebra::point(f); }
LocalAlgebra build_jet2(FieldSpec f) { return LocalAlgebra::jet(f, 2); }
LocalAlgebra build_jet3(FieldSpec f) { return LocalAlgebra::jet(f, 3); }
LocalAlgebra build_jet4(FieldSpec f) { return LocalAlgebra::jet(f, 4); }
LocalAlgebra build_fat2(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(f, 2, {{2, 0}, {1, 1}, {0, 2}});
}
LocalAlgebra build_square(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(f, 2, {{2, 0}, {0, 2}});
}
LocalAlgebra build_fat3(FieldSpec f) {
  return LocalAlgebra::monomial_quotient(
      f, 3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
}

constexpr CatalogEntry kCatalog[] = {
    {"point", 1, 0, build_point}, {"jet2", 2, 1, build_jet2},
    {"jet3", 3, 1, build_jet3},   {"fat2", 3, 2, build_fat2},
    {"jet4", 4, 1, build_jet4},   {"square", 4, 2, build_square},
    {"fat3", 4, 3, build_fat3},
};

// indices of the variable basis vectors of a catalog algebra: for the
// monomial constructors these are the degree-one basis monomials 1..vars
std::vector<std::size_t> variable_indices(const CatalogEntry& entry) {
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < entry.vars; ++v) idx.push_back(1 + v);
  return idx;
}

Vec draw_support(std::mt19937_64& rng, FieldSpec fs, std::size_t ambient) {
  while (true) {
    Vec c;
    for (std::size_t j = 0; j < ambient; ++j) c.push_back(draw_scalar(rng, fs));
    std::size_t lead = 0;
    while (lead < ambient && c[lead].is_zero()) ++lead;
    if (lead == ambient) continue;
    Scalar inv = c[lead].inverse();
    for (Scalar& x : c) x = inv * x;
    return c;
  }
}

}  // namespace

EmbeddedFiniteScheme random_scheme(FieldSpec fs, std::size_t degree, std::size_t ambient,
                                   std::uint64_t seed) {
  if (degree == 0) throw std::invalid_argument("sample: degree must be >= 1");
  if (ambient < 2) throw std::invalid_argument("sample: ambient dimension must be >= 2");
  std::mt19937_64 rng(seed);

  // partition the degree over catalog entries whose variables fit
  std::vector<const CatalogEntry*> picks;
  std::size_t remaining = degree;
  while (remaining > 0) {
    std::vector<const CatalogEntry*> feasible;
    for (const CatalogEntry& e : kCatalog)
      if (e.dim <= remaining && e.vars + 1 <= ambient) feasible.push_back(&e);
    const CatalogEntry* pick = feasible[rng() % feasible.size()];
    picks.push_back(pick);
    remaining -= pick->dim;
  }

  // pairwise distinct supports
  std::vector<Vec> supports;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    int attempts = 0;
    while (true) {
      if (++attempts > 1000)
        throw std::invalid_argument("sample: could not place distinct supports");
      Vec c = draw_support(rng, fs, ambient);
      bool fresh = true;
      for (const Vec& s : supports) fresh &= !(s == c);
      if (fresh) {
        supports.push_back(std::move(c));
        break;
      }
    }
  }

  std::vector<LocalAlgebra> algebras;
  std::vector<Mat> evs;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    LocalAlgebra a = picks[i]->build(fs);
    const Vec& c = supports[i];
    Mat m(fs, ambient, a.dim());
    for (std::size_t j = 0; j < ambient; ++j) {
      Vec row = zero_vec(fs, a.dim());
      row[0] = c[j];
      m.set_row(j, row);
    }
    // attach each variable to a distinct dual coordinate, avoiding the
    // first unit row so that the images provably generate
    std::size_t j0 = 0;
    while (c[j0].is_zero()) ++j0;
    std::vector<std::size_t> available;
    for (std::size_t j = 0; j < ambient; ++j)
      if (j != j0) available.push_back(j);
    std::vector<std::size_t> vars = variable_indices(*picks[i]);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      std::size_t at = rng() % available.size();
      std::size_t j = available[at];
      available.erase(available.begin() + at);
      m(j, vars[v]) = m(j, vars[v]) + Scalar::from_int(fs, 1);
    }
    algebras.push_back(std::move(a));
    evs.push_back(std::move(m));
  }
  EmbeddedFiniteScheme scheme(ambient, SemilocalAlgebra(std::move(algebras)), std::move(evs));
  ValidationReport ok = validate_scheme(scheme);
  if (!ok.ok) throw std::logic_error("sample: generated scheme fails validation: " + ok.violation);
  return scheme;
}

Subspace random_plane_in(const Subspace& within, std::size_t k, std::uint64_t seed) {
  if (k > within.dim())
    throw std::invalid_argument("random_plane_in: k exceeds the subspace dimension");
  std::mt19937_64 rng(seed);
  if (k == 0) return Subspace::zero(within.field(), within.ambient_dim());
  while (true) {
    Mat coords(within.field(), k, within.dim());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < within.dim(); ++j)
        coords(i, j) = draw_scalar(rng, within.field());
    Subspace e = Subspace::span_of(coords * within.basis());
    if (e.dim() == k) return e;
  }
}

}  // namespace cactus::sample
