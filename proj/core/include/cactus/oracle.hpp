#pragma once

#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "cactus/reduce.hpp"

namespace cactus::oracle {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr unsigned long long kDefaultBudget = 1'000'000;

struct CheckOptions {
  unsigned long long budget = kDefaultBudget;  // enumerated objects per check
  unsigned jobs = 1;                           // data-parallel plane checks
  std::uint64_t seed = kDefaultSeed;           // rational-field sampling
  std::size_t samples = 100;                   // rational-field plane count
  std::size_t dim_bound = 6;                   // brute-force algebra dimension cap
};

struct VerificationReport {
  std::string claim;
  std::string instance;
  bool pass = true;
  nlohmann::json counterexample;  // null when passing
  std::map<std::string, unsigned long long> counts;
  std::uint64_t seed = kDefaultSeed;
  double elapsed_ms = 0.0;  // excluded from the serialization to keep reports reproducible

  nlohmann::json to_json() const;
};

// All 1-dimensional ideals of a local algebra over F_p, found by filtering
// every line of the underlying vector space.  Deliberately ignorant of
// socle computations.
std::vector<Subspace> corank1_ideal_lines(const LocalAlgebra& a, const CheckOptions& opts = {});

// Raw socle membership: multiplies against every maximal-ideal basis vector.
bool raw_in_socle(const LocalAlgebra& a, const Vec& v);

// Every degree-(deg-1) subscheme of r as a (component, line) pair, by raw
// per-component ideal enumeration.
std::vector<std::pair<std::size_t, Subspace>> raw_codegree_one_ideals(
    const EmbeddedFiniteScheme& r, const CheckOptions& opts = {});

// Every proper-or-improper subscheme ideal of r (including the zero ideal,
// excluding the empty scheme), by closing the codegree-one enumeration
// under pullback; canonical and duplicate-free.
std::vector<ProductIdeal> raw_all_subscheme_ideals(const EmbeddedFiniteScheme& r,
                                                   const CheckOptions& opts = {});

// Corank-1 ideals equal the lines of the socle, with the exact count
// (p^l - 1)/(p - 1).
VerificationReport check_lemma_subschemes(const LocalAlgebra& a, const CheckOptions& opts = {});

// The codegree-one family of a semilocal scheme decomposes componentwise:
// raw ideal enumeration equals the union of P(socle_i) line families.
VerificationReport check_codegree_family(const EmbeddedFiniteScheme& r,
                                         const CheckOptions& opts = {});

// For socdim(r) > k: the k-planes of span(r) equal the union of k-plane
// sets of all codegree-one subschemes, and already of those containing the
// subscheme that deletes the over-socled component's socle.
VerificationReport check_union(const EmbeddedFiniteScheme& r, std::size_t k,
                               const CheckOptions& opts = {});

// k-planes lying in the span of some subscheme of r are exactly
// Gr(k, span(r)).
VerificationReport check_cactus_finite(const EmbeddedFiniteScheme& r, std::size_t k,
                                       const CheckOptions& opts = {});

// reduce_to_socdim succeeds with all postconditions on every k-plane of
// span(r) (exhaustive over F_p, seeded samples over the rationals).
VerificationReport check_reduce(const EmbeddedFiniteScheme& r, std::size_t k,
                                const CheckOptions& opts = {});

}  // namespace cactus::oracle
