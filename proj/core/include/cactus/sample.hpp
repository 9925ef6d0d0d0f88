#pragma once

#include <cstdint>

#include "cactus/scheme.hpp"

namespace cactus::sample {

// Deterministic random valid scheme: monomial-quotient components at
// pairwise distinct supports.  Identical seeds give identical schemes.
EmbeddedFiniteScheme random_scheme(FieldSpec fs, std::size_t degree, std::size_t ambient,
                                   std::uint64_t seed);

// Deterministic random k-plane inside a subspace; integer coordinates in
// [-9, 9] over the rationals, uniform residues over prime fields.
Subspace random_plane_in(const Subspace& within, std::size_t k, std::uint64_t seed);

}  // namespace cactus::sample
