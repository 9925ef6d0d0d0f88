#pragma once

#include <optional>
#include <string>

#include "cactus/scheme.hpp"

namespace cactus {

enum class ShrinkCase { span_preserving, solved_hyperplane };

std::string to_string(ShrinkCase c);

// One codegree-one shrink: quotient by the line through a socle element of
// one component (indices refer to the scheme the step was applied to).
struct ShrinkStep {
  std::size_t component = 0;
  Vec socle_element;
  ShrinkCase tag = ShrinkCase::span_preserving;
  std::size_t degree_before = 0;
  std::size_t degree_after = 0;
};

struct ShrinkTrace {
  std::vector<ShrinkStep> steps;
  std::string initial_digest;
  std::string final_digest;
};

struct ShrinkCandidate {
  Vec socle_element;
  ShrinkCase tag;
};

// A nonzero socle element s of the given component such that the
// codegree-one subscheme cut by span{s} still spans a space containing e,
// or nullopt when no such element exists in this component.
std::optional<ShrinkCandidate> can_shrink(const EmbeddedFiniteScheme& r, const Subspace& e,
                                          std::size_t comp);

struct ShrinkOutcome {
  EmbeddedFiniteScheme scheme;
  ShrinkStep step;
  Quotient quot;
};

// Shrinks at the first component whose socle dimension exceeds dim e;
// guaranteed to succeed under that precondition.
ShrinkOutcome shrink_once(const EmbeddedFiniteScheme& r, const Subspace& e);

struct ReduceResult {
  EmbeddedFiniteScheme scheme;
  ShrinkTrace trace;
  // Ideal of the input scheme cutting out `scheme` (composition of all
  // step ideals); components deleted along the way carry the full space.
  ProductIdeal cut;
};

// Repeats shrink_once while some component has socle dimension above
// max(dim e, 1); the result contains e in its span.
ReduceResult reduce_to_socdim(const EmbeddedFiniteScheme& r, const Subspace& e);

// Greedy fixed point of can_shrink over all components (lowest index
// first); the result admits no e-preserving codegree-one subscheme.
ReduceResult prune_minimal(const EmbeddedFiniteScheme& r, const Subspace& e);

}  // namespace cactus
