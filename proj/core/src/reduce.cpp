#include "cactus/reduce.hpp"

#include <stdexcept>

#include "cactus/io.hpp"

namespace cactus {

std::string to_string(ShrinkCase c) {
  return c == ShrinkCase::span_preserving ? "span-preserving" : "solved-hyperplane";
}

namespace {

void require_plane_in_span(const EmbeddedFiniteScheme& r, const Subspace& e) {
  if (e.ambient_dim() != r.ambient_dim())
    throw std::invalid_argument("plane ambient dimension mismatch");
  if (!contains(span(r), e)) throw domain_failure("plane is not contained in the span");
}

// Component subspace embedded into product coordinates.
Subspace embed_component(const EmbeddedFiniteScheme& r, std::size_t comp, const Subspace& u) {
  std::size_t total = r.algebra().total_dim();
  std::size_t off = r.algebra().offset(comp);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vec v = zero_vec(r.field(), total);
    Vec b = u.basis().row(i);
    for (std::size_t j = 0; j < b.size(); ++j) v[off + j] = b[j];
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(r.field(), total, rows);
}

Vec slice_component(const EmbeddedFiniteScheme& r, std::size_t comp, const Vec& product) {
  std::size_t off = r.algebra().offset(comp);
  std::size_t d = r.algebra().component(comp).dim();
  return Vec(product.begin() + off, product.begin() + off + d);
}

}  // namespace

std::optional<ShrinkCandidate> can_shrink(const EmbeddedFiniteScheme& r, const Subspace& e,
                                          std::size_t comp) {
  if (comp >= r.component_count()) throw std::invalid_argument("can_shrink: no such component");
  require_plane_in_span(r, e);
  // shrinking the only point of a degree-1 scheme would leave the empty scheme
  if (r.component_count() == 1 && r.algebra().component(0).dim() == 1) return std::nullopt;

  const Subspace socle = r.algebra().component(comp).socle();
  const Subspace socle_emb = embed_component(r, comp, socle);
  const Mat ev = stacked_ev(r);
  const Subspace w = image(ev);

  if (!contains(w, socle_emb)) {
    // any socle element outside the image of ev leaves the span unchanged
    for (std::size_t i = 0; i < socle.dim(); ++i) {
      Vec cand = socle.basis().row(i);
      Vec emb = zero_vec(r.field(), r.algebra().total_dim());
      std::size_t off = r.algebra().offset(comp);
      for (std::size_t j = 0; j < cand.size(); ++j) emb[off + j] = cand[j];
      if (!w.contains_vector(emb))
        return ShrinkCandidate{std::move(cand), ShrinkCase::span_preserving};
    }
    throw std::logic_error("can_shrink: socle not inside image but all basis vectors are");
  }

  // socle inside the image: look for s with an ev-preimage inside e^perp,
  // i.e. a nonzero element of ev(e^perp) intersected with the socle.
  const Subspace eperp = annihilator(e);
  const Subspace img_eperp = Subspace::span_of(eperp.basis() * ev.transpose());
  const Subspace solutions = intersect(img_eperp, socle_emb);
  if (solutions.dim() == 0) return std::nullopt;
  Vec s = slice_component(r, comp, solutions.basis().row(0));
  return ShrinkCandidate{std::move(s), ShrinkCase::solved_hyperplane};
}

ShrinkOutcome shrink_once(const EmbeddedFiniteScheme& r, const Subspace& e) {
  require_plane_in_span(r, e);
  std::size_t k = e.dim();
  for (std::size_t comp = 0; comp < r.component_count(); ++comp) {
    if (r.algebra().component(comp).socle().dim() <= k) continue;
    auto cand = can_shrink(r, e, comp);
    if (!cand)
      throw domain_failure("cannot shrink a single reduced point to the empty scheme");
    std::vector<Subspace> ideal_comps;
    for (std::size_t i = 0; i < r.component_count(); ++i)
      ideal_comps.push_back(i == comp
                                ? Subspace::line(cand->socle_element)
                                : Subspace::zero(r.field(), r.algebra().component(i).dim()));
    SubschemeResult sub =
        subscheme_with_quotient(r, ProductIdeal(r.algebra(), std::move(ideal_comps)));
    if (!contains(span(sub.scheme), e))
      throw std::logic_error("shrink_once: solution lost the plane");
    ShrinkStep step{comp, cand->socle_element, cand->tag, degree(r), degree(sub.scheme)};
    if (step.degree_after + 1 != step.degree_before)
      throw std::logic_error("shrink_once: degree did not drop by one");
    return ShrinkOutcome{std::move(sub.scheme), std::move(step), std::move(sub.quot)};
  }
  throw domain_failure("no component has socle dimension above the plane dimension");
}

namespace {

// Tracks, per component of the original scheme, the composed projection
// from the original component onto the current quotient (nullopt once the
// component has been deleted).
class CutTracker {
 public:
  explicit CutTracker(const EmbeddedFiniteScheme& r) {
    for (std::size_t i = 0; i < r.component_count(); ++i) {
      proj_.push_back(Mat::identity(r.field(), r.algebra().component(i).dim()));
      current_to_orig_.push_back(i);
    }
  }

  void apply(const Quotient& q) {
    std::vector<std::size_t> next_map;
    for (std::size_t n = 0; n < q.surviving.size(); ++n) {
      std::size_t orig = current_to_orig_[q.surviving[n]];
      proj_[orig] = q.projection[n] * *proj_[orig];
      next_map.push_back(orig);
    }
    for (std::size_t cur = 0; cur < current_to_orig_.size(); ++cur) {
      bool survives = false;
      for (std::size_t s : q.surviving) survives |= s == cur;
      if (!survives) proj_[current_to_orig_[cur]] = std::nullopt;
    }
    current_to_orig_ = std::move(next_map);
  }

  ProductIdeal cut_ideal(const EmbeddedFiniteScheme& original) const {
    std::vector<Subspace> comps;
    for (std::size_t i = 0; i < proj_.size(); ++i) {
      std::size_t d = original.algebra().component(i).dim();
      comps.push_back(proj_[i] ? kernel(*proj_[i]) : Subspace::full(original.field(), d));
    }
    return ProductIdeal(original.algebra(), std::move(comps));
  }

 private:
  std::vector<std::optional<Mat>> proj_;
  std::vector<std::size_t> current_to_orig_;
};

}  // namespace

ReduceResult reduce_to_socdim(const EmbeddedFiniteScheme& r, const Subspace& e) {
  require_plane_in_span(r, e);
  std::size_t target = std::max<std::size_t>(e.dim(), 1);
  EmbeddedFiniteScheme cur = r;
  CutTracker tracker(r);
  ShrinkTrace trace;
  trace.initial_digest = io::digest(r);
  while (cur.algebra().socdim() > target) {
    ShrinkOutcome out = shrink_once(cur, e);
    tracker.apply(out.quot);
    trace.steps.push_back(std::move(out.step));
    cur = std::move(out.scheme);
  }
  trace.final_digest = io::digest(cur);
  ProductIdeal cut = tracker.cut_ideal(r);
  return ReduceResult{std::move(cur), std::move(trace), std::move(cut)};
}

ReduceResult prune_minimal(const EmbeddedFiniteScheme& r, const Subspace& e) {
  require_plane_in_span(r, e);
  EmbeddedFiniteScheme cur = r;
  CutTracker tracker(r);
  ShrinkTrace trace;
  trace.initial_digest = io::digest(r);
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (std::size_t comp = 0; comp < cur.component_count(); ++comp) {
      auto cand = can_shrink(cur, e, comp);
      if (!cand) continue;
      std::vector<Subspace> ideal_comps;
      for (std::size_t i = 0; i < cur.component_count(); ++i)
        ideal_comps.push_back(i == comp ? Subspace::line(cand->socle_element)
                                        : Subspace::zero(cur.field(),
                                                         cur.algebra().component(i).dim()));
      SubschemeResult sub =
          subscheme_with_quotient(cur, ProductIdeal(cur.algebra(), std::move(ideal_comps)));
      ShrinkStep step{comp, cand->socle_element, cand->tag, degree(cur), degree(sub.scheme)};
      tracker.apply(sub.quot);
      trace.steps.push_back(std::move(step));
      cur = std::move(sub.scheme);
      progressed = true;
      break;
    }
  }
  trace.final_digest = io::digest(cur);
  ProductIdeal cut = tracker.cut_ideal(r);
  return ReduceResult{std::move(cur), std::move(trace), std::move(cut)};
}

}  // namespace cactus
