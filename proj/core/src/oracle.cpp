#include "cactus/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

#include "cactus/io.hpp"
#include "cactus/sample.hpp"

namespace cactus::oracle {

using nlohmann::json;

json VerificationReport::to_json() const {
  json c = json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  return json{{"claim", claim},
              {"counterexample", counterexample},
              {"counts", std::move(c)},
              {"instance", instance},
              {"seed", seed},
              {"status", pass ? "pass" : "fail"}};
}

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

void require_enumerable(const LocalAlgebra& a, const CheckOptions& opts) {
  if (!a.field().is_prime_field())
    throw std::invalid_argument("brute-force enumeration requires a prime field");
  std::uint32_t p = a.field().p;
  if (p != 2 && p != 3 && p != 5)
    throw std::invalid_argument("brute-force enumeration restricted to p in {2,3,5}");
  if (a.dim() > opts.dim_bound)
    throw std::invalid_argument("algebra dimension " + std::to_string(a.dim()) +
                                " exceeds the brute-force bound " +
                                std::to_string(opts.dim_bound));
}

unsigned long long pow_ull(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

unsigned long long line_count(std::uint32_t p, std::size_t dim) {
  return (pow_ull(p, dim) - 1) / (p - 1);
}

std::string instance_of(const LocalAlgebra& a) {
  std::string s = "local algebra dim=" + std::to_string(a.dim()) + " over " + a.field().str() +
                  " basis [";
  for (std::size_t i = 0; i < a.labels().size(); ++i) {
    if (i) s += ",";
    s += a.labels()[i];
  }
  return s + "]";
}

std::string instance_of(const EmbeddedFiniteScheme& r) {
  return "scheme deg=" + std::to_string(degree(r)) + " comps=" +
         std::to_string(r.component_count()) + " ambient=" + std::to_string(r.ambient_dim()) +
         " over " + r.field().str() + " digest=" + io::digest(r);
}

json plane_fail(const std::string& sides, const Subspace& e) {
  json j;
  j["sides"] = sides;
  j["plane"] = io::subspace_to_json(e);
  return j;
}

}  // namespace

std::vector<Subspace> corank1_ideal_lines(const LocalAlgebra& a, const CheckOptions& opts) {
  require_enumerable(a, opts);
  std::uint32_t p = a.field().p;
  std::size_t r = a.dim();
  if (line_count(p, r) > opts.budget)
    throw budget_exceeded("line enumeration exceeds budget");
  std::vector<Mat> mult;
  for (std::size_t e = 0; e < r; ++e) mult.push_back(a.basis_mult_matrix(e));
  std::vector<Subspace> lines;
  // canonical line representatives: first nonzero coordinate equals 1
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::vector<std::uint32_t> tail(r - lead - 1, 0);
    while (true) {
      Vec v = zero_vec(a.field(), r);
      v[lead] = Scalar::from_int(a.field(), 1);
      for (std::size_t j = 0; j < tail.size(); ++j)
        v[lead + 1 + j] = Scalar::from_int(a.field(), tail[j]);
      bool ideal = true;
      for (std::size_t e = 0; e < r && ideal; ++e) {
        Vec w = mult[e].apply(v);
        // w must be proportional to v; v[lead] = 1 fixes the ratio
        Vec diff = add(w, scale(-w[lead], v));
        ideal = is_zero_vec(diff);
      }
      if (ideal) lines.push_back(Subspace::line(v));
      std::size_t t = tail.size();
      bool carried = false;
      while (t-- > 0) {
        if (++tail[t] < p) {
          carried = true;
          break;
        }
        tail[t] = 0;
      }
      if (!carried) break;
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

bool raw_in_socle(const LocalAlgebra& a, const Vec& v) {
  for (std::size_t e = 1; e < a.dim(); ++e)
    if (!is_zero_vec(a.basis_mult_matrix(e).apply(v))) return false;
  return true;
}

std::vector<std::pair<std::size_t, Subspace>> raw_codegree_one_ideals(
    const EmbeddedFiniteScheme& r, const CheckOptions& opts) {
  std::vector<std::pair<std::size_t, Subspace>> out;
  for (std::size_t c = 0; c < r.component_count(); ++c)
    for (Subspace& l : corank1_ideal_lines(r.algebra().component(c), opts))
      out.emplace_back(c, std::move(l));
  return out;
}

std::vector<ProductIdeal> raw_all_subscheme_ideals(const EmbeddedFiniteScheme& r,
                                                   const CheckOptions& opts) {
  std::set<ProductIdeal> seen;
  std::vector<ProductIdeal> frontier{ProductIdeal::zero(r.algebra())};
  seen.insert(frontier.front());
  std::size_t deg = degree(r);
  while (!frontier.empty()) {
    std::vector<ProductIdeal> next;
    for (const ProductIdeal& cut : frontier) {
      if (cut.total_dim() + 1 == deg) continue;  // children would be empty schemes
      SubschemeResult sub = subscheme_with_quotient(r, cut);
      for (const auto& [comp, line] : raw_codegree_one_ideals(sub.scheme, opts)) {
        // pull the line back to an ideal of the original scheme
        std::size_t orig = sub.quot.surviving[comp];
        std::vector<Subspace> comps;
        for (std::size_t i = 0; i < r.component_count(); ++i) {
          if (i == orig)
            comps.push_back(preimage(sub.quot.projection[comp], line));
          else
            comps.push_back(cut.component(i));
        }
        ProductIdeal bigger(r.algebra(), std::move(comps));
        if (seen.size() >= opts.budget) throw budget_exceeded("subscheme enumeration budget");
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<ProductIdeal>(seen.begin(), seen.end());
}

VerificationReport check_lemma_subschemes(const LocalAlgebra& a, const CheckOptions& opts) {
  Stopwatch watch;
  VerificationReport rep;
  rep.claim = "subschemes";
  rep.instance = instance_of(a);
  rep.seed = opts.seed;
  std::vector<Subspace> raw = corank1_ideal_lines(a, opts);
  std::vector<Subspace> socle_lines;
  SubspaceStream stream(a.socle(), 1);
  while (auto l = stream.next()) socle_lines.push_back(std::move(*l));
  std::sort(socle_lines.begin(), socle_lines.end());
  rep.counts["lines_enumerated"] = line_count(a.field().p, a.dim());
  rep.counts["ideal_lines"] = raw.size();
  rep.counts["socle_lines"] = socle_lines.size();
  unsigned long long expected = line_count(a.field().p, a.socle().dim());
  if (raw != socle_lines) {
    rep.pass = false;
    std::vector<Subspace> diff;
    std::set_symmetric_difference(raw.begin(), raw.end(), socle_lines.begin(), socle_lines.end(),
                                  std::back_inserter(diff));
    rep.counterexample = json{{"line", io::subspace_to_json(diff.front())}};
  } else if (raw.size() != expected) {
    rep.pass = false;
    rep.counterexample = json{{"expected_count", expected}, {"actual_count", raw.size()}};
  }
  rep.elapsed_ms = watch.ms();
  return rep;
}

VerificationReport check_codegree_family(const EmbeddedFiniteScheme& r,
                                         const CheckOptions& opts) {
  Stopwatch watch;
  VerificationReport rep;
  rep.claim = "codegree-family";
  rep.instance = instance_of(r);
  rep.seed = opts.seed;
  auto raw = raw_codegree_one_ideals(r, opts);
  std::set<std::pair<std::size_t, Subspace>> raw_set(raw.begin(), raw.end());
  std::set<std::pair<std::size_t, Subspace>> family;
  for (std::size_t c = 0; c < r.component_count(); ++c) {
    SubspaceStream stream(r.algebra().component(c).socle(), 1);
    while (auto l = stream.next()) family.emplace(c, std::move(*l));
  }
  rep.counts["raw_subschemes"] = raw_set.size();
  rep.counts["socle_family"] = family.size();
  if (raw_set != family) {
    rep.pass = false;
    std::vector<std::pair<std::size_t, Subspace>> diff;
    std::set_symmetric_difference(raw_set.begin(), raw_set.end(), family.begin(), family.end(),
                                  std::back_inserter(diff));
    rep.counterexample = json{{"component", diff.front().first},
                              {"line", io::subspace_to_json(diff.front().second)}};
  }
  rep.elapsed_ms = watch.ms();
  return rep;
}

namespace {

// The set of k-planes contained in span(sub) for a subscheme, as canonical
// subspaces of the ambient space.
void insert_planes(std::set<Subspace>& into, const Subspace& sp, std::size_t k,
                   unsigned long long budget, unsigned long long& enumerated) {
  if (sp.dim() < k) return;
  SubspaceStream stream(sp, k);
  if (enumerated + stream.total_count() > budget)
    throw budget_exceeded("plane enumeration budget");
  enumerated += stream.total_count();
  while (auto e = stream.next()) into.insert(std::move(*e));
}

}  // namespace

VerificationReport check_union(const EmbeddedFiniteScheme& r, std::size_t k,
                               const CheckOptions& opts) {
  Stopwatch watch;
  if (!r.field().is_prime_field())
    throw std::invalid_argument("check_union requires a prime field");
  if (r.algebra().socdim() <= k)
    throw std::invalid_argument("check_union requires socle dimension above k");
  VerificationReport rep;
  rep.claim = "union";
  rep.instance = instance_of(r) + " k=" + std::to_string(k);
  rep.seed = opts.seed;
  unsigned long long enumerated = 0;

  std::set<Subspace> lhs;
  insert_planes(lhs, span(r), k, opts.budget, enumerated);

  std::set<Subspace> rhs_all, rhs_through_q;
  std::size_t over = 0;
  while (r.algebra().component(over).socle().dim() <= k) ++over;
  for (const auto& [comp, line] : raw_codegree_one_ideals(r, opts)) {
    std::vector<Subspace> comps;
    for (std::size_t i = 0; i < r.component_count(); ++i)
      comps.push_back(i == comp ? line
                                : Subspace::zero(r.field(), r.algebra().component(i).dim()));
    EmbeddedFiniteScheme sub = subscheme(r, ProductIdeal(r.algebra(), std::move(comps)));
    Subspace sp = span(sub);
    insert_planes(rhs_all, sp, k, opts.budget, enumerated);
    // R' contains Q iff its ideal line lies in the socle of the over-socled
    // component; checked by raw multiplication.
    if (comp == over && raw_in_socle(r.algebra().component(comp), line.basis().row(0)))
      insert_planes(rhs_through_q, sp, k, opts.budget, enumerated);
  }
  rep.counts["planes_enumerated"] = enumerated;
  rep.counts["lhs_planes"] = lhs.size();
  rep.counts["rhs_all_planes"] = rhs_all.size();
  rep.counts["rhs_through_q_planes"] = rhs_through_q.size();

  auto first_diff = [](const std::set<Subspace>& a, const std::set<Subspace>& b) {
    std::vector<Subspace> d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
    return d.front();
  };
  if (lhs != rhs_all) {
    rep.pass = false;
    rep.counterexample = plane_fail("lhs-vs-union", first_diff(lhs, rhs_all));
  } else if (lhs != rhs_through_q) {
    rep.pass = false;
    rep.counterexample = plane_fail("lhs-vs-union-through-q", first_diff(lhs, rhs_through_q));
  }
  rep.elapsed_ms = watch.ms();
  return rep;
}

VerificationReport check_cactus_finite(const EmbeddedFiniteScheme& r, std::size_t k,
                                       const CheckOptions& opts) {
  Stopwatch watch;
  if (!r.field().is_prime_field())
    throw std::invalid_argument("check_cactus_finite requires a prime field");
  VerificationReport rep;
  rep.claim = "cactus";
  rep.instance = instance_of(r) + " k=" + std::to_string(k);
  rep.seed = opts.seed;
  unsigned long long enumerated = 0;

  Subspace sp = span(r);
  std::set<Subspace> grassmannian;
  insert_planes(grassmannian, sp, k, opts.budget, enumerated);

  unsigned long long subschemes = 0, witnessed = grassmannian.size();
  for (const ProductIdeal& cut : raw_all_subscheme_ideals(r, opts)) {
    EmbeddedFiniteScheme sub = subscheme(r, cut);
    ++subschemes;
    std::set<Subspace> planes;
    insert_planes(planes, span(sub), k, opts.budget, enumerated);
    for (const Subspace& e : planes)
      if (!grassmannian.count(e)) {
        rep.pass = false;
        rep.counterexample = plane_fail("subscheme-plane-outside-grassmannian", e);
        rep.elapsed_ms = watch.ms();
        return rep;
      }
  }
  rep.counts["planes_enumerated"] = enumerated;
  rep.counts["grassmannian_planes"] = witnessed;
  rep.counts["subschemes_enumerated"] = subschemes;
  rep.elapsed_ms = watch.ms();
  return rep;
}

namespace {

// Postconditions of one reduce run; returns an error description or empty.
std::string reduce_postconditions(const EmbeddedFiniteScheme& r, const Subspace& e,
                                  std::size_t k) {
  ReduceResult res = reduce_to_socdim(r, e);
  if (res.trace.steps.size() + 1 > degree(r))
    return "trace longer than degree - 1";
  if (k >= 1 && res.scheme.algebra().socdim() > k) return "final socle dimension above k";
  if (!contains(span(res.scheme), e)) return "plane not contained in the final span";
  if (!validate_ideal(r.algebra(), res.cut).ok) return "composed cut is not an ideal";
  if (degree(res.scheme) != degree(r) - res.cut.total_dim())
    return "degree does not match the composed cut";
  std::size_t d = degree(r);
  for (const ShrinkStep& s : res.trace.steps) {
    if (s.degree_before != d || s.degree_after + 1 != s.degree_before)
      return "step degrees do not decrease by one";
    d = s.degree_after;
  }
  // the composed cut carves a subscheme with the same span and degree
  EmbeddedFiniteScheme again = subscheme(r, res.cut);
  if (degree(again) != degree(res.scheme) || !(span(again) == span(res.scheme)) ||
      again.algebra().socdim() != res.scheme.algebra().socdim())
    return "composed cut does not reproduce the final scheme";
  return {};
}

}  // namespace

VerificationReport check_reduce(const EmbeddedFiniteScheme& r, std::size_t k,
                                const CheckOptions& opts) {
  Stopwatch watch;
  VerificationReport rep;
  rep.claim = "theorem";
  rep.instance = instance_of(r) + " k=" + std::to_string(k);
  rep.seed = opts.seed;

  std::vector<Subspace> planes;
  if (r.field().is_prime_field()) {
    planes = all_subspaces(span(r), k, opts.budget);
  } else {
    Subspace sp = span(r);
    if (k > sp.dim())
      throw std::invalid_argument("check_reduce: k exceeds the span dimension");
    for (std::size_t i = 0; i < opts.samples; ++i)
      planes.push_back(sample::random_plane_in(sp, k, opts.seed + i));
  }

  std::vector<std::string> errors(planes.size());
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || planes.size() < 2 * jobs) {
    for (std::size_t i = 0; i < planes.size(); ++i)
      errors[i] = reduce_postconditions(r, planes[i], k);
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (planes.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::size_t lo = w * chunk, hi = std::min(planes.size(), lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) errors[i] = reduce_postconditions(r, planes[i], k);
      });
    }
    for (std::thread& t : workers) t.join();
  }
  rep.counts["planes_checked"] = planes.size();
  for (std::size_t i = 0; i < planes.size(); ++i) {
    if (errors[i].empty()) continue;
    rep.pass = false;
    rep.counterexample = json::object();
    rep.counterexample["reason"] = errors[i];
    rep.counterexample["plane"] = io::subspace_to_json(planes[i]);
    break;
  }
  rep.elapsed_ms = watch.ms();
  return rep;
}

}  // namespace cactus::oracle
