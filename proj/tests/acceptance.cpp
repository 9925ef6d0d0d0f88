// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "cactus/fixtures.hpp"
#include "cactus/io.hpp"
#include "cactus/oracle.hpp"
#include "cactus/sample.hpp"

using namespace cactus;
using io::json;
using oracle::CheckOptions;
using oracle::VerificationReport;

namespace {

struct Criterion {
  std::string name;
  double budget_ms;
  bool pass = true;
  std::string detail;
  json reports = json::array();
};

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void absorb(Criterion& c, const VerificationReport& rep) {
  c.reports.push_back(rep.to_json());
  if (!rep.pass && c.pass) {
    c.pass = false;
    c.detail = rep.instance + ": " + rep.counterexample.dump();
  }
}

std::vector<FieldSpec> prime_fields() { return {FieldSpec::prime(2), FieldSpec::prime(3)}; }

// 1. corank-1 ideals equal socle lines with the exact count, dim <= 6,
//    over F_2 and F_3
Criterion criterion_ideal_lines() {
  Criterion c{"ideal-lines-are-socle-lines", 5000};
  for (FieldSpec f : prime_fields()) {
    for (const LocalAlgebra& a : fixtures::bundled_local_algebras(f)) {
      if (a.dim() > 6) continue;
      VerificationReport rep = oracle::check_lemma_subschemes(a);
      unsigned long long pw = 1;
      for (std::size_t i = 0; i < a.socle().dim(); ++i) pw *= f.p;
      if (rep.counts.at("ideal_lines") != (pw - 1) / (f.p - 1)) {
        rep.pass = false;
        rep.counterexample = json{{"reason", "count formula violated"}};
      }
      absorb(c, rep);
    }
  }
  return c;
}

// 2. the codegree-one family of bundled semilocal schemes decomposes
//    componentwise over F_2
Criterion criterion_codegree_family() {
  Criterion c{"codegree-family-decomposition", 5000};
  for (const auto& [name, r] : fixtures::bundled_schemes(FieldSpec::prime(2)))
    absorb(c, oracle::check_codegree_family(r));
  return c;
}

// 3. k-plane membership equals Gr(k, span) for every bundled scheme and
//    every 1 <= k <= dim span, over F_2 and F_3
Criterion criterion_cactus_sets() {
  Criterion c{"plane-sets-equal-grassmannian", 10000};
  for (FieldSpec f : prime_fields()) {
    for (const auto& [name, r] : fixtures::bundled_schemes(f)) {
      std::size_t spandim = span(r).dim();
      for (std::size_t k = 1; k <= spandim; ++k)
        absorb(c, oracle::check_cactus_finite(r, k));
    }
  }
  return c;
}

// 4. LHS = RHS-a = RHS-b for every bundled scheme with socdim > k
Criterion criterion_union() {
  Criterion c{"codegree-one-union-coverage", 30000};
  for (FieldSpec f : prime_fields()) {
    for (const auto& [name, r] : fixtures::bundled_schemes(f)) {
      std::size_t socdim = r.algebra().socdim();
      for (std::size_t k = 1; k < socdim; ++k) absorb(c, oracle::check_union(r, k));
    }
  }
  return c;
}

// 5a. exhaustive reduction postconditions over F_2 and F_3, k <= 3
// 5b. 100 seeded random rational (scheme, plane) instances
Criterion criterion_theorem() {
  Criterion c{"reduce-postconditions", 60000};
  for (FieldSpec f : prime_fields()) {
    for (const auto& [name, r] : fixtures::bundled_schemes(f)) {
      std::size_t spandim = span(r).dim();
      for (std::size_t k = 1; k <= std::min<std::size_t>(3, spandim); ++k)
        absorb(c, oracle::check_reduce(r, k));
    }
  }
  FieldSpec q = FieldSpec::rationals();
  for (std::size_t i = 0; i < 100; ++i) {
    std::size_t deg = 2 + i % 5;            // 2..6
    std::size_t ambient = 3 + i % 2;        // 3..4
    EmbeddedFiniteScheme r = sample::random_scheme(q, deg, ambient, 1000 + i);
    CheckOptions opts;
    opts.samples = 1;
    opts.seed = 2000 + i;
    std::size_t k = 1 + i % 3;
    if (k > span(r).dim()) k = span(r).dim();
    absorb(c, oracle::check_reduce(r, k, opts));
  }
  return c;
}

// 6. prune_minimal reaches a fixed point: no surviving corank-1 ideal of
//    the output retains e (raw enumeration), and socdim <= k
Criterion criterion_prune_fixed_point() {
  Criterion c{"prune-minimal-fixed-point", 30000};
  FieldSpec f2 = FieldSpec::prime(2);
  unsigned long long instances = 0;
  json failures = json::array();
  for (const auto& [name, r] : fixtures::bundled_schemes(f2)) {
    Subspace sp = span(r);
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, sp.dim()); ++k) {
      SubspaceStream planes(sp, k);
      while (auto e = planes.next()) {
        ++instances;
        ReduceResult res = prune_minimal(r, *e);
        bool ok = contains(span(res.scheme), *e) && res.scheme.algebra().socdim() <= k;
        if (ok && degree(res.scheme) > 1) {
          for (const auto& [comp, line] : oracle::raw_codegree_one_ideals(res.scheme)) {
            std::vector<Subspace> comps;
            for (std::size_t i = 0; i < res.scheme.component_count(); ++i)
              comps.push_back(i == comp ? line
                                        : Subspace::zero(f2, res.scheme.algebra()
                                                                 .component(i)
                                                                 .dim()));
            EmbeddedFiniteScheme smaller =
                subscheme(res.scheme, ProductIdeal(res.scheme.algebra(), std::move(comps)));
            if (contains(span(smaller), *e)) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) {
          c.pass = false;
          failures.push_back(json{{"scheme", name}, {"plane", io::subspace_to_json(*e)}});
        }
      }
    }
  }
  json summary;
  summary["claim"] = "prune-fixed-point";
  summary["instances"] = instances;
  summary["failures"] = failures;
  summary["status"] = c.pass ? "pass" : "fail";
  c.reports.push_back(summary);
  if (!c.pass) c.detail = failures[0].dump();
  return c;
}

// 7. linear-algebra kernel invariants on 1000 seeded random instances each
Criterion criterion_kernel_invariants() {
  Criterion c{"exactlin-invariants", 10000};
  std::mt19937_64 rng(20240901);
  auto random_field = [&]() {
    switch (rng() % 3) {
      case 0: return FieldSpec::rationals();
      case 1: return FieldSpec::prime(2);
      default: return FieldSpec::prime(3);
    }
  };
  auto random_mat = [&](FieldSpec f, std::size_t rows, std::size_t cols) {
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        long long v = f.is_prime_field() ? static_cast<long long>(rng() % f.p)
                                         : static_cast<long long>(rng() % 19) - 9;
        m(i, j) = Scalar::from_int(f, v);
      }
    return m;
  };
  unsigned long long checked = 0;
  std::string reason;
  for (int t = 0; t < 1000 && c.pass; ++t) {  // rank-nullity
    FieldSpec f = random_field();
    Mat m = random_mat(f, 1 + rng() % 5, 1 + rng() % 5);
    ++checked;
    if (kernel(m).dim() + image(m).dim() != m.cols()) {
      c.pass = false;
      reason = "rank-nullity";
    }
  }
  for (int t = 0; t < 1000 && c.pass; ++t) {  // double annihilator
    FieldSpec f = random_field();
    std::size_t n = 1 + rng() % 5;
    Subspace u = Subspace::span_of(random_mat(f, rng() % (n + 1), n));
    ++checked;
    if (annihilator(annihilator(u)) != u || u.dim() + annihilator(u).dim() != n) {
      c.pass = false;
      reason = "double annihilator";
    }
  }
  for (int t = 0; t < 1000 && c.pass; ++t) {  // modular law
    FieldSpec f = random_field();
    std::size_t n = 1 + rng() % 5;
    Subspace u = Subspace::span_of(random_mat(f, rng() % (n + 1), n));
    Subspace w = Subspace::span_of(random_mat(f, rng() % (n + 1), n));
    ++checked;
    if (u.dim() + w.dim() != sum(u, w).dim() + intersect(u, w).dim()) {
      c.pass = false;
      reason = "modular law";
    }
  }
  for (int t = 0; t < 1000 && c.pass; ++t) {  // gaussian binomial counts
    std::uint32_t p = rng() % 2 ? 2 : 3;
    std::size_t d = 1 + rng() % 5;
    std::size_t k = rng() % (d + 1);
    SubspaceStream s(Subspace::full(FieldSpec::prime(p), d), k);
    unsigned long long n = 0;
    while (s.next()) ++n;
    ++checked;
    if (n != gaussian_binomial(d, k, p)) {
      c.pass = false;
      reason = "gaussian binomial";
    }
  }
  json summary;
  summary["claim"] = "kernel-invariants";
  summary["instances"] = checked;
  summary["status"] = c.pass ? "pass" : "fail";
  c.reports.push_back(summary);
  if (!c.pass) c.detail = reason;
  return c;
}

using Suite = Criterion (*)();

// 8. repeating every report-producing suite yields byte-identical JSON
Criterion criterion_determinism(const std::vector<Suite>& suites,
                                const std::vector<std::string>& first_dumps) {
  Criterion c{"determinism", 120000};
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Criterion again = suites[i]();
    if (again.reports.dump() != first_dumps[i]) {
      c.pass = false;
      c.detail = "suite " + again.name + " is not reproducible";
      break;
    }
  }
  json summary;
  summary["claim"] = "determinism";
  summary["suites"] = suites.size();
  summary["status"] = c.pass ? "pass" : "fail";
  c.reports.push_back(summary);
  return c;
}

}  // namespace

int main() {
  std::vector<Suite> suites = {criterion_ideal_lines, criterion_codegree_family,
                               criterion_cactus_sets,       criterion_union,
                               criterion_theorem,           criterion_prune_fixed_point,
                               criterion_kernel_invariants};
  int failures = 0;
  std::vector<std::string> dumps;
  std::vector<Criterion> done;
  for (Suite s : suites) {
    double t0 = now_ms();
    Criterion c = s();
    double elapsed = now_ms() - t0;
    if (elapsed > c.budget_ms) {
      c.pass = false;
      c.detail = "runtime budget exceeded";
    }
    dumps.push_back(c.reports.dump());
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << static_cast<long>(elapsed)
              << " ms, budget " << static_cast<long>(c.budget_ms) << " ms)";
    if (!c.pass) std::cout << " -- " << c.detail;
    std::cout << "\n";
    failures += c.pass ? 0 : 1;
    done.push_back(std::move(c));
  }
  {
    double t0 = now_ms();
    Criterion c = criterion_determinism(suites, dumps);
    double elapsed = now_ms() - t0;
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << static_cast<long>(elapsed)
              << " ms)";
    if (!c.pass) std::cout << " -- " << c.detail;
    std::cout << "\n";
    failures += c.pass ? 0 : 1;
  }
  return failures;
}
