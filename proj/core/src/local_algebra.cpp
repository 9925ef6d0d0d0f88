#include "cactus/local_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cactus {

LocalAlgebra LocalAlgebra::from_table(FieldSpec fs, std::size_t dim, std::vector<Scalar> table,
                                      std::vector<std::string> labels) {
  if (dim == 0) throw std::invalid_argument("algebra dimension must be >= 1");
  if (table.size() != dim * dim * dim)
    throw std::invalid_argument("structure table has wrong size");
  for (const Scalar& s : table)
    if (!(s.field() == fs)) throw std::invalid_argument("structure table field mismatch");
  if (labels.empty()) {
    labels.reserve(dim);
    labels.push_back("1");
    for (std::size_t i = 1; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != dim) throw std::invalid_argument("label count mismatch");
  return LocalAlgebra(fs, dim, std::move(table), std::move(labels));
}

LocalAlgebra LocalAlgebra::jet(FieldSpec fs, std::size_t length) {
  if (length == 0) throw std::invalid_argument("jet length must be >= 1");
  std::vector<Scalar> table(length * length * length, Scalar(fs));
  for (std::size_t a = 0; a < length; ++a)
    for (std::size_t b = 0; b < length; ++b)
      if (a + b < length) table[(a * length + b) * length + a + b] = Scalar::from_int(fs, 1);
  std::vector<std::string> labels;
  labels.push_back("1");
  if (length > 1) labels.push_back("t");
  for (std::size_t i = 2; i < length; ++i) labels.push_back("t^" + std::to_string(i));
  return from_table(fs, length, std::move(table), std::move(labels));
}

LocalAlgebra LocalAlgebra::point(FieldSpec fs) { return jet(fs, 1); }

namespace {

using Expo = std::vector<unsigned>;

bool divides(const Expo& d, const Expo& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

unsigned total_degree(const Expo& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

// degree, then descending lexicographic on exponent vectors (x > y > z ...)
bool monomial_less(const Expo& a, const Expo& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;  // larger exponent on an earlier variable comes first
}

std::string monomial_label(const Expo& e, std::size_t vars) {
  static const char* names3[] = {"x", "y", "z"};
  if (total_degree(e) == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    std::string v = vars <= 3 ? names3[i] : "x" + std::to_string(i + 1);
    s += v;
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

LocalAlgebra LocalAlgebra::monomial_quotient(FieldSpec fs, std::size_t vars,
                                             const std::vector<std::vector<unsigned>>& leads) {
  if (vars == 0) throw std::invalid_argument("monomial quotient needs at least one variable");
  for (const Expo& l : leads) {
    if (l.size() != vars) throw std::invalid_argument("lead exponent vector has wrong length");
    if (total_degree(l) == 0)
      throw std::invalid_argument("constant monomial in ideal: quotient is not local");
  }
  // finite staircase iff every variable has a pure power among the leads
  std::vector<unsigned> cap(vars, 0);
  for (std::size_t v = 0; v < vars; ++v) {
    for (const Expo& l : leads) {
      bool pure = l[v] > 0;
      for (std::size_t w = 0; w < vars && pure; ++w)
        if (w != v && l[w] > 0) pure = false;
      if (pure && (cap[v] == 0 || l[v] < cap[v])) cap[v] = l[v];
    }
    if (cap[v] == 0)
      throw std::invalid_argument("infinite staircase: no pure power of variable " +
                                  std::to_string(v + 1) + " in the ideal");
  }
  // standard monomials: below all caps and not divisible by any lead
  std::vector<Expo> basis;
  Expo cur(vars, 0);
  while (true) {
    bool standard = true;
    for (const Expo& l : leads)
      if (divides(l, cur)) {
        standard = false;
        break;
      }
    if (standard) basis.push_back(cur);
    std::size_t i = vars;
    while (i-- > 0) {
      if (++cur[i] < cap[i]) break;
      cur[i] = 0;
      if (i == 0) goto enumerated;
    }
  }
enumerated:
  std::sort(basis.begin(), basis.end(), monomial_less);
  std::size_t dim = basis.size();
  std::map<Expo, std::size_t> index;
  for (std::size_t i = 0; i < dim; ++i) index[basis[i]] = i;

  std::vector<Scalar> table(dim * dim * dim, Scalar(fs));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Expo prod(vars);
      for (std::size_t v = 0; v < vars; ++v) prod[v] = basis[a][v] + basis[b][v];
      bool dead = false;
      for (const Expo& l : leads)
        if (divides(l, prod)) {
          dead = true;
          break;
        }
      if (dead) continue;
      table[(a * dim + b) * dim + index.at(prod)] = Scalar::from_int(fs, 1);
    }
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (const Expo& e : basis) labels.push_back(monomial_label(e, vars));
  return from_table(fs, dim, std::move(table), std::move(labels));
}

Vec LocalAlgebra::one() const {
  Vec v = zero_vec(fs_, dim_);
  v[0] = Scalar::from_int(fs_, 1);
  return v;
}

Vec LocalAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("multiply: element length mismatch");
  Vec r = zero_vec(fs_, dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b].is_zero()) continue;
      Scalar f = x[a] * y[b];
      for (std::size_t c = 0; c < dim_; ++c) {
        const Scalar& t = structure(a, b, c);
        if (!t.is_zero()) r[c] = r[c] + f * t;
      }
    }
  }
  return r;
}

Mat LocalAlgebra::mult_matrix(const Vec& v) const {
  Mat m(fs_, dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    Vec e = zero_vec(fs_, dim_);
    e[b] = Scalar::from_int(fs_, 1);
    Vec col = multiply(v, e);
    for (std::size_t c = 0; c < dim_; ++c) m(c, b) = col[c];
  }
  return m;
}

Mat LocalAlgebra::basis_mult_matrix(std::size_t a) const {
  Mat m(fs_, dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b)
    for (std::size_t c = 0; c < dim_; ++c) m(c, b) = structure(a, b, c);
  return m;
}

Vec LocalAlgebra::power(const Vec& v, unsigned e) const {
  Vec r = one();
  for (unsigned i = 0; i < e; ++i) r = multiply(r, v);
  return r;
}

bool LocalAlgebra::is_unit(const Vec& v) const { return !v[0].is_zero(); }

Vec LocalAlgebra::unit_inverse(const Vec& v) const {
  auto x = solve(mult_matrix(v), one());
  if (!x) throw std::invalid_argument("unit_inverse: element is not a unit");
  return *x;
}

ValidationReport LocalAlgebra::validate() const {
  // unit law
  for (std::size_t b = 0; b < dim_; ++b)
    for (std::size_t c = 0; c < dim_; ++c) {
      bool want_one = b == c;
      const Scalar& t = structure(0, b, c);
      if (want_one ? !t.is_one() : !t.is_zero())
        return ValidationReport::fail("basis[0] is not a multiplicative unit", {0, b});
    }
  // commutativity
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b)
      for (std::size_t c = 0; c < dim_; ++c)
        if (!(structure(a, b, c) == structure(b, a, c)))
          return ValidationReport::fail("multiplication is not commutative", {a, b});
  // associativity on basis triples
  for (std::size_t a = 0; a < dim_; ++a) {
    Vec ea = zero_vec(fs_, dim_);
    ea[a] = Scalar::from_int(fs_, 1);
    for (std::size_t b = 0; b < dim_; ++b) {
      Vec eb = zero_vec(fs_, dim_);
      eb[b] = Scalar::from_int(fs_, 1);
      Vec ab = multiply(ea, eb);
      for (std::size_t c = 0; c < dim_; ++c) {
        Vec ec = zero_vec(fs_, dim_);
        ec[c] = Scalar::from_int(fs_, 1);
        Vec left = multiply(ab, ec);
        Vec right = multiply(ea, multiply(eb, ec));
        if (left != right)
          return ValidationReport::fail("multiplication is not associative", {a, b, c});
      }
    }
  }
  // m * m inside m
  for (std::size_t a = 1; a < dim_; ++a)
    for (std::size_t b = 1; b < dim_; ++b)
      if (!structure(a, b, 0).is_zero())
        return ValidationReport::fail("maximal ideal not closed under multiplication", {a, b});
  // nilpotency of m
  if (dim_ > 1) {
    std::vector<Vec> gens;
    for (std::size_t a = 1; a < dim_; ++a) {
      Vec e = zero_vec(fs_, dim_);
      e[a] = Scalar::from_int(fs_, 1);
      gens.push_back(std::move(e));
    }
    Subspace power_space = Subspace::span_of(fs_, dim_, gens);
    for (std::size_t step = 0; step < dim_ && power_space.dim() > 0; ++step) {
      std::vector<Vec> next;
      for (std::size_t a = 1; a < dim_; ++a)
        for (std::size_t i = 0; i < power_space.dim(); ++i)
          next.push_back(multiply(gens[a - 1], power_space.basis().row(i)));
      Subspace np = Subspace::span_of(fs_, dim_, next);
      if (np.dim() == power_space.dim())
        return ValidationReport::fail("maximal ideal is not nilpotent", {});
      power_space = np;
    }
    if (power_space.dim() > 0)
      return ValidationReport::fail("maximal ideal is not nilpotent", {});
  }
  return ValidationReport::pass();
}

Subspace LocalAlgebra::socle() const {
  if (dim_ == 1) return Subspace::full(fs_, 1);
  Mat stacked(fs_, 0, dim_);
  for (std::size_t a = 1; a < dim_; ++a) stacked = stacked.vstack(basis_mult_matrix(a));
  return kernel(stacked);
}

}  // namespace cactus
