#include "cactus/io.hpp"

#include <sstream>
#include <stdexcept>

namespace cactus::io {

json field_to_json(const FieldSpec& fs) {
  if (fs.is_prime_field()) return json{{"kind", "prime"}, {"p", fs.p}};
  return json{{"kind", "rational"}};
}

FieldSpec field_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint32_t>());
  throw std::invalid_argument("unknown field kind: " + kind);
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime_field()) return s.residue();
  return s.str();
}

Scalar scalar_from_json(const json& j, FieldSpec fs) {
  if (fs.is_prime_field()) {
    if (!j.is_number_integer())
      throw std::invalid_argument("prime-field scalar must be an integer");
    return Scalar::from_int(fs, j.get<long long>());
  }
  if (j.is_number_integer()) return Scalar::from_int(fs, j.get<long long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || sgn(q.get_den()) == 0)
      throw std::invalid_argument("cannot parse rational scalar: " + j.get<std::string>());
    return Scalar::from_mpq(std::move(q));
  }
  throw std::invalid_argument("rational scalar must be a string or an integer");
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Scalar& s : v) a.push_back(scalar_to_json(s));
  return a;
}

Vec vec_from_json(const json& j, FieldSpec fs) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  Vec v;
  for (const json& x : j) v.push_back(scalar_from_json(x, fs));
  return v;
}

json mat_to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
  return a;
}

Mat mat_from_json(const json& j, FieldSpec fs, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw std::invalid_argument("matrix must be an array of " + std::to_string(rows) + " rows");
  Mat m(fs, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vec r = vec_from_json(j[i], fs);
    if (r.size() != cols) throw std::invalid_argument("matrix row has wrong length");
    m.set_row(i, r);
  }
  return m;
}

json subspace_to_json(const Subspace& u) { return mat_to_json(u.basis()); }

json algebra_to_json(const LocalAlgebra& a) {
  json table = json::array();
  for (std::size_t x = 0; x < a.dim(); ++x) {
    json plane = json::array();
    for (std::size_t y = 0; y < a.dim(); ++y) {
      json row = json::array();
      for (std::size_t z = 0; z < a.dim(); ++z) row.push_back(scalar_to_json(a.structure(x, y, z)));
      plane.push_back(std::move(row));
    }
    table.push_back(std::move(plane));
  }
  return json{{"kind", "table"}, {"dim", a.dim()}, {"table", std::move(table)}};
}

LocalAlgebra algebra_from_json(const json& j, FieldSpec fs) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "point") return LocalAlgebra::point(fs);
  if (kind == "jet") return LocalAlgebra::jet(fs, j.at("length").get<std::size_t>());
  if (kind == "monomial_quotient") {
    auto vars = j.at("vars").get<std::size_t>();
    std::vector<std::vector<unsigned>> leads;
    for (const json& l : j.at("leads")) leads.push_back(l.get<std::vector<unsigned>>());
    return LocalAlgebra::monomial_quotient(fs, vars, leads);
  }
  if (kind == "table") {
    std::size_t dim = j.at("dim").get<std::size_t>();
    const json& t = j.at("table");
    if (!t.is_array() || t.size() != dim)
      throw std::invalid_argument("structure table must have one plane per basis element");
    std::vector<Scalar> table;
    table.reserve(dim * dim * dim);
    for (std::size_t x = 0; x < dim; ++x) {
      if (!t[x].is_array() || t[x].size() != dim)
        throw std::invalid_argument("structure table plane has wrong size");
      for (std::size_t y = 0; y < dim; ++y) {
        Vec row = vec_from_json(t[x][y], fs);
        if (row.size() != dim) throw std::invalid_argument("structure table row has wrong size");
        for (Scalar& s : row) table.push_back(std::move(s));
      }
    }
    return LocalAlgebra::from_table(fs, dim, std::move(table));
  }
  throw std::invalid_argument("unknown algebra kind: " + kind);
}

json scheme_to_json(const EmbeddedFiniteScheme& r) {
  json comps = json::array();
  for (std::size_t i = 0; i < r.component_count(); ++i)
    comps.push_back(json{{"algebra", algebra_to_json(r.algebra().component(i))},
                         {"ev", mat_to_json(r.ev(i))}});
  return json{{"ambient_dim", r.ambient_dim()},
              {"components", std::move(comps)},
              {"field", field_to_json(r.field())}};
}

ParsedScheme scheme_from_json(const json& j) {
  FieldSpec fs = field_from_json(j.at("field"));
  std::size_t ambient = j.at("ambient_dim").get<std::size_t>();
  std::vector<LocalAlgebra> algebras;
  std::vector<Mat> evs;
  for (const json& c : j.at("components")) {
    LocalAlgebra a = algebra_from_json(c.at("algebra"), fs);
    evs.push_back(mat_from_json(c.at("ev"), fs, ambient, a.dim()));
    algebras.push_back(std::move(a));
  }
  EmbeddedFiniteScheme scheme(ambient, SemilocalAlgebra(std::move(algebras)), std::move(evs));
  std::optional<Subspace> plane;
  if (j.contains("plane")) plane = plane_from_rows(j.at("plane"), fs, ambient);
  return ParsedScheme{std::move(scheme), std::move(plane)};
}

json trace_to_json(const ShrinkTrace& t) {
  json steps = json::array();
  for (const ShrinkStep& s : t.steps)
    steps.push_back(json{{"case", to_string(s.tag)},
                         {"component", s.component},
                         {"degree_after", s.degree_after},
                         {"degree_before", s.degree_before},
                         {"socle_element", vec_to_json(s.socle_element)}});
  return json{{"final_digest", t.final_digest},
              {"initial_digest", t.initial_digest},
              {"steps", std::move(steps)}};
}

std::string digest(const EmbeddedFiniteScheme& r) {
  std::string s = scheme_to_json(r).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

Subspace plane_from_rows(const json& rows, FieldSpec fs, std::size_t ambient) {
  if (!rows.is_array()) throw std::invalid_argument("plane must be an array of rows");
  std::vector<Vec> vs;
  for (const json& r : rows) {
    Vec v = vec_from_json(r, fs);
    if (v.size() != ambient) throw std::invalid_argument("plane row has wrong length");
    vs.push_back(std::move(v));
  }
  return Subspace::span_of(fs, ambient, vs);
}

Subspace plane_from_inline(const std::string& text, FieldSpec fs, std::size_t ambient) {
  std::vector<Vec> rows;
  std::stringstream rowstream(text);
  std::string rowtext;
  while (std::getline(rowstream, rowtext, ';')) {
    Vec v;
    std::stringstream cellstream(rowtext);
    std::string cell;
    while (std::getline(cellstream, cell, ',')) {
      // trim spaces
      std::size_t b = cell.find_first_not_of(" \t");
      std::size_t e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("empty plane entry");
      cell = cell.substr(b, e - b + 1);
      if (fs.is_prime_field()) {
        v.push_back(Scalar::from_int(fs, std::stoll(cell)));
      } else {
        mpq_class q;
        if (q.set_str(cell, 10) != 0 || sgn(q.get_den()) == 0)
          throw std::invalid_argument("cannot parse plane entry: " + cell);
        v.push_back(Scalar::from_mpq(std::move(q)));
      }
    }
    if (v.size() != ambient) throw std::invalid_argument("plane row has wrong length");
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw std::invalid_argument("empty plane");
  return Subspace::span_of(fs, ambient, rows);
}

}  // namespace cactus::io
