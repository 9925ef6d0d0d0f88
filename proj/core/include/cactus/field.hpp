#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cactus/errors.hpp"

namespace cactus {

enum class FieldKind { rational, prime };

// An exact coefficient field: the rationals, or F_p for a prime p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;  // modulus, meaningful only for prime fields

  static FieldSpec rationals() { return FieldSpec{FieldKind::rational, 0}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_prime_field() const { return kind == FieldKind::prime; }
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// A field element.  Rationals are arbitrary-precision and kept in lowest
// terms with positive denominator; prime-field values are canonical
// residues in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rationals()) {}
  explicit Scalar(FieldSpec fs) : fs_(fs) {}

  static Scalar from_int(FieldSpec fs, long long v);
  static Scalar from_mpq(mpq_class q);  // rational field

  const FieldSpec& field() const { return fs_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order used only for canonical sorting of enumerated objects.
  static int compare(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

  long long residue() const;     // prime fields
  const mpq_class& rat() const;  // rationals

  std::string str() const;

 private:
  static void require_same(const Scalar& a, const Scalar& b);

  FieldSpec fs_;
  long long r_ = 0;  // prime-field residue
  mpq_class q_;      // rational value
};

}  // namespace cactus
