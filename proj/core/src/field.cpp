#include "cactus/field.hpp"

#include <stdexcept>

namespace cactus {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2 || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31))  // residue products must fit in 64 bits
    throw std::invalid_argument("modulus " + std::to_string(p) + " is too large");
  return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::str() const {
  return is_prime_field() ? "F_" + std::to_string(p) : "QQ";
}

namespace {

long long mod_norm(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, 0 < a < p.
long long mod_inverse(long long a, long long p) {
  long long old_r = a, r = p;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_norm(old_s, p);
}

}  // namespace

Scalar Scalar::from_int(FieldSpec fs, long long v) {
  Scalar s(fs);
  if (fs.is_prime_field()) {
    s.r_ = mod_norm(v, fs.p);
  } else {
    s.q_ = mpq_class(static_cast<long>(v));  // long long has no gmpxx overload
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s(FieldSpec::rationals());
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

bool Scalar::is_zero() const {
  return fs_.is_prime_field() ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const {
  return fs_.is_prime_field() ? r_ == 1 : q_ == 1;
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (!(a.fs_ == b.fs_))
    throw std::invalid_argument("scalar field mismatch: " + a.fs_.str() + " vs " + b.fs_.str());
}

Scalar Scalar::operator-() const {
  Scalar s(fs_);
  if (fs_.is_prime_field()) {
    s.r_ = r_ == 0 ? 0 : fs_.p - r_;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  Scalar s(fs_);
  if (fs_.is_prime_field()) {
    s.r_ = mod_inverse(r_, fs_.p);
  } else {
    mpq_class inv = 1 / q_;
    s.q_ = inv;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar s(a.fs_);
  if (a.fs_.is_prime_field()) {
    s.r_ = (a.r_ + b.r_) % a.fs_.p;
  } else {
    s.q_ = a.q_ + b.q_;
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar s(a.fs_);
  if (a.fs_.is_prime_field()) {
    s.r_ = mod_norm(a.r_ - b.r_, a.fs_.p);
  } else {
    s.q_ = a.q_ - b.q_;
  }
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar s(a.fs_);
  if (a.fs_.is_prime_field()) {
    s.r_ = (a.r_ * b.r_) % a.fs_.p;  // residues < 2^31, product fits
  } else {
    s.q_ = a.q_ * b.q_;
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  return a.fs_.is_prime_field() ? a.r_ == b.r_ : a.q_ == b.q_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.fs_.is_prime_field()) return a.r_ < b.r_ ? -1 : (a.r_ > b.r_ ? 1 : 0);
  return cmp(a.q_, b.q_);
}

long long Scalar::residue() const {
  if (!fs_.is_prime_field()) throw std::invalid_argument("residue() on a rational scalar");
  return r_;
}

const mpq_class& Scalar::rat() const {
  if (fs_.is_prime_field()) throw std::invalid_argument("rat() on a prime-field scalar");
  return q_;
}

std::string Scalar::str() const {
  return fs_.is_prime_field() ? std::to_string(r_) : q_.get_str();
}

}  // namespace cactus
