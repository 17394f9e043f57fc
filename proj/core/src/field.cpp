#include "ezd/field.hpp"

#include <limits>

namespace ezd {

namespace {

long mod_reduce(long long v, long p) {
  long r = static_cast<long>(v % p);
  return r < 0 ? r + p : r;
}

long mod_inverse(long a, long p) {
  if (a == 0) throw InputError("division by zero");
  // extended Euclid on (a, p); p is prime so gcd is 1
  long old_r = a, r = p;
  long old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_reduce(old_s, p);
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(long p) {
  if (p < 2 || p > std::numeric_limits<std::int32_t>::max() || !is_prime(p))
    throw InputError("modulus must be a prime below 2^31, got " +
                     std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return kind == FieldKind::Rationals ? "Q" : "F_" + std::to_string(modulus);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return Scalar(f, mpq_class(1), 0);
  return Scalar(f, mpq_class(0), f.modulus == 1 ? 0 : 1);
}

Scalar Scalar::from_long(long v, const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return Scalar(f, mpq_class(v), 0);
  return Scalar(f, mpq_class(0), mod_reduce(v, f.modulus));
}

Scalar Scalar::from_mpz(const mpz_class& v, const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return Scalar(f, mpq_class(v), 0);
  unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(f.modulus));
  return Scalar(f, mpq_class(0), static_cast<long>(r));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(q), 0);
}

bool Scalar::is_zero() const {
  return spec_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return spec_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

long Scalar::residue() const {
  if (spec_.kind != FieldKind::PrimeField)
    throw InputError("residue() called on a rational value");
  return r_;
}

const mpq_class& Scalar::rat() const {
  if (spec_.kind != FieldKind::Rationals)
    throw InputError("rat() called on a prime-field value");
  return q_;
}

void Scalar::check_same(const Scalar& o) const {
  if (spec_ != o.spec_)
    throw InputError("field mismatch: " + spec_.str() + " vs " + o.spec_.str());
}

Scalar Scalar::operator-() const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(spec_, -q_, 0);
  return Scalar(spec_, mpq_class(0), r_ == 0 ? 0 : spec_.modulus - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out = *this;
  out += o;
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar out = *this;
  out -= o;
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar out = *this;
  out *= o;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (spec_.kind == FieldKind::Rationals)
    q_ += o.q_;
  else
    r_ = mod_reduce(static_cast<long long>(r_) + o.r_, spec_.modulus);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (spec_.kind == FieldKind::Rationals)
    q_ -= o.q_;
  else
    r_ = mod_reduce(static_cast<long long>(r_) - o.r_, spec_.modulus);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (spec_.kind == FieldKind::Rationals)
    q_ *= o.q_;
  else
    r_ = mod_reduce(static_cast<long long>(r_) * o.r_, spec_.modulus);
  return *this;
}

Scalar Scalar::inv() const {
  if (spec_.kind == FieldKind::Rationals) {
    if (q_ == 0) throw InputError("division by zero");
    return Scalar(spec_, 1 / q_, 0);
  }
  return Scalar(spec_, mpq_class(0), mod_inverse(r_, spec_.modulus));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inv();
}

void Scalar::submul(const Scalar& f, const Scalar& x) {
  if (spec_.kind == FieldKind::Rationals)
    q_ -= f.q_ * x.q_;
  else
    r_ = mod_reduce(static_cast<long long>(r_) -
                        static_cast<long long>(f.r_) * x.r_ % spec_.modulus,
                    spec_.modulus);
}

bool Scalar::operator==(const Scalar& o) const {
  if (spec_ != o.spec_) return false;
  return spec_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  return spec_.kind == FieldKind::Rationals ? q_.get_str()
                                            : std::to_string(r_);
}

}  // namespace ezd
