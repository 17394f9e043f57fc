#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ezd/error.hpp"

namespace ezd {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  long modulus = 0;  // the prime p when kind == PrimeField, 0 otherwise

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  // Validates that p is prime and fits the fast arithmetic path (p < 2^31).
  static FieldSpec prime(long p);

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;  // "Q" or "F_p"
};

bool is_prime(long n);

// An exact field element that knows its field.  Over the rationals the value
// is a reduced fraction with positive denominator; over F_p it is the
// canonical residue in [0, p).  Arithmetic between elements of different
// fields is rejected.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_long(long v, const FieldSpec& f);
  static Scalar from_mpz(const mpz_class& v, const FieldSpec& f);
  // num/den over Q, reduced to canonical form; den must be nonzero.
  static Scalar rational(const mpz_class& num, const mpz_class& den);

  const FieldSpec& field() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;
  long residue() const;         // PrimeField payload
  const mpq_class& rat() const;  // Rationals payload

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inv() const;
  // this -= f * x, the inner step of row elimination
  void submul(const Scalar& f, const Scalar& x);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  std::string str() const;  // "-3/2", "17"

 private:
  Scalar(FieldSpec spec, mpq_class q, long r)
      : spec_(spec), q_(std::move(q)), r_(r) {}
  void check_same(const Scalar& o) const;

  FieldSpec spec_{};
  mpq_class q_{};
  long r_ = 0;
};

}  // namespace ezd
