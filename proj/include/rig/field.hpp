#ifndef RIG_FIELD_HPP
#define RIG_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "rig/errors.hpp"

namespace rig {

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field: ℚ or 𝔽_p for a prime p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::PrimeField;
  std::int64_t characteristic = 101;  // 0 for ℚ

  bool operator==(const FieldSpec&) const = default;
};

FieldSpec rationals();
FieldSpec prime_field(std::int64_t p);

/// An element of a coefficient field, always in canonical form:
/// reduced fraction for ℚ, representative in [0,p) for 𝔽_p.
/// Immutable; the rational payload is shared so copies are cheap.
class Coeff {
 public:
  Coeff() = default;
  std::int64_t fp() const { return fp_; }
  const mpq_class& rat() const { return *q_; }
  bool has_rat() const { return q_ != nullptr; }

  static Coeff from_fp(std::int64_t canonical) {
    Coeff c;
    c.fp_ = canonical;
    return c;
  }
  static Coeff from_rat(mpq_class q) {
    Coeff c;
    c.q_ = std::make_shared<const mpq_class>(std::move(q));
    return c;
  }

 private:
  std::int64_t fp_ = 0;
  std::shared_ptr<const mpq_class> q_;
};

/// Arithmetic context for one FieldSpec. All operations are exact.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  bool is_rationals() const { return spec_.kind == FieldKind::Rationals; }
  std::int64_t p() const { return spec_.characteristic; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(std::int64_t n) const;
  /// Parses an integer literal (optionally signed), or "a/b" for ℚ.
  Coeff from_string(const std::string& s) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;  // throws DivisionByZero
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;  // throws DivisionByZero

  std::string to_string(const Coeff& a) const;

 private:
  FieldSpec spec_;
};

/// A field element tagged with its field, for the session/API boundary.
struct FieldElem {
  FieldSpec spec;
  Coeff value;
};

enum class FieldOp { Add, Sub, Mul, Div };

/// Exact arithmetic on tagged elements; throws FieldMismatch when the
/// operands disagree and DivisionByZero on zero divisors.
FieldElem field_arithmetic(const FieldElem& a, const FieldElem& b, FieldOp op);

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
bool is_prime_i64(std::int64_t n);

}  // namespace rig

#endif
