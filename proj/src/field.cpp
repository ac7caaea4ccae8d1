#include "rig/field.hpp"

#include <cstdlib>

namespace rig {

FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

FieldSpec prime_field(std::int64_t p) {
  if (!is_prime_i64(p) || p >= (std::int64_t{1} << 31))
    throw Error("characteristic must be a prime < 2^31, got " +
                std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, p};
}

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid on (a, p), a in (0, p)
  std::int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw DivisionByZero();
  return ((s0 % p) + p) % p;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::PrimeField && !is_prime_i64(spec_.characteristic))
    throw Error("not a prime characteristic");
}

Coeff Field::zero() const {
  return is_rationals() ? Coeff::from_rat(mpq_class(0)) : Coeff::from_fp(0);
}

Coeff Field::one() const {
  return is_rationals() ? Coeff::from_rat(mpq_class(1)) : Coeff::from_fp(1);
}

Coeff Field::from_int(std::int64_t n) const {
  if (is_rationals()) return Coeff::from_rat(mpq_class(static_cast<long>(n)));
  std::int64_t v = n % p();
  if (v < 0) v += p();
  return Coeff::from_fp(v);
}

Coeff Field::from_string(const std::string& s) const {
  if (is_rationals()) {
    mpq_class q(s);
    q.canonicalize();
    return Coeff::from_rat(q);
  }
  auto slash = s.find('/');
  if (slash == std::string::npos) return from_int(std::strtoll(s.c_str(), nullptr, 10));
  Coeff num = from_int(std::strtoll(s.substr(0, slash).c_str(), nullptr, 10));
  Coeff den = from_int(std::strtoll(s.substr(slash + 1).c_str(), nullptr, 10));
  return div(num, den);
}

bool Field::is_zero(const Coeff& a) const {
  return is_rationals() ? a.rat() == 0 : a.fp() == 0;
}

bool Field::is_one(const Coeff& a) const {
  return is_rationals() ? a.rat() == 1 : a.fp() == 1;
}

bool Field::eq(const Coeff& a, const Coeff& b) const {
  return is_rationals() ? a.rat() == b.rat() : a.fp() == b.fp();
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return Coeff::from_rat(a.rat() + b.rat());
  std::int64_t v = a.fp() + b.fp();
  if (v >= p()) v -= p();
  return Coeff::from_fp(v);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return Coeff::from_rat(a.rat() - b.rat());
  std::int64_t v = a.fp() - b.fp();
  if (v < 0) v += p();
  return Coeff::from_fp(v);
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return Coeff::from_rat(a.rat() * b.rat());
  return Coeff::from_fp((a.fp() * b.fp()) % p());
}

Coeff Field::neg(const Coeff& a) const {
  if (is_rationals()) return Coeff::from_rat(-a.rat());
  return Coeff::from_fp(a.fp() == 0 ? 0 : p() - a.fp());
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw DivisionByZero();
  if (is_rationals()) return Coeff::from_rat(1 / a.rat());
  return Coeff::from_fp(mod_inverse(a.fp(), p()));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
  return mul(a, inv(b));
}

std::string Field::to_string(const Coeff& a) const {
  if (is_rationals()) return a.rat().get_str();
  return std::to_string(a.fp());
}

FieldElem field_arithmetic(const FieldElem& a, const FieldElem& b, FieldOp op) {
  if (!(a.spec == b.spec)) throw FieldMismatch();
  Field f(a.spec);
  Coeff r;
  switch (op) {
    case FieldOp::Add: r = f.add(a.value, b.value); break;
    case FieldOp::Sub: r = f.sub(a.value, b.value); break;
    case FieldOp::Mul: r = f.mul(a.value, b.value); break;
    case FieldOp::Div: r = f.div(a.value, b.value); break;
  }
  return FieldElem{a.spec, r};
}

}  // namespace rig
