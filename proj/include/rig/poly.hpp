#ifndef RIG_POLY_HPP
#define RIG_POLY_HPP

#include <memory>
#include <string>
#include <vector>

#include "rig/field.hpp"
#include "rig/monomial.hpp"

namespace rig {

struct RingData;
using Ring = std::shared_ptr<const RingData>;

struct Term {
  Coeff c;
  Monomial m;
};

/// Element of a polynomial ring or of a quotient ring R = P/I.
/// Terms are sorted strictly descending in the ring's monomial order,
/// with no zero coefficients and no duplicate monomials; quotient-ring
/// elements are stored as their normal form mod the defining ideal, so
/// equality in R is term-list identity.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), t_(std::move(sorted_terms)) {}

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const Term& lead() const { return t_.front(); }
  size_t size() const { return t_.size(); }

 private:
  Ring ring_;
  std::vector<Term> t_;
};

// construction
Polynomial poly_zero(const Ring& R);
Polynomial poly_const(const Ring& R, const Coeff& c);
Polynomial poly_one(const Ring& R);
Polynomial poly_var(const Ring& R, int i);
Polynomial poly_term(const Ring& R, const Coeff& c, const Monomial& m);
/// Sorts, merges duplicate monomials, drops zeros.
Polynomial poly_from_terms(const Ring& R, std::vector<Term> terms);

// arithmetic (throws RingMismatch across rings)
Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_scale(const Coeff& c, const Polynomial& f);
Polynomial poly_mul_term(const Coeff& c, const Monomial& m, const Polynomial& f);
Polynomial poly_pow(const Polynomial& f, int n);
bool poly_eq(const Polynomial& f, const Polynomial& g);

/// Remainder of the multivariate division of f by G: no term of the
/// result is divisible by any lead monomial of G, and f - r lies in (G).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

/// Division with quotient tracking: f = sum q_i g_i + r.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionResult poly_divmod(const Polynomial& f, const std::vector<Polynomial>& G);

/// True if f is homogeneous (all terms of equal total degree); the zero
/// polynomial is homogeneous of any degree.
bool poly_homogeneous(const Polynomial& f);
int poly_degree(const Polynomial& f);  // total degree of the lead term; -1 for 0

std::string poly_to_string(const Polynomial& f);

}  // namespace rig

#endif
