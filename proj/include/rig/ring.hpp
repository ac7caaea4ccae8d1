#ifndef RIG_RING_HPP
#define RIG_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "rig/poly.hpp"

namespace rig {

/// A presented ring: the ambient polynomial ring P = k[x_1..x_n] when
/// gb is empty and ambient is null, or a quotient R = P/I with the
/// reduced Gröbner basis of I. The graded maximal ideal is always
/// (x_1,...,x_n).
struct RingData {
  FieldSpec field_spec;
  std::vector<std::string> vars;
  MonomialOrder order;
  std::vector<Polynomial> gb;  // reduced GB of the defining ideal; empty for P
  Ring ambient;                // null when this ring is the ambient P

  Field field() const { return Field(field_spec); }
  int nvars() const { return static_cast<int>(vars.size()); }
  bool is_quotient() const { return ambient != nullptr; }
};

/// Ambient polynomial ring.
Ring make_poly_ring(FieldSpec field, std::vector<std::string> vars,
                    MonomialOrder order = MonomialOrder{});

/// Quotient ring P/(gens); computes the reduced Gröbner basis of the
/// defining ideal. Throws UnitIdeal when 1 lies in the ideal.
Ring make_quotient_ring(const Ring& P, const std::vector<Polynomial>& gens);

/// The ambient polynomial ring of R (R itself when already ambient).
Ring ambient_ring(const Ring& R);

/// Same polynomial viewed in the ambient ring.
Polynomial lift_to_ambient(const Polynomial& f);

/// Canonical representative of f in R: the normal form modulo R's
/// defining Gröbner basis. Accepts f from R or from R's ambient ring.
Polynomial quotient_reduce(const Polynomial& f, const Ring& R);

/// Variable index by name; -1 when absent.
int var_index(const Ring& R, const std::string& name);

/// Generators x_1..x_n of the graded maximal ideal of R.
std::vector<Polynomial> maximal_ideal_gens(const Ring& R);

/// Deterministic one-line description, e.g. "F101[x,y]/(x^2, x*y)".
std::string ring_to_string(const Ring& R);

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Polynomial& f, const Polynomial& g);

}  // namespace rig

#endif
