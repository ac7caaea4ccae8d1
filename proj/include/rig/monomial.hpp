#ifndef RIG_MONOMIAL_HPP
#define RIG_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rig/errors.hpp"

namespace rig {

/// Dense exponent vectors; desk scale caps the variable count.
inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint8_t nvars = 0;
  std::uint32_t deg = 0;  // total degree, kept in sync

  static Monomial one(int nvars);
  static Monomial var(int nvars, int i, int power = 1);

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const {
    return nvars == o.nvars && deg == o.deg && e == o.e;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { Grevlex, Lex, Block };

/// A monomial order: a multiplicative total order with 1 minimal.
/// Block(elim_count) eliminates the first elim_count variables
/// (grevlex on each block, first block compared first).
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int elim_count = 0;

  bool operator==(const MonomialOrder&) const = default;
};

/// Returns <0, 0, >0 for a < b, a == b, a > b.
int mono_cmp(const MonomialOrder& ord, const Monomial& a, const Monomial& b);

std::string mono_to_string(const Monomial& m,
                           const std::vector<std::string>& names);

}  // namespace rig

#endif
