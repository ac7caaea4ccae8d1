#include "rig/monomial.hpp"

namespace rig {

Monomial Monomial::one(int nvars) {
  Monomial m;
  m.nvars = static_cast<std::uint8_t>(nvars);
  return m;
}

Monomial Monomial::var(int nvars, int i, int power) {
  Monomial m = one(nvars);
  m.e[static_cast<size_t>(i)] = static_cast<std::uint16_t>(power);
  m.deg = static_cast<std::uint32_t>(power);
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.nvars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < a.nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.nvars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (int i = 0; i < a.nvars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

namespace {

int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  std::uint32_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // reverse-lex tie break: larger exponent in the LAST differing
  // variable means smaller
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace

int mono_cmp(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
  const int n = a.nvars;
  switch (ord.kind) {
    case OrderKind::Grevlex:
      return cmp_grevlex_range(a, b, 0, n);
    case OrderKind::Lex:
      return cmp_lex_range(a, b, 0, n);
    case OrderKind::Block: {
      int c = cmp_grevlex_range(a, b, 0, ord.elim_count);
      if (c != 0) return c;
      return cmp_grevlex_range(a, b, ord.elim_count, n);
    }
  }
  return 0;
}

std::string mono_to_string(const Monomial& m,
                           const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.nvars; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[static_cast<size_t>(i)];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace rig
