#include "knotrep/monomial.hpp"

namespace knotrep {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.nvars(); ++i) r.exp[i] += b.exp[i];
  r.degree = a.degree + b.degree;
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (int i = 0; i < r.nvars(); ++i) {
    r.exp[i] -= a.exp[i];
    if (r.exp[i] < 0) fail(ErrorCode::InternalInvariant, "monomial division underflow");
  }
  r.degree = b.degree - a.degree;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree = 0;
  for (int i = 0; i < r.nvars(); ++i) {
    if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
    r.degree += r.exp[i];
  }
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  return true;
}

unsigned long long mono_support_mask(const Monomial& a) {
  unsigned long long m = 0;
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exp[i] > 0) m |= 1ull << i;
  return m;
}

}  // namespace knotrep
