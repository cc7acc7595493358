#ifndef KNOTREP_MONOMIAL_HPP
#define KNOTREP_MONOMIAL_HPP

#include <vector>

#include "knotrep/errors.hpp"

namespace knotrep {

// Power product x0^e0 * ... * x{n-1}^e{n-1} with cached total degree.
// Rings are capped at 64 variables so variable subsets fit in a
// uint64_t mask during dimension search.
struct Monomial {
  std::vector<int> exp;
  int degree = 0;

  Monomial() = default;
  explicit Monomial(int nvars) : exp(nvars, 0) {}
  static Monomial unit(int nvars) { return Monomial(nvars); }

  int nvars() const { return static_cast<int>(exp.size()); }
  bool is_unit() const { return degree == 0; }

  void bump(int var, int by) {
    exp[var] += by;
    degree += by;
  }

  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

constexpr int kMaxVariables = 64;

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
unsigned long long mono_support_mask(const Monomial& a);

}  // namespace knotrep

#endif
