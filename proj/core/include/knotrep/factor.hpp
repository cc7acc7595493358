#ifndef KNOTREP_FACTOR_HPP
#define KNOTREP_FACTOR_HPP

#include "knotrep/polynomial.hpp"

namespace knotrep {

// Partial factorization over Q, sufficient for radical-aware
// component splitting: monomial content, full univariate treatment up
// to degree 3 remainders (square-free part, rational roots,
// discriminant test), and two-term difference extraction. `factors`
// holds distinct non-unit factors without multiplicities; size 1
// means no split was found. `certified_irreducible` is set only when
// every returned factor is provably irreducible over Q.
struct Factorization {
  std::vector<Polynomial> factors;
  bool certified_irreducible = false;
};

Factorization factor_polynomial(const Polynomial& p);

}  // namespace knotrep

#endif
