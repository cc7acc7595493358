#ifndef KNOTREP_SMITH_HPP
#define KNOTREP_SMITH_HPP

#include <gmpxx.h>

#include <vector>

namespace knotrep {

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
};

// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form,
// each positive. The number of missing diagonal entries gives the
// rank deficiency.
std::vector<mpz_class> smith_diagonal(IntMatrix m);

}  // namespace knotrep

#endif
