#ifndef KNOTREP_DIMENSION_HPP
#define KNOTREP_DIMENSION_HPP

#include "knotrep/groebner.hpp"

namespace knotrep {

// Krull dimension of Q[x]/I: the size of the largest variable subset
// independent modulo the leading-term ideal of I. Returns -1 for the
// unit ideal, nvars for the zero ideal.
int krull_dimension(const Ideal& I, const Budget& budget = {});

struct DimensionReport {
  int dimension = 0;
  // A maximal independent variable set witnessing the dimension.
  std::vector<int> independent_set;
  // Raised when some basis element is a sum of >= 2 same-sign terms
  // with all-even exponents (x^2 + y^2 style): its real zero set is
  // thinner than the complex one, so the Krull value only upper
  // bounds the real dimension.
  bool real_radical_caveat = false;
};

DimensionReport dimension_report(const Ideal& I, const Budget& budget = {});

}  // namespace knotrep

#endif
