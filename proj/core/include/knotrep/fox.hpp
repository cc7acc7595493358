#ifndef KNOTREP_FOX_HPP
#define KNOTREP_FOX_HPP

#include <gmpxx.h>

#include "knotrep/diagram.hpp"

namespace knotrep {

// Number of Fox n-colorings: assignments of Z/n values to the strand
// classes with under_in + under_out = 2*over at every crossing.
// Counts all colorings including the n constant ones, so the result
// is always >= n.
mpz_class fox_colorings(const Diagram& d, int n);

}  // namespace knotrep

#endif
