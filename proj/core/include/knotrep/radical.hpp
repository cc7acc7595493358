#ifndef KNOTREP_RADICAL_HPP
#define KNOTREP_RADICAL_HPP

#include "knotrep/groebner.hpp"

namespace knotrep {

// True iff f vanishes on the complex zero set of I: 1 lies in
// I + (1 - t*f) for a fresh variable t (Rabinowitsch).
bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget = {});

enum class IdealRelation {
  Equal,          // same radical
  FirstInSecond,  // sqrt(I) strictly inside sqrt(J)
  SecondInFirst,  // sqrt(J) strictly inside sqrt(I)
  Incomparable,
};

const char* ideal_relation_name(IdealRelation r);

// Containment up to radical, decided by two-way generator membership.
IdealRelation ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget = {});

}  // namespace knotrep

#endif
