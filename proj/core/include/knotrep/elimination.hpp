#ifndef KNOTREP_ELIMINATION_HPP
#define KNOTREP_ELIMINATION_HPP

#include "knotrep/groebner.hpp"

namespace knotrep {

// Elimination ideal I ∩ Q[kept variables]: the defining ideal of the
// Zariski closure of the projection that forgets `drop`. The result
// ring keeps the remaining variables in their original relative
// order; its generators form a reduced basis. Dropping nothing
// returns I with its reduced basis as generators.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop,
                const Budget& budget = {});

}  // namespace knotrep

#endif
