#ifndef KNOTREP_COMPONENTS_HPP
#define KNOTREP_COMPONENTS_HPP

#include "knotrep/factor.hpp"
#include "knotrep/groebner.hpp"

namespace knotrep {

// Partial decomposition into components: the branch varieties cover
// V(I) and each branch refines it, so the intersection of the branch
// ideals has the same radical as I. Branches carry their reduced
// basis as generators. `fully_split` holds when every leaf generator
// was certified irreducible, i.e. no further rational split exists.
struct SplitResult {
  std::vector<Ideal> branches;
  bool fully_split = false;
};

// Branches on rational factorizations of basis elements until no
// generator factors. Branches whose variety lies inside another
// branch's variety are pruned; exact duplicates are merged. The unit
// ideal contributes no branch (empty variety), so an inconsistent
// input yields an empty list. Exceeding `max_branches` stops the
// splitting with the remaining work emitted unsplit.
SplitResult split_components(const Ideal& I, const Budget& budget = {},
                             std::size_t max_branches = 64);

}  // namespace knotrep

#endif
