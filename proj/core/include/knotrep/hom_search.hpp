#ifndef KNOTREP_HOM_SEARCH_HPP
#define KNOTREP_HOM_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "knotrep/finite_group.hpp"
#include "knotrep/presentation.hpp"

namespace knotrep {

struct HomSearchOptions {
  // Search is aborted with BudgetExceeded when |G|^generators exceeds
  // this bound.
  unsigned long long state_budget = 100'000'000ull;
  // Restrict the first generator to conjugacy-class representatives
  // and scale counts by class sizes. Exact, not a heuristic.
  bool conjugacy_pruning = false;
};

// Exact number of homomorphisms p -> g (all of them, not up to
// conjugacy).
unsigned long long count_homs(const Presentation& p, const FiniteGroup& g,
                              const HomSearchOptions& opt = {});

// Number of homomorphisms up to simultaneous conjugation of the
// generator images.
unsigned long long count_homs_up_to_conjugacy(const Presentation& p,
                                              const FiniteGroup& g,
                                              const HomSearchOptions& opt = {});

// All homomorphisms as element-index tuples, in lexicographic
// assignment order.
std::vector<std::vector<int>> enumerate_homs(const Presentation& p,
                                             const FiniteGroup& g,
                                             const HomSearchOptions& opt = {});

struct SeparatingHom {
  enum class Status { Found, NotFound, TrivialWord };
  Status status = Status::NotFound;
  int target_index = -1;          // index into the targets list
  std::vector<int> images;        // generator -> element index
  Perm word_image;                // evaluation of the word, when Found
};

// First homomorphism (targets scanned in order, assignments in
// lexicographic element-index order) sending every relator to the
// identity and `c` to a non-identity element. The result is
// re-verified by direct evaluation before it is returned.
// A finite quotient always embeds in some SO(N) (permutation matrices
// of the regular representation); that embedding is not computed here.
SeparatingHom find_separating_hom(const Presentation& p, const Word& c,
                                  const std::vector<FiniteGroup>& targets,
                                  const HomSearchOptions& opt = {});

}  // namespace knotrep

#endif
