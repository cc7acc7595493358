#ifndef KNOTREP_MONOMIAL_ORDER_HPP
#define KNOTREP_MONOMIAL_ORDER_HPP

#include <vector>

#include "knotrep/monomial.hpp"

namespace knotrep {

// Total monomial order: multiplicative, with 1 minimal. `perm` lists
// variables from most to least significant; Block compares the first
// `split` permuted variables as a grevlex elimination block ahead of
// the rest, so any monomial touching the block beats every monomial
// that avoids it.
struct MonomialOrder {
  enum class Kind { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  std::vector<int> perm;  // size = nvars; identity if constructed via make_*
  int split = 0;          // Block only

  int nvars() const { return static_cast<int>(perm.size()); }

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;
};

MonomialOrder lex_order(int nvars);
MonomialOrder grevlex_order(int nvars);
// Eliminates the variables in `first_block` (compared ahead of the
// rest); both blocks internally grevlex in ascending variable order.
MonomialOrder block_order(int nvars, const std::vector<int>& first_block);

}  // namespace knotrep

#endif
