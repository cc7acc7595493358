#ifndef KNOTREP_FINITE_GROUP_HPP
#define KNOTREP_FINITE_GROUP_HPP

#include <string>
#include <string_view>
#include <vector>

#include "knotrep/errors.hpp"

namespace knotrep {

// Permutation on {0,...,degree-1} stored as its image vector.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(x) = a[b[x]]
Perm perm_inverse(const Perm& a);

// Finite permutation group with a fully enumerated element table.
// Elements are sorted lexicographically by image vector, which puts
// the identity at index 0; the table is immutable after construction.
struct FiniteGroup {
  int degree = 0;
  std::string name;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  std::vector<int> inverse_of;

  std::size_t order() const { return elements.size(); }
  const Perm& identity() const { return elements[0]; }
  int element_index(const Perm& p) const;  // -1 if absent

  // BFS closure of the generators; throws BudgetExceeded when the
  // order passes max_order.
  static FiniteGroup from_generators(int degree, std::vector<Perm> gens,
                                     std::string name,
                                     std::size_t max_order = 10000);
};

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n, n >= 2
FiniteGroup symmetric_group(int n);  // n >= 1
FiniteGroup alternating_group(int n);

// "C<n>", "D<n>", "S<n>", "A<n>".
FiniteGroup group_by_name(std::string_view name);

// One permutation per line in cycle notation on 1-based points, e.g.
// "(1 2 3)(4 5)". "()" is the identity. Degree = largest point used.
FiniteGroup group_from_cycles_text(std::string_view text, std::string name);

// (element index of class representative, class size) pairs, sorted
// by representative index; representatives are the minimal indices of
// their classes.
std::vector<std::pair<int, int>> conjugacy_class_reps(const FiniteGroup& g);

}  // namespace knotrep

#endif
