#include "knotrep/components.hpp"

#include <deque>

#include "knotrep/radical.hpp"

namespace knotrep {

namespace {

Polynomial primitive_copy(Polynomial p) {
  p.make_primitive();
  return p;
}

// V(inner) subseteq V(outer): every outer generator vanishes on
// V(inner). A budget blowup in the membership test counts as "not
// contained" so pruning never drops a branch it could not check.
bool variety_contains(const Ideal& outer, const Ideal& inner, const Budget& budget) {
  try {
    for (const Polynomial& g : outer.generators)
      if (!radical_member(g, inner, budget)) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

SplitResult split_components(const Ideal& I, const Budget& budget,
                             std::size_t max_branches) {
  I.validate();
  SplitResult out;
  out.fully_split = true;

  std::deque<std::vector<Polynomial>> work;
  std::vector<std::vector<Polynomial>> seen;  // every basis ever enqueued
  std::vector<std::vector<Polynomial>> leaves;

  auto enqueue = [&](std::vector<Polynomial> basis) {
    for (const auto& b : seen)
      if (b == basis) return;
    seen.push_back(basis);
    work.push_back(std::move(basis));
  };

  enqueue(groebner(I, budget));

  while (!work.empty()) {
    std::vector<Polynomial> basis = std::move(work.front());
    work.pop_front();
    if (is_unit_basis(basis)) continue;  // empty variety, no branch

    bool split = false;
    bool all_certified = true;
    for (std::size_t gi = 0; gi < basis.size() && !split; ++gi) {
      Factorization fac = factor_polynomial(basis[gi]);
      bool rewrites = fac.factors.size() > 1 ||
                      (fac.factors.size() == 1 &&
                       !(fac.factors[0] == primitive_copy(basis[gi])));
      if (!rewrites) {
        if (!fac.certified_irreducible) all_certified = false;
        continue;
      }
      if (leaves.size() + work.size() + fac.factors.size() > max_branches) {
        out.fully_split = false;
        break;  // keep this branch unsplit
      }
      for (const Polynomial& f : fac.factors) {
        std::vector<Polynomial> child = basis;
        child[gi] = f;
        enqueue(reduced_groebner(std::move(child), I.order, budget));
      }
      split = true;
    }
    if (!split) {
      if (!all_certified) out.fully_split = false;
      leaves.push_back(std::move(basis));
    }
  }

  std::vector<Ideal> ideals;
  for (auto& basis : leaves) {
    Ideal b = Ideal::make(I.var_names, I.order, basis);
    b.cached_basis = std::make_shared<const std::vector<Polynomial>>(std::move(basis));
    ideals.push_back(std::move(b));
  }

  // Prune branches whose variety sits inside a sibling's; for equal
  // varieties the earlier branch survives.
  std::vector<char> absorbed(ideals.size(), 0);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (i == j || absorbed[j]) continue;
      if (!variety_contains(ideals[j], ideals[i], budget)) continue;
      if (!variety_contains(ideals[i], ideals[j], budget) || j < i) {
        absorbed[i] = 1;
        break;
      }
    }
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (!absorbed[i]) out.branches.push_back(std::move(ideals[i]));
  return out;
}

}  // namespace knotrep
