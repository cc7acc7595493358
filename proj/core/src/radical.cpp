#include "knotrep/radical.hpp"

namespace knotrep {

namespace {

Polynomial lift(const Polynomial& p, int new_nvars, const MonomialOrder& o) {
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    Monomial m(new_nvars);
    for (int v = 0; v < p.nvars(); ++v)
      if (t.mono.exp[v] > 0) m.bump(v, t.mono.exp[v]);
    terms.push_back({std::move(m), t.coef});
  }
  return Polynomial::from_terms(new_nvars, o, std::move(terms));
}

}  // namespace

bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget) {
  I.validate();
  if (f.nvars() != I.nvars)
    fail(ErrorCode::InvalidInput, "membership query in a different ring");
  if (f.is_zero()) return true;

  const int n = I.nvars + 1;  // fresh variable t goes last
  MonomialOrder o = grevlex_order(n);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators) gens.push_back(lift(g, n, o));
  Polynomial one = Polynomial::constant(n, o, 1);
  Polynomial t = Polynomial::variable(n, o, n - 1);
  gens.push_back(one - t * lift(f, n, o));
  return is_unit_basis(reduced_groebner(std::move(gens), o, budget));
}

const char* ideal_relation_name(IdealRelation r) {
  switch (r) {
    case IdealRelation::Equal: return "Equal";
    case IdealRelation::FirstInSecond: return "ProperSub(first in second)";
    case IdealRelation::SecondInFirst: return "ProperSub(second in first)";
    case IdealRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

IdealRelation ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget) {
  if (I.nvars != J.nvars)
    fail(ErrorCode::InvalidInput, "ideal comparison across different rings");
  auto contained = [&](const Ideal& A, const Ideal& B) {
    for (const Polynomial& g : A.generators)
      if (!radical_member(g.with_order(B.order), B, budget)) return false;
    return true;
  };
  bool i_in_j = contained(I, J);
  bool j_in_i = contained(J, I);
  if (i_in_j && j_in_i) return IdealRelation::Equal;
  if (i_in_j) return IdealRelation::FirstInSecond;
  if (j_in_i) return IdealRelation::SecondInFirst;
  return IdealRelation::Incomparable;
}

}  // namespace knotrep
