#include "knotrep/elimination.hpp"

namespace knotrep {

Ideal eliminate(const Ideal& I, const std::vector<int>& drop, const Budget& budget) {
  I.validate();
  std::vector<char> dropped(I.nvars, 0);
  for (int v : drop) {
    if (v < 0 || v >= I.nvars)
      fail(ErrorCode::OutOfRange, "eliminated variable out of range");
    dropped[v] = 1;
  }

  if (drop.empty()) {
    Ideal out = I;
    out.generators = groebner(I, budget);
    out.cached_basis =
        std::make_shared<const std::vector<Polynomial>>(out.generators);
    return out;
  }

  std::vector<int> block;
  for (int v = 0; v < I.nvars; ++v)
    if (dropped[v]) block.push_back(v);
  Ideal blocked = I.with_order(block_order(I.nvars, block));
  const std::vector<Polynomial>& basis = groebner(blocked, budget);

  // Kept-variable reindexing.
  std::vector<int> new_index(I.nvars, -1);
  std::vector<std::string> names;
  for (int v = 0; v < I.nvars; ++v)
    if (!dropped[v]) {
      new_index[v] = static_cast<int>(names.size());
      names.push_back(I.var_names[v]);
    }
  const int kept = static_cast<int>(names.size());
  MonomialOrder out_order = grevlex_order(kept);

  std::vector<Polynomial> out_gens;
  for (const Polynomial& g : basis) {
    bool pure = true;
    for (const Term& t : g.terms())
      for (int v = 0; v < I.nvars; ++v)
        if (dropped[v] && t.mono.exp[v] > 0) pure = false;
    if (!pure) continue;
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      Monomial m(kept);
      for (int v = 0; v < I.nvars; ++v)
        if (t.mono.exp[v] > 0) m.bump(new_index[v], t.mono.exp[v]);
      terms.push_back({std::move(m), t.coef});
    }
    out_gens.push_back(Polynomial::from_terms(kept, out_order, std::move(terms)));
  }
  Ideal out = Ideal::make(std::move(names), std::move(out_order), std::move(out_gens));
  out.cached_basis = std::make_shared<const std::vector<Polynomial>>(out.generators);
  return out;
}

}  // namespace knotrep
