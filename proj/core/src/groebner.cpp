#include "knotrep/groebner.hpp"

#include <algorithm>
#include <set>

namespace knotrep {

namespace {

void enforce(const Polynomial& p, const Budget& b) {
  if (p.degree() > b.max_degree)
    fail(ErrorCode::DegreeBudgetExceeded,
         "intermediate degree " + std::to_string(p.degree()) + " exceeds budget " +
             std::to_string(b.max_degree));
  if (p.term_count() > b.max_terms)
    fail(ErrorCode::DegreeBudgetExceeded,
         "intermediate term count " + std::to_string(p.term_count()) +
             " exceeds budget " + std::to_string(b.max_terms));
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const Budget& budget) {
  Polynomial work = f;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lt = work.leading();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      if (!mono_divides(g.leading().mono, lt.mono)) continue;
      Monomial q = mono_div(lt.mono, g.leading().mono);
      work = work - g.times_monomial(q, lt.coef / g.leading().coef);
      enforce(work, budget);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      work = work.tail();
    }
  }
  // Remainder terms were emitted in strictly descending order.
  return Polynomial::from_terms(f.nvars(), f.order(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading();
  const Term& lg = g.leading();
  Monomial l = mono_lcm(lf.mono, lg.mono);
  Polynomial a = f.times_monomial(mono_div(l, lf.mono), Rational(1) / lf.coef);
  Polynomial b = g.times_monomial(mono_div(l, lg.mono), Rational(1) / lg.coef);
  return a - b;
}

namespace {

struct PairKey {
  Monomial lcm;
  int i, j;
};

struct PairCmp {
  const MonomialOrder* order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Polynomial> minimalize(std::vector<Polynomial> basis,
                                   const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading().mono, b.leading().mono) < 0;
  });
  std::vector<Polynomial> out;
  for (Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& h : out)
      if (mono_divides(h.leading().mono, g.leading().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens,
                                         const MonomialOrder& order,
                                         const Budget& budget) {
  std::vector<Polynomial> basis;
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial h = g.with_order(order);
    h.make_primitive();
    enforce(h, budget);
    basis.push_back(std::move(h));
  }

  PairCmp cmp{&order};
  std::set<PairKey, PairCmp> queue(cmp);
  std::set<std::pair<int, int>> pending;
  auto consider = [&](int i, int j) {
    const Monomial& a = basis[i].leading().mono;
    const Monomial& b = basis[j].leading().mono;
    if (mono_coprime(a, b)) return;  // S-pair reduces to zero
    queue.insert({mono_lcm(a, b), i, j});
    pending.emplace(i, j);
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i < j; ++i) consider(i, j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    // Chain criterion: some k with LT(k) | lcm(i,j) whose pairs with
    // i and j are both already settled.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!mono_divides(basis[k].leading().mono, pk.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(pk.i, k)) && !pending.count(key(pk.j, k))) skip = true;
    }
    if (skip) continue;

    Polynomial h = normal_form(s_polynomial(basis[pk.i], basis[pk.j]), basis, budget);
    if (h.is_zero()) continue;
    h.make_primitive();
    basis.push_back(std::move(h));
    if (basis.size() > budget.max_basis)
      fail(ErrorCode::DegreeBudgetExceeded,
           "basis size exceeds budget " + std::to_string(budget.max_basis));
    int t = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < t; ++i) consider(i, t);
  }

  basis = minimalize(std::move(basis), order);

  // Interreduce tails to a fixpoint; leading terms are stable because
  // the basis is minimal.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (size_t k = 0; k < basis.size(); ++k)
        if (k != i) others.push_back(basis[k]);
      Polynomial r = normal_form(basis[i], others, budget);
      r.make_primitive();
      if (!(r == basis[i])) {
        basis[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading().mono, b.leading().mono) < 0;
  });
  return basis;
}

const std::vector<Polynomial>& groebner(const Ideal& I, const Budget& budget) {
  if (I.cached_basis) return *I.cached_basis;
  I.validate();
  auto basis = reduced_groebner(I.generators, I.order, budget);
  I.cached_basis =
      std::make_shared<const std::vector<Polynomial>>(std::move(basis));
  return *I.cached_basis;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const Budget& budget) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis, budget).is_zero())
        return false;
  return true;
}

bool is_unit_basis(const std::vector<Polynomial>& basis) {
  for (const Polynomial& g : basis)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

}  // namespace knotrep
