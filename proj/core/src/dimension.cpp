#include "knotrep/dimension.hpp"

#include <algorithm>

namespace knotrep {

namespace {

// Minimum hitting set over the support masks, branch and bound. A
// variable set S is independent iff no leading-term support is inside
// S, i.e. the complement of S hits every support; dim = nvars - min hit.
struct HitSearch {
  std::vector<unsigned long long> edges;
  int nvars;
  int best;

  void run(size_t at, unsigned long long chosen, int size) {
    if (size >= best) return;
    while (at < edges.size() && (edges[at] & chosen)) ++at;
    if (at == edges.size()) {
      best = size;
      return;
    }
    unsigned long long e = edges[at];
    for (int v = 0; v < nvars; ++v)
      if (e & (1ull << v)) run(at + 1, chosen | (1ull << v), size + 1);
  }
};

std::vector<unsigned long long> minimal_supports(const std::vector<Polynomial>& basis) {
  std::vector<unsigned long long> masks;
  for (const Polynomial& g : basis) {
    if (g.is_zero()) continue;
    masks.push_back(mono_support_mask(g.leading().mono));
  }
  std::sort(masks.begin(), masks.end(), [](auto a, auto b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  std::vector<unsigned long long> out;
  for (auto m : masks) {
    bool dominated = false;
    for (auto kept : out)
      if ((kept & m) == kept) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

int dimension_of_basis(const std::vector<Polynomial>& basis, int nvars) {
  if (is_unit_basis(basis)) return -1;
  HitSearch hs;
  hs.edges = minimal_supports(basis);
  hs.nvars = nvars;
  // A leading term with empty support would mean a unit, handled above.
  hs.best = nvars + 1;
  hs.run(0, 0, 0);
  if (hs.best > nvars) hs.best = 0;  // no edges: zero ideal
  if (hs.edges.empty()) return nvars;
  return nvars - hs.best;
}

// True when some independent set of size `dim` contains all of
// `forced`: equivalently, the edges restricted away from `forced`
// still admit a hitting set of size nvars - dim (and no edge sits
// entirely inside `forced`).
bool extendable(const std::vector<unsigned long long>& edges, int nvars, int dim,
                unsigned long long forced) {
  HitSearch hs;
  hs.nvars = nvars;
  for (auto e : edges) {
    unsigned long long rest = e & ~forced;
    if (rest == 0) return false;
    hs.edges.push_back(rest);
  }
  hs.best = nvars + 1;
  hs.run(0, 0, 0);
  int hit = hs.best > nvars ? 0 : hs.best;
  return nvars - hit >= dim;
}

// Lexicographically smallest independent set witnessing the
// dimension.
std::vector<int> independent_witness(const std::vector<unsigned long long>& edges,
                                     int nvars, int dim) {
  std::vector<int> chosen;
  unsigned long long mask = 0;
  for (int v = 0; v < nvars && static_cast<int>(chosen.size()) < dim; ++v) {
    unsigned long long trial = mask | (1ull << v);
    if (extendable(edges, nvars, dim, trial)) {
      chosen.push_back(v);
      mask = trial;
    }
  }
  return chosen;
}

}  // namespace

int krull_dimension(const Ideal& I, const Budget& budget) {
  const std::vector<Polynomial>& basis = groebner(I, budget);
  return dimension_of_basis(basis, I.nvars);
}

DimensionReport dimension_report(const Ideal& I, const Budget& budget) {
  const std::vector<Polynomial>& basis = groebner(I, budget);
  DimensionReport r;
  r.dimension = dimension_of_basis(basis, I.nvars);

  for (const Polynomial& g : basis) {
    if (g.term_count() < 2) continue;
    bool all_even = true, same_sign = true;
    int sign = ::sgn(g.terms()[0].coef);
    for (const Term& t : g.terms()) {
      for (int e : t.mono.exp)
        if (e % 2 != 0) all_even = false;
      if (::sgn(t.coef) != sign) same_sign = false;
    }
    if (all_even && same_sign) {
      r.real_radical_caveat = true;
      break;
    }
  }

  if (r.dimension > 0) {
    auto edges = minimal_supports(basis);
    r.independent_set = independent_witness(edges, I.nvars, r.dimension);
  }
  return r;
}

}  // namespace knotrep
