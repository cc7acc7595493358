#include "knotrep/hom_search.hpp"

#include <algorithm>
#include <set>

namespace knotrep {

namespace {

struct Searcher {
  const Presentation& p;
  const FiniteGroup& g;
  std::vector<std::vector<int>> relators_by_last;  // last generator -> relator ids
  std::vector<int> images;                          // element indices
  std::vector<const Perm*> image_perms;

  Searcher(const Presentation& pp, const FiniteGroup& gg) : p(pp), g(gg) {
    relators_by_last.resize(p.generator_count);
    for (size_t r = 0; r < p.relators.size(); ++r) {
      int last = 0;
      for (int x : p.relators[r]) last = std::max(last, std::abs(x));
      // Empty relators are identically satisfied; skip them.
      if (last > 0) relators_by_last[last - 1].push_back(static_cast<int>(r));
    }
    images.assign(p.generator_count, -1);
    image_perms.assign(p.generator_count, nullptr);
  }

  Perm evaluate(const Word& w) const {
    Perm acc = g.identity();
    for (int x : w) {
      int gen = std::abs(x) - 1;
      int idx = x > 0 ? images[gen] : g.inverse_of[images[gen]];
      acc = perm_compose(acc, g.elements[idx]);
    }
    return acc;
  }

  bool relators_ok(int gen) const {
    for (int r : relators_by_last[gen])
      if (evaluate(p.relators[r]) != g.identity()) return false;
    return true;
  }

  // Visits every homomorphism extending the current partial
  // assignment of generators [0, from). The visitor returns false to
  // stop the whole search.
  template <typename Visitor>
  bool search(int from, Visitor&& visit) {
    if (from == p.generator_count) return visit(images);
    for (int idx = 0; idx < static_cast<int>(g.order()); ++idx) {
      images[from] = idx;
      if (relators_ok(from) &&
          !search(from + 1, visit))
        return false;
    }
    images[from] = -1;
    return true;
  }
};

void check_budget(const Presentation& p, const FiniteGroup& g,
                  const HomSearchOptions& opt) {
  unsigned long long states = 1;
  for (int i = 0; i < p.generator_count; ++i) {
    if (states > opt.state_budget / std::max<unsigned long long>(g.order(), 1)) {
      fail(ErrorCode::BudgetExceeded,
           "hom search space " + std::to_string(g.order()) + "^" +
               std::to_string(p.generator_count) + " exceeds budget " +
               std::to_string(opt.state_budget) + "; simplify the presentation");
    }
    states *= g.order();
  }
}

}  // namespace

unsigned long long count_homs(const Presentation& p, const FiniteGroup& g,
                              const HomSearchOptions& opt) {
  p.validate();
  check_budget(p, g, opt);

  if (!opt.conjugacy_pruning) {
    unsigned long long count = 0;
    Searcher s(p, g);
    s.search(0, [&](const std::vector<int>&) {
      ++count;
      return true;
    });
    return count;
  }

  // Homs with rho(g0) = x and rho(g0) = h x h^-1 are in bijection, so
  // it suffices to count one representative per class.
  unsigned long long count = 0;
  Searcher s(p, g);
  for (auto [rep, size] : conjugacy_class_reps(g)) {
    s.images[0] = rep;
    if (!s.relators_ok(0)) continue;
    unsigned long long sub = 0;
    s.search(1, [&](const std::vector<int>&) {
      ++sub;
      return true;
    });
    count += sub * static_cast<unsigned long long>(size);
  }
  return count;
}

std::vector<std::vector<int>> enumerate_homs(const Presentation& p,
                                             const FiniteGroup& g,
                                             const HomSearchOptions& opt) {
  p.validate();
  check_budget(p, g, opt);
  std::vector<std::vector<int>> out;
  Searcher s(p, g);
  s.search(0, [&](const std::vector<int>& images) {
    out.push_back(images);
    return true;
  });
  return out;
}

unsigned long long count_homs_up_to_conjugacy(const Presentation& p,
                                              const FiniteGroup& g,
                                              const HomSearchOptions& opt) {
  auto homs = enumerate_homs(p, g, opt);
  std::set<std::vector<int>> canonical;
  const int n = static_cast<int>(g.order());
  for (const auto& hom : homs) {
    std::vector<int> best = hom;
    for (int h = 0; h < n; ++h) {
      std::vector<int> conj(hom.size());
      for (size_t k = 0; k < hom.size(); ++k) {
        Perm c = perm_compose(perm_compose(g.elements[h], g.elements[hom[k]]),
                              g.elements[g.inverse_of[h]]);
        conj[k] = g.element_index(c);
      }
      best = std::min(best, conj);
    }
    canonical.insert(std::move(best));
  }
  return canonical.size();
}

SeparatingHom find_separating_hom(const Presentation& p, const Word& c,
                                  const std::vector<FiniteGroup>& targets,
                                  const HomSearchOptions& opt) {
  p.validate();
  if (!is_reduced(c))
    fail(ErrorCode::InvalidInput, "word must be freely reduced");
  SeparatingHom result;
  if (c.empty()) {
    result.status = SeparatingHom::Status::TrivialWord;
    return result;
  }
  for (int x : c)
    if (x == 0 || std::abs(x) > p.generator_count)
      fail(ErrorCode::OutOfRange, "word letter outside generator range");

  for (size_t t = 0; t < targets.size(); ++t) {
    const FiniteGroup& g = targets[t];
    check_budget(p, g, opt);
    Searcher s(p, g);
    bool found = false;
    s.search(0, [&](const std::vector<int>& images) {
      if (s.evaluate(c) == g.identity()) return true;
      result.status = SeparatingHom::Status::Found;
      result.target_index = static_cast<int>(t);
      result.images = images;
      found = true;
      return false;
    });
    if (found) {
      // Re-verify the witness from scratch.
      Searcher v(p, g);
      v.images = result.images;
      for (const Word& r : p.relators)
        if (v.evaluate(r) != g.identity())
          fail(ErrorCode::InternalInvariant, "separating hom fails a relator");
      result.word_image = v.evaluate(c);
      if (result.word_image == g.identity())
        fail(ErrorCode::InternalInvariant, "separating hom does not separate");
      return result;
    }
  }
  result.status = SeparatingHom::Status::NotFound;
  return result;
}

}  // namespace knotrep
