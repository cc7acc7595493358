#include "knotrep/monomial_order.hpp"

#include <algorithm>

namespace knotrep {

namespace {

// Graded reverse lexicographic comparison of the permuted positions
// [lo, hi): higher total degree wins; ties go to the monomial whose
// *last* differing position has the smaller exponent.
int grevlex_range(const MonomialOrder& o, const Monomial& a, const Monomial& b,
                  int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp[o.perm[i]];
    db += b.exp[o.perm[i]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int ea = a.exp[o.perm[i]], eb = b.exp[o.perm[i]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  switch (kind) {
    case Kind::Lex:
      for (int i = 0; i < n; ++i) {
        int ea = a.exp[perm[i]], eb = b.exp[perm[i]];
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    case Kind::GrevLex:
      return grevlex_range(*this, a, b, 0, n);
    case Kind::Block: {
      int c = grevlex_range(*this, a, b, 0, split);
      if (c != 0) return c;
      return grevlex_range(*this, a, b, split, n);
    }
  }
  return 0;
}

namespace {

std::vector<int> identity_perm(int nvars) {
  std::vector<int> p(nvars);
  for (int i = 0; i < nvars; ++i) p[i] = i;
  return p;
}

}  // namespace

MonomialOrder lex_order(int nvars) {
  return {MonomialOrder::Kind::Lex, identity_perm(nvars), 0};
}

MonomialOrder grevlex_order(int nvars) {
  return {MonomialOrder::Kind::GrevLex, identity_perm(nvars), 0};
}

MonomialOrder block_order(int nvars, const std::vector<int>& first_block) {
  std::vector<char> in_first(nvars, 0);
  for (int v : first_block) {
    if (v < 0 || v >= nvars) fail(ErrorCode::OutOfRange, "block variable out of range");
    if (in_first[v]) fail(ErrorCode::InvalidInput, "duplicate block variable");
    in_first[v] = 1;
  }
  MonomialOrder o;
  o.kind = MonomialOrder::Kind::Block;
  o.split = static_cast<int>(first_block.size());
  for (int v = 0; v < nvars; ++v)
    if (in_first[v]) o.perm.push_back(v);
  for (int v = 0; v < nvars; ++v)
    if (!in_first[v]) o.perm.push_back(v);
  return o;
}

}  // namespace knotrep
