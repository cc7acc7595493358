#include "knotrep/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotrep {

namespace {

// True if m.at(i,j) divides every entry of the submatrix below/right
// of (t,t); if not, adds the offending row to row i to expose a
// smaller remainder next round.
bool divides_all(IntMatrix& m, int t) {
  const mpz_class& p = m.at(t, t);
  for (int i = t + 1; i < m.rows; ++i)
    for (int j = t + 1; j < m.cols; ++j)
      if (m.at(i, j) % p != 0) {
        for (int c = t; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
        return false;
      }
  return true;
}

}  // namespace

std::vector<mpz_class> smith_diagonal(IntMatrix m) {
  std::vector<mpz_class> diag;
  int t = 0;
  while (t < m.rows && t < m.cols) {
    // Find the entry of minimal nonzero absolute value in the
    // trailing submatrix and pivot it to (t,t).
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(m.at(i, j)), abs(m.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    if (pj != t)
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool clean = true;
    for (int i = t + 1; i < m.rows; ++i) {
      if (m.at(i, t) == 0) continue;
      mpz_class q = m.at(i, t) / m.at(t, t);  // truncated is fine: loop to fixpoint
      if (q != 0)
        for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
      if (m.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m.cols; ++j) {
      if (m.at(t, j) == 0) continue;
      mpz_class q = m.at(t, j) / m.at(t, t);
      if (q != 0)
        for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller pivot now exists, repeat at same t

    if (!divides_all(m, t)) continue;
    diag.push_back(abs(m.at(t, t)));
    ++t;
  }
  // Divisibility already enforced by divides_all.
  return diag;
}

}  // namespace knotrep
