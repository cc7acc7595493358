#include "knotrep/fox.hpp"

#include "knotrep/smith.hpp"

namespace knotrep {

mpz_class fox_colorings(const Diagram& d, int n) {
  d.validate();
  if (n < 2) fail(ErrorCode::InvalidInput, "coloring modulus must be >= 2");
  StrandClasses sc = strand_classes(d);

  IntMatrix m(d.crossing_count(), sc.strand_count);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossings[i];
    m.at(i, sc.strand_of_arc[c.under_in()]) += 1;
    m.at(i, sc.strand_of_arc[c.under_out()]) += 1;
    m.at(i, sc.strand_of_arc[c.over_in()]) += -2;
  }

  // Solutions of Mx = 0 over Z/n: each invariant factor d_i
  // contributes gcd(d_i, n) choices, each free variable n.
  std::vector<mpz_class> diag = smith_diagonal(std::move(m));
  mpz_class count = 1;
  for (const mpz_class& di : diag) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), mpz_class(n).get_mpz_t());
    count *= g;
  }
  int free_vars = sc.strand_count - static_cast<int>(diag.size());
  for (int i = 0; i < free_vars; ++i) count *= n;
  return count;
}

}  // namespace knotrep
