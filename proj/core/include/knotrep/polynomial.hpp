#ifndef KNOTREP_POLYNOMIAL_HPP
#define KNOTREP_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotrep/monomial_order.hpp"

namespace knotrep {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coef;  // never zero in a stored polynomial

  bool operator==(const Term& o) const { return mono == o.mono && coef == o.coef; }
};

// Sparse polynomial over Q. Terms are kept strictly descending under
// the attached order, which makes leading-term access O(1) and
// addition a linear merge. Value semantics throughout; arithmetic
// requires operands to share nvars and order.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int nvars, MonomialOrder order)
      : nvars_(nvars), order_(std::move(order)) {}

  static Polynomial constant(int nvars, const MonomialOrder& o, Rational c);
  static Polynomial variable(int nvars, const MonomialOrder& o, int v);
  // Sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(int nvars, const MonomialOrder& o,
                               std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading() const;
  Polynomial tail() const;  // *this minus its leading term
  int degree() const;  // total degree; -1 for the zero polynomial
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_unit(); }

  Polynomial with_order(const MonomialOrder& o) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;

  // Scales so coefficients are coprime integers with positive leading
  // coefficient: the canonical representative up to units.
  void make_primitive();

  // Substitutes polynomials for all variables; `values` has one entry
  // per variable of *this*, living in the codomain ring of `o_out`.
  Polynomial substitute(const std::vector<Polynomial>& values, int out_nvars,
                        const MonomialOrder& o_out) const;

  bool operator==(const Polynomial& o) const;

 private:
  int nvars_ = 0;
  MonomialOrder order_ = grevlex_order(0);
  std::vector<Term> terms_;
};

// Budget limits for Groebner-scale computations. Exceeding one raises
// DegreeBudgetExceeded.
struct Budget {
  int max_degree = 40;
  std::size_t max_terms = 200000;
  std::size_t max_basis = 5000;
};

// Finitely generated ideal with a monomial order and a write-once
// cached reduced Groebner basis (filled by groebner()).
struct Ideal {
  int nvars = 0;
  std::vector<std::string> var_names;  // size nvars
  MonomialOrder order = grevlex_order(0);
  std::vector<Polynomial> generators;
  mutable std::shared_ptr<const std::vector<Polynomial>> cached_basis;

  static Ideal make(std::vector<std::string> names, MonomialOrder order,
                    std::vector<Polynomial> gens);
  // Ring Q[x0..x{n-1}] with the given order and no generators.
  static Ideal zero(std::vector<std::string> names, MonomialOrder order);

  void validate() const;
  Ideal with_order(const MonomialOrder& o) const;  // drops the cache
};

std::vector<std::string> default_var_names(int nvars);

}  // namespace knotrep

#endif
