#ifndef KNOTREP_GROEBNER_HPP
#define KNOTREP_GROEBNER_HPP

#include "knotrep/polynomial.hpp"

namespace knotrep {

// Full normal form: no term of the result is divisible by any basis
// leading term. Deterministic: divisors are tried in basis order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const Budget& budget = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger with the coprime and chain criteria and normal (minimal
// lcm) pair selection. Output is the reduced basis, each element
// integer-primitive with positive leading coefficient, sorted
// ascending by leading monomial: canonical for the ideal and order.
std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens,
                                         const MonomialOrder& order,
                                         const Budget& budget = {});

// Cached entry point; fills I.cached_basis on first use.
const std::vector<Polynomial>& groebner(const Ideal& I, const Budget& budget = {});

// Self-check: every pairwise S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& basis,
                       const Budget& budget = {});

// True when the (reduced) basis exhibits 1, i.e. V is empty.
bool is_unit_basis(const std::vector<Polynomial>& basis);

}  // namespace knotrep

#endif
