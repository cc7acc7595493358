#include "knotrep/factor.hpp"

#include <algorithm>

namespace knotrep {

namespace {

// --- dense univariate helpers (coefficients ascending by degree) ---

using Dense = std::vector<Rational>;

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

int deg(const Dense& d) { return static_cast<int>(d.size()) - 1; }

Dense derivative(const Dense& p) {
  Dense d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

// Remainder of a by b, monic Euclid.
Dense poly_mod(Dense a, const Dense& b) {
  while (deg(a) >= deg(b) && !a.empty()) {
    Rational c = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return a;
}

Dense poly_div_exact(Dense a, const Dense& b) {
  Dense q(std::max(0, deg(a) - deg(b)) + 1, Rational(0));
  while (deg(a) >= deg(b) && !a.empty()) {
    Rational c = a.back() / b.back();
    int shift = deg(a) - deg(b);
    q[shift] = c;
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) fail(ErrorCode::InternalInvariant, "inexact polynomial division");
  return q;
}

Dense poly_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

std::vector<mpz_class> divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational eval(const Dense& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

struct UniFactor {
  Dense poly;
  bool certified;
};

// Distinct irreducible-candidate factors of a nonconstant univariate
// polynomial: square-free part, then rational-root peeling. Degrees
// <= 3 that survive root extraction are certified irreducible.
std::vector<UniFactor> factor_univariate(Dense p) {
  std::vector<UniFactor> out;
  Dense g = poly_gcd(p, derivative(p));
  Dense sf = deg(g) > 0 ? poly_div_exact(p, g) : std::move(p);

  // Integer-primitive scaling for root candidates.
  mpz_class den_lcm = 1;
  for (const Rational& c : sf)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (Rational& c : sf) {
    c *= Rational(den_lcm);
    c.canonicalize();
  }

  const mpz_class kDivisorCap("1000000000000");
  mpz_class a0 = sf.front().get_num(), ad = sf.back().get_num();
  bool searched_roots = false;
  if (abs(a0) <= kDivisorCap && abs(ad) <= kDivisorCap) {
    searched_roots = true;
    for (const mpz_class& q : divisors(ad)) {
      for (const mpz_class& pnum : divisors(a0)) {
        for (int sign = 1; sign >= -1; sign -= 2) {
          if (deg(sf) < 1) break;
          Rational r(sign * pnum, q);
          r.canonicalize();
          if (eval(sf, r) != 0) continue;
          // factor den*x - num, primitive
          Dense lin{-r.get_num(), r.get_den()};
          out.push_back({lin, true});
          sf = poly_div_exact(sf, lin);
        }
      }
    }
  }

  if (deg(sf) >= 1) {
    bool certified = searched_roots && deg(sf) <= 3;
    out.push_back({sf, certified});
  }
  return out;
}

Polynomial dense_to_poly(const Dense& d, int var, int nvars,
                         const MonomialOrder& order) {
  std::vector<Term> terms;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    Monomial m(nvars);
    m.bump(var, static_cast<int>(i));
    terms.push_back({std::move(m), d[i]});
  }
  return Polynomial::from_terms(nvars, order, std::move(terms));
}

bool is_perfect_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root * root == n;
}

void push_factor(std::vector<Polynomial>& factors, Polynomial f) {
  f.make_primitive();
  for (const Polynomial& g : factors)
    if (g == f) return;
  factors.push_back(std::move(f));
}

}  // namespace

Factorization factor_polynomial(const Polynomial& p) {
  Factorization out;
  if (p.is_zero() || p.is_constant()) {
    out.certified_irreducible = true;
    return out;
  }
  const int n = p.nvars();
  const MonomialOrder& order = p.order();
  Polynomial core = p;
  core.make_primitive();
  out.certified_irreducible = true;

  // Monomial content: variables dividing every term split off as
  // factors (multiplicity is irrelevant up to radical).
  std::vector<int> min_exp(n, 1 << 30);
  for (const Term& t : core.terms())
    for (int v = 0; v < n; ++v) min_exp[v] = std::min(min_exp[v], t.mono.exp[v]);
  Monomial content(n);
  for (int v = 0; v < n; ++v)
    if (min_exp[v] > 0) {
      content.bump(v, min_exp[v]);
      push_factor(out.factors, Polynomial::variable(n, order, v));
    }
  if (content.degree > 0) {
    std::vector<Term> reduced;
    for (const Term& t : core.terms())
      reduced.push_back({mono_div(t.mono, content), t.coef});
    core = Polynomial::from_terms(n, order, std::move(reduced));
  }
  if (core.is_constant()) return out;

  std::vector<int> support;
  {
    std::vector<char> seen(n, 0);
    for (const Term& t : core.terms())
      for (int v = 0; v < n; ++v)
        if (t.mono.exp[v] > 0 && !seen[v]) {
          seen[v] = 1;
          support.push_back(v);
        }
  }

  if (support.size() == 1) {
    int var = support[0];
    Dense d;
    for (const Term& t : core.terms()) {
      int e = t.mono.exp[var];
      if (e >= static_cast<int>(d.size())) d.resize(e + 1, Rational(0));
      d[e] = t.coef;
    }
    for (UniFactor& uf : factor_univariate(std::move(d))) {
      push_factor(out.factors, dense_to_poly(uf.poly, var, n, order));
      if (!uf.certified) out.certified_irreducible = false;
    }
    return out;
  }

  // Difference of squares for two-term polynomials a^2*m1 - b^2*m2
  // with even exponents: (a*s1 - b*s2)(a*s1 + b*s2). Recurse so
  // x^4 - y^4 keeps splitting.
  if (core.term_count() == 2) {
    const Term& t1 = core.terms()[0];
    const Term& t2 = core.terms()[1];
    bool even = true;
    for (int e : t1.mono.exp) even = even && e % 2 == 0;
    for (int e : t2.mono.exp) even = even && e % 2 == 0;
    if (even && sgn(t1.coef) != sgn(t2.coef)) {
      mpz_class r1, r2;
      // core is primitive, so both coefficients are integers
      if (is_perfect_square(abs(t1.coef.get_num()), r1) &&
          is_perfect_square(abs(t2.coef.get_num()), r2)) {
        Monomial h1(n), h2(n);
        for (int v = 0; v < n; ++v) {
          if (t1.mono.exp[v] > 0) h1.bump(v, t1.mono.exp[v] / 2);
          if (t2.mono.exp[v] > 0) h2.bump(v, t2.mono.exp[v] / 2);
        }
        Rational c1(r1), c2(r2);
        if (sgn(t1.coef) < 0) c1 = -c1;
        Polynomial s1 = Polynomial::from_terms(n, order, {{h1, c1}});
        Polynomial s2 = Polynomial::from_terms(n, order, {{h2, c2}});
        for (const Polynomial& piece : {s1 - s2, s1 + s2}) {
          Factorization sub = factor_polynomial(piece);
          for (Polynomial& f : sub.factors) push_factor(out.factors, std::move(f));
          if (!sub.certified_irreducible) out.certified_irreducible = false;
        }
        return out;
      }
    }
  }

  push_factor(out.factors, core);
  if (core.degree() > 1) out.certified_irreducible = false;
  return out;
}

}  // namespace knotrep
