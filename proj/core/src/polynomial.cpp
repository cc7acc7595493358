#include "knotrep/polynomial.hpp"

#include <algorithm>
#include <map>

namespace knotrep {

Polynomial Polynomial::constant(int nvars, const MonomialOrder& o, Rational c) {
  Polynomial p(nvars, o);
  if (c != 0) p.terms_.push_back({Monomial(nvars), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(int nvars, const MonomialOrder& o, int v) {
  if (v < 0 || v >= nvars) fail(ErrorCode::OutOfRange, "variable index out of range");
  Polynomial p(nvars, o);
  Monomial m(nvars);
  m.bump(v, 1);
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, const MonomialOrder& o,
                                  std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return o.compare(a.mono, b.mono) > 0;
  });
  Polynomial p(nvars, o);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coef += t.coef;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  }
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) fail(ErrorCode::InternalInvariant, "leading term of zero");
  return terms_[0];
}

Polynomial Polynomial::tail() const {
  Polynomial p(nvars_, order_);
  if (!terms_.empty()) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

Polynomial Polynomial::with_order(const MonomialOrder& o) const {
  if (o == order_) return *this;
  Polynomial p(nvars_, o);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return o.compare(a.mono, b.mono) > 0;
  });
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || !(order_ == o.order_))
    fail(ErrorCode::InternalInvariant, "polynomial ring mismatch in +");
  Polynomial r(nvars_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || !(order_ == o.order_))
    fail(ErrorCode::InternalInvariant, "polynomial ring mismatch in *");
  auto cmp = [this](const Monomial& a, const Monomial& b) {
    return order_.compare(a, b) > 0;  // descending
  };
  std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Monomial m = mono_mul(a.mono, b.mono);
      Rational c = a.coef * b.coef;
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
      }
    }
  Polynomial r(nvars_, order_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_, order_);
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(nvars_, order_);
  Polynomial p = *this;
  for (Term& t : p.terms_) {
    t.mono = mono_mul(t.mono, m);
    t.coef *= c;
  }
  return p;  // multiplying by a fixed monomial preserves the term order
}

void Polynomial::make_primitive() {
  if (terms_.empty()) return;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coef.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coef.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_[0].coef < 0) scale = -scale;
  for (Term& t : terms_) {
    t.coef *= scale;
    t.coef.canonicalize();
  }
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values,
                                  int out_nvars,
                                  const MonomialOrder& o_out) const {
  if (static_cast<int>(values.size()) != nvars_)
    fail(ErrorCode::InternalInvariant, "substitution needs one value per variable");
  Polynomial acc(out_nvars, o_out);
  for (const Term& t : terms_) {
    Polynomial prod = Polynomial::constant(out_nvars, o_out, t.coef);
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < t.mono.exp[v]; ++k) prod = prod * values[v];
    acc = acc + prod;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_) return false;
  if (order_ == o.order_) return terms_ == o.terms_;
  return terms_ == o.with_order(order_).terms_;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names(nvars);
  for (int i = 0; i < nvars; ++i) names[i] = "x" + std::to_string(i);
  return names;
}

Ideal Ideal::make(std::vector<std::string> names, MonomialOrder order,
                  std::vector<Polynomial> gens) {
  Ideal I;
  I.nvars = static_cast<int>(names.size());
  I.var_names = std::move(names);
  I.order = std::move(order);
  I.generators = std::move(gens);
  I.validate();
  return I;
}

Ideal Ideal::zero(std::vector<std::string> names, MonomialOrder order) {
  return make(std::move(names), std::move(order), {});
}

void Ideal::validate() const {
  if (nvars < 0 || nvars > kMaxVariables)
    fail(ErrorCode::Unsupported,
         "rings are limited to " + std::to_string(kMaxVariables) + " variables");
  if (static_cast<int>(var_names.size()) != nvars)
    fail(ErrorCode::InvalidInput, "variable name list size mismatch");
  if (order.nvars() != nvars)
    fail(ErrorCode::InvalidInput, "monomial order arity mismatch");
  for (const Polynomial& g : generators) {
    if (g.nvars() != nvars)
      fail(ErrorCode::InvalidInput, "generator lives in a different ring");
    if (!(g.order() == order))
      fail(ErrorCode::InvalidInput, "generator sorted under a different order");
  }
}

Ideal Ideal::with_order(const MonomialOrder& o) const {
  Ideal J;
  J.nvars = nvars;
  J.var_names = var_names;
  J.order = o;
  for (const Polynomial& g : generators) J.generators.push_back(g.with_order(o));
  return J;
}

}  // namespace knotrep
