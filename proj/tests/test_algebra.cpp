#include <doctest.h>

#include <algorithm>
#include <random>

#include "knotrep/components.hpp"
#include "knotrep/dimension.hpp"
#include "knotrep/elimination.hpp"
#include "knotrep/factor.hpp"
#include "knotrep/poly_text.hpp"
#include "knotrep/radical.hpp"
#include "oracles.hpp"

using namespace knotrep;

namespace {

Polynomial poly(const std::string& text, const std::vector<std::string>& names) {
  return parse_polynomial(text, names, grevlex_order(static_cast<int>(names.size())));
}

std::string basis_text(const Ideal& I, const Budget& b = {}) {
  std::string out;
  for (const Polynomial& p : groebner(I, b)) {
    out += polynomial_to_text(p, I.var_names);
    out += '\n';
  }
  return out;
}

Monomial mono(std::vector<int> exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (size_t i = 0; i < exps.size(); ++i) m.bump(static_cast<int>(i), exps[i]);
  return m;
}

}  // namespace

TEST_CASE("monomial orders") {
  const MonomialOrder lex = lex_order(2), grev = grevlex_order(2);
  const Monomial x = mono({1, 0}), y2 = mono({0, 2});
  CHECK(lex.compare(x, y2) > 0);    // lex ignores degree
  CHECK(grev.compare(x, y2) < 0);   // grevlex compares degree first
  CHECK(grev.compare(mono({2, 1}), mono({1, 2})) > 0);
  CHECK(lex.compare(mono({2, 1}), mono({1, 2})) > 0);
  CHECK(grev.compare(x, x) == 0);

  // block order: anything touching the eliminated block is larger
  const MonomialOrder block = block_order(2, {1});
  CHECK(block.compare(mono({0, 1}), mono({5, 0})) > 0);
}

TEST_CASE("polynomial arithmetic") {
  const std::vector<std::string> names = {"x", "y"};
  const Polynomial x = poly("x", names), y = poly("y", names);
  CHECK((x + y) * (x + y) == poly("x^2 + 2*x*y + y^2", names));
  CHECK((x - y) * (x + y) == poly("x^2 - y^2", names));
  CHECK((x * y - poly("1", names)).degree() == 2);
  CHECK(poly("0", names).is_zero());
  CHECK(poly("x - x", names).is_zero());
  CHECK(Polynomial(2, grevlex_order(2)).degree() == -1);

  Polynomial p = poly("2/3*x + 4/3", names);
  p.make_primitive();
  CHECK(p == poly("x + 2", names));
  Polynomial q = poly("-x^2 + y", names);
  q.make_primitive();
  CHECK(q == poly("x^2 - y", names));  // positive leading coefficient

  CHECK(poly("x^2 + y", names).leading().mono == mono({2, 0}));
  CHECK(poly("x^2 + y", names).tail() == y);

  // substitution x -> t^2, y -> t^3 into x^3 - y^2 collapses to zero
  const std::vector<std::string> tn = {"t"};
  const MonomialOrder to = grevlex_order(1);
  const Polynomial t = poly("t", tn);
  CHECK(poly("x^3 - y^2", names).substitute({t * t, t * t * t}, 1, to).is_zero());
}

TEST_CASE("polynomial text round trip") {
  const std::vector<std::string> names = {"x", "y", "z"};
  for (const char* text : {"x^2 - 1/2*y + 3", "x*y*z - x - y - z", "-x + 1",
                           "7", "0", "x^4 - 2*x^2*y^2 + y^4"}) {
    CAPTURE(text);
    const Polynomial p = poly(text, names);
    CHECK(poly(polynomial_to_text(p, names), names) == p);
  }
  CHECK_THROWS_AS(poly("w + 1", names), Error);
  CHECK_THROWS_AS(poly("x +", names), Error);
  CHECK_THROWS_AS(poly("x ^ y", names), Error);

  const Ideal I = ideal_of({"x", "y"}, {"x^2 + y^2 - 1", "x - y"});
  const Ideal back = parse_ideal_text(ideal_to_text(I));
  CHECK(back.var_names == I.var_names);
  REQUIRE(back.generators.size() == I.generators.size());
  for (size_t i = 0; i < back.generators.size(); ++i)
    CHECK(back.generators[i] == I.generators[i]);
}

TEST_CASE("reduced groebner bases: frozen small cases") {
  // circle and diagonal: intersection carries the relation 2y^2 = 1
  CHECK(basis_text(ideal_of({"x", "y"}, {"x^2 + y^2 - 1", "x - y"})) ==
        "x - y\n2*y^2 - 1\n");
  // circle and tangent line: double contact point
  CHECK(basis_text(ideal_of({"x", "y"}, {"x^2 + y^2 - 1", "x - 1"})) ==
        "x - 1\ny^2\n");
  // generator order cannot matter
  CHECK(basis_text(ideal_of({"x", "y"}, {"x - y", "x^2 + y^2 - 1"})) ==
        "x - y\n2*y^2 - 1\n");
  // inconsistent system collapses to 1
  CHECK(basis_text(ideal_of({"x", "y"}, {"x", "x - 1"})) == "1\n");
  CHECK(is_unit_basis(groebner(ideal_of({"x", "y"}, {"x", "x - 1"}))));
  // zero ideal
  CHECK(basis_text(Ideal::zero({"x", "y"}, grevlex_order(2))).empty());
  CHECK(basis_text(ideal_of({"x"}, {"0"})).empty());
}

TEST_CASE("groebner output self-verifies and is idempotent") {
  const std::vector<Ideal> fixtures = {
      ideal_of({"x", "y"}, {"x^2 + y^2 - 1", "x - y"}),
      ideal_of({"x", "y"}, {"x*y - 1"}),
      ideal_of({"t", "x", "y"}, {"x - t^2", "y - t^3"}),
      ideal_of({"x", "y"}, {"x^2 + y^2"}),
      ideal_of({"x", "y", "z"}, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}),
      ideal_of({"x", "y"}, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}),
  };
  for (size_t i = 0; i < fixtures.size(); ++i) {
    CAPTURE(i);
    const auto& basis = groebner(fixtures[i]);
    CHECK(is_groebner_basis(basis));
    CHECK(reduced_groebner(basis, fixtures[i].order) == basis);
    for (const Polynomial& g : basis) {
      CHECK(normal_form(g, basis).is_zero());
      // primitive integer coefficients, positive leading coefficient
      CHECK(g.leading().coef > 0);
      mpz_class content = 0;
      for (const Term& t : g.terms()) {
        CHECK(t.coef.get_den() == 1);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                t.coef.get_num().get_mpz_t());
      }
      CHECK(content == 1);
    }
    // ascending by leading monomial
    for (size_t k = 1; k < basis.size(); ++k)
      CHECK(fixtures[i].order.less(basis[k - 1].leading().mono, basis[k].leading().mono));
  }
}

TEST_CASE("groebner cache fills once") {
  const Ideal I = ideal_of({"x", "y"}, {"x*y - 1", "x^2"});
  const auto* first = &groebner(I);
  const auto* second = &groebner(I);
  CHECK(first == second);
  CHECK(I.cached_basis != nullptr);
}

TEST_CASE("s-polynomial cancels leading terms") {
  const std::vector<std::string> names = {"x", "y"};
  const Polynomial f = poly("x^2 + y^2 - 1", names), g = poly("x - y", names);
  CHECK(s_polynomial(f, g) == poly("x*y + y^2 - 1", names));
  const Polynomial s = s_polynomial(f, f * poly("y", names));
  CHECK(s.is_zero());
}

TEST_CASE("normal form soundness on random combinations") {
  const Ideal I = ideal_of({"x", "y", "z"},
                           {"x^2 - y", "y^2 - z", "x*y*z - 1"});
  const auto& basis = groebner(I);
  std::mt19937 rng(97531u);
  std::uniform_int_distribution<int> coef(-4, 4), e(0, 2);
  const MonomialOrder o = I.order;
  for (int trial = 0; trial < 60; ++trial) {
    auto random_poly = [&] {
      std::vector<Term> terms;
      for (int t = 0; t < 4; ++t) {
        Term term;
        term.mono = mono({e(rng), e(rng), e(rng)});
        term.coef = coef(rng);
        if (term.coef != 0) terms.push_back(term);
      }
      return Polynomial::from_terms(3, o, terms);
    };
    const Polynomial f = random_poly(), g = random_poly();
    const Polynomial lhs = normal_form(f + g, basis);
    const Polynomial rhs = normal_form(normal_form(f, basis) + normal_form(g, basis), basis);
    CHECK(lhs == rhs);
    // nothing in a normal form is divisible by a basis leading term
    for (const Term& t : lhs.terms())
      for (const Polynomial& b : basis)
        CHECK(!mono_divides(b.leading().mono, t.mono));
  }
}

TEST_CASE("krull dimension of the standard examples") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(krull_dimension(Ideal::zero(default_var_names(n), grevlex_order(n))) == n);
  }
  CHECK(krull_dimension(ideal_of({"x", "y"}, {"x*y - 1"})) == 1);
  CHECK(krull_dimension(ideal_of({"x", "y"}, {"x"})) == 1);
  CHECK(krull_dimension(ideal_of({"x", "y"}, {"x", "y"})) == 0);
  CHECK(krull_dimension(ideal_of({"x", "y"}, {"x", "x - 1"})) == -1);
  CHECK(krull_dimension(ideal_of({"t", "x", "y"}, {"x - t^2", "y - t^3"})) == 1);

  const DimensionReport even = dimension_report(ideal_of({"x", "y"}, {"x^2 + y^2"}));
  CHECK(even.dimension == 1);
  CHECK(even.real_radical_caveat);  // the real zero set is the origin

  const DimensionReport circle =
      dimension_report(ideal_of({"x", "y"}, {"x^2 + y^2 - 1"}));
  CHECK(circle.dimension == 1);
  CHECK(!circle.real_radical_caveat);

  const DimensionReport hyper = dimension_report(ideal_of({"x", "y"}, {"x*y - 1"}));
  CHECK(hyper.dimension == 1);
  CHECK(hyper.independent_set.size() == 1);
}

TEST_CASE("krull dimension is monotone under adding generators") {
  const std::vector<std::pair<Ideal, Ideal>> nested = {
      {ideal_of({"x", "y"}, {"x*y - 1"}), ideal_of({"x", "y"}, {"x*y - 1", "x - 1"})},
      {Ideal::zero({"x", "y"}, grevlex_order(2)), ideal_of({"x", "y"}, {"x"})},
      {ideal_of({"x", "y"}, {"x"}), ideal_of({"x", "y"}, {"x", "y"})},
      {ideal_of({"x", "y", "z"}, {"z - x*y"}),
       ideal_of({"x", "y", "z"}, {"z - x*y", "x^2 - y"})},
  };
  for (size_t i = 0; i < nested.size(); ++i) {
    CAPTURE(i);
    CHECK(krull_dimension(nested[i].second) <= krull_dimension(nested[i].first));
  }
}

TEST_CASE("elimination: twisted cubic projection matches the resultant oracle") {
  // names t, x, y; dropping t projects the curve (t^2, t^3) to the plane
  const Ideal I = ideal_of({"t", "x", "y"}, {"x - t^2", "y - t^3"});
  const Ideal J = eliminate(I, {0});
  CHECK(J.var_names == std::vector<std::string>{"x", "y"});
  REQUIRE(J.generators.size() == 1);
  CHECK(polynomial_to_text(J.generators[0], J.var_names) == "x^3 - y^2");

  // independent derivation: Sylvester resultant of the two generators
  // in t, then strip the unused t slot
  Polynomial res = oracles::sylvester_resultant(
      poly("t^2 - x", {"t", "x", "y"}), poly("t^3 - y", {"t", "x", "y"}), 0);
  res.make_primitive();
  const Polynomial embedded =
      J.generators[0].substitute({poly("x", {"t", "x", "y"}), poly("y", {"t", "x", "y"})},
                                 3, I.order);
  CHECK((res == embedded || res == -embedded));
}

TEST_CASE("elimination basics") {
  // projecting the hyperbola to the x-axis is dense: zero ideal
  const Ideal hyper = ideal_of({"x", "y"}, {"x*y - 1"});
  CHECK(eliminate(hyper, {1}).generators.empty());
  CHECK(eliminate(hyper, {0}).generators.empty());

  // dropping nothing returns the reduced basis
  const Ideal same = eliminate(hyper, {});
  REQUIRE(same.generators.size() == 1);
  CHECK(polynomial_to_text(same.generators[0], same.var_names) == "x*y - 1");

  // circle to axis: the shadow is cut out by nothing over Q (full line
  // closure), but the vertical line x = 2 misses the circle
  const Ideal far = ideal_of({"x", "y"}, {"x^2 + y^2 - 1", "x - 2"});
  const Ideal shadow = eliminate(far, {1});
  REQUIRE(shadow.generators.size() == 1);
  CHECK(polynomial_to_text(shadow.generators[0], shadow.var_names) == "x - 2");
}

TEST_CASE("eliminate then re-embed: outputs stay in the ideal") {
  const std::vector<std::pair<Ideal, std::vector<int>>> cases = {
      {ideal_of({"t", "x", "y"}, {"x - t^2", "y - t^3"}), {0}},
      {ideal_of({"x", "y", "z"}, {"x*y - z", "x^2 - y"}), {0}},
      {ideal_of({"x", "y", "z"}, {"x + y + z", "x*y + y*z + z*x"}), {1}},
  };
  for (size_t ci = 0; ci < cases.size(); ++ci) {
    CAPTURE(ci);
    const Ideal& I = cases[ci].first;
    const std::vector<int>& drop = cases[ci].second;
    const Ideal J = eliminate(I, drop);
    std::vector<int> kept;
    for (int v = 0; v < I.nvars; ++v)
      if (std::find(drop.begin(), drop.end(), v) == drop.end()) kept.push_back(v);
    std::vector<Polynomial> lift;
    for (int v : kept)
      lift.push_back(Polynomial::variable(I.nvars, I.order, v));
    for (const Polynomial& g : J.generators) {
      const Polynomial back = g.substitute(lift, I.nvars, I.order);
      CHECK(normal_form(back, groebner(I)).is_zero());
    }
  }
}

TEST_CASE("radical membership by Rabinowitsch") {
  const Ideal sq = ideal_of({"x", "y"}, {"x^2"});
  CHECK(radical_member(poly("x", {"x", "y"}), sq));
  CHECK(radical_member(poly("x*y", {"x", "y"}), sq));
  CHECK(!radical_member(poly("y", {"x", "y"}), sq));

  const Ideal cusp = ideal_of({"x", "y"}, {"x^3 - y^2"});
  CHECK(radical_member(poly("x^3 - y^2", {"x", "y"}), cusp));
  CHECK(!radical_member(poly("x - y", {"x", "y"}), cusp));

  // the unit ideal has empty zero set, so everything is a member
  const Ideal unit = ideal_of({"x"}, {"1"});
  CHECK(radical_member(poly("x", {"x"}), unit));

  // zero is in every radical
  CHECK(radical_member(Polynomial(2, grevlex_order(2)), sq));
}

TEST_CASE("ideal_equal classifies radical containment") {
  const auto xy = std::vector<std::string>{"x", "y"};
  CHECK(ideal_equal(ideal_of(xy, {"x"}), ideal_of(xy, {"x^2"})) ==
        IdealRelation::Equal);
  CHECK(ideal_equal(ideal_of(xy, {"x*y"}), ideal_of(xy, {"x"})) ==
        IdealRelation::FirstInSecond);
  CHECK(ideal_equal(ideal_of(xy, {"x"}), ideal_of(xy, {"x*y"})) ==
        IdealRelation::SecondInFirst);
  CHECK(ideal_equal(ideal_of(xy, {"x - 1"}), ideal_of(xy, {"y - 1"})) ==
        IdealRelation::Incomparable);
  CHECK(std::string(ideal_relation_name(IdealRelation::Equal)) == "Equal");
}

TEST_CASE("partial factorization results") {
  auto factor_of = [](const std::string& text, const std::vector<std::string>& names) {
    return factor_polynomial(poly(text, names));
  };
  const std::vector<std::string> xy = {"x", "y"}, x1 = {"x"};

  Factorization f = factor_of("x^2 - 1", x1);
  CHECK(f.factors.size() == 2);
  CHECK(f.certified_irreducible);

  f = factor_of("x*y", xy);
  CHECK(f.factors.size() == 2);
  CHECK(f.certified_irreducible);

  f = factor_of("x^2 + y^2 - 1", xy);
  CHECK(f.factors.size() == 1);
  CHECK(!f.certified_irreducible);  // multivariate: honesty over optimism

  f = factor_of("x^4 - y^4", xy);
  CHECK(f.factors.size() == 3);

  f = factor_of("x^3 - x", x1);
  CHECK(f.factors.size() == 3);
  CHECK(f.certified_irreducible);

  f = factor_of("6*x^2 - 5*x + 1", x1);
  CHECK(f.factors.size() == 2);
  CHECK(f.certified_irreducible);

  f = factor_of("x^2 + 1", x1);
  CHECK(f.factors.size() == 1);
  CHECK(f.certified_irreducible);

  f = factor_of("x^2 - 2", x1);
  CHECK(f.factors.size() == 1);
  CHECK(f.certified_irreducible);

  f = factor_of("x^2*y^3", xy);
  CHECK(f.factors.size() == 2);  // distinct factors, no multiplicities
  CHECK(f.certified_irreducible);

  f = factor_of("3*x - 6", x1);
  CHECK(f.factors.size() == 1);
  CHECK(f.certified_irreducible);

  CHECK(factor_of("5", x1).factors.empty());
  CHECK(factor_of("0", x1).factors.empty());

  // every emitted factor divides into the radical: factor * rest
  // vanishes where the input does
  for (const char* text : {"x^2 - 1", "x^3 - x", "x^4 - y^4", "x^2*y^3"}) {
    CAPTURE(text);
    const Polynomial p = poly(text, xy);
    const Ideal I = Ideal::make(xy, grevlex_order(2), {p});
    Polynomial prod = Polynomial::constant(2, grevlex_order(2), 1);
    for (const Polynomial& q : factor_polynomial(p).factors) prod = prod * q;
    CHECK(radical_member(prod, I));
  }
}

TEST_CASE("component splitting") {
  const auto xy = std::vector<std::string>{"x", "y"};

  SplitResult s = split_components(ideal_of(xy, {"x*y"}));
  REQUIRE(s.branches.size() == 2);
  CHECK(s.fully_split);
  CHECK(basis_text(s.branches[0]) == "x\n");
  CHECK(basis_text(s.branches[1]) == "y\n");

  s = split_components(ideal_of(xy, {"x^2 - 1"}));
  REQUIRE(s.branches.size() == 2);
  CHECK(s.fully_split);

  s = split_components(ideal_of(xy, {"x^2 + y^2 - 1"}));
  CHECK(s.branches.size() == 1);
  CHECK(!s.fully_split);  // lone multivariate generator, never certified

  s = split_components(ideal_of(xy, {"x^2 - 1", "y^2 - 1"}));
  CHECK(s.branches.size() == 4);
  CHECK(s.fully_split);

  s = split_components(ideal_of(xy, {"x^2 - x", "x*y"}));
  REQUIRE(s.branches.size() == 2);
  CHECK(basis_text(s.branches[0]) == "x\n");
  CHECK(basis_text(s.branches[1]) == "y\nx - 1\n");

  CHECK(split_components(ideal_of(xy, {"1"})).branches.empty());

  // containment pruning: (x^2 - x, y) splits to x = 0 and x = 1 slices
  // of the line y = 0; neither absorbs the other
  s = split_components(ideal_of(xy, {"x^2 - x", "y"}));
  CHECK(s.branches.size() == 2);
}

TEST_CASE("split branches jointly reconstruct the radical") {
  for (const char* gen : {"x*y", "x^2 - 1"}) {
    CAPTURE(gen);
    const Ideal I = ideal_of({"x", "y"}, {gen});
    const SplitResult s = split_components(I);
    REQUIRE(s.branches.size() == 2);
    for (const Polynomial& a : s.branches[0].generators)
      for (const Polynomial& b : s.branches[1].generators)
        CHECK(radical_member(a * b, I));
    // each branch refines the input: I sits inside every branch
    for (const Ideal& branch : s.branches)
      for (const Polynomial& g : I.generators)
        CHECK(normal_form(g, groebner(branch)).is_zero());
  }
}

TEST_CASE("branch cap stops splitting without lying about it") {
  const Ideal I = ideal_of({"x", "y"}, {"x^2 - 1", "y^2 - 1"});
  const SplitResult s = split_components(I, {}, 2);
  CHECK(!s.fully_split);
  CHECK(!s.branches.empty());
}

TEST_CASE("degree budget failures are loud") {
  Budget tight;
  tight.max_degree = 3;
  const Ideal I = ideal_of({"x", "y"}, {"x^5 - 1", "x*y - 1"});
  CHECK_THROWS_AS(groebner(I, tight), Error);
  try {
    reduced_groebner(I.generators, I.order, tight);
    FAIL("expected DegreeBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBudgetExceeded);
  }
}

TEST_CASE("determinism: rebuilt ideals serialize identically") {
  auto build = [] {
    return ideal_of({"x", "y", "z"},
                    {"x^2*y - z^3", "x*z - y^2", "y*z^2 - x"});
  };
  const Ideal a = build(), b = build();
  CHECK(basis_text(a) == basis_text(b));
  CHECK(ideal_to_text(a) == ideal_to_text(b));
}
