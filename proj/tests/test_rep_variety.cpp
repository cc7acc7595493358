#include <doctest.h>

#include <algorithm>

#include "knotrep/dimension.hpp"
#include "knotrep/poly_text.hpp"
#include "knotrep/rep_variety.hpp"
#include "support.hpp"

using namespace knotrep;
using knotrep::tests::fixture_diagram;

namespace {

Presentation simplified(const char* fixture) {
  return tietze_simplify(wirtinger(fixture_diagram(fixture))).first;
}

// Exact evaluation of every generator at a rational point given per
// variable; all must vanish.
void check_point(const Ideal& I, const std::vector<Rational>& point) {
  REQUIRE(static_cast<int>(point.size()) == I.nvars);
  const MonomialOrder out = grevlex_order(1);
  std::vector<Polynomial> values;
  for (const Rational& c : point)
    values.push_back(Polynomial::constant(1, out, c));
  for (const Polynomial& g : I.generators) {
    CAPTURE(polynomial_to_text(g, I.var_names));
    CHECK(g.substitute(values, 1, out).is_zero());
  }
}

}  // namespace

TEST_CASE("target and gauge names round trip") {
  CHECK(RepTarget::from_name("su2") == RepTarget::su2());
  CHECK(RepTarget::from_name("so3") == RepTarget::so(3));
  CHECK(RepTarget::su2().name() == "su2");
  CHECK(RepTarget::so(4).name() == "so4");
  CHECK(RepTarget::su2().vars_per_generator() == 4);
  CHECK(RepTarget::so(3).vars_per_generator() == 9);
  CHECK_THROWS_AS(RepTarget::from_name("so5"), Error);
  CHECK_THROWS_AS(RepTarget::from_name("u1"), Error);
  CHECK_THROWS_AS(RepTarget::so(5), Error);
  CHECK_THROWS_AS(RepTarget::so(1), Error);

  CHECK(gauge_from_name("none") == GaugeKind::None);
  CHECK(gauge_from_name("fix1") == GaugeKind::FixFirstGenerator);
  CHECK(std::string(gauge_name(GaugeKind::FixFirstGenerator)) == "fix1");
  CHECK_THROWS_AS(gauge_from_name("fix2"), Error);
}

TEST_CASE("group ideals have the expected shapes and dimensions") {
  const Ideal su2 = group_ideal(RepTarget::su2());
  CHECK(su2.nvars == 4);
  CHECK(su2.generators.size() == 1);  // unit norm
  CHECK(krull_dimension(su2) == 3);

  const Ideal so2 = group_ideal(RepTarget::so(2));
  CHECK(so2.nvars == 4);
  CHECK(so2.generators.size() == 4);  // 3 orthonormality + determinant
  CHECK(krull_dimension(so2) == 1);

  const Ideal so3 = group_ideal(RepTarget::so(3));
  CHECK(so3.nvars == 9);
  CHECK(so3.generators.size() == 7);  // 6 orthonormality + determinant
  CHECK(krull_dimension(so3) == 3);

  const Ideal so4 = group_ideal(RepTarget::so(4));
  CHECK(so4.nvars == 16);
  CHECK(so4.generators.size() == 11);  // 10 orthonormality + determinant
  CHECK(krull_dimension(so4) == 6);
}

TEST_CASE("group elements are points of the group ideal") {
  // the identity matrix sits on SO(3)
  check_point(group_ideal(RepTarget::so(3)),
              {1, 0, 0, 0, 1, 0, 0, 0, 1});
  // the 3-cycle rotation by 2pi/3 about (1,1,1), as a permutation matrix
  check_point(group_ideal(RepTarget::so(3)),
              {0, 0, 1, 1, 0, 0, 0, 1, 0});
  // the unit quaternion i
  check_point(group_ideal(RepTarget::su2()), {0, 1, 0, 0});
  // a non-point must fail: the zero matrix is not orthogonal
  const Ideal so3 = group_ideal(RepTarget::so(3));
  const MonomialOrder out = grevlex_order(1);
  std::vector<Polynomial> zeros(9, Polynomial::constant(1, out, 0));
  bool some_nonzero = false;
  for (const Polynomial& g : so3.generators)
    some_nonzero = some_nonzero || !g.substitute(zeros, 1, out).is_zero();
  CHECK(some_nonzero);
}

TEST_CASE("rep ideal shapes for the fixtures") {
  const Presentation trefoil = simplified("trefoil.braid");
  REQUIRE(trefoil.generator_count == 2);
  REQUIRE(trefoil.relators.size() == 1);

  const RepVarietyModel su2 =
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::None);
  CHECK(su2.ideal.nvars == 8);
  // 2 group equations + 4 relator components
  CHECK(su2.ideal.generators.size() == 6);
  CHECK(su2.scheme.pins.empty());
  CHECK(su2.ideal.var_names[0] == "a0");
  CHECK(su2.ideal.var_names[4] == "a1");

  const RepVarietyModel pinned =
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::FixFirstGenerator);
  CHECK(pinned.ideal.generators.size() == 8);  // + c0, d0 pins
  CHECK(pinned.scheme.pins.size() == 2);

  const Presentation unknot = simplified("unknot.braid");
  const RepVarietyModel so3 =
      build_rep_ideal(unknot, RepTarget::so(3), GaugeKind::None);
  CHECK(so3.ideal.nvars == 9);
  CHECK(so3.ideal.generators.size() == 7);
}

TEST_CASE("gauge pins only add equations") {
  const Presentation trefoil = simplified("trefoil.braid");
  for (const char* target : {"su2", "so3"}) {
    CAPTURE(target);
    const RepVarietyModel plain =
        build_rep_ideal(trefoil, RepTarget::from_name(target), GaugeKind::None);
    const RepVarietyModel pinned = build_rep_ideal(
        trefoil, RepTarget::from_name(target), GaugeKind::FixFirstGenerator);
    REQUIRE(plain.ideal.generators.size() <= pinned.ideal.generators.size());
    for (size_t i = 0; i < plain.ideal.generators.size(); ++i)
      CHECK(plain.ideal.generators[i] == pinned.ideal.generators[i]);
  }
}

TEST_CASE("adding a relator only adds equations") {
  Presentation p = simplified("trefoil.braid");
  Presentation extended = p;
  extended.relators.push_back({1, 2, 1, 2, 1, 2});  // any extra relator
  const RepVarietyModel base =
      build_rep_ideal(p, RepTarget::su2(), GaugeKind::None);
  const RepVarietyModel more =
      build_rep_ideal(extended, RepTarget::su2(), GaugeKind::None);
  REQUIRE(base.ideal.generators.size() < more.ideal.generators.size());
  for (size_t i = 0; i < base.ideal.generators.size(); ++i)
    CHECK(base.ideal.generators[i] == more.ideal.generators[i]);
}

TEST_CASE("abelian representations are exact rational points") {
  // both generators to the same group element kills every knot-group
  // relator, so the tuple must satisfy the full relator equations
  const Presentation trefoil = simplified("trefoil.braid");

  const RepVarietyModel su2 =
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::None);
  check_point(su2.ideal, {0, 1, 0, 0, 0, 1, 0, 0});       // both -> i
  check_point(su2.ideal, {1, 0, 0, 0, 1, 0, 0, 0});       // both -> 1
  Rational h(1, 2);
  // both -> (1 + i + j + k)/2, a 6th root of unity in the quaternions
  check_point(su2.ideal, {h, h, h, h, h, h, h, h});

  const RepVarietyModel so3 =
      build_rep_ideal(trefoil, RepTarget::so(3), GaugeKind::None);
  std::vector<Rational> cycle = {0, 0, 1, 1, 0, 0, 0, 1, 0};
  std::vector<Rational> both;
  both.insert(both.end(), cycle.begin(), cycle.end());
  both.insert(both.end(), cycle.begin(), cycle.end());
  check_point(so3.ideal, both);  // both -> rotation by 2pi/3
}

TEST_CASE("abelian slice recovers the group ideal exactly") {
  for (const char* fixture : {"unknot.braid", "trefoil.braid", "figure8.dt"}) {
    for (const char* target : {"su2", "so3"}) {
      CAPTURE(fixture);
      CAPTURE(target);
      const RepVarietyModel m = build_rep_ideal(
          simplified(fixture), RepTarget::from_name(target), GaugeKind::None);
      const Ideal slice = abelian_slice(m);
      const Ideal group = group_ideal(RepTarget::from_name(target));
      CHECK(ideal_to_text(slice) == ideal_to_text(group));
      CHECK(krull_dimension(slice) == 3);
    }
  }
}

TEST_CASE("abelian slice rejects relators with nonzero exponent sum") {
  Presentation p;
  p.generator_count = 1;
  p.relators = {{1, 1}};  // g^2: exponent sum 2 survives identification
  const RepVarietyModel m = build_rep_ideal(p, RepTarget::su2(), GaugeKind::None);
  try {
    abelian_slice(m);
    FAIL("expected RelatorSurvived");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelatorSurvived);
  }
}

TEST_CASE("variety dimensions of the fixture models") {
  const Presentation unknot = simplified("unknot.braid");
  const Presentation trefoil = simplified("trefoil.braid");

  DimInvariant d = variety_dimension(
      build_rep_ideal(unknot, RepTarget::su2(), GaugeKind::None));
  CHECK(d.dimension_list == std::vector<int>{3});
  CHECK(!d.budget_exceeded);
  CHECK(!d.real_radical_caveat);

  d = variety_dimension(
      build_rep_ideal(unknot, RepTarget::so(3), GaugeKind::None));
  CHECK(d.dimension_list == std::vector<int>{3});

  d = variety_dimension(
      build_rep_ideal(unknot, RepTarget::su2(), GaugeKind::FixFirstGenerator));
  CHECK(d.dimension_list == std::vector<int>{1});

  d = variety_dimension(
      build_rep_ideal(unknot, RepTarget::so(2), GaugeKind::None));
  CHECK(d.dimension_list == std::vector<int>{1});

  // ungauged trefoil: conjugation keeps everything 4-dimensional
  d = variety_dimension(
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::None));
  CHECK(d.dimension_list == std::vector<int>{4});

  // gauged trefoil: the abelian circle and a pinned irreducible piece
  d = variety_dimension(
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::FixFirstGenerator));
  CHECK(d.dimension_list == std::vector<int>{2, 1});
  CHECK(std::is_sorted(d.dimension_list.rbegin(), d.dimension_list.rend()));
  CHECK(!d.budget_exceeded);
}

TEST_CASE("variety dimension respects the budget flag") {
  const Presentation trefoil = simplified("trefoil.braid");
  Budget tight;
  tight.max_degree = 2;
  const DimInvariant d = variety_dimension(
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::None), tight);
  CHECK(d.budget_exceeded);
  CHECK(!d.certified);
}

TEST_CASE("su2 words with inverse letters still vanish on group points") {
  // relator with inverses: quaternion conjugate must act as inverse on
  // the unit sphere
  Presentation p;
  p.generator_count = 2;
  p.relators = {{1, 2, -1, -2}};  // commutator: forces an abelian pair
  const RepVarietyModel m = build_rep_ideal(p, RepTarget::su2(), GaugeKind::None);
  // i and -i commute
  check_point(m.ideal, {0, 1, 0, 0, 0, -1, 0, 0});
  // i and j do not: some equation must flag the pair
  const MonomialOrder out = grevlex_order(1);
  std::vector<Polynomial> vals;
  for (int c : {0, 1, 0, 0, 0, 0, 1, 0})
    vals.push_back(Polynomial::constant(1, out, c));
  bool violated = false;
  for (const Polynomial& g : m.ideal.generators)
    violated = violated || !g.substitute(vals, 1, out).is_zero();
  CHECK(violated);
}

TEST_CASE("model dump is deterministic and self-describing") {
  const Presentation trefoil = simplified("trefoil.braid");
  const RepVarietyModel m =
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::FixFirstGenerator);
  const std::string dump1 = model_dump(m);
  const std::string dump2 = model_dump(
      build_rep_ideal(trefoil, RepTarget::su2(), GaugeKind::FixFirstGenerator));
  CHECK(dump1 == dump2);
  CHECK(dump1.rfind("{\"schema\":1", 0) == 0);
  CHECK(dump1.find("\"target\":\"su2\"") != std::string::npos);
  CHECK(dump1.find("\"gauge\":\"fix1\"") != std::string::npos);
  CHECK(dump1.find("c0") != std::string::npos);  // pinned variable listed
  CHECK(dump1.find("vars:") != std::string::npos);  // ideal text follows
}

TEST_CASE("generator cap yields a structured error") {
  Presentation wide;
  wide.generator_count = 17;  // 17 * 4 > 64 variables
  const auto build = [&] {
    build_rep_ideal(wide, RepTarget::su2(), GaugeKind::None);
  };
  CHECK_THROWS_AS(build(), Error);
}
