#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "knotrep/diagram.hpp"
#include "knotrep/fox.hpp"
#include "knotrep/presentation.hpp"
#include "support.hpp"

using namespace knotrep;
using knotrep::tests::fixture_diagram;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a knotrep::Error");
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("braid parser basics") {
  Diagram unknot = parse_braid({}, 1);
  CHECK(unknot.crossing_count() == 0);
  CHECK(unknot.arc_count == 1);
  unknot.validate();

  Diagram kink = parse_braid({1}, 2);
  CHECK(kink.crossing_count() == 1);
  kink.validate();

  Diagram trefoil = parse_braid({1, 1, 1}, 2);
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.arc_count == 6);
  trefoil.validate();
  for (const Crossing& c : trefoil.crossings) CHECK(c.sign == 1);

  Diagram mirror = parse_braid({-1, -1, -1}, 2);
  for (const Crossing& c : mirror.crossings) CHECK(c.sign == -1);
  CHECK(fox_colorings(mirror, 3) == 9);
}

TEST_CASE("braid parser rejections") {
  CHECK(code_of([] { parse_braid({2}, 2); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { parse_braid({0}, 2); }) == ErrorCode::InvalidGenerator);
  CHECK(code_of([] { parse_braid({}, 0); }) == ErrorCode::InvalidInput);
  // sigma_1 closure on 3 strands leaves the third strand as a split
  // unknot component.
  CHECK(code_of([] { parse_braid({1}, 3); }) == ErrorCode::MultiComponent);
  CHECK(code_of([] { parse_braid_text("strands=2\n1 x"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("dt parser basics and rejections") {
  Diagram trefoil = parse_dt({4, 6, 2});
  CHECK(trefoil.crossing_count() == 3);
  trefoil.validate();
  CHECK(fox_colorings(trefoil, 3) == 9);

  CHECK(code_of([] { parse_dt({3, 6, 2}); }) == ErrorCode::OddValue);
  CHECK(code_of([] { parse_dt({4, 4, 2}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_dt({4, 6, 8, 10, 2}); }) == ErrorCode::NotRealizable);
}

TEST_CASE("pd parser accepts the standard trefoil tuples") {
  Diagram d = parse_pd_text("X[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6,3]\n");
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count == 6);
  d.validate();
  CHECK(fox_colorings(d, 3) == 9);
}

TEST_CASE("pd parser rejections") {
  // arc 9 appears once
  CHECK(code_of([] { parse_pd_text("X[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6,9]\n"); }) ==
        ErrorCode::ArcDegree);
  CHECK(code_of([] { parse_pd_text("X[1,2,3]\n"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_pd_text("Y[1,4,2,5]\n"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("empty input is the unknot in all three text formats") {
  for (auto* parse : {&parse_braid_text, &parse_dt_text, &parse_pd_text}) {
    Diagram d = parse("");
    CHECK(d.crossing_count() == 0);
    CHECK(d.arc_count == 1);
    Diagram commented = parse("# nothing here\n");
    CHECK(commented.crossing_count() == 0);
  }
}

TEST_CASE("fixture files parse with the expected shapes") {
  CHECK(fixture_diagram("unknot.braid").crossing_count() == 0);
  CHECK(fixture_diagram("trefoil.braid").crossing_count() == 3);
  CHECK(fixture_diagram("trefoil.dt").crossing_count() == 3);
  CHECK(fixture_diagram("trefoil.pd").crossing_count() == 3);
  CHECK(fixture_diagram("figure8.braid").crossing_count() == 4);
  CHECK(fixture_diagram("figure8.dt").crossing_count() == 4);
  CHECK(fixture_diagram("trefoil.braid").source_format == SourceFormat::Braid);
  CHECK(fixture_diagram("trefoil.dt").source_format == SourceFormat::DT);
  CHECK(fixture_diagram("trefoil.pd").source_format == SourceFormat::PD);
}

TEST_CASE("pd round-trip is the identity") {
  for (const char* name : {"unknot.braid", "trefoil.braid", "trefoil.dt",
                           "trefoil.pd", "figure8.braid", "figure8.dt"}) {
    CAPTURE(name);
    Diagram d = fixture_diagram(name);
    Diagram e = parse_pd_text(to_pd_text(d));
    e.source_format = d.source_format;  // the only field the trip may touch
    CHECK(e == d);
    CHECK(diagram_digest(e) == diagram_digest(d));
  }
}

TEST_CASE("digest is stable and separates the fixture diagrams") {
  CHECK(diagram_digest(fixture_diagram("trefoil.braid")) ==
        diagram_digest(parse_braid({1, 1, 1}, 2)));
  std::set<std::string> seen;
  for (const char* name : {"unknot.braid", "trefoil.braid", "trefoil.dt",
                           "trefoil.pd", "figure8.braid", "figure8.dt"})
    seen.insert(diagram_digest(fixture_diagram(name)));
  // Different diagrams of the same knot hash differently: the digest
  // identifies diagrams, not knot types.
  CHECK(seen.size() == 6);
}

TEST_CASE("cross-format fixtures agree on colorings and abelianization") {
  const std::vector<Diagram> trefoils = {fixture_diagram("trefoil.braid"),
                                         fixture_diagram("trefoil.dt"),
                                         fixture_diagram("trefoil.pd")};
  const std::vector<Diagram> fig8s = {fixture_diagram("figure8.braid"),
                                      fixture_diagram("figure8.dt")};
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    const mpz_class t = fox_colorings(trefoils[0], n);
    for (const Diagram& d : trefoils) CHECK(fox_colorings(d, n) == t);
    const mpz_class f = fox_colorings(fig8s[0], n);
    for (const Diagram& d : fig8s) CHECK(fox_colorings(d, n) == f);
  }
  const Abelianization expected{1, {}};
  for (const Diagram& d : trefoils) CHECK(abelianization(wirtinger(d)) == expected);
  for (const Diagram& d : fig8s) CHECK(abelianization(wirtinger(d)) == expected);
}

TEST_CASE("strand classes glue arcs along over-passages") {
  Diagram trefoil = parse_braid({1, 1, 1}, 2);
  StrandClasses sc = strand_classes(trefoil);
  CHECK(sc.strand_count == 3);  // one strand class per crossing
  for (int arc = 0; arc < trefoil.arc_count; ++arc) {
    CHECK(sc.strand_of_arc[static_cast<size_t>(arc)] >= 0);
    CHECK(sc.strand_of_arc[static_cast<size_t>(arc)] < sc.strand_count);
  }
  Diagram unknot = parse_braid({}, 1);
  CHECK(strand_classes(unknot).strand_count == 1);
}

TEST_CASE("fuzzed braid words either fail cleanly or validate") {
  std::mt19937 rng(20240811u);
  std::uniform_int_distribution<int> strands_dist(1, 5);
  std::uniform_int_distribution<int> len_dist(0, 12);
  for (int trial = 0; trial < 400; ++trial) {
    const int strands = strands_dist(rng);
    std::vector<int> word(static_cast<size_t>(len_dist(rng)));
    std::uniform_int_distribution<int> letter(-strands, strands);
    for (int& w : word) w = letter(rng);
    try {
      Diagram d = parse_braid(word, strands);
      d.validate();  // never throws on an accepted diagram
      wirtinger(d).validate();
    } catch (const Error& e) {
      CHECK(e.code() != ErrorCode::ArcDegree);
      CHECK(e.code() != ErrorCode::InternalInvariant);
    }
  }
}

TEST_CASE("fuzzed dt codes either fail cleanly or validate") {
  std::mt19937 rng(20240812u);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 6);
    const int n = n_dist(rng);
    std::vector<long long> code(static_cast<size_t>(n));
    std::uniform_int_distribution<long long> v(-2 * n, 2 * n);
    for (long long& c : code) c = 2 * v(rng);
    try {
      Diagram d = parse_dt(code);
      d.validate();
    } catch (const Error& e) {
      CHECK(e.code() != ErrorCode::ArcDegree);
      CHECK(e.code() != ErrorCode::InternalInvariant);
    }
  }
}

TEST_CASE("fuzzed pd text never produces an invalid diagram") {
  std::mt19937 rng(20240813u);
  const std::string alphabet = "X[],0123456789 \npm#";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len_dist(0, 60);
  for (int trial = 0; trial < 600; ++trial) {
    std::string text(static_cast<size_t>(len_dist(rng)), ' ');
    for (char& ch : text) ch = alphabet[pick(rng)];
    try {
      Diagram d = parse_pd_text(text);
      d.validate();
    } catch (const Error&) {
      // any structured error is acceptable; crashes and foreign
      // exceptions are not
    }
  }
}
