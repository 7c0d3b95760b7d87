#include <random>

#include "doctest.h"
#include "plcircle/pl_map.hpp"
#include "plcircle/word.hpp"
#include "test_util.hpp"

using namespace plc;
using plc::testing::random_t_element;

namespace {

const PLCircleMap& B(const std::string& name) {
  return builtin_bindings().at(name);
}

CirclePoint P(const std::string& s) { return CirclePoint(parse_rational(s)); }

ArcSet A(const std::string& s) { return ArcSet::parse(s); }

}  // namespace

TEST_CASE("builtin elements have the advertised supports") {
  CHECK(support(B("x1")) == A("(1/2,0)"));
  CHECK(support(B("x2")) == A("(3/4,0)"));
  CHECK(support(B("g1")) == A("(0,1/2)"));
  CHECK(support(B("g2")) == A("(1/4,1/2)"));
  CHECK(support(B("x0")) == A("(0,0)"));
  CHECK(fixed_set(B("x1")) == A("[0,1/2]"));
}

TEST_CASE("compose and inverse examples") {
  CHECK(compose(B("r"), B("r")).is_identity());
  PLCircleMap f = B("x0");
  CHECK(compose(f, PLCircleMap::identity()) == f);
  CHECK(compose(B("x1"), inverse(B("x1"))).is_identity());
  CHECK(inverse(PLCircleMap::identity()).is_identity());
  CHECK(inverse(PLCircleMap::rotation(Rational(1, 4))) ==
        PLCircleMap::rotation(Rational(3, 4)));

  // inverse swaps the coordinate pairs
  auto bp = B("x1").breakpoints();
  std::vector<std::pair<CirclePoint, CirclePoint>> swapped;
  for (auto& [x, y] : bp) swapped.emplace_back(y, x);
  CHECK(inverse(B("x1")) == PLCircleMap::from_breakpoints(swapped));
}

TEST_CASE("evaluate examples") {
  CHECK(B("x1")(P("7/8")) == P("15/16"));
  CHECK(PLCircleMap::identity()(P("3/8")) == P("3/8"));
  CHECK(B("r")(P("3/4")) == P("1/4"));
}

TEST_CASE("conjugate follows the f^c convention") {
  CHECK(conjugate(B("x1"), B("r")) == B("g1"));
  PLCircleMap f = B("x0");
  CHECK(conjugate(f, PLCircleMap::identity()) == f);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    PLCircleMap f = random_t_element(rng), c = random_t_element(rng);
    CHECK(image_arcset(c, support(f)) == support(conjugate(f, c)));
    CHECK(image_arcset(c, fixed_set(f)) == fixed_set(conjugate(f, c)));
  }
}

TEST_CASE("power examples") {
  CHECK(power(B("r"), 2).is_identity());
  PLCircleMap f = B("g1");
  CHECK(power(f, -1) == inverse(f));
  CHECK(power(f, 0).is_identity());
  PLCircleMap x1 = B("x1");
  CHECK(power(x1, 3)(P("7/8")) == x1(x1(x1(P("7/8")))));
  CHECK(power(x1, -3) == inverse(power(x1, 3)));
}

TEST_CASE("fixed set of a slope-4 crossing") {
  // Pieces: y = 4x - 3/4 on [3/16,5/16], then slope 4/7 back around.
  PLCircleMap f = PLCircleMap::from_breakpoints(
      {{P("3/16"), P("0")}, {P("5/16"), P("1/2")}});
  CHECK(fixed_set(f) == A("{1/4},{3/4}"));
  CHECK(fixed_set(PLCircleMap::rotation(Rational(1, 2))).is_empty());
  CHECK(fixed_set(PLCircleMap::identity()).is_full());
}

TEST_CASE("fixed set and support partition the circle") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    PLCircleMap f = random_t_element(rng);
    ArcSet fix = fixed_set(f), supp = support(f);
    CHECK(set_union(fix, supp).is_full());
    CHECK(set_intersection(fix, supp).is_empty());
    CHECK(fix.is_closed());
    for (const Arc& c : fix.components()) {
      CHECK(f(c.start) == c.start);
      CHECK(f(c.end) == c.end);
    }
    for (const Arc& c : supp.components()) {
      CirclePoint mid = c.start.advanced(c.length() / 2);
      CHECK(!(f(mid) == mid));
    }
  }
}

TEST_CASE("image_arcset examples") {
  CHECK(image_arcset(B("r"), A("(0,1/2)")) == A("(1/2,0)"));
  CHECK(image_arcset(B("x0"), ArcSet::full()).is_full());
  CHECK(image_arcset(B("x1"), A("[3/4,0]")) == A("[7/8,0]"));
}

TEST_CASE("rotation numbers") {
  CHECK(rotation_number(PLCircleMap::identity()).value == 0);
  for (int k = 0; k <= 6; ++k)
    for (int p = 0; p < (1 << k); ++p) {
      Rational r(p, 1 << k);
      r.canonicalize();
      CHECK(rotation_number(PLCircleMap::rotation(r)).value == r);
    }
  CHECK(rotation_number(B("x1")).value == 0);
  CHECK(rotation_number(B("r")).value == Rational(1, 2));
  CHECK_THROWS_AS(rotation_number(PLCircleMap::rotation(Rational(1, 5)), 4),
                  RotationNotFound);
}

TEST_CASE("rotation number is a power homomorphism and conjugation invariant") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 15; ++i) {
    PLCircleMap f = random_t_element(rng), c = random_t_element(rng);
    RotationNumber rot = rotation_number(f);
    for (long m = -6; m <= 6; ++m)
      CHECK(rotation_number(power(f, m), 64 * 7).value ==
            mod1(Rational(m) * rot.value));
    CHECK(rotation_number(conjugate(f, c)).value == rot.value);
  }
}

TEST_CASE("periodic orbit witness") {
  auto w0 = periodic_orbit_witness(PLCircleMap::identity(), RotationNumber{Rational(0)});
  CHECK(w0.size() == 1);

  auto w2 = periodic_orbit_witness(PLCircleMap::rotation(Rational(1, 2)),
                                   RotationNumber{Rational(1, 2)});
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == P("0"));
  CHECK(w2[1] == P("1/2"));

  // Rot = 0 elements yield an exact fixed point.
  auto w1 = periodic_orbit_witness(B("x1"), RotationNumber{Rational(0)});
  REQUIRE(w1.size() == 1);
  CHECK(B("x1")(w1[0]) == w1[0]);

  CHECK_THROWS_AS(
      periodic_orbit_witness(B("r"), RotationNumber{Rational(0)}),
      std::invalid_argument);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 15; ++i) {
    PLCircleMap f = random_t_element(rng);
    RotationNumber rot = rotation_number(f);
    auto orbit = periodic_orbit_witness(f, rot);
    CHECK(orbit.size() == static_cast<size_t>(rot.period()));
  }
}

TEST_CASE("thompson T membership") {
  CHECK(is_thompson_T(B("x1")).ok);
  CHECK(is_thompson_T(B("g2")).ok);
  CHECK(!is_thompson_T(PLCircleMap::rotation(Rational(1, 3))).ok);
  PLCircleMap slope3 = PLCircleMap::from_breakpoints(
      {{P("0"), P("0")}, {P("1/4"), P("3/4")}});
  CHECK(!is_thompson_T(slope3).ok);
  CHECK(!is_thompson_T(slope3).reason.empty());
}

TEST_CASE("torsion order") {
  CHECK(*torsion_order(PLCircleMap::rotation(Rational(1, 2))) == 2);
  CHECK(*torsion_order(PLCircleMap::rotation(Rational(3, 8))) == 8);
  CHECK(!torsion_order(B("x1")));
  CHECK(*torsion_order(PLCircleMap::identity()) == 1);
}

TEST_CASE("commutes") {
  PLCircleMap f = parse_word("x0 x1^-1");
  CHECK(commutes(f, power(f, 3)));
  CHECK(commutes(B("g1"), B("x1")));  // disjoint supports
  CHECK(!commutes(B("x0"), B("x1")));
}

TEST_CASE("word parsing") {
  CHECK(parse_word("r r").is_identity());
  CHECK(parse_word("x1^-1 x1").is_identity());
  CHECK(parse_word("g1 x1") == compose(B("g1"), B("x1")));
  CHECK(parse_word("") == PLCircleMap::identity());
  CHECK(parse_word("x0^3") == power(B("x0"), 3));
  CHECK_THROWS_AS(parse_word("x0 bogus"), ParseError);
  CHECK_THROWS_AS(parse_word("x0^"), ParseError);
  CHECK(parse_element("plmap{(0,1/2)}") == B("r"));
  CHECK(parse_element("r") == B("r"));
}

TEST_CASE("group laws on random words") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    PLCircleMap a = random_t_element(rng), b = random_t_element(rng),
                c = random_t_element(rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());
    CHECK(compose(a, PLCircleMap::identity()) == a);
    CHECK(inverse(compose(a, b)) == compose(inverse(b), inverse(a)));
  }
}

TEST_CASE("serialization round-trips") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    PLCircleMap f = random_t_element(rng);
    PLCircleMap g = PLCircleMap::parse(f.to_string());
    CHECK(g == f);
    CHECK(g.to_string() == f.to_string());
  }
  CHECK(PLCircleMap::parse("plmap{(0,0)}").is_identity());
  CHECK_THROWS_AS(PLCircleMap::parse("plmap{(0,0),(1/4,1/2),(1/2,1/4)}"),
                  std::invalid_argument);
}

TEST_CASE("random T words have rational rotation numbers") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    PLCircleMap f = random_t_element(rng, 8);
    RotationNumber rot = rotation_number(f, 256);
    CHECK(rot.value >= 0);
    CHECK(rot.value < 1);
    // f^q fixes a point, so its rotation number vanishes.
    CHECK(rotation_number(power(f, rot.period())).value == 0);
  }
}
