#include "doctest.h"
#include "plcircle/pingpong.hpp"
#include "plcircle/spectral.hpp"
#include "plcircle/word.hpp"
#include "test_util.hpp"

using namespace plc;

namespace {

const PLCircleMap& B(const std::string& name) {
  return builtin_bindings().at(name);
}

Rational pow_r(const Rational& b, long n) {
  Rational out(1);
  for (long i = 0; i < n; ++i) out *= b;
  return out;
}

// A pair certified free by the power search: x0 and the certified power of
// its half-turn conjugate.
std::vector<PLCircleMap> certified_free_pair() {
  PLCircleMap a = B("x0");
  PLCircleMap b = conjugate(B("x0"), B("r"));
  FreePowerResult res = free_power_search(a, b);
  REQUIRE(verify_certificate(a, power(b, res.k), res.cert).ok);
  return {a, power(b, res.k)};
}

}  // namespace

TEST_CASE("free group oracle counts") {
  std::vector<Int> r1 = free_group_oracle_counts(1, 2);
  CHECK(r1 == std::vector<Int>{1, 0, 2});

  std::vector<Int> r2 = free_group_oracle_counts(2, 8);
  CHECK(r2 == std::vector<Int>{1, 0, 4, 0, 28, 0, 232, 0, 2092});

  CHECK_THROWS_AS(free_group_oracle_counts(0, 2), std::invalid_argument);
}

TEST_CASE("identity return counts for torsion and trivial generators") {
  std::vector<Int> rr = identity_return_counts({B("r")}, 2);
  CHECK(rr == std::vector<Int>{1, 0, 4});

  std::vector<Int> ee = identity_return_counts({PLCircleMap::identity()}, 5);
  for (long L = 0; L <= 5; ++L) CHECK(ee[L] == Int(1) << L);

  CHECK_THROWS_AS(identity_return_counts({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(identity_return_counts({B("x0")}, 8, 10), BudgetExceeded);
}

TEST_CASE("certified free pair matches the free group oracle") {
  std::vector<PLCircleMap> pair = certified_free_pair();
  std::vector<Int> counts = identity_return_counts(pair, 8);
  std::vector<Int> oracle = free_group_oracle_counts(2, 8);
  CHECK(counts == oracle);

  // Invariance under generator order and inversion.
  std::vector<Int> swapped =
      identity_return_counts({pair[1], inverse(pair[0])}, 6);
  std::vector<Int> plain = identity_return_counts(pair, 6);
  CHECK(swapped == plain);
}

TEST_CASE("weighted element normalization") {
  WeightedElement w = WeightedElement::normalized({{Rational(1), B("x0")},
                                                   {Rational(2), B("x1")},
                                                   {Rational(-1), B("x0")}});
  REQUIRE(w.terms.size() == 1);
  CHECK(w.terms[0].first == 2);
  CHECK(w.terms[0].second == B("x1"));
}

TEST_CASE("root brackets") {
  auto [lo, hi] = root_bracket(Rational(4), 2, Rational(1, 10000));
  CHECK(lo <= 2);
  CHECK(2 <= hi);
  CHECK(hi - lo <= Rational(1, 10000));

  auto [l8, h8] = root_bracket(Rational(2092, 65536), 8, Rational(1, 10000));
  CHECK(l8 > Rational(64, 100));
  CHECK(h8 < Rational(66, 100));

  CHECK_THROWS_AS(root_bracket(Rational(-1), 2, Rational(1, 100)),
                  std::invalid_argument);
}

TEST_CASE("moments of the identity element") {
  WeightedElement t =
      WeightedElement::normalized({{Rational(1), PLCircleMap::identity()}});
  MomentReport rep = moment_norm_lower_bound(t, 4);
  CHECK(rep.complete);
  REQUIRE(rep.moments.size() == 4);
  for (const Rational& m : rep.moments) CHECK(m == 1);
  for (const auto& [lo, hi] : rep.lower_bounds) {
    CHECK(lo <= 1);
    CHECK(1 <= hi);
  }
}

TEST_CASE("moments of a free pair match the combinatorial count") {
  std::vector<PLCircleMap> pair = certified_free_pair();
  WeightedElement t = WeightedElement::normalized(
      {{Rational(1), pair[0]}, {Rational(1), pair[1]}});
  MomentReport rep = moment_norm_lower_bound(t, 4);
  CHECK(rep.complete);
  REQUIRE(rep.moments.size() == 4);

  // T*T = 2 + c + c^-1 with c of infinite order, so the k-th moment is the
  // number of lattice walks: sum over j of k!/(j! j! (k-2j)!) * 2^(k-2j).
  auto expected = [](long k) {
    Rational total(0);
    for (long j = 0; 2 * j <= k; ++j) {
      Int ways = 1;
      for (long i = 0; i < k; ++i) ways *= (i + 1);  // k!
      Int div = 1;
      for (long i = 0; i < j; ++i) div *= (i + 1);
      Int div2 = div;
      Int div3 = 1;
      for (long i = 0; i < k - 2 * j; ++i) div3 *= (i + 1);
      Rational term = Rational(ways) / Rational(div * div2 * div3);
      total += term * pow_r(Rational(2), k - 2 * j);
    }
    return total;
  };
  for (long k = 1; k <= 4; ++k) CHECK(rep.moments[k - 1] == expected(k));

  // Monotone lower bounds, exactly: m_k^(k-1) >= m_(k-1)^k.
  for (long k = 2; k <= 4; ++k)
    CHECK(pow_r(rep.moments[k - 1], k - 1) >= pow_r(rep.moments[k - 2], k));
  // Never above the trivial bound sum of |coefficients| = 2.
  for (const auto& [lo, hi] : rep.lower_bounds) CHECK(lo <= 2);
}

TEST_CASE("moments of the averaging element stay below three") {
  WeightedElement t =
      WeightedElement::normalized({{Rational(1), PLCircleMap::identity()},
                                   {Rational(1), B("g1")},
                                   {Rational(1), B("g2")}});
  MomentReport rep = moment_norm_lower_bound(t, 3);
  CHECK(rep.complete);
  for (long k = 2; k <= 3; ++k)
    CHECK(pow_r(rep.moments[k - 1], k - 1) >= pow_r(rep.moments[k - 2], k));
  for (const auto& [lo, hi] : rep.lower_bounds) CHECK(lo <= 3);
  CHECK(rep.lower_bounds.back().first > 1);  // non-trivial information
}

TEST_CASE("moment budget truncation is flagged, not fatal") {
  std::vector<PLCircleMap> pair = certified_free_pair();
  WeightedElement t = WeightedElement::normalized(
      {{Rational(1), pair[0]}, {Rational(1), pair[1]}});
  MomentReport rep = moment_norm_lower_bound(t, 6, 40);
  CHECK(!rep.complete);
  CHECK(rep.k_max < 6);
  CHECK(rep.moments.size() == static_cast<size_t>(rep.k_max));
}

TEST_CASE("weighted element validation") {
  WeightedElement bad;
  bad.terms = {{Rational(1), B("x0")}, {Rational(2), B("x0")}};
  CHECK_THROWS_AS(moment_norm_lower_bound(bad, 2), std::invalid_argument);
  bad.terms = {{Rational(0), B("x0")}};
  CHECK_THROWS_AS(moment_norm_lower_bound(bad, 2), std::invalid_argument);
}

TEST_CASE("kesten bound") {
  KestenBound k1 = kesten_bound(1);
  CHECK(k1.radicand == 1);
  CHECK(k1.bracket.first <= 1);
  CHECK(1 <= k1.bracket.second);

  KestenBound k2 = kesten_bound(2);
  CHECK(k2.radicand == 3);
  CHECK(k2.denominator == 2);
  CHECK(k2.bracket.first > Rational(8659, 10000));
  CHECK(k2.bracket.second < Rational(8661, 10000));

  KestenBound k5 = kesten_bound(5);
  CHECK(k5.bracket.first <= Rational(3, 5));
  CHECK(Rational(3, 5) <= k5.bracket.second);

  CHECK_THROWS_AS(kesten_bound(0), std::invalid_argument);
}

TEST_CASE("return-count roots stay below the kesten bound") {
  // (R_2k)^(1/2k) / 2n <= sqrt(2n-1)/n + slack for the rank-2 oracle at
  // k = 4, with the roots approaching the bound from below.
  std::vector<Int> oracle = free_group_oracle_counts(2, 8);
  KestenBound kb = kesten_bound(2);
  auto [lo8, hi8] =
      root_bracket(Rational(oracle[8]) / pow_r(Rational(4), 8), 8,
                   Rational(1, 10000));
  CHECK(hi8 <= kb.bracket.second + Rational(15, 100));
  auto [lo4, hi4] =
      root_bracket(Rational(oracle[4]) / pow_r(Rational(4), 4), 4,
                   Rational(1, 10000));
  CHECK(lo4 <= hi8);  // monotone approach from below

  // The consecutive-moment ratio sharpens the estimate: sqrt(R_8/R_6)/4
  // lands within 0.15 of the spectral radius.
  auto [rl, rh] = root_bracket(Rational(oracle[8]) / Rational(oracle[6]), 2,
                               Rational(1, 10000));
  CHECK(kb.bracket.first - rl / 4 < Rational(15, 100));
  CHECK(rl / 4 < kb.bracket.second);
}
