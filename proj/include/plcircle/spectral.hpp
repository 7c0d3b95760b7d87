/*
 * Moment-based lower bounds on reduced C*-norms of finitely supported
 * group-algebra elements, by exact enumeration of word identities, together
 * with the free-group random-walk benchmark: the simple random walk on a
 * free group of rank n has spectral radius sqrt(2n-1)/n, so certified free
 * families must reproduce the abstract free-group return counts exactly.
 */

#pragma once

#include <utility>
#include <vector>

#include "plcircle/pl_map.hpp"

namespace plc {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A formal sum of group elements with non-zero rational coefficients.
struct WeightedElement {
  std::vector<std::pair<Rational, PLCircleMap>> terms;

  // Canonical form: elements sorted and distinct, zero coefficients dropped.
  static WeightedElement normalized(
      const std::vector<std::pair<Rational, PLCircleMap>>& raw);
};

// counts[L], L = 0..max_len: the exact number of length-L words over
// gens and their inverses whose product is the identity.  Prefix products
// are cached and aggregated level by level, so equal prefixes are expanded
// once; throws BudgetExceeded when more than budget products are needed.
std::vector<Int> identity_return_counts(const std::vector<PLCircleMap>& gens,
                                        long max_len, long budget = 1L << 20);

// The same counts in the abstract free group of the given rank, computed by
// symbolic free reduction over 2*rank letters.  Independent of the circle
// machinery; serves as the oracle for certified free families.
std::vector<Int> free_group_oracle_counts(long rank, long max_len);

struct MomentReport {
  long k_max = 0;
  std::vector<Rational> moments;  // tr((T*T)^k) for k = 1..k_max
  // Rational brackets [lo, hi] of the 2k-th roots: certified lower bounds
  // for the reduced C*-norm of the input.
  std::vector<std::pair<Rational, Rational>> lower_bounds;
  bool complete = true;  // false when the enumeration budget truncated it
};

// Exact trace moments tr((T*T)^k) of T = sum c_i lambda(g_i), as the
// identity coefficient of (T*T)^k in the group algebra; their 2k-th roots
// are monotone lower bounds for the norm.  On budget exhaustion, returns
// the moments computed so far with complete = false.
MomentReport moment_norm_lower_bound(const WeightedElement& t, long k_max,
                                     long budget = 1L << 20,
                                     const Rational& precision = Rational(1,
                                                                          10000));

// Rational bracket [lo, hi] with lo^degree <= value <= hi^degree and
// hi - lo <= precision.  Requires value >= 0, degree >= 1, precision > 0.
std::pair<Rational, Rational> root_bracket(const Rational& value, long degree,
                                           const Rational& precision);

struct KestenBound {
  long radicand = 0;  // 2n - 1
  long denominator = 0;  // n
  std::pair<Rational, Rational> bracket;  // around sqrt(2n-1)/n
};

// The spectral radius sqrt(2n-1)/n of the simple random walk on the free
// group of rank n, as exact data plus a rational bracket.
KestenBound kesten_bound(long n, const Rational& precision = Rational(1, 10000));

}  // namespace plc
