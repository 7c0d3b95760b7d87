#include "plcircle/spectral.hpp"

#include <algorithm>
#include <map>

namespace plc {

namespace {

struct MapLess {
  bool operator()(const PLCircleMap& a, const PLCircleMap& b) const {
    return map_less(a, b);
  }
};

using ElementCounts = std::map<PLCircleMap, Int, MapLess>;
using ElementWeights = std::map<PLCircleMap, Rational, MapLess>;

}  // namespace

WeightedElement WeightedElement::normalized(
    const std::vector<std::pair<Rational, PLCircleMap>>& raw) {
  ElementWeights acc;
  for (const auto& [c, e] : raw) acc[e] += c;
  WeightedElement out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.terms.emplace_back(c, e);
  return out;
}

std::vector<Int> identity_return_counts(const std::vector<PLCircleMap>& gens,
                                        long max_len, long budget) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  if (max_len < 0) throw std::invalid_argument("negative length");
  std::vector<PLCircleMap> letters;
  for (const PLCircleMap& g : gens) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }

  std::vector<Int> counts;
  ElementCounts level;
  level[PLCircleMap::identity()] = 1;
  long work = 0;
  for (long L = 0;; ++L) {
    Int at_identity = 0;
    auto it = level.find(PLCircleMap::identity());
    if (it != level.end()) at_identity = it->second;
    counts.push_back(at_identity);
    if (L == max_len) break;
    ElementCounts next;
    for (const auto& [e, n] : level)
      for (const PLCircleMap& l : letters) {
        if (++work > budget)
          throw BudgetExceeded("word enumeration budget exceeded");
        next[compose(l, e)] += n;
      }
    level = std::move(next);
  }
  return counts;
}

std::vector<Int> free_group_oracle_counts(long rank, long max_len) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (max_len < 0) throw std::invalid_argument("negative length");
  // Letters 0..2*rank-1; letter x cancels against x ^ 1.  States are freely
  // reduced words, advanced one letter at a time.
  using Word = std::vector<int>;
  std::map<Word, Int> level;
  level[{}] = 1;
  std::vector<Int> counts;
  for (long L = 0;; ++L) {
    Int at_empty = 0;
    auto it = level.find(Word{});
    if (it != level.end()) at_empty = it->second;
    counts.push_back(at_empty);
    if (L == max_len) break;
    std::map<Word, Int> next;
    for (const auto& [w, n] : level)
      for (int l = 0; l < 2 * rank; ++l) {
        Word nw = w;
        if (!nw.empty() && nw.back() == (l ^ 1)) {
          nw.pop_back();
        } else {
          nw.push_back(l);
        }
        next[nw] += n;
      }
    level = std::move(next);
  }
  return counts;
}

std::pair<Rational, Rational> root_bracket(const Rational& value, long degree,
                                           const Rational& precision) {
  if (value < 0) throw std::invalid_argument("negative radicand");
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  auto pow_r = [](Rational base, long n) {
    Rational out(1);
    for (long i = 0; i < n; ++i) out *= base;
    return out;
  };
  Rational lo(0), hi = value < 1 ? Rational(1) : Rational(value);
  while (hi - lo > precision) {
    Rational mid = (lo + hi) / 2;
    if (pow_r(mid, degree) <= value)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

MomentReport moment_norm_lower_bound(const WeightedElement& t, long k_max,
                                     long budget, const Rational& precision) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  {
    ElementWeights seen;
    for (const auto& [c, e] : t.terms) {
      if (c == 0) throw std::invalid_argument("zero coefficient");
      if (seen.count(e)) throw std::invalid_argument("duplicate element");
      seen[e] = c;
    }
  }
  MomentReport rep;
  rep.k_max = k_max;
  if (t.terms.empty()) {
    for (long k = 1; k <= k_max; ++k) {
      rep.moments.emplace_back(0);
      rep.lower_bounds.push_back({Rational(0), Rational(0)});
    }
    return rep;
  }

  // s = t* t with t* = sum conj(c) lambda(g^-1); coefficients are rational,
  // so conjugation is trivial.
  ElementWeights s;
  for (const auto& [ci, gi] : t.terms)
    for (const auto& [cj, gj] : t.terms)
      s[compose(inverse(gi), gj)] += ci * cj;

  ElementWeights acc;
  acc[PLCircleMap::identity()] = 1;
  long work = 0;
  for (long k = 1; k <= k_max; ++k) {
    ElementWeights next;
    bool truncated = false;
    for (const auto& [e, c] : acc) {
      for (const auto& [se, sc] : s) {
        if (++work > budget) {
          truncated = true;
          break;
        }
        next[compose(se, e)] += c * sc;
      }
      if (truncated) break;
    }
    if (truncated) {
      rep.complete = false;
      rep.k_max = k - 1;
      break;
    }
    acc = std::move(next);
    Rational m(0);
    auto it = acc.find(PLCircleMap::identity());
    if (it != acc.end()) m = it->second;
    rep.moments.push_back(m);
    rep.lower_bounds.push_back(root_bracket(m, 2 * k, precision));
  }
  return rep;
}

KestenBound kesten_bound(long n, const Rational& precision) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  KestenBound out;
  out.radicand = 2 * n - 1;
  out.denominator = n;
  auto [lo, hi] = root_bracket(Rational(out.radicand), 2, precision);
  out.bracket = {lo / n, hi / n};
  return out;
}

}  // namespace plc
