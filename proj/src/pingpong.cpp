#include "plcircle/pingpong.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace plc {

namespace {

bool subset(const ArcSet& inner, const ArcSet& outer) {
  return outer.contains(inner);
}

ArcSet image_power(const PLCircleMap& f, long n, const ArcSet& x) {
  return image_arcset(power(f, n), x);
}

// Structural checks that make a certificate side well-formed at all; these
// throw rather than merely failing verification.
void validate_side(const PLCircleMap& self, const SideCondition& side,
                   const std::string& label, long torsion_bound) {
  if (side.table.is_empty())
    throw std::invalid_argument("certificate: empty table on side " + label);
  if (side.torsion_order) {
    long q = *side.torsion_order;
    if (q < 2)
      throw std::invalid_argument("certificate: torsion order on side " +
                                  label + " must be >= 2");
    auto actual = torsion_order(self, std::max(q, torsion_bound));
    if (!actual || *actual != q)
      throw std::invalid_argument("certificate: declared torsion order " +
                                  std::to_string(q) + " on side " + label +
                                  " does not match the element");
  } else if (!side.split) {
    throw std::invalid_argument("certificate: non-torsion side " + label +
                                " needs an attracting/repelling split");
  }
}

// Checks one side of a certificate.  self/other name the elements; the
// failing condition, if any, is written with `label` as the side's name.
VerifyResult verify_side(const PLCircleMap& self, const SideCondition& side,
                         const ArcSet& other_table, const std::string& label) {
  if (side.torsion_order) {
    long q = *side.torsion_order;
    PLCircleMap p = self;
    for (long n = 1; n < q; ++n) {
      if (!subset(image_arcset(p, other_table), side.table))
        return {false, label + "^" + std::to_string(n) +
                           " does not map the other table into its own"};
      p = compose(self, p);
    }
    return {true, ""};
  }

  const auto& [plus, minus] = *side.split;
  if (!subset(set_union(plus, minus), side.table))
    return {false, "split of side " + label + " is not contained in its table"};
  if (!subset(side.table, set_union(plus, minus)))
    return {false, "split of side " + label + " does not cover its table"};
  if (!subset(image_arcset(self, set_union(plus, other_table)), plus))
    return {false, label + " does not contract X+ and the other table into X+"};
  PLCircleMap inv = inverse(self);
  if (!subset(image_arcset(inv, set_union(minus, other_table)), minus))
    return {false, label +
                       "^-1 does not contract X- and the other table into X-"};
  return {true, ""};
}

}  // namespace

VerifyResult verify_certificate(const PLCircleMap& a, const PLCircleMap& b,
                                const PingPongCertificate& cert) {
  validate_side(a, cert.a_side, "a", /*torsion_bound=*/64);
  validate_side(b, cert.b_side, "b", 64);
  if (cert.a_side.table.contains(cert.b_side.table))
    return {false, "table of a contains table of b"};
  if (cert.b_side.table.contains(cert.a_side.table))
    return {false, "table of b contains table of a"};

  VerifyResult ra = verify_side(a, cert.a_side, cert.b_side.table, "a");
  if (!ra) return ra;
  return verify_side(b, cert.b_side, cert.a_side.table, "b");
}

std::optional<std::pair<ArcSet, ArcSet>> attracting_repelling_split(
    const PLCircleMap& mover, const ArcSet& x) {
  ArcSet fix = fixed_set(mover);
  ArcSet core = set_intersection(x, fix);
  ArcSet moving = set_difference(x, fix);
  ArcSet supp = fix.complement();

  std::vector<Arc> plus_arcs, minus_arcs;
  for (const Arc& c : moving.components()) {
    if (c.is_punctured_circle()) return std::nullopt;
    bool start_fixed = mover(c.start) == c.start;
    bool end_fixed = mover(c.end) == c.end;
    if (!start_fixed && !end_fixed) return std::nullopt;
    if (start_fixed && end_fixed) {  // component swallowed whole
      plus_arcs.push_back(c);
      minus_arcs.push_back(c);
      continue;
    }
    // The arc is fixed-point free, hence inside one support component S,
    // which is invariant; motion direction there is read off at a sample.
    CirclePoint mid = c.start.advanced(c.length() / 2);
    const Arc* home = nullptr;
    for (const Arc& s : supp.components())
      if (s.contains(mid)) home = &s;
    if (!home) return std::nullopt;
    bool forward = ccw_gap(home->start, mover(mid)) > ccw_gap(home->start, mid);
    // The arc attracts when its fixed endpoint is the one motion points at.
    bool attracting = forward ? end_fixed : start_fixed;
    (attracting ? plus_arcs : minus_arcs).push_back(c);
  }
  return std::make_pair(set_union(core, ArcSet::from_arcs(plus_arcs)),
                        set_union(core, ArcSet::from_arcs(minus_arcs)));
}

namespace {

// Components of x that meet y.
ArcSet components_meeting(const ArcSet& x, const ArcSet& y) {
  std::vector<Arc> kept;
  for (const Arc& c : x.components())
    if (!set_intersection(ArcSet::from_arcs({c}), y).is_empty())
      kept.push_back(c);
  return ArcSet::from_arcs(kept);
}

// Smallest w >= 1 with b1^(+-w) mapping the complement of x into x; the
// inclusion is monotone in w once it first holds.
long entry_power(const PLCircleMap& b1, const ArcSet& x, long bound,
                 const char* what) {
  ArcSet comp = x.complement();
  PLCircleMap fwd = b1, bwd = inverse(b1);
  PLCircleMap fw = fwd, bw = bwd;
  for (long w = 1; w <= bound; ++w) {
    if (x.contains(image_arcset(fw, comp)) &&
        x.contains(image_arcset(bw, comp)))
      return w;
    fw = compose(fwd, fw);
    bw = compose(bwd, bw);
  }
  throw SearchBoundExceeded(std::string(what) + " exceeded bound " +
                            std::to_string(bound));
}

Rational half_min_pairwise_separation(const std::vector<ArcSet>& sets) {
  std::optional<Rational> best;
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j) {
      Rational d = separation(sets[i], sets[j]);
      if (!best || d < *best) best = d;
    }
  return *best / 2;
}

PingPongCertificate finish_certificate(const PLCircleMap& a,
                                       const PLCircleMap& b1,
                                       const SideCondition& a_side,
                                       const ArcSet& x_b,
                                       const PLCircleMap& b_powered) {
  auto split = attracting_repelling_split(b1, x_b);
  if (!split)
    throw std::logic_error("internal: table around Fix(b1) not classifiable");
  PingPongCertificate cert;
  cert.a_side = a_side;
  cert.b_side = SideCondition{x_b, std::nullopt, split};
  VerifyResult check = verify_certificate(a, b_powered, cert);
  if (!check)
    throw std::logic_error("internal: constructed certificate rejected: " +
                           check.reason);
  return cert;
}

}  // namespace

FreePowerResult free_power_search(const PLCircleMap& a, const PLCircleMap& b,
                                  const SearchLimits& limits) {
  RotationNumber rot_b = rotation_number(b, limits.q_max);
  long s = rot_b.period();
  PLCircleMap b1 = power(b, s);
  if (b1.is_identity()) throw HypothesisViolated("b is torsion");
  ArcSet fix_b1 = fixed_set(b1);

  FreePowerResult out;
  out.trace.b1 = b1;
  out.trace.s = s;

  auto a_order = torsion_order(a, limits.q_max);
  if (a_order && *a_order == 1) throw HypothesisViolated("a is the identity");

  if (a_order) {
    // Torsion branch: a has finite order q; the q translates of Fix(b1)
    // must be pairwise disjoint, and the table around Fix(b1) is squeezed
    // so that its a-translates stay in disjoint neighbourhoods.
    long q = *a_order;
    out.trace.branch = SearchBranch::torsion;

    std::vector<ArcSet> translates{fix_b1};
    PLCircleMap p = a;
    for (long j = 1; j < q; ++j) {
      ArcSet t = image_arcset(p, fix_b1);
      if (!set_intersection(t, fix_b1).is_empty())
        throw HypothesisViolated(
            "a^" + std::to_string(j) + " does not move Fix(b^s) off itself");
      translates.push_back(t);
      p = compose(a, p);
    }
    Rational eps = half_min_pairwise_separation(translates);
    out.trace.epsilon = eps;

    // x_b lives in N_eps(Fix(b1)) and, translated by a^i, inside
    // N_eps(a^i Fix(b1)); the latter is forced by intersecting with the
    // a^(q-i)-images of those neighbourhoods (a^q = id).
    ArcSet x_b = translates[0].neighborhood(eps);
    for (long i = 1; i < q; ++i)
      x_b = set_intersection(
          x_b, image_power(a, q - i, translates[i].neighborhood(eps)));
    x_b = components_meeting(x_b, fix_b1);

    long v = entry_power(b1, x_b, limits.power_bound, "torsion-branch power v");
    out.trace.v = v;
    out.k = v * s;

    ArcSet x_a;
    for (long i = 1; i < q; ++i)
      x_a = set_union(x_a, image_power(a, i, x_b));

    SideCondition a_side{x_a, q, std::nullopt};
    out.cert = finish_certificate(a, b1, a_side, x_b, power(b1, v));
    return out;
  }

  // Non-torsion branch.  F_a := Fix(a^m) for m the period of Rot(a) is
  // a-invariant; around it we grow attracting/repelling collars W+ and W-
  // that absorb high powers of a, then shrink a collar X_b around Fix(b1)
  // clear of W and of its a-translates in the checked window.
  long m = rotation_number(a, limits.q_max).period();
  out.trace.branch = SearchBranch::non_torsion;
  out.trace.m = m;

  PLCircleMap alpha = power(a, m);
  ArcSet f_a = fixed_set(alpha);
  out.trace.f_a = f_a;
  if (!set_intersection(f_a, fix_b1).is_empty())
    throw HypothesisViolated("Fix(b^s) meets Fix(a^m)");

  PLCircleMap alpha_inv = inverse(alpha);
  ArcSet w_plus, w_minus;
  Rational eps(1, 4);
  bool collars_ok = false;
  for (long h = 0; h < limits.halving_bound; ++h, eps /= 2) {
    auto split = attracting_repelling_split(alpha, f_a.neighborhood(eps));
    if (!split) continue;
    const auto& [w0_plus, w0_minus] = *split;
    if (!w0_plus.contains(image_arcset(alpha, w0_plus))) continue;
    if (!w0_minus.contains(image_arcset(alpha_inv, w0_minus))) continue;
    w_plus = ArcSet::empty();
    w_minus = ArcSet::empty();
    for (long i = 0; i < m; ++i) {
      w_plus = set_union(w_plus, image_power(a, i, w0_plus));
      w_minus = set_union(w_minus, image_power(a, -i, w0_minus));
    }
    if (!w_plus.contains(image_arcset(a, w_plus))) continue;
    if (!w_minus.contains(image_arcset(inverse(a), w_minus))) continue;
    ArcSet w = set_union(w_plus, w_minus);
    if (!set_intersection(w.closure(), fix_b1).is_empty()) continue;
    collars_ok = true;
    break;
  }
  if (!collars_ok)
    throw SearchBoundExceeded("collar radius halvings exhausted");
  out.trace.epsilon = eps;

  // N: first power pushing everything outside the collars into them.
  ArcSet w = set_union(w_plus, w_minus);
  ArcSet outside = w.complement();
  long big_n = 0;
  {
    PLCircleMap fw = a, bw = inverse(a);
    PLCircleMap fp = fw, bp = bw;
    for (long j = 1; j <= limits.power_bound; ++j) {
      if (w_plus.contains(image_arcset(fp, outside)) &&
          w_minus.contains(image_arcset(bp, outside))) {
        big_n = j;
        break;
      }
      fp = compose(fw, fp);
      bp = compose(bw, bp);
    }
  }
  if (big_n == 0)
    throw SearchBoundExceeded("absorption power N exceeded bound " +
                              std::to_string(limits.power_bound));
  out.trace.big_n = big_n;
  out.trace.delta_window = big_n;

  // Hypothesis window: a^j with 1 <= |j| <= N must move Fix(b1) off itself
  // (negative j follow from positive by applying a^-j to both sides).
  {
    PLCircleMap p = a;
    for (long j = 1; j <= big_n; ++j) {
      if (!set_intersection(image_arcset(p, fix_b1), fix_b1).is_empty())
        throw HypothesisViolated(
            "a^" + std::to_string(j) + " does not move Fix(b^s) off itself");
      p = compose(a, p);
    }
  }

  Rational delta(1, 4);
  ArcSet x_b;
  bool delta_ok = false;
  for (long h = 0; h < limits.halving_bound; ++h, delta /= 2) {
    x_b = fix_b1.neighborhood(delta);
    if (!set_intersection(x_b, w).is_empty()) continue;
    bool clear = true;
    PLCircleMap p = a;
    for (long n = 1; n <= big_n && clear; ++n) {
      if (!set_intersection(x_b, image_arcset(p, x_b)).is_empty())
        clear = false;
      p = compose(a, p);
    }
    if (!clear) continue;
    delta_ok = true;
    break;
  }
  if (!delta_ok) throw SearchBoundExceeded("table radius halvings exhausted");
  out.trace.delta = delta;

  ArcSet a_plus = w_plus, a_minus = w_minus;
  for (long n = 1; n <= big_n; ++n) {
    a_plus = set_union(a_plus, image_power(a, n, x_b));
    a_minus = set_union(a_minus, image_power(a, -n, x_b));
  }
  ArcSet x_a = set_union(a_plus, a_minus);

  long z = entry_power(b1, x_b, limits.power_bound, "non-torsion power z");
  out.trace.z = z;
  out.k = z * s;

  SideCondition a_side{x_a, std::nullopt, std::make_pair(a_plus, a_minus)};
  out.cert = finish_certificate(a, b1, a_side, x_b, power(b1, z));
  return out;
}

bool random_reduced_word_check(const std::vector<PLCircleMap>& gens,
                               long length, long trials, uint64_t seed) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const long n = static_cast<long>(gens.size());
  std::vector<PLCircleMap> letters;
  for (const PLCircleMap& g : gens) letters.push_back(g);
  for (const PLCircleMap& g : gens) letters.push_back(inverse(g));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> len_dist(1, length);
  std::uniform_int_distribution<long> first(0, 2 * n - 1);
  std::uniform_int_distribution<long> rest(0, 2 * n - 2);

  for (long t = 0; t < trials; ++t) {
    long l = len_dist(rng);
    long prev = first(rng);
    PLCircleMap word = letters[prev];
    for (long i = 1; i < l; ++i) {
      long forbidden = (prev + n) % (2 * n);  // the formal inverse of prev
      long pick = rest(rng);
      if (pick >= forbidden) ++pick;
      word = compose(word, letters[pick]);
      prev = pick;
    }
    if (word.is_identity()) return false;
  }
  return true;
}

}  // namespace plc
