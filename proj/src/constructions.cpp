#include "plcircle/constructions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "plcircle/word.hpp"

namespace plc {

namespace {

const PLCircleMap& builtin(const std::string& name) {
  return builtin_bindings().at(name);
}

Rational pow2(long k) {
  Rational r(Int(1) << static_cast<unsigned long>(k < 0 ? -k : k));
  if (k < 0) r = 1 / r;
  return r;
}

// Largest power of two t with t <= len such that lo is an integer multiple
// of t.  Requires len > 0 and lo dyadic.
Rational largest_aligned_step(const Rational& lo, const Rational& len) {
  Rational t(1);
  while (t * 2 <= len) t *= 2;
  while (t > len) t /= 2;
  while (Rational(lo / t).get_den() != 1) t /= 2;
  return t;
}

// Partition [lo, hi] into consecutive aligned power-of-two pieces.
std::deque<std::pair<Rational, Rational>> dyadic_partition(Rational lo,
                                                           const Rational& hi) {
  std::deque<std::pair<Rational, Rational>> out;
  while (lo < hi) {
    Rational step = largest_aligned_step(lo, hi - lo);
    out.emplace_back(lo, step);
    lo += step;
  }
  return out;
}

// Appends breakpoint pairs for a homeomorphism [s0,s1] -> [d0,d1] (lifted
// coordinates, endpoints dyadic) all of whose slopes are powers of two.
// Emits one pair per piece start; the piece ending at s1 is closed off by
// whatever the caller appends next.
void append_dyadic_pieces(const Rational& s0, const Rational& s1,
                          const Rational& d0, const Rational& d1,
                          std::vector<std::pair<Rational, Rational>>& out) {
  auto src = dyadic_partition(s0, s1);
  auto dst = dyadic_partition(d0, d1);
  // Equalize the piece counts by halving a largest piece of the shorter
  // partition; matched pieces then have power-of-two length ratios.
  auto split_largest = [](std::deque<std::pair<Rational, Rational>>& q) {
    size_t best = 0;
    for (size_t i = 1; i < q.size(); ++i)
      if (q[i].second > q[best].second) best = i;
    auto [a, l] = q[best];
    q[best] = {a, l / 2};
    q.insert(q.begin() + static_cast<long>(best) + 1, {a + l / 2, l / 2});
  };
  while (src.size() < dst.size()) split_largest(src);
  while (dst.size() < src.size()) split_largest(dst);
  for (size_t i = 0; i < src.size(); ++i)
    out.emplace_back(src[i].first, dst[i].first);
}

// The dyadic rational of smallest denominator in the open lifted interval
// (lo, lo + len); requires len > 0.
Rational simplest_dyadic(const Rational& lo, const Rational& len) {
  for (long k = 0;; ++k) {
    Rational step = pow2(-k);
    Rational w = Rational(floor_int(lo / step) + 1) * step;
    if (w < lo + len) return w;
  }
}

std::vector<CirclePoint> point_components(const ArcSet& s) {
  std::vector<CirclePoint> out;
  for (const Arc& c : s.components()) {
    if (!c.is_point())
      throw std::invalid_argument("expected a finite set of points");
    out.push_back(c.start);
  }
  return out;
}

ArcSet points_to_arcset(const std::vector<CirclePoint>& pts) {
  std::vector<Arc> arcs;
  for (const CirclePoint& p : pts) arcs.push_back(Arc{p, p, true, true});
  return ArcSet::from_arcs(arcs);
}

ArcSet common_support(const ElementMultiset& h) {
  ArcSet inter = ArcSet::full();
  for (const auto& [e, mult] : h.entries())
    inter = set_intersection(inter, support(e));
  return inter;
}

void reject_identity_entries(const ElementMultiset& h) {
  if (h.empty()) throw std::invalid_argument("empty input multiset");
  for (const auto& [e, mult] : h.entries())
    if (e.is_identity())
      throw std::invalid_argument("input multiset contains the identity");
}

long lcm_accumulate(long acc, long v) {
  return std::lcm(acc, v);
}

}  // namespace

// ---------------------------------------------------------------------------
// ElementMultiset

ElementMultiset::ElementMultiset(const std::vector<PLCircleMap>& elems) {
  for (const PLCircleMap& e : elems) add(e);
}

void ElementMultiset::add(const PLCircleMap& e, long multiplicity) {
  if (multiplicity <= 0)
    throw std::invalid_argument("multiplicity must be positive");
  auto it = entries_.begin();
  while (it != entries_.end() && map_less(it->first, e)) ++it;
  if (it != entries_.end() && it->first == e) {
    it->second += multiplicity;
  } else {
    entries_.insert(it, {e, multiplicity});
  }
}

long ElementMultiset::size() const {
  long n = 0;
  for (const auto& [e, mult] : entries_) n += mult;
  return n;
}

std::vector<PLCircleMap> ElementMultiset::expanded() const {
  std::vector<PLCircleMap> out;
  for (const auto& [e, mult] : entries_)
    for (long i = 0; i < mult; ++i) out.push_back(e);
  return out;
}

bool operator==(const ElementMultiset& a, const ElementMultiset& b) {
  return a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------
// The operator identity

HaagerupOlesenSets haagerup_olesen_multisets() {
  const PLCircleMap &e = builtin("e"), &g1 = builtin("g1"), &g2 = builtin("g2"),
                    &x1 = builtin("x1"), &x2 = builtin("x2");
  HaagerupOlesenSets out;
  out.h1.add(g1);
  out.h1.add(g2);
  out.h1.add(x1);
  out.h1.add(x2);
  out.h2.add(e, 2);
  out.h2.add(compose(g1, x1));
  out.h2.add(compose(g2, x2));
  out.e_set.add(x1);
  out.e_set.add(x2);
  out.e_set.add(compose(g1, x1));
  out.e_set.add(compose(g2, x2));
  out.note =
      "the identity enters the second multiset with multiplicity two: on the "
      "arc where all four left-hand elements act trivially, four images must "
      "be matched on the right";
  return out;
}

PiRelationResult verify_pi_relation(const ElementMultiset& h1,
                                    const ElementMultiset& h2) {
  PiRelationResult res;
  std::vector<PLCircleMap> left = h1.expanded(), right = h2.expanded();
  if (left.size() != right.size()) {
    res.equal = false;
    res.witness = "multiset sizes differ";
    return res;
  }
  if (left.empty()) {
    res.equal = true;
    return res;
  }

  // Cut the circle at every breakpoint and every pairwise graph crossing;
  // between consecutive cuts each element is a fixed affine map.
  std::vector<CirclePoint> cuts;
  std::vector<PLCircleMap> all = left;
  all.insert(all.end(), right.begin(), right.end());
  for (const PLCircleMap& f : all)
    for (const auto& [x, y] : f.breakpoints()) cuts.push_back(x);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) continue;
      ArcSet agree = fixed_set(compose(inverse(all[j]), all[i]));
      for (const Arc& c : agree.components()) {
        cuts.push_back(c.start);
        cuts.push_back(c.end);
      }
    }
  if (cuts.empty()) cuts.emplace_back();
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto images_at = [](const std::vector<PLCircleMap>& fs, const CirclePoint& p) {
    std::vector<Rational> out;
    for (const PLCircleMap& f : fs) out.push_back(f(p).value());
    std::sort(out.begin(), out.end());
    return out;
  };
  auto pieces_at = [](const std::vector<PLCircleMap>& fs, const CirclePoint& p) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const PLCircleMap& f : fs) out.emplace_back(f.slope_at(p), f(p).value());
    std::sort(out.begin(), out.end());
    return out;
  };

  for (const CirclePoint& p : cuts) {
    if (images_at(left, p) != images_at(right, p)) {
      res.equal = false;
      res.witness = "point " + to_string(p.value());
      return res;
    }
  }
  for (size_t i = 0; i < cuts.size(); ++i) {
    const CirclePoint& a = cuts[i];
    const CirclePoint& b = cuts[(i + 1) % cuts.size()];
    Rational len = (cuts.size() == 1) ? Rational(1) : ccw_gap(a, b);
    CirclePoint mid = a.advanced(len / 2);
    if (pieces_at(left, mid) != pieces_at(right, mid)) {
      res.equal = false;
      res.witness =
          "cell (" + to_string(a.value()) + "," + to_string(b.value()) + ")";
      return res;
    }
  }
  res.equal = true;
  return res;
}

std::optional<CirclePoint> find_common_support_point(const ElementMultiset& h) {
  if (h.empty()) return std::nullopt;
  ArcSet inter = common_support(h);
  if (inter.is_empty()) return std::nullopt;
  if (inter.is_full()) return CirclePoint(Rational(0));
  const Arc& c = inter.components().front();
  Rational len = c.length();
  if (len == 0) return std::nullopt;  // isolated boundary point, not interior
  return CirclePoint(simplest_dyadic(c.start.value(), len));
}

// ---------------------------------------------------------------------------
// Step-like elements and the fixed-point construction

PLCircleMap build_step_like_g(const ElementMultiset& h, const CirclePoint& p,
                              long steepness) {
  if (steepness < 1) throw std::invalid_argument("steepness must be positive");
  if (!common_support(h).contains(p))
    throw std::invalid_argument(
        "the marked point is not in the common support");
  return conjugate(power(builtin("x0"), steepness),
                   PLCircleMap::rotation(p.value()));
}

ConstructionResult lemma_fixed_point_construct(const ElementMultiset& h,
                                               const CirclePoint& p, long n,
                                               const ConstructionLimits& lim) {
  reject_identity_entries(h);
  if (n < 1) throw std::invalid_argument("need at least one conjugator");
  if (!common_support(h).contains(p))
    throw std::invalid_argument(
        "the marked point is not in the common support");

  // A window around p whose images under the relevant torsion powers of
  // each input are disjoint from it; its existence is what lets a steep
  // enough g concentrate all movement near p.
  {
    Rational w(1, 4);
    bool ok = false;
    for (long it = 0; it < lim.halving_bound && !ok; ++it, w /= 2) {
      ArcSet win = ArcSet::arc(p.advanced(-w), p.advanced(w), false, false);
      ok = true;
      for (const auto& [e, mult] : h.entries()) {
        long s = rotation_number(e, lim.search.q_max).period();
        for (long j = 1; j < s && ok; ++j)
          ok = set_intersection(image_arcset(power(e, j), win), win).is_empty();
        if (!ok) break;
      }
    }
    if (!ok)
      throw SearchBoundExceeded(
          "no window around the marked point separates the torsion images");
  }

  for (long m = 1; m <= lim.steepness_bound; ++m) {
    PLCircleMap g = build_step_like_g(h, p, m);
    bool two_fixed = true;
    for (const auto& [e, mult] : h.entries()) {
      ArcSet fs = fixed_set(compose(g, e));
      if (fs.components().size() != 2 || !fs.is_closed()) {
        two_fixed = false;
        break;
      }
      for (const Arc& c : fs.components())
        if (!c.is_point()) two_fixed = false;
      if (!two_fixed) break;
    }
    if (!two_fixed) continue;

    ConstructionResult out;
    out.g = g;
    bool searched = true;
    for (const auto& [e, mult] : h.entries()) {
      PLCircleMap k = compose(g, e);
      try {
        FreePowerResult fr = free_power_search(k, g, lim.search);
        out.per_h.push_back({e, PerElementData{k, fr.k, fr.cert}});
      } catch (const HypothesisViolated&) {
        searched = false;
        break;
      }
    }
    if (!searched) continue;

    out.theta = 1;
    for (const auto& [e, d] : out.per_h)
      out.theta = lcm_accumulate(out.theta, d.rho_h);
    for (long i = 1; i <= n; ++i)
      out.conjugators.push_back(power(g, i * out.theta));
    return out;
  }
  throw SearchBoundExceeded("steepness bound exceeded without success");
}

// ---------------------------------------------------------------------------
// The p-th power construction

namespace {

// An element of rotation number 1/p whose unique periodic orbit is exactly
// the given dyadic points (in circular order), each advanced one slot, and
// whose p-th power moves every other point counterclockwise.  sharpness
// controls how hard points are pushed toward the next orbit point.
PLCircleMap orbit_cycler(const std::vector<CirclePoint>& pts, long sharpness) {
  long p = static_cast<long>(pts.size());
  if (p == 1)
    return conjugate(power(builtin("x0"), sharpness),
                     PLCircleMap::rotation(pts[0].value()));
  // Lifted coordinates: v_{i+p} = v_i + 1.
  std::vector<std::pair<Rational, Rational>> pairs;
  Rational frac = pow2(-sharpness);
  for (long i = 0; i < p; ++i) {
    Rational vi = pts[i].value() + Rational(0);
    Rational vn = (i + 1 < p) ? pts[i + 1].value() : pts[0].value() + 1;
    Rational vnn = (i + 2 < p) ? pts[i + 2].value()
                               : pts[(i + 2) % p].value() + 1;
    Rational len = vn - vi, next_len = vnn - vn;
    Rational w = vi + len * frac;            // end of the steep ramp
    Rational wp = vnn - next_len * frac;     // its image, deep into slot i+1
    append_dyadic_pieces(vi, w, vn, wp, pairs);
    append_dyadic_pieces(w, vn, wp, vnn, pairs);
  }
  std::vector<std::pair<CirclePoint, CirclePoint>> bps;
  for (const auto& [x, y] : pairs)
    bps.emplace_back(CirclePoint(x), CirclePoint(y));
  return PLCircleMap::from_breakpoints(bps);
}

}  // namespace

PowerfreeResult lemma_powerfree_construct(const ElementMultiset& h, long n,
                                          const ConstructionLimits& lim) {
  reject_identity_entries(h);
  if (n < 1) throw std::invalid_argument("need at least one conjugator");

  std::vector<PLCircleMap> hs;
  for (const auto& [e, mult] : h.entries()) hs.push_back(e);
  const long p = static_cast<long>(hs.size());

  std::vector<long> periods;
  for (const PLCircleMap& e : hs)
    periods.push_back(rotation_number(e, lim.search.q_max).period());

  // Points that must be avoided: endpoints of the support components of the
  // rotation-trivial powers of the inputs.
  std::vector<CirclePoint> forbidden;
  for (long j = 0; j < p; ++j) {
    ArcSet s = support(power(hs[j], periods[j]));
    for (const Arc& c : s.components()) {
      forbidden.push_back(c.start);
      forbidden.push_back(c.end);
    }
  }

  // One dyadic base point in the support of each input, with all forward and
  // backward images (over the inputs seen so far) pairwise fresh.
  std::vector<CirclePoint> base(p);
  std::vector<std::vector<CirclePoint>> xsets(p);
  for (long i = 0; i < p; ++i) {
    bool found = false;
    for (long k = 0; k <= 48 && !found; ++k) {
      long den = 1L << std::min<long>(k, 48);
      for (long num = (k == 0 ? 0 : 1); num < den && !found;
           num += (k == 0 ? 1 : 2)) {
        CirclePoint pt(Rational(num, den));
        if (!support(hs[i]).contains(pt)) continue;
        std::vector<CirclePoint> X{pt};
        bool ok = true;
        for (long j = 0; j <= i && ok; ++j) {
          CirclePoint fwd = hs[j](pt), bwd = inverse(hs[j])(pt);
          if (fwd == bwd && !(fwd == pt)) {
            // pt sits on a 2-cycle of hs[j]; only harmless for an
            // order-two torsion element.
            auto t = torsion_order(hs[j]);
            if (!(t && *t == 2)) ok = false;
          }
          X.push_back(fwd);
          X.push_back(bwd);
        }
        for (long j = 0; j < i && ok; ++j)
          for (const CirclePoint& a : X)
            for (const CirclePoint& b : xsets[j])
              if (a == b) ok = false;
        for (const CirclePoint& a : X)
          for (const CirclePoint& b : forbidden)
            if (a == b) ok = false;
        if (!ok) continue;
        base[i] = pt;
        xsets[i] = X;
        found = true;
      }
    }
    if (!found)
      throw SearchBoundExceeded("no admissible base point for an input");
  }

  std::vector<CirclePoint> P = base;
  std::sort(P.begin(), P.end());
  ArcSet P_set = points_to_arcset(P);

  // Interval widths around the base points, halved until every translate
  // family is pairwise fresh and the complement has interior everywhere.
  Rational min_gap(1);
  if (p > 1)
    for (long i = 0; i < p; ++i) {
      Rational gap = ccw_gap(P[i], P[(i + 1) % p]);
      if (gap < min_gap) min_gap = gap;
    }
  Rational w = min_gap / 4;
  if (w > Rational(1, 8)) w = Rational(1, 8);
  ArcSet U;
  {
    bool ok = false;
    for (long it = 0; it < lim.halving_bound && !ok; ++it, w /= 2) {
      std::vector<std::vector<ArcSet>> I(p);
      for (long i = 0; i < p; ++i) {
        ArcSet b = ArcSet::arc(CirclePoint(base[i].value() - w),
                               CirclePoint(base[i].value() + w), false, false);
        I[i].push_back(b);
        for (long j = 0; j <= i; ++j) {
          I[i].push_back(image_arcset(hs[j], b));
          I[i].push_back(image_arcset(inverse(hs[j]), b));
        }
      }
      ok = true;
      for (long i = 0; i < p && ok; ++i)
        for (long j = 0; j < i && ok; ++j)
          for (const ArcSet& A : I[i])
            for (const ArcSet& Bs : I[j])
              if (!set_intersection(A, Bs).is_empty()) ok = false;
      for (long i = 0; i < p && ok; ++i) {
        const ArcSet& b = I[i][0];
        for (long j = 0; j <= i && ok; ++j) {
          if (hs[j](base[i]) == base[i]) continue;
          if (!set_intersection(b, image_arcset(hs[j], b)).is_empty() ||
              !set_intersection(b, image_arcset(inverse(hs[j]), b)).is_empty())
            ok = false;
        }
      }
      if (ok) {
        ArcSet all;
        for (long i = 0; i < p; ++i)
          for (const ArcSet& A : I[i]) all = set_union(all, A);
        ArcSet comp = all.complement();
        if (comp.is_empty()) ok = false;
        for (const Arc& c : comp.components())
          if (c.length() == 0) ok = false;
      }
      if (ok) {
        U = ArcSet::empty();
        for (long i = 0; i < p; ++i)
          U = set_union(U, ArcSet::arc(CirclePoint(base[i].value() - w),
                                       CirclePoint(base[i].value() + w),
                                       false, false));
      }
    }
    if (!ok)
      throw SearchBoundExceeded(
          "interval halving around the base points did not separate");
  }
  ArcSet C = U.complement();

  // The cycling element, sharpened until its p-th power is fixed-point-free
  // off the orbit and moves each slot counterclockwise, then boosted so that
  // every non-trivial power maps the complement of U into U.
  Rational target = Rational(1, p);
  target.canonicalize();
  target = mod1(target);
  PLCircleMap g;
  bool built = false;
  for (long M = 2; M <= lim.steepness_bound && !built; ++M) {
    PLCircleMap gt = orbit_cycler(P, M);
    if (rotation_number(gt, std::max<long>(p, lim.search.q_max)).value !=
        target)
      continue;
    bool cyc = true;
    for (long i = 0; i < p && cyc; ++i)
      cyc = gt(P[i]) == P[(i + 1) % p];
    if (!cyc) continue;
    PLCircleMap gamma = power(gt, p);
    if (!(fixed_set(gamma) == P_set)) continue;
    // Each slot midpoint must move counterclockwise without leaving its slot.
    bool forward = true;
    for (long i = 0; i < p && forward; ++i) {
      Rational len = (p == 1) ? Rational(1) : ccw_gap(P[i], P[(i + 1) % p]);
      CirclePoint mid = P[i].advanced(len / 2);
      Rational img_off = ccw_gap(P[i], gamma(mid));
      forward = img_off > len / 2 && img_off < len;
    }
    if (!forward) continue;

    long d = 0;
    PLCircleMap cur = gamma;
    for (long t = 1; t <= 64; ++t) {
      if (U.contains(image_arcset(cur, C))) {
        d = t;
        break;
      }
      cur = compose(gamma, cur);
    }
    if (d == 0) continue;

    PLCircleMap cand = compose(power(gamma, d), gt);
    if (rotation_number(cand, std::max<long>(p, lim.search.q_max)).value !=
        target)
      continue;
    if (!(fixed_set(power(cand, p)) == P_set)) continue;
    g = cand;
    built = true;
  }
  if (!built)
    throw SearchBoundExceeded("could not build the cycling element");

  // No base point may be periodic under any g.h; a period would have to
  // show up within p steps.
  for (long i = 0; i < p; ++i) {
    PLCircleMap k = compose(g, hs[i]);
    for (const CirclePoint& x : P) {
      CirclePoint y = x;
      for (long t = 1; t <= p; ++t) {
        y = k(y);
        if (y == x)
          throw std::logic_error(
              "a base point is periodic under a product; construction "
              "invariant violated");
      }
    }
  }

  PowerfreeResult out;
  out.g = g;
  out.p = p;
  out.base_points = P;
  out.z = 1;
  for (long i = 0; i < p; ++i) {
    PLCircleMap k = compose(g, hs[i]);
    FreePowerResult fr = free_power_search(power(k, p), g, lim.search);
    out.per_h.push_back({hs[i], PerElementData{k, fr.k, fr.cert}});
    out.z = lcm_accumulate(out.z, fr.k);
  }
  for (long i = 1; i <= n; ++i) out.conjugators.push_back(power(g, i * out.z));
  return out;
}

// ---------------------------------------------------------------------------
// Obstructions

DisjointSupportReport disjoint_support_obstruction(const PLCircleMap& h1,
                                                   const PLCircleMap& h2,
                                                   const PLCircleMap& c1,
                                                   const PLCircleMap& c2) {
  if (!set_intersection(support(h1), support(h2)).is_empty())
    throw std::invalid_argument("inputs must have disjoint supports");
  DisjointSupportReport rep;
  rep.union_covers =
      set_union(support(conjugate(h1, c1)), support(conjugate(h1, c2)))
          .is_full();
  PLCircleMap a = conjugate(h2, c1), b = conjugate(h2, c2);
  rep.intersection_empty =
      set_intersection(support(a), support(b)).is_empty();
  rep.conjugates_commute = commutes(a, b);
  return rep;
}

ObstructionReport four_conjugate_analysis(const PLCircleMap& g1,
                                          const PLCircleMap& g2,
                                          const PLCircleMap& r,
                                          const PLCircleMap& s,
                                          const std::vector<PLCircleMap>& c) {
  if (c.size() != 4) throw std::invalid_argument("need exactly 4 conjugators");
  CirclePoint zero, half(Rational(1, 2));
  if (!(support(g1) == ArcSet::arc(zero, half, false, false)))
    throw std::invalid_argument("first element must be supported in (0,1/2)");
  if (!(support(g2) == ArcSet::arc(half, zero, false, false)))
    throw std::invalid_argument("second element must be supported in (1/2,1)");
  PLCircleMap sr = compose(s, r);
  for (const PLCircleMap& cj : c)
    if (!commutes(cj, sr))
      throw std::invalid_argument("every conjugator must commute with s.r");

  ObstructionReport rep;
  std::array<PLCircleMap, 2> gs{g1, g2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      rep.tables[i][j] =
          image_arcset(compose(c[j], inverse(r)), fixed_set(gs[i]));

  bool found = false;
  for (int i = 0; i < 2 && !found; ++i)
    for (int a = 0; a < 4 && !found; ++a)
      for (int b = a + 1; b < 4 && !found; ++b)
        for (int d = b + 1; d < 4 && !found; ++d) {
          ArcSet t = set_intersection(
              set_intersection(rep.tables[i][a], rep.tables[i][b]),
              rep.tables[i][d]);
          if (t.is_empty()) continue;
          const Arc& comp = t.components().front();
          rep.witness_i = i;
          rep.witness_triple = {a, b, d};
          rep.witness_point =
              comp.is_point() ? comp.start
                              : comp.start.advanced(comp.length() / 2);
          found = true;
        }
  if (!found)
    throw std::logic_error(
        "no triple intersection among the conjugate tables; invariant "
        "violated");

  rep.acts_as_sr_verified = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) {
      PLCircleMap k =
          conjugate(compose(s, compose(gs[i], r)), c[j]);
      ArcSet agree = fixed_set(compose(inverse(sr), k));
      if (!agree.contains(rep.tables[i][j])) rep.acts_as_sr_verified = false;
    }
  return rep;
}

}  // namespace plc
