#include "plcircle/pl_map.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace plc {

namespace {

Rational seg_slope(const Rational& x1, const Rational& y1, const Rational& x2,
                   const Rational& y2) {
  Rational s = (y2 - y1) / (x2 - x1);
  s.canonicalize();
  return s;
}

}  // namespace

PLCircleMap PLCircleMap::identity() { return rotation(0); }

PLCircleMap PLCircleMap::rotation(const Rational& amount) {
  PLCircleMap f;
  f.xs_ = {Rational(0)};
  f.ys_ = {mod1(amount)};
  return f;
}

PLCircleMap PLCircleMap::from_lift(std::vector<Rational> xs,
                                   std::vector<Rational> ys,
                                   Int* normalization) {
  const size_t n = xs.size();
  if (n == 0) throw std::invalid_argument("plmap: needs at least one breakpoint");
  for (size_t i = 0; i < n; ++i) {
    if (xs[i] < 0 || xs[i] >= 1)
      throw std::invalid_argument("plmap: breakpoint outside [0,1)");
    if (i > 0 && xs[i] <= xs[i - 1])
      throw std::invalid_argument("plmap: breakpoints not strictly increasing");
    if (i > 0 && ys[i] <= ys[i - 1])
      throw std::invalid_argument("plmap: not orientation preserving");
  }
  if (n > 1 && ys[n - 1] >= ys[0] + 1)
    throw std::invalid_argument("plmap: winding number is not 1");

  if (normalization) *normalization = 0;

  auto make_rotation = [&](const Rational& delta) {
    Rational d = delta;
    Int t = floor_int(d);
    if (normalization) *normalization = t;
    PLCircleMap f;
    f.xs_ = {Rational(0)};
    f.ys_ = {mod1(d)};
    return f;
  };

  if (n == 1) return make_rotation(ys[0] - xs[0]);

  // Drop breakpoints whose left and right slopes agree (cyclically, via the
  // wrap segment from the last breakpoint to the first plus one).
  std::vector<Rational> slopes(n);
  for (size_t i = 0; i < n; ++i) {
    const Rational& x1 = xs[i];
    const Rational& y1 = ys[i];
    Rational x2 = (i + 1 < n) ? xs[i + 1] : xs[0] + 1;
    Rational y2 = (i + 1 < n) ? ys[i + 1] : ys[0] + 1;
    slopes[i] = seg_slope(x1, y1, x2, y2);
  }
  std::vector<Rational> kx, ky;
  for (size_t i = 0; i < n; ++i) {
    const Rational& left = slopes[(i + n - 1) % n];
    if (left != slopes[i]) {
      kx.push_back(xs[i]);
      ky.push_back(ys[i]);
    }
  }
  if (kx.empty()) return make_rotation(ys[0] - xs[0]);
  assert(kx.size() >= 2);

  Int t = floor_int(ky[0]);
  if (t != 0)
    for (Rational& y : ky) y -= Rational(t);
  if (normalization) *normalization = t;

  PLCircleMap f;
  f.xs_ = std::move(kx);
  f.ys_ = std::move(ky);
  return f;
}

PLCircleMap PLCircleMap::from_breakpoints(
    const std::vector<std::pair<CirclePoint, CirclePoint>>& pairs) {
  if (pairs.empty())
    throw std::invalid_argument("plmap: needs at least one breakpoint");
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const size_t n = sorted.size();
  std::vector<Rational> xs(n), yc(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = sorted[i].first.value();
    yc[i] = sorted[i].second.value();
    if (i > 0 && xs[i] == xs[i - 1])
      throw std::invalid_argument("plmap: duplicate breakpoint x");
  }
  if (n == 1) return rotation(yc[0] - xs[0]);

  // The image sequence must wind once: exactly one cyclic descent, and all
  // values distinct.
  int descents = 0;
  for (size_t i = 1; i < n; ++i) {
    if (yc[i] == yc[i - 1])
      throw std::invalid_argument("plmap: duplicate image value");
    if (yc[i] < yc[i - 1]) ++descents;
  }
  if (yc[0] < yc[n - 1]) ++descents;
  if (yc[0] == yc[n - 1])
    throw std::invalid_argument("plmap: duplicate image value");
  if (descents != 1)
    throw std::invalid_argument("plmap: images not in circular order");

  std::vector<Rational> ys(n);
  int wraps = 0;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && yc[i] < yc[i - 1]) ++wraps;
    ys[i] = yc[i] + wraps;
  }
  return from_lift(std::move(xs), std::move(ys));
}

bool PLCircleMap::is_identity() const {
  return xs_.size() == 1 && xs_[0] == 0 && ys_[0] == 0;
}

bool PLCircleMap::is_rotation() const { return xs_.size() == 1; }

std::vector<std::pair<CirclePoint, CirclePoint>> PLCircleMap::breakpoints()
    const {
  std::vector<std::pair<CirclePoint, CirclePoint>> out;
  out.reserve(xs_.size());
  for (size_t i = 0; i < xs_.size(); ++i)
    out.emplace_back(CirclePoint(xs_[i]), CirclePoint(mod1(ys_[i])));
  return out;
}

Rational PLCircleMap::lift(const Rational& x) const {
  Int k = floor_int(x);
  Rational frac = x - Rational(k);
  const size_t n = xs_.size();

  // Segment containing frac; the wrap segment runs from (xs[n-1], ys[n-1])
  // to (xs[0]+1, ys[0]+1), shifted by -1 when frac < xs[0].
  Rational x1, y1, x2, y2;
  if (frac < xs_[0]) {
    x1 = xs_[n - 1] - 1;
    y1 = ys_[n - 1] - 1;
    x2 = xs_[0];
    y2 = ys_[0];
  } else if (frac >= xs_[n - 1]) {
    x1 = xs_[n - 1];
    y1 = ys_[n - 1];
    x2 = xs_[0] + 1;
    y2 = ys_[0] + 1;
  } else {
    size_t i =
        std::upper_bound(xs_.begin(), xs_.end(), frac) - xs_.begin() - 1;
    x1 = xs_[i];
    y1 = ys_[i];
    x2 = xs_[i + 1];
    y2 = ys_[i + 1];
  }
  Rational y = y1 + (y2 - y1) * (frac - x1) / (x2 - x1);
  y.canonicalize();
  return y + Rational(k);
}

CirclePoint PLCircleMap::operator()(const CirclePoint& x) const {
  return CirclePoint(lift(x.value()));
}

std::pair<Rational, Rational> PLCircleMap::displacement_range() const {
  Rational lo = ys_[0] - xs_[0], hi = lo;
  for (size_t i = 1; i < xs_.size(); ++i) {
    Rational d = ys_[i] - xs_[i];
    if (d < lo) lo = d;
    if (d > hi) hi = d;
  }
  return {lo, hi};
}

Rational PLCircleMap::slope_at(const CirclePoint& p) const {
  const Rational& x = p.value();
  const size_t n = xs_.size();
  size_t i;
  if (x < xs_[0] || x >= xs_[n - 1]) {
    i = n - 1;
  } else {
    i = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin() - 1;
  }
  Rational x2 = (i + 1 < n) ? xs_[i + 1] : xs_[0] + 1;
  Rational y2 = (i + 1 < n) ? ys_[i + 1] : ys_[0] + 1;
  return seg_slope(xs_[i], ys_[i], x2, y2);
}

bool operator==(const PLCircleMap& a, const PLCircleMap& b) {
  return a.xs_ == b.xs_ && a.ys_ == b.ys_;
}

bool map_less(const PLCircleMap& a, const PLCircleMap& b) {
  return a.to_string() < b.to_string();
}

std::string PLCircleMap::to_string() const {
  std::ostringstream os;
  os << "plmap{";
  for (size_t i = 0; i < xs_.size(); ++i) {
    if (i) os << ",";
    os << "(" << plc::to_string(xs_[i]) << "," << plc::to_string(mod1(ys_[i]))
       << ")";
  }
  os << "}";
  return os.str();
}

PLCircleMap PLCircleMap::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.substr(0, 6) != "plmap{" || t.back() != '}')
    throw std::invalid_argument("plmap: expected plmap{...}");
  std::string body = t.substr(6, t.size() - 7);
  std::vector<std::pair<CirclePoint, CirclePoint>> pairs;
  size_t i = 0;
  while (i < body.size()) {
    if (body[i] != '(') throw std::invalid_argument("plmap: expected '('");
    size_t comma = body.find(',', i);
    size_t close = body.find(')', i);
    if (comma == std::string::npos || close == std::string::npos ||
        comma > close)
      throw std::invalid_argument("plmap: malformed breakpoint pair");
    CirclePoint x(parse_rational(body.substr(i + 1, comma - i - 1)));
    CirclePoint y(parse_rational(body.substr(comma + 1, close - comma - 1)));
    pairs.emplace_back(x, y);
    i = close + 1;
    if (i < body.size()) {
      if (body[i] != ',') throw std::invalid_argument("plmap: expected comma");
      ++i;
    }
  }
  return from_breakpoints(pairs);
}

PLCircleMap compose_with_offset(const PLCircleMap& f, const PLCircleMap& g,
                                Int* offset) {
  // Breakpoints of f(g(x)): those of g plus the g-preimages of those of f.
  PLCircleMap ginv = inverse(g);
  std::vector<Rational> cand;
  for (const Rational& x : g.xs_) cand.push_back(x);
  for (const Rational& x : f.xs_) cand.push_back(mod1(ginv.lift(x)));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<Rational> ys;
  ys.reserve(cand.size());
  for (const Rational& x : cand) ys.push_back(f.lift(g.lift(x)));
  return PLCircleMap::from_lift(std::move(cand), std::move(ys), offset);
}

PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g) {
  return compose_with_offset(f, g, nullptr);
}

PLCircleMap inverse(const PLCircleMap& f) {
  std::vector<std::pair<CirclePoint, CirclePoint>> pairs;
  for (size_t i = 0; i < f.xs_.size(); ++i)
    pairs.emplace_back(CirclePoint(mod1(f.ys_[i])), CirclePoint(f.xs_[i]));
  return PLCircleMap::from_breakpoints(pairs);
}

PLCircleMap conjugate(const PLCircleMap& f, const PLCircleMap& c) {
  return compose(compose(c, f), inverse(c));
}

PLCircleMap power(const PLCircleMap& f, long n) {
  if (n == 0) return PLCircleMap::identity();
  PLCircleMap base = n > 0 ? f : inverse(f);
  unsigned long e = n > 0 ? static_cast<unsigned long>(n)
                          : static_cast<unsigned long>(-(n + 1)) + 1;
  PLCircleMap acc = PLCircleMap::identity();
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = (e >>= 1) ? compose(base, base) : base;
  }
  return acc;
}

PLCircleMap commutator(const PLCircleMap& a, const PLCircleMap& b) {
  return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

bool commutes(const PLCircleMap& a, const PLCircleMap& b) {
  return compose(a, b) == compose(b, a);
}

namespace {

// {x : F(x) - x == target} for the canonical lift F, as a closed arc set.
ArcSet translation_zero_set(const PLCircleMap& f, const Int& target) {
  if (f.is_rotation()) {
    auto [d, d2] = f.displacement_range();
    return d == Rational(target) ? ArcSet::full() : ArcSet::empty();
  }
  auto bps = f.breakpoints();
  const size_t n = bps.size();
  std::vector<Arc> pieces;
  Rational tgt(target);
  for (size_t i = 0; i < n; ++i) {
    Rational x1, y1, x2, y2;
    x1 = bps[i].first.value();
    y1 = f.lift(x1);
    if (i + 1 < n) {
      x2 = bps[i + 1].first.value();
      y2 = f.lift(x2);
    } else {
      x2 = bps[0].first.value() + 1;
      y2 = f.lift(x2);
    }
    Rational s = (y2 - y1) / (x2 - x1);
    s.canonicalize();
    if (s == 1) {
      if (y1 - x1 == tgt)
        pieces.push_back(Arc{CirclePoint(x1), CirclePoint(x2), true, true});
    } else {
      // y1 + s(x - x1) = x + target
      Rational x = (tgt - y1 + s * x1) / (s - 1);
      x.canonicalize();
      if (x >= x1 && x <= x2) {
        CirclePoint p(x);
        pieces.push_back(Arc{p, p, true, true});
      }
    }
  }
  return ArcSet::from_arcs(pieces);
}

}  // namespace

ArcSet fixed_set(const PLCircleMap& f) {
  auto [lo, hi] = f.displacement_range();
  ArcSet out;
  Int p = floor_int(lo);
  if (Rational(p) < lo) ++p;
  for (; Rational(p) <= hi; ++p)
    out = set_union(out, translation_zero_set(f, p));
  return out;
}

ArcSet support(const PLCircleMap& f) { return fixed_set(f).complement(); }

ArcSet image_arcset(const PLCircleMap& f, const ArcSet& a) {
  if (a.is_full()) return ArcSet::full();
  std::vector<Arc> out;
  for (const Arc& c : a.components())
    out.push_back(Arc{f(c.start), f(c.end), c.start_closed, c.end_closed});
  return ArcSet::from_arcs(out);
}

RotationNumber rotation_number(const PLCircleMap& f, long q_max) {
  if (q_max < 1) throw std::invalid_argument("rotation_number: q_max >= 1");
  PLCircleMap h = f;
  Int t = 0;  // h + t is the true lift of f^q
  for (long q = 1; q <= q_max; ++q) {
    auto [lo, hi] = h.displacement_range();
    lo += Rational(t);
    hi += Rational(t);
    Int p = floor_int(lo);
    if (Rational(p) < lo) ++p;
    if (Rational(p) <= hi) {
      Rational rot(p, Int(q));
      rot.canonicalize();
      return RotationNumber{mod1(rot)};
    }
    if (q < q_max) {
      Int m;
      h = compose_with_offset(h, f, &m);
      t += m;
    }
  }
  throw RotationNotFound("no periodic orbit with period <= " +
                         std::to_string(q_max));
}

std::vector<CirclePoint> periodic_orbit_witness(const PLCircleMap& f,
                                                const RotationNumber& rot) {
  long q = rot.period();
  Int p_num = rot.value.get_num();

  PLCircleMap h = f;
  Int t = 0;
  for (long i = 1; i < q; ++i) {
    Int m;
    h = compose_with_offset(h, f, &m);
    t += m;
  }
  // The true lift of f^q is h + t; its displacement range has oscillation
  // < 1 and therefore contains exactly one integer translation c, which
  // must reduce to p mod q.  (rot.value only records c/q mod 1.)
  auto [lo, hi] = h.displacement_range();
  lo += Rational(t);
  hi += Rational(t);
  Int c = floor_int(lo);
  if (Rational(c) < lo) ++c;
  if (Rational(c) > hi || (c - p_num) % q != 0)
    throw std::invalid_argument("periodic_orbit_witness: rotation number mismatch");
  ArcSet zeros = translation_zero_set(h, c - t);
  if (zeros.is_empty())
    throw std::invalid_argument("periodic_orbit_witness: rotation number mismatch");

  CirclePoint x0 = zeros.is_full() ? CirclePoint() : zeros.components()[0].start;
  std::vector<CirclePoint> orbit{x0};
  CirclePoint x = x0;
  for (long i = 1; i < q; ++i) {
    x = f(x);
    orbit.push_back(x);
  }
  std::sort(orbit.begin(), orbit.end());
  for (long i = 0; i + 1 < q; ++i)
    if (orbit[i] == orbit[i + 1])
      throw std::invalid_argument(
          "periodic_orbit_witness: rotation number mismatch (orbit too small)");
  // Combinatorial rotation check: f advances the sorted orbit by p slots.
  long p = static_cast<long>(p_num.get_si()) % q;
  if (p < 0) p += q;
  for (long i = 0; i < q; ++i)
    if (!(f(orbit[i]) == orbit[(i + p) % q]))
      throw std::invalid_argument(
          "periodic_orbit_witness: orbit does not realize the rotation number");
  return orbit;
}

ThompsonCheck is_thompson_T(const PLCircleMap& f) {
  auto bps = f.breakpoints();
  for (const auto& [x, y] : bps) {
    if (!x.is_dyadic())
      return {false, "non-dyadic breakpoint " + to_string(x.value())};
    if (!y.is_dyadic())
      return {false, "non-dyadic image " + to_string(y.value())};
  }
  const size_t n = bps.size();
  for (size_t i = 0; i < n; ++i) {
    Rational s = f.slope_at(bps[i].first);
    if (!exact_log2(s))
      return {false, "slope " + to_string(s) + " is not a power of two"};
  }
  return {true, ""};
}

std::optional<long> torsion_order(const PLCircleMap& f, long bound) {
  if (f.is_identity()) return 1;
  RotationNumber rot;
  try {
    rot = rotation_number(f, bound);
  } catch (const RotationNotFound&) {
    return std::nullopt;  // torsion of order n would surface at q = n
  }
  long q = rot.period();
  if (q <= bound && power(f, q).is_identity()) return q;
  return std::nullopt;
}

}  // namespace plc
