#include "plcircle/arc_set.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace plc {

Rational Arc::length() const {
  if (is_point()) return 0;
  if (is_punctured_circle()) return 1;
  return ccw_gap(start, end);
}

bool Arc::contains(const CirclePoint& p) const {
  Rational g = ccw_gap(start, p);
  if (start == end) {
    if (is_point()) return g == 0;
    return g != 0;  // punctured circle
  }
  Rational len = ccw_gap(start, end);
  if (g == 0) return start_closed;
  if (g == len) return end_closed;
  return g < len;
}

ArcSet ArcSet::sweep(std::vector<CirclePoint> boundary,
                     const std::function<bool(const CirclePoint&)>& member) {
  std::sort(boundary.begin(), boundary.end());
  boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

  if (boundary.empty())
    return member(CirclePoint()) ? ArcSet::full() : ArcSet::empty();

  const size_t n = boundary.size();
  // Alternating membership sequence: point B_0, cell (B_0,B_1), point B_1, ...
  std::vector<bool> seq(2 * n);
  for (size_t i = 0; i < n; ++i) {
    seq[2 * i] = member(boundary[i]);
    const CirclePoint& a = boundary[i];
    const CirclePoint& b = boundary[(i + 1) % n];
    Rational gap = (n == 1) ? Rational(1) : ccw_gap(a, b);
    seq[2 * i + 1] = member(a.advanced(gap / 2));
  }

  const size_t m = 2 * n;
  bool all = true, none = true;
  for (bool v : seq) (v ? none : all) = false;
  if (all) return ArcSet::full();
  if (none) return ArcSet::empty();

  auto start_of = [&](size_t idx) -> std::pair<CirclePoint, bool> {
    if (idx % 2 == 0) return {boundary[idx / 2], true};
    return {boundary[idx / 2], false};
  };
  auto end_of = [&](size_t idx) -> std::pair<CirclePoint, bool> {
    if (idx % 2 == 0) return {boundary[idx / 2], true};
    return {boundary[(idx / 2 + 1) % n], false};
  };

  std::vector<Arc> out;
  for (size_t s = 0; s < m; ++s) {
    if (!seq[s] || seq[(s + m - 1) % m]) continue;  // not a run start
    size_t e = s;
    while (seq[(e + 1) % m]) e = (e + 1) % m;
    auto [sp, sc] = start_of(s);
    auto [ep, ec] = end_of(e);
    out.push_back(Arc{sp, ep, sc, ec});
  }
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) {
    return a.start < b.start;
  });

  ArcSet r;
  r.arcs_ = std::move(out);
  return r;
}

namespace {

std::vector<CirclePoint> endpoints(const ArcSet& s) {
  std::vector<CirclePoint> pts;
  for (const Arc& a : s.components()) {
    pts.push_back(a.start);
    pts.push_back(a.end);
  }
  return pts;
}

std::vector<CirclePoint> endpoints(const ArcSet& a, const ArcSet& b) {
  std::vector<CirclePoint> pts = endpoints(a);
  auto pb = endpoints(b);
  pts.insert(pts.end(), pb.begin(), pb.end());
  return pts;
}

}  // namespace

ArcSet ArcSet::full() {
  ArcSet s;
  s.full_ = true;
  return s;
}

ArcSet ArcSet::point(const CirclePoint& p) {
  ArcSet s;
  s.arcs_.push_back(Arc{p, p, true, true});
  return s;
}

ArcSet ArcSet::arc(const CirclePoint& start, const CirclePoint& end,
                   bool start_closed, bool end_closed) {
  if (start == end && start_closed != end_closed)
    throw std::invalid_argument("half-open degenerate arc is not a set");
  if (start == end && start_closed && end_closed) return point(start);
  return from_arcs({Arc{start, end, start_closed, end_closed}});
}

ArcSet ArcSet::from_arcs(const std::vector<Arc>& arcs) {
  std::vector<CirclePoint> pts;
  for (const Arc& a : arcs) {
    pts.push_back(a.start);
    pts.push_back(a.end);
  }
  return sweep(pts, [&](const CirclePoint& p) {
    for (const Arc& a : arcs)
      if (a.contains(p)) return true;
    return false;
  });
}

bool ArcSet::contains(const CirclePoint& p) const {
  if (full_) return true;
  for (const Arc& a : arcs_)
    if (a.contains(p)) return true;
  return false;
}

bool ArcSet::contains(const ArcSet& other) const {
  return set_intersection(*this, other) == other;
}

bool ArcSet::is_closed() const {
  for (const Arc& a : arcs_)
    if (!a.start_closed || !a.end_closed) return false;
  return true;
}

bool operator==(const ArcSet& a, const ArcSet& b) {
  if (a.full_ != b.full_) return false;
  if (a.arcs_.size() != b.arcs_.size()) return false;
  for (size_t i = 0; i < a.arcs_.size(); ++i) {
    const Arc &x = a.arcs_[i], &y = b.arcs_[i];
    if (!(x.start == y.start && x.end == y.end &&
          x.start_closed == y.start_closed && x.end_closed == y.end_closed))
      return false;
  }
  return true;
}

ArcSet set_union(const ArcSet& a, const ArcSet& b) {
  if (a.is_full() || b.is_full()) return ArcSet::full();
  return ArcSet::sweep(endpoints(a, b), [&](const CirclePoint& p) {
    return a.contains(p) || b.contains(p);
  });
}

ArcSet set_intersection(const ArcSet& a, const ArcSet& b) {
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  return ArcSet::sweep(endpoints(a, b), [&](const CirclePoint& p) {
    return a.contains(p) && b.contains(p);
  });
}

ArcSet set_difference(const ArcSet& a, const ArcSet& b) {
  if (b.is_full()) return ArcSet::empty();
  return ArcSet::sweep(endpoints(a, b), [&](const CirclePoint& p) {
    return a.contains(p) && !b.contains(p);
  });
}

ArcSet ArcSet::complement() const {
  if (full_) return empty();
  if (arcs_.empty()) return full();
  return sweep(endpoints(*this),
               [&](const CirclePoint& p) { return !contains(p); });
}

ArcSet ArcSet::closure() const {
  if (full_ || arcs_.empty()) return *this;
  std::vector<Arc> closed;
  for (Arc a : arcs_) {
    if (a.is_punctured_circle()) return full();
    a.start_closed = a.end_closed = true;
    closed.push_back(a);
  }
  return from_arcs(closed);
}

Rational separation(const ArcSet& a, const ArcSet& b) {
  if (a.is_empty() || b.is_empty())
    throw std::invalid_argument("separation: empty operand");
  if (a.is_full() || b.is_full() || !a.is_closed() || !b.is_closed())
    throw std::invalid_argument("separation: operands must be closed proper sets");
  if (!set_intersection(a, b).is_empty())
    throw std::invalid_argument("separation: operands intersect");

  // Both sets are finite unions of closed arcs, so the minimum distance is
  // attained between component endpoints.
  std::optional<Rational> best;
  for (const Arc& x : a.components())
    for (const Arc& y : b.components())
      for (const CirclePoint& p : {x.start, x.end})
        for (const CirclePoint& q : {y.start, y.end}) {
          Rational d = circular_distance(p, q);
          if (!best || d < *best) best = d;
        }
  return *best;
}

ArcSet ArcSet::neighborhood(const Rational& eps) const {
  if (eps <= 0) throw std::invalid_argument("neighborhood: eps must be > 0");
  if (full_) return full();
  if (arcs_.empty()) return empty();
  std::vector<Arc> dilated;
  for (const Arc& a : arcs_) {
    if (a.length() + 2 * eps >= 1) return full();
    CirclePoint s = a.start.advanced(-eps);
    CirclePoint e = a.end.advanced(eps);
    dilated.push_back(Arc{s, e, false, false});
  }
  return from_arcs(dilated);
}

std::string ArcSet::to_string() const {
  if (full_) return "full";
  if (arcs_.empty()) return "empty";
  std::ostringstream os;
  bool first = true;
  for (const Arc& a : arcs_) {
    if (!first) os << ", ";
    first = false;
    if (a.is_point()) {
      os << "{" << plc::to_string(a.start.value()) << "}";
    } else {
      os << (a.start_closed ? "[" : "(") << plc::to_string(a.start.value())
         << "," << plc::to_string(a.end.value())
         << (a.end_closed ? "]" : ")");
    }
  }
  return os.str();
}

ArcSet ArcSet::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "full") return full();
  if (t == "empty" || t.empty()) return empty();

  std::vector<Arc> arcs;
  size_t i = 0;
  while (i < t.size()) {
    char open = t[i];
    if (open == '{') {
      size_t close = t.find('}', i);
      if (close == std::string::npos)
        throw std::invalid_argument("arcset: unterminated point");
      CirclePoint p(parse_rational(t.substr(i + 1, close - i - 1)));
      arcs.push_back(Arc{p, p, true, true});
      i = close + 1;
    } else if (open == '[' || open == '(') {
      size_t comma = t.find(',', i);
      if (comma == std::string::npos)
        throw std::invalid_argument("arcset: missing comma in arc");
      size_t close = t.find_first_of("])", comma);
      if (close == std::string::npos)
        throw std::invalid_argument("arcset: unterminated arc");
      CirclePoint s(parse_rational(t.substr(i + 1, comma - i - 1)));
      CirclePoint e(parse_rational(t.substr(comma + 1, close - comma - 1)));
      arcs.push_back(Arc{s, e, open == '[', t[close] == ']'});
      i = close + 1;
    } else {
      throw std::invalid_argument("arcset: unexpected character '" +
                                  std::string(1, open) + "'");
    }
    if (i < t.size()) {
      if (t[i] != ',') throw std::invalid_argument("arcset: expected comma");
      ++i;
    }
  }
  return from_arcs(arcs);
}

}  // namespace plc
