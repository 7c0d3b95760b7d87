/*
 * Finite unions of arcs and points of the circle, with exact rational
 * endpoints and per-endpoint open/closed flags.
 *
 * ArcSet values are always held in canonical form: components are pairwise
 * disjoint, maximal (no two can be merged), and stored in circular order by
 * start point.  Two ArcSets are equal iff their component lists are equal.
 *
 * Degenerate components are first class:
 *   {p}    a single point               (start == end, both closed)
 *   (p,p)  the circle minus one point   (start == end, both open)
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plcircle/circle_point.hpp"

namespace plc {

struct Arc {
  CirclePoint start, end;  // counterclockwise from start to end
  bool start_closed = true;
  bool end_closed = true;

  bool is_point() const { return start == end && start_closed && end_closed; }
  bool is_punctured_circle() const {
    return start == end && !start_closed && !end_closed;
  }
  // Arc length; 0 for a point, 1 for a punctured circle.
  Rational length() const;
  bool contains(const CirclePoint& p) const;
};

class ArcSet {
 public:
  ArcSet() = default;  // empty

  static ArcSet empty() { return ArcSet(); }
  static ArcSet full();
  static ArcSet point(const CirclePoint& p);
  static ArcSet arc(const CirclePoint& start, const CirclePoint& end,
                    bool start_closed, bool end_closed);
  // Canonicalizes an arbitrary (possibly overlapping, unordered) arc list.
  static ArcSet from_arcs(const std::vector<Arc>& arcs);

  bool is_empty() const { return !full_ && arcs_.empty(); }
  bool is_full() const { return full_; }
  const std::vector<Arc>& components() const { return arcs_; }

  bool contains(const CirclePoint& p) const;
  bool contains(const ArcSet& other) const;
  bool is_closed() const;  // every endpoint closed (trivially true if empty/full)

  friend bool operator==(const ArcSet& a, const ArcSet& b);

  friend ArcSet set_union(const ArcSet& a, const ArcSet& b);
  friend ArcSet set_intersection(const ArcSet& a, const ArcSet& b);
  friend ArcSet set_difference(const ArcSet& a, const ArcSet& b);
  ArcSet complement() const;
  ArcSet closure() const;

  // Minimum circular distance between the two sets.  Requires both sets
  // non-empty, closed and disjoint; throws std::invalid_argument otherwise.
  friend Rational separation(const ArcSet& a, const ArcSet& b);

  // Open eps-neighbourhood; requires eps > 0.
  ArcSet neighborhood(const Rational& eps) const;

  // "full", "empty", or comma-separated arcs "[a,b]" "(a,b)" "[a,b)" "(a,b]"
  // "{p}".  Round-trips exactly through parse().
  std::string to_string() const;
  static ArcSet parse(const std::string& text);

 private:
  bool full_ = false;
  std::vector<Arc> arcs_;  // canonical

  // Canonicalizes the set {p : member(p)}, given a boundary list outside of
  // which membership is locally constant.  Every boolean operation funnels
  // through this.
  static ArcSet sweep(std::vector<CirclePoint> boundary,
                      const std::function<bool(const CirclePoint&)>& member);
};

}  // namespace plc
