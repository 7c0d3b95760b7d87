/*
 * Points on the circle R/Z with exact rational coordinates.
 */

#pragma once

#include <compare>

#include "plcircle/rational.hpp"

namespace plc {

class CirclePoint {
 public:
  CirclePoint() : v_(0) {}
  explicit CirclePoint(const Rational& x) : v_(mod1(x)) {}

  const Rational& value() const { return v_; }
  bool is_dyadic() const { return plc::is_dyadic(v_); }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.v_ == b.v_;
  }
  // Order of representatives in [0,1); circular order queries go through
  // ccw_gap / strictly_between.
  friend bool operator<(const CirclePoint& a, const CirclePoint& b) {
    return a.v_ < b.v_;
  }

  CirclePoint advanced(const Rational& t) const { return CirclePoint(v_ + t); }

 private:
  Rational v_;  // in [0,1)
};

// Counterclockwise gap (b - a) mod 1, in [0,1).
Rational ccw_gap(const CirclePoint& a, const CirclePoint& b);

// min of the two arc lengths between a and b, in [0,1/2].
Rational circular_distance(const CirclePoint& a, const CirclePoint& b);

// True iff walking counterclockwise from a, one meets x strictly before b.
// Requires a != b; x equal to a or b yields false.
bool strictly_between(const CirclePoint& a, const CirclePoint& x,
                      const CirclePoint& b);

}  // namespace plc
