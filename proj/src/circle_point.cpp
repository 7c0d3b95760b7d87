#include "plcircle/circle_point.hpp"

namespace plc {

Rational ccw_gap(const CirclePoint& a, const CirclePoint& b) {
  return mod1(b.value() - a.value());
}

Rational circular_distance(const CirclePoint& a, const CirclePoint& b) {
  Rational g = ccw_gap(a, b);
  Rational h = 1 - g;
  return g <= h ? g : h;
}

bool strictly_between(const CirclePoint& a, const CirclePoint& x,
                      const CirclePoint& b) {
  Rational gx = ccw_gap(a, x);
  Rational gb = ccw_gap(a, b);
  return gx > 0 && gx < gb;
}

}  // namespace plc
