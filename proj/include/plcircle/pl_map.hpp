/*
 * Orientation-preserving piecewise-linear homeomorphisms of the circle R/Z
 * with rational breakpoints and positive rational slopes.  This is the
 * ambient representation of every group element: Thompson's groups F and T
 * live inside it, and T membership is a checked predicate.
 *
 * Internally a map is stored through its canonical lift: breakpoint
 * x-coordinates strictly increasing in [0,1), lifted y-values strictly
 * increasing with y[0] = f(x[0]) in [0,1).  Breakpoints where the left and
 * right slopes agree are removed, so equality of maps is equality of the
 * stored data; a rigid rotation is anchored at x = 0.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plcircle/arc_set.hpp"

namespace plc {

class PLCircleMap {
 public:
  PLCircleMap() : xs_{Rational(0)}, ys_{Rational(0)} {}  // identity

  static PLCircleMap identity();
  static PLCircleMap rotation(const Rational& amount);
  // Breakpoints given as (x, f(x)) pairs on the circle; validates that the
  // data defines an orientation-preserving homeomorphism.
  static PLCircleMap from_breakpoints(
      const std::vector<std::pair<CirclePoint, CirclePoint>>& pairs);

  bool is_identity() const;
  bool is_rotation() const;

  size_t breakpoint_count() const { return xs_.size(); }
  // (x, f(x)) pairs in increasing x order, smallest x first.
  std::vector<std::pair<CirclePoint, CirclePoint>> breakpoints() const;

  CirclePoint operator()(const CirclePoint& x) const;

  // Lift evaluation: F(x + k) = F(x) + k with F(x0) in [0,1).
  Rational lift(const Rational& x) const;
  // Extremes of F(x) - x over the circle (attained at breakpoints).
  std::pair<Rational, Rational> displacement_range() const;
  // Slope of the piece containing x, taking the right-hand piece at
  // breakpoints.
  Rational slope_at(const CirclePoint& x) const;

  friend bool operator==(const PLCircleMap& a, const PLCircleMap& b);
  friend bool operator!=(const PLCircleMap& a, const PLCircleMap& b) {
    return !(a == b);
  }
  // Total order compatible with ==, used for canonical sorting of elements.
  friend bool map_less(const PLCircleMap& a, const PLCircleMap& b);

  // "plmap{(x1,y1),(x2,y2),...}" with exact rationals.  Round-trips exactly.
  std::string to_string() const;
  static PLCircleMap parse(const std::string& text);

 private:
  std::vector<Rational> xs_;  // strictly increasing, in [0,1)
  std::vector<Rational> ys_;  // strictly increasing lift, ys_[0] in [0,1)

  static PLCircleMap from_lift(std::vector<Rational> xs, std::vector<Rational> ys,
                               Int* normalization = nullptr);
  friend PLCircleMap compose_with_offset(const PLCircleMap& f,
                                         const PLCircleMap& g, Int* offset);
  friend PLCircleMap inverse(const PLCircleMap& f);
  friend ArcSet fixed_set(const PLCircleMap& f);
};

// x -> f(g(x)); all products in this library are left actions.
PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g);
// As compose(f, g), additionally reporting the integer m with
// F(G(x)) = H(x) + m where F, G, H are the canonical lifts.
PLCircleMap compose_with_offset(const PLCircleMap& f, const PLCircleMap& g,
                                Int* offset);
PLCircleMap inverse(const PLCircleMap& f);
// c f c^-1, written f^c below, with the conjugator as the second argument.
PLCircleMap conjugate(const PLCircleMap& f, const PLCircleMap& c);
PLCircleMap power(const PLCircleMap& f, long n);

PLCircleMap commutator(const PLCircleMap& a, const PLCircleMap& b);
bool commutes(const PLCircleMap& a, const PLCircleMap& b);

// Closed set {x : f(x) = x}.
ArcSet fixed_set(const PLCircleMap& f);
// Open set {x : f(x) != x} (exact complement of fixed_set).
ArcSet support(const PLCircleMap& f);
// Exact image f(a), component by component.
ArcSet image_arcset(const PLCircleMap& f, const ArcSet& a);

struct RotationNumber {
  Rational value;  // p/q in [0,1), lowest terms

  friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
  long period() const {  // q
    return static_cast<long>(value.get_den().get_si());
  }
};

struct RotationNotFound : std::runtime_error {
  explicit RotationNotFound(const std::string& what) : std::runtime_error(what) {}
};

// Smallest q <= q_max such that the lift of f^q minus some integer
// translation p has a zero; returns p/q.  Throws RotationNotFound when no
// period <= q_max works (raise q_max; always succeeds for T elements).
RotationNumber rotation_number(const PLCircleMap& f, long q_max = 64);

// A periodic orbit of size exactly q realizing the rotation number, listed
// in circular order.  Throws std::invalid_argument if rot does not match f.
std::vector<CirclePoint> periodic_orbit_witness(const PLCircleMap& f,
                                                const RotationNumber& rot);

struct ThompsonCheck {
  bool ok;
  std::string reason;  // empty when ok
};

// True iff all breakpoints and images are dyadic and all slopes are powers
// of two.
ThompsonCheck is_thompson_T(const PLCircleMap& f);

// Smallest n <= bound with f^n = id, if any.
std::optional<long> torsion_order(const PLCircleMap& f, long bound = 64);

}  // namespace plc
