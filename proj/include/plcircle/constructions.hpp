/*
 * Higher-level constructions over the certified ping-pong machinery:
 *
 *  - the multiset identity satisfied by the quasi-regular representation on
 *    the dyadic orbit, checked cell by cell on the circle;
 *  - a step-like element g fixing exactly one common-support point p, used
 *    to produce rank-n families of conjugates (gh)^{c_i} that freely
 *    generate, with c_i commuting with g;
 *  - the p-th power variant that works even when supports are disjoint;
 *  - the obstruction checks explaining why stronger conjugation conditions
 *    must fail (disjoint supports force commuting conjugates; four
 *    conjugate tables on the circle always develop a triple intersection).
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plcircle/pingpong.hpp"

namespace plc {

// A finite multiset of circle maps, canonically ordered by serialization.
class ElementMultiset {
 public:
  ElementMultiset() = default;
  explicit ElementMultiset(const std::vector<PLCircleMap>& elems);

  void add(const PLCircleMap& e, long multiplicity = 1);

  const std::vector<std::pair<PLCircleMap, long>>& entries() const {
    return entries_;
  }
  long size() const;  // total count with multiplicity
  bool empty() const { return entries_.empty(); }
  std::vector<PLCircleMap> expanded() const;

  friend bool operator==(const ElementMultiset& a, const ElementMultiset& b);

 private:
  std::vector<std::pair<PLCircleMap, long>> entries_;
};

// The two halves of the operator identity, and the four-element set E whose
// members all move the point 7/8.  The identity appears in h2 with
// multiplicity two: the exact per-point computation requires it (on points
// of (0,1/2) both x1 and x2 act trivially), and the checker is the arbiter.
struct HaagerupOlesenSets {
  ElementMultiset h1, h2, e_set;
  std::string note;
};
HaagerupOlesenSets haagerup_olesen_multisets();

struct PiRelationResult {
  bool equal = false;
  std::string witness;  // failing cell or point when !equal

  explicit operator bool() const { return equal; }
};

// Decides whether the two multisets induce the same operator on l2 of any
// orbit, via the exact pointwise criterion: for every circle point q the
// image multisets {h.q : h in h1} and {h.q : h in h2} agree.  The circle is
// cut at all breakpoints and pairwise graph crossings; on each closed cell
// the affine restrictions are compared as multisets.
PiRelationResult verify_pi_relation(const ElementMultiset& h1,
                                    const ElementMultiset& h2);

// A dyadic rational interior to the intersection of all supports, if the
// intersection is non-empty.
std::optional<CirclePoint> find_common_support_point(const ElementMultiset& h);

// An element with rotation number 0 fixing exactly p, whose graph hugs a
// step function: slope 2^steepness on the rising piece and 2^-steepness on
// the flat ones.  Requires p in the common support of h.
PLCircleMap build_step_like_g(const ElementMultiset& h, const CirclePoint& p,
                              long steepness);

struct ConstructionLimits {
  SearchLimits search;
  long steepness_bound = 32;
  long halving_bound = 128;
  long power_bound = 1 << 20;
};

struct PerElementData {
  PLCircleMap k_h;  // g composed with the input element
  long rho_h = 0;   // the certified power of g
  PingPongCertificate cert;  // for the pair certified by the search
};

struct ConstructionResult {
  PLCircleMap g;
  long theta = 0;  // LCM of the rho_h
  std::vector<PLCircleMap> conjugators;  // c_i = g^(i*theta), i = 1..n
  std::vector<std::pair<PLCircleMap, PerElementData>> per_h;
};

// Builds g fixing exactly p with escalating steepness until every g.h has
// precisely two fixed points and every pair (g.h, g) passes the free-power
// search; theta is the LCM of the certified powers.  The families
// {(g h)^(c_i)} are then free of rank n for every h.
ConstructionResult lemma_fixed_point_construct(const ElementMultiset& h,
                                               const CirclePoint& p, long n,
                                               const ConstructionLimits& lim = {});

struct PowerfreeResult {
  PLCircleMap g;
  long p = 0;  // number of distinct input elements
  long z = 0;  // LCM of the per-element powers
  std::vector<CirclePoint> base_points;  // the chosen orbit P, in order
  std::vector<PLCircleMap> conjugators;  // c_i = g^(i*z), i = 1..n
  std::vector<std::pair<PLCircleMap, PerElementData>> per_h;
};

// The p-th power variant: g with rotation number 1/p whose unique size-p
// orbit avoids every input's dynamics, so that each ((g h)^p, g) pair is
// certified free; the families {((g h)^(c_i))^p} are free of rank n.
PowerfreeResult lemma_powerfree_construct(const ElementMultiset& h, long n,
                                          const ConstructionLimits& lim = {});

struct DisjointSupportReport {
  bool union_covers = false;        // Supp(h1^c1) u Supp(h1^c2) = S^1
  bool intersection_empty = false;  // Supp(h2^c1) n Supp(h2^c2) empty
  bool conjugates_commute = false;  // [h2^c1, h2^c2] = 1
};

// For h1, h2 with disjoint supports: whenever the conjugated supports of h1
// cover the circle, the conjugated supports of h2 must be disjoint and the
// two h2-conjugates must commute.  All three facts are computed exactly.
DisjointSupportReport disjoint_support_obstruction(const PLCircleMap& h1,
                                                   const PLCircleMap& h2,
                                                   const PLCircleMap& c1,
                                                   const PLCircleMap& c2);

struct ObstructionReport {
  std::array<std::array<ArcSet, 4>, 2> tables;  // X_ij = (c_j r^-1).Fix(g_i)
  long witness_i = 0;                  // row with a triple intersection
  std::array<long, 3> witness_triple;  // column indices a < b < c
  CirclePoint witness_point;           // a point of the triple intersection
  bool acts_as_sr_verified = false;    // k_ij = sr pointwise on X_ij
};

// Requires Supp(g1) = (0,1/2), Supp(g2) = (1/2,1) and every c_j commuting
// with s.r.  Computes the four conjugate tables per row, finds a triple
// intersection (one always exists), and verifies that k_ij = c_j s g_i r
// c_j^-1 agrees with s.r on X_ij at endpoints and midpoints.
ObstructionReport four_conjugate_analysis(const PLCircleMap& g1,
                                          const PLCircleMap& g2,
                                          const PLCircleMap& r,
                                          const PLCircleMap& s,
                                          const std::vector<PLCircleMap>& c);

}  // namespace plc
