/*
 * Machine-checkable freeness certificates for pairs of circle maps, and the
 * search that, given suitable a and b, finds a power k and a certificate
 * that <a, b^k> is the free product <a> * <b^k>.
 *
 * A certificate stores one "table" set per generator.  A torsion side of
 * order q is checked by the finite family of inclusions
 * a^n . X_other inside X_self for n = 1..q-1.  A non-torsion side carries a
 * split of its table into an attracting part X+ and a repelling part X-,
 * with a.(X+ u X_other) inside X+ and a^-1.(X- u X_other) inside X-, which
 * gives a^n . X_other inside X_self for every n != 0 by induction.
 */

#pragma once

#include <optional>
#include <vector>

#include "plcircle/pl_map.hpp"

namespace plc {

struct SideCondition {
  ArcSet table;  // the side's ping-pong set
  std::optional<long> torsion_order;
  // Attracting/repelling split for a non-torsion side; both subsets of table.
  std::optional<std::pair<ArcSet, ArcSet>> split;
};

struct PingPongCertificate {
  SideCondition a_side;
  SideCondition b_side;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // first failing condition when !ok

  explicit operator bool() const { return ok; }
};

// Checks every certificate invariant exactly.  A true result proves that
// <a, b> decomposes as the free product <a> * <b>.  Throws
// std::invalid_argument for malformed certificates (empty table, declared
// torsion order not matching the element, missing split).
VerifyResult verify_certificate(const PLCircleMap& a, const PLCircleMap& b,
                                const PingPongCertificate& cert);

struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& what)
      : std::runtime_error(what) {}
};
struct SearchBoundExceeded : std::runtime_error {
  explicit SearchBoundExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct SearchLimits {
  long q_max = 64;              // rotation-number search bound
  long power_bound = 1 << 20;   // bound on v, z, N
  long halving_bound = 128;     // bound on epsilon/delta halvings
};

enum class SearchBranch { torsion, non_torsion };

// Intermediate data of free_power_search, sufficient to re-check every set
// inclusion the construction relied on.
struct SearchTrace {
  PLCircleMap b1;       // b^s, where s is the period of Rot(b)
  long s = 1;
  SearchBranch branch = SearchBranch::torsion;
  Rational epsilon;     // separation radius around the fixed-set family
  long v = 0;           // torsion branch: k = v * s
  ArcSet f_a;           // non-torsion branch: Fix(a^m)
  long m = 0;           // non-torsion branch: period of Rot(a)
  long big_n = 0;       // non-torsion branch: N with a^(+-N) pushing into W
  Rational delta;       // non-torsion branch: radius of X_b around Fix(b1)
  long z = 0;           // non-torsion branch: k = s * z
  long delta_window = 0;  // radius of the checked index window (= big_n)
};

struct FreePowerResult {
  long k = 0;
  PingPongCertificate cert;
  SearchTrace trace;
};

// Given a with rational rotation number and non-torsion b whose fixed-set
// family is moved off itself by the relevant powers of a, finds k (a
// positive multiple of the period of Rot(b)) together with a verifying
// certificate for the pair (a, b^k).  Deterministic.  Throws
// HypothesisViolated or SearchBoundExceeded.
FreePowerResult free_power_search(const PLCircleMap& a, const PLCircleMap& b,
                                  const SearchLimits& limits = {});

// Splits X \ Fix(mover) into (attracting, repelling) halves; components of
// the difference whose endpoints are both fixed are placed in both halves.
// Returns nullopt when some component cannot be classified (no fixed
// endpoint, or the midpoint escapes the component).
std::optional<std::pair<ArcSet, ArcSet>> attracting_repelling_split(
    const PLCircleMap& mover, const ArcSet& x);

// Samples freely reduced words over gens and their inverses (lengths uniform
// in [1, length]) and evaluates them exactly.  True iff no sampled word is
// the identity.  Deterministic given seed.
bool random_reduced_word_check(const std::vector<PLCircleMap>& gens,
                               long length, long trials, uint64_t seed);

}  // namespace plc
