/*
 * Plain-text witnesses for the searches and constructions, so that a stored
 * result can be re-verified in a fresh process without re-running any
 * search.  A witness file is a line-based "key: value" block embedding the
 * exact element and arc-set serializations.
 */

#pragma once

#include <string>

#include "plcircle/constructions.hpp"

namespace plc {

enum class WitnessKind { pingpong, fixedpoint, powerfree };

struct Witness {
  WitnessKind kind = WitnessKind::pingpong;

  // pingpong: cert certifies the pair (a, b^k).
  PLCircleMap a, b;
  long k = 0;
  PingPongCertificate cert;

  // fixedpoint / powerfree: g, the conjugator step (theta resp. z), the
  // conjugators, and one certified entry per input element.  point is the
  // common fixed point (fixedpoint) and base_points the periodic orbit
  // (powerfree, with p = base_points.size()).
  PLCircleMap g;
  CirclePoint point;
  long theta = 0;
  std::vector<CirclePoint> base_points;
  std::vector<PLCircleMap> conjugators;
  std::vector<std::pair<PLCircleMap, PerElementData>> per_h;
};

Witness make_witness(const PLCircleMap& a, const PLCircleMap& b,
                     const FreePowerResult& res);
Witness make_witness(const ConstructionResult& res, const CirclePoint& point);
Witness make_witness(const PowerfreeResult& res);

std::string serialize_witness(const Witness& w);

// Inverse of serialize_witness; throws std::invalid_argument on malformed
// input.  Round-trips exactly.
Witness parse_witness(const std::string& text);

// Re-checks everything the witness claims: certificate inclusions via
// verify_certificate, the product/power relations between the stored
// elements, and the conjugator formulas.  Runs no search.
VerifyResult verify_witness(const Witness& w);

}  // namespace plc
