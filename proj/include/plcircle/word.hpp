/*
 * Generator words: whitespace-separated tokens "name" or "name^k" with
 * integer k, multiplied left to right as left actions.
 *
 * Builtin bindings:
 *   x0, x1, x2  the standard F generators; x1 and x2 are the affine
 *               rescales of x0 into [1/2,1] and [3/4,1]
 *   r           rotation by 1/2
 *   g1, g2      x1^r and x2^r, supported in [0,1/2]
 *   e           the identity
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "plcircle/pl_map.hpp"

namespace plc {

struct WordToken {
  std::string name;
  long exponent = 1;
};

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Tokenizes a word; merges adjacent tokens with equal names and drops zero
// exponents.
std::vector<WordToken> tokenize_word(const std::string& text);

using Bindings = std::map<std::string, PLCircleMap>;

// The builtin elements listed above.
const Bindings& builtin_bindings();

// Evaluates a word against bindings (builtins unless overridden).  Throws
// ParseError on syntax errors or unbound names.
PLCircleMap parse_word(const std::string& text,
                       const Bindings& bindings = builtin_bindings());

// Accepts either a word or a "plmap{...}" literal.
PLCircleMap parse_element(const std::string& text,
                          const Bindings& bindings = builtin_bindings());

}  // namespace plc
