// Shared helpers for the test suites: random words over the builtin
// generators of T.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "plcircle/word.hpp"

namespace plc::testing {

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"x0", "x1", "x2", "g1", "g2", "r"};
  return names;
}

inline std::string random_word_text(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<size_t> pick(0, builtin_names().size() - 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::string w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    if (!w.empty()) w += ' ';
    w += builtin_names()[pick(rng)];
    if (e != 1) w += "^" + std::to_string(e);
  }
  return w;
}

inline PLCircleMap random_t_element(std::mt19937_64& rng, int max_len = 6) {
  return parse_word(random_word_text(rng, max_len));
}

}  // namespace plc::testing
