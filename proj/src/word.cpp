#include "plcircle/word.hpp"

#include <sstream>

namespace plc {

std::vector<WordToken> tokenize_word(const std::string& text) {
  std::vector<WordToken> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && !isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '^')
      ++i;
    std::string name = text.substr(start, i - start);
    if (name.empty()) throw ParseError("empty generator name", start);
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      size_t estart = ++i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      std::string es = text.substr(estart, i - estart);
      if (es.empty() || es == "-" || es == "+")
        throw ParseError("missing exponent after '^'", estart);
      try {
        exp = std::stol(es);
      } catch (const std::exception&) {
        throw ParseError("bad exponent '" + es + "'", estart);
      }
    }
    if (exp == 0) continue;
    if (!tokens.empty() && tokens.back().name == name) {
      tokens.back().exponent += exp;
      if (tokens.back().exponent == 0) tokens.pop_back();
    } else {
      tokens.push_back(WordToken{name, exp});
    }
  }
  return tokens;
}

const Bindings& builtin_bindings() {
  static const Bindings bindings = [] {
    auto q = [](long n, long d) { return Rational(n, d); };
    auto pt = [&](long n, long d) { return CirclePoint(q(n, d)); };

    // x0: slopes 2, 1, 1/2 on [0,1/4], [1/4,1/2], [1/2,1].
    PLCircleMap x0 = PLCircleMap::from_breakpoints(
        {{pt(0, 1), pt(0, 1)}, {pt(1, 4), pt(1, 2)}, {pt(1, 2), pt(3, 4)}});
    // x1: identity on [0,1/2], x0 rescaled into [1/2,1].
    PLCircleMap x1 = PLCircleMap::from_breakpoints({{pt(0, 1), pt(0, 1)},
                                                    {pt(1, 2), pt(1, 2)},
                                                    {pt(5, 8), pt(3, 4)},
                                                    {pt(3, 4), pt(7, 8)}});
    // x2: x0 rescaled into [3/4,1].
    PLCircleMap x2 = PLCircleMap::from_breakpoints({{pt(0, 1), pt(0, 1)},
                                                    {pt(3, 4), pt(3, 4)},
                                                    {pt(13, 16), pt(7, 8)},
                                                    {pt(7, 8), pt(15, 16)}});
    PLCircleMap r = PLCircleMap::rotation(q(1, 2));

    Bindings b;
    b.emplace("e", PLCircleMap::identity());
    b.emplace("x0", x0);
    b.emplace("x1", x1);
    b.emplace("x2", x2);
    b.emplace("r", r);
    b.emplace("g1", conjugate(x1, r));
    b.emplace("g2", conjugate(x2, r));
    return b;
  }();
  return bindings;
}

PLCircleMap parse_word(const std::string& text, const Bindings& bindings) {
  PLCircleMap result = PLCircleMap::identity();
  for (const WordToken& tok : tokenize_word(text)) {
    auto it = bindings.find(tok.name);
    if (it == bindings.end())
      throw ParseError("unbound generator '" + tok.name + "'", 0);
    result = compose(result, power(it->second, tok.exponent));
  }
  return result;
}

PLCircleMap parse_element(const std::string& text, const Bindings& bindings) {
  size_t i = text.find_first_not_of(" \t\n");
  if (i != std::string::npos && text.compare(i, 6, "plmap{") == 0)
    return PLCircleMap::parse(text);
  return parse_word(text, bindings);
}

}  // namespace plc
