#include "plcircle/rational.hpp"

namespace plc {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s, 10);
      return Rational(n);
    }
    Int n(s.substr(0, slash), 10);
    Int d(s.substr(slash + 1), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_dyadic(const Rational& q) {
  Int d = q.get_den();
  // A canonical denominator is a power of two iff it has a single set bit.
  return mpz_popcount(d.get_mpz_t()) == 1;
}

std::optional<long> exact_log2(const Rational& q) {
  if (q <= 0) return std::nullopt;
  Int n = q.get_num(), d = q.get_den();
  if (mpz_popcount(n.get_mpz_t()) != 1 || mpz_popcount(d.get_mpz_t()) != 1)
    return std::nullopt;
  long ln = mpz_scan1(n.get_mpz_t(), 0);
  long ld = mpz_scan1(d.get_mpz_t(), 0);
  return ln - ld;
}

Int floor_int(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rational mod1(const Rational& q) {
  Rational r = q - Rational(floor_int(q));
  r.canonicalize();
  return r;
}

}  // namespace plc
