#include "mxop/rational.hpp"

namespace mxop {

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (x == 0) throw std::domain_error("rat_pow: zero to a negative power");
    return Rat(1) / rat_pow(x, -e);
  }
  Rat base = x, acc = 1;
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rat_parse: zero denominator");
    return Rat(p) / Rat(q);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  }
}

std::string rat_str(const Rat& x) {
  const BigInt p = rat_num(x), q = rat_den(x);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

BigInt rat_floor(const Rat& x) {
  BigInt p = rat_num(x), q = rat_den(x);
  BigInt d = p / q;
  if (p < 0 && d * q != p) --d;
  return d;
}

}  // namespace mxop
