#include "stringob/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace stringob {

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto valid_integer = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Rational rational_from_double(double value, long denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite coordinate");
  Rational q(Integer(static_cast<long>(std::llround(value * static_cast<double>(denominator)))),
             Integer(denominator));
  q.canonicalize();
  return q;
}

}  // namespace stringob
