#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stringob {

/// Exact rational; always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
    x.canonicalize();
    y.canonicalize();
  }
  Point(long px, long py) : x(px), y(py) {}
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

/// Lexicographic order (x first, then y).
inline bool operator<(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  return c < 0 || (c == 0 && a.y < b.y);
}

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// "num/den" serialization (the denominator is always written).
std::string format_rational(const Rational& q);

/// Accepts "num/den" or a bare integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Rounds a double to the nearest multiple of 1/denominator.
Rational rational_from_double(double value, long denominator);

}  // namespace stringob
