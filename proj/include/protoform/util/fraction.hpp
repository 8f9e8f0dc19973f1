#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace protoform {

// Exact rational on 128-bit integers. Enough headroom for corpus-level
// B-cubed scores on small evaluation sets; overflow throws rather than
// silently wrapping.
struct Fraction {
  __int128 num = 0;
  __int128 den = 1;

  Fraction() = default;
  Fraction(long long n) : num(n), den(1) {}
  Fraction(__int128 n, __int128 d) : num(n), den(d) { reduce(); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void reduce() {
    if (den == 0) throw std::overflow_error("fraction: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static __int128 checked_mul(__int128 a, __int128 b) {
    if (a == 0 || b == 0) return 0;
    __int128 r = a * b;
    if (r / b != a) throw std::overflow_error("fraction: multiply overflow");
    return r;
  }

  Fraction operator+(const Fraction& o) const {
    return Fraction(checked_mul(num, o.den) + checked_mul(o.num, den),
                    checked_mul(den, o.den));
  }
  Fraction operator*(const Fraction& o) const {
    Fraction a(num, o.den);
    Fraction b(o.num, den);
    return Fraction(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  Fraction operator/(const Fraction& o) const {
    if (o.num == 0) throw std::overflow_error("fraction: divide by zero");
    return *this * Fraction(o.den, o.num);
  }
  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Fraction& o) const { return !(*this == o); }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

}  // namespace protoform
