#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "lsc/error.hpp"

namespace lsc {

// Exact rational on 64-bit numerator/denominator, kept normalized with
// den > 0 and gcd(num, den) = 1. Intermediates are computed in 128 bits;
// a result that does not fit 64 bits after reduction throws Errc::Overflow.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d) { assign(n, d); }

  long long num() const { return n_; }
  long long den() const { return d_; }

  bool is_zero() const { return n_ == 0; }
  bool is_integer() const { return d_ == 1; }
  long long as_integer() const {
    if (d_ != 1) fail(Errc::NonIntegralMinimum, "expected integer, got " + to_string());
    return n_;
  }

  Rat operator-() const {
    Rat r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }

  Rat operator+(const Rat& o) const {
    return make(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_);
  }
  Rat operator-(const Rat& o) const {
    return make(i128(n_) * o.d_ - i128(o.n_) * d_, i128(d_) * o.d_);
  }
  Rat operator*(const Rat& o) const { return make(i128(n_) * o.n_, i128(d_) * o.d_); }
  Rat operator/(const Rat& o) const {
    if (o.n_ == 0) fail(Errc::Overflow, "division by zero");
    return make(i128(n_) * o.d_, i128(d_) * o.n_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return n_ == o.n_ && d_ == o.d_; }
  std::strong_ordering operator<=>(const Rat& o) const {
    i128 l = i128(n_) * o.d_, r = i128(o.n_) * d_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = std::to_string(n_);
    if (d_ != 1) s += "/" + std::to_string(d_);
    return s;
  }

  // Accepts "p", "-p", "p/q".
  static Rat parse(std::string_view s) {
    auto bad = [&] { fail(Errc::ParseError, "bad rational '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    auto to_ll = [&](std::string_view t) -> long long {
      if (t.empty()) bad();
      size_t pos = 0;
      bool neg = t[0] == '-' || t[0] == '+';
      if (neg && t.size() == 1) bad();
      long long v = 0;
      for (pos = (t[0] == '-' || t[0] == '+') ? 1 : 0; pos < t.size(); ++pos) {
        if (t[pos] < '0' || t[pos] > '9') bad();
        if (v > (std::numeric_limits<long long>::max() - 9) / 10) bad();
        v = v * 10 + (t[pos] - '0');
      }
      return t[0] == '-' ? -v : v;
    };
    if (slash == std::string_view::npos) return Rat(to_ll(s));
    return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
  }

 private:
  using i128 = __int128;

  void assign(long long n, long long d) {
    if (d == 0) fail(Errc::Overflow, "zero denominator");
    *this = make(i128(n), i128(d));
  }

  static Rat make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) fail(Errc::Overflow, "rational overflow");
    Rat r;
    r.n_ = static_cast<long long>(n);
    r.d_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  long long n_ = 0;
  long long d_ = 1;
};

inline Rat operator*(long long k, const Rat& r) { return Rat(k) * r; }

}  // namespace lsc
