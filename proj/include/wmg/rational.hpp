// Exact rational arithmetic on 64-bit numerator/denominator.
//
// All synthesis arithmetic in this library is exact: region coefficients and
// semiflow entries are rationals, never floats.  Intermediates are computed
// in 128 bits and reduced; a result that still overflows 64 bits throws,
// because the instances handled here are small enough that overflow always
// indicates a logic error rather than a genuinely large value.
#pragma once

#include <cstdint>
#include <string>

namespace wmg {

class Rat {
 public:
  Rat() = default;
  Rat(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rat(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

  std::string to_string() const;

 private:
  static Rat make(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
};

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace wmg
