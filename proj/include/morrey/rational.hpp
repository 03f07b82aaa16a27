#pragma once

#include <optional>
#include <string>

#include "morrey/bigint.hpp"

namespace morrey {

// Exact rational, canonical form: gcd(num, den) = 1, den > 0, zero == 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);
  static Rational of(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

  // Accepts "a", "a/b", and plain decimals like "-0.125" (exact base-10 read).
  static Rational from_string(const std::string& s);
  // Exact value of a finite double (every finite double is m * 2^e).
  static Rational from_double(double v);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational abs() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational pow(unsigned e) const;
  // Exact n-th root of a nonnegative rational, when one exists.
  std::optional<Rational> nth_root_exact(unsigned n) const;

  double to_double() const;
  std::string to_string() const;  // "a" or "a/b"

private:
  BigInt num_;
  BigInt den_;
};

}  // namespace morrey
