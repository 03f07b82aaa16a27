#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace morrey {

// Arbitrary-precision signed integer, base 2^32 magnitude.
// Covers the exact-mode key arithmetic: sums of |x_k|^p raised to the q-th
// power against cardinality powers stay well under a few hundred bits, so
// schoolbook multiplication and shift-subtract division are plenty.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v);

  static BigInt from_string(const std::string& s);  // throws parse_error

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;

  // Quotient truncated toward zero; remainder has the dividend's sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator<=(const BigInt& o) const { return !(o < *this); }
  bool operator>=(const BigInt& o) const { return !(*this < o); }

  BigInt pow(unsigned e) const;
  static BigInt gcd(BigInt a, BigInt b);  // nonnegative

  // Exact n-th root if the magnitude is a perfect n-th power.
  std::optional<BigInt> nth_root_exact(unsigned n) const;

  double to_double() const;
  std::int64_t to_int64() const;  // throws input_too_large when out of range
  bool fits_int64() const;
  std::string to_string() const;

  std::size_t bit_length() const;

private:
  // limbs_[0] is least significant; no trailing zero limbs; zero == empty.
  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b);
  static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
  void shl1();
  bool bit(std::size_t i) const;
  void divmod_small(std::uint32_t div, std::uint32_t& rem);
  void mul_add_small(std::uint32_t mul, std::uint32_t add);
};

}  // namespace morrey
