#include "morrey/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morrey/errors.hpp"

namespace morrey {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t m = negative_ ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  const auto& big = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
  const auto& small = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
  r.limbs_.resize(big.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r.limbs_[big.size()] = static_cast<std::uint32_t>(carry);
  r.trim();
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
    if (s < 0) {
      s += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<std::uint32_t>(s);
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (negative_ == o.negative_) {
    BigInt r = add_mag(*this, o);
    r.negative_ = negative_ && !r.is_zero();
    return r;
  }
  int c = cmp_mag(*this, o);
  if (c == 0) return BigInt();
  BigInt r = c > 0 ? sub_mag(*this, o) : sub_mag(o, *this);
  r.negative_ = (c > 0 ? negative_ : o.negative_) && !r.is_zero();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                          r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    r.limbs_[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  r.negative_ = negative_ != o.negative_;
  r.trim();
  return r;
}

std::size_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigInt::shl1() {
  std::uint32_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  if (b.is_zero()) raise(errc::invalid_params, "division by zero");
  int c = cmp_mag(a, b);
  if (c < 0) {
    quot = BigInt();
    rem = a;
    return;
  }
  // Shift-subtract restoring division on magnitudes.
  BigInt q, r;
  q.limbs_.assign(a.limbs_.size(), 0);
  const std::size_t bits = a.bit_length();
  for (std::size_t i = bits; i-- > 0;) {
    r.shl1();
    if (a.bit(i)) {
      if (r.limbs_.empty())
        r.limbs_.push_back(1);
      else
        r.limbs_[0] |= 1u;
    }
    if (cmp_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  q.trim();
  r.trim();
  q.negative_ = (a.negative_ != b.negative_) && !q.is_zero();
  r.negative_ = a.negative_ && !r.is_zero();
  quot = std::move(q);
  rem = std::move(r);
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
  if (negative_ != o.negative_) return negative_;
  int c = cmp_mag(*this, o);
  return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::pow(unsigned e) const {
  BigInt base = *this;
  BigInt r(1);
  while (e != 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::optional<BigInt> BigInt::nth_root_exact(unsigned n) const {
  if (negative_ || n == 0) return std::nullopt;
  if (is_zero()) return BigInt(0);
  if (n == 1) return *this;
  // Double estimate with a +-2 scan decides whenever the estimate's absolute
  // error is well under 1; binary search covers the rest.
  double est = std::pow(to_double(), 1.0 / n);
  if (est < 1e12) {
    std::int64_t mid = static_cast<std::int64_t>(std::llround(est));
    for (std::int64_t cand = std::max<std::int64_t>(0, mid - 2); cand <= mid + 2; ++cand) {
      BigInt c(cand);
      if (c.pow(n) == *this) return c;
    }
    return std::nullopt;
  }
  BigInt lo(0), hi(1);
  while (hi.pow(n) < *this) hi = hi * BigInt(2);
  while (lo <= hi) {
    BigInt midb = (lo + hi) / BigInt(2);
    BigInt p = midb.pow(n);
    if (p == *this) return midb;
    if (p < *this)
      lo = midb + BigInt(1);
    else
      hi = midb - BigInt(1);
  }
  return std::nullopt;
}

double BigInt::to_double() const {
  double v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
  return negative_ ? -v : v;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  std::uint64_t m = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
  if (negative_) return m <= (1ull << 63);
  return m < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) raise(errc::input_too_large, "value exceeds int64 range");
  std::uint64_t m = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
  return negative_ ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

void BigInt::divmod_small(std::uint32_t div, std::uint32_t& rem) {
  std::uint64_t r = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (r << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / div);
    r = cur % div;
  }
  rem = static_cast<std::uint32_t>(r);
  trim();
}

void BigInt::mul_add_small(std::uint32_t mul, std::uint32_t add) {
  std::uint64_t carry = add;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
    limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt m = abs();
  std::string digits;
  while (!m.is_zero()) {
    std::uint32_t rem = 0;
    m.divmod_small(1000000000u, rem);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) raise(errc::parse_error, "empty integer literal");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') raise(errc::parse_error, "bad digit in integer literal");
    r.mul_add_small(10, static_cast<std::uint32_t>(s[i] - '0'));
  }
  r.negative_ = neg && !r.is_zero();
  return r;
}

}  // namespace morrey
