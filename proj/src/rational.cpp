#include "morrey/rational.hpp"

#include <cmath>

#include "morrey/errors.hpp"

namespace morrey {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) raise(errc::invalid_params, "rational with zero denominator");
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::abs() const {
  Rational r = *this;
  r.num_ = r.num_.abs();
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) raise(errc::invalid_params, "rational division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return num_ * o.den_ < o.num_ * den_;
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;  // already coprime when the base is canonical
}

std::optional<Rational> Rational::nth_root_exact(unsigned n) const {
  if (sign() < 0 || n == 0) return std::nullopt;
  auto rn = num_.nth_root_exact(n);
  if (!rn) return std::nullopt;
  auto rd = den_.nth_root_exact(n);
  if (!rd) return std::nullopt;
  return Rational(std::move(*rn), std::move(*rd));
}

double Rational::to_double() const {
  std::size_t nb = num_.bit_length(), db = den_.bit_length();
  if (nb < 900 && db < 900) return num_.to_double() / den_.to_double();
  // Scale each side into double range independently and restore the exponent.
  auto reduce = [](const BigInt& v, std::size_t bits) -> std::pair<double, long> {
    if (bits <= 512) return {v.to_double(), 0};
    long shift = static_cast<long>(bits - 512);
    BigInt two_pow = BigInt(2).pow(static_cast<unsigned>(shift));
    return {(v / two_pow).to_double(), shift};
  };
  auto [mn, en] = reduce(num_, nb);
  auto [md, ed] = reduce(den_, db);
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) raise(errc::parse_error, "non-finite value has no rational form");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num(m), den(1);
  if (exp >= 0)
    num = num * BigInt(2).pow(static_cast<unsigned>(exp));
  else
    den = BigInt(2).pow(static_cast<unsigned>(-exp));
  return Rational(std::move(num), std::move(den));
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0) raise(errc::parse_error, "trailing decimal point");
  return Rational(BigInt::from_string(digits), BigInt(10).pow(static_cast<unsigned>(frac_len)));
}

}  // namespace morrey
