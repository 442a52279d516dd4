#include "lietwist/rational.hpp"

#include <charconv>

namespace lietwist {

Rational::Rational(Int n, Int d) {
  if (d == 0)
    fail(ErrorCode::ParseError, "rational with zero denominator");
  if (d < 0) {
    n = neg_checked(n);
    d = neg_checked(d);
  }
  Int g = gcd_int(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_)
    return Rational(add_checked(a.num_, b.num_), a.den_);
  Int g = gcd_int(a.den_, b.den_);
  Int bd = b.den_ / g;
  return Rational(add_checked(mul_checked(a.num_, bd), mul_checked(b.num_, a.den_ / g)),
                  mul_checked(a.den_, bd));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = gcd_int(a.num_, b.den_);
  Int g2 = gcd_int(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(mul_checked(a.num_ / g1, b.num_ / g2), mul_checked(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0)
    fail(ErrorCode::InexactDivision, "rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_)
    return a.num_ <=> b.num_;
  // __int128 avoids spurious overflow on comparison
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

static Int parse_int(std::string_view s, const std::string& whole) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::ParseError, "not a rational number: '" + whole + "'");
  return v;
}

Rational Rational::parse(const std::string& text) {
  std::string_view s(text);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(s, text));
  return Rational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
}

} // namespace lietwist
