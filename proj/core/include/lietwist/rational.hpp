// Exact rationals over checked 64-bit integers.

#ifndef LIETWIST_RATIONAL_HPP_
#define LIETWIST_RATIONAL_HPP_

#include <compare>
#include <string>

#include "lietwist/checked.hpp"

namespace lietwist {

class Rational {
public:
  Rational() = default;
  Rational(Int n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  Int floor() const { return floor_div(num_, den_); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const { return Rational(neg_checked(num_), den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" or "p/q".
  std::string str() const;
  static Rational parse(const std::string& text);

private:
  Int num_ = 0;
  Int den_ = 1;
};

} // namespace lietwist

#endif
