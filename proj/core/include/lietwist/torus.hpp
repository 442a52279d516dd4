// Shifted Laurent modules Z[delta + X(T)]: twist classes and torus elements.

#ifndef LIETWIST_TORUS_HPP_
#define LIETWIST_TORUS_HPP_

#include <complex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lietwist/weight.hpp"

namespace lietwist {

// A shift delta modulo X(T), kept with every coordinate in [0, 1).
class TwistClass {
public:
  TwistClass() = default;
  explicit TwistClass(std::size_t rank) : shift_(RationalWeight::zero(rank)) {}
  explicit TwistClass(const RationalWeight& x) : shift_(x.fractional_part()) {}

  std::size_t rank() const { return shift_.size(); }
  const RationalWeight& shift() const { return shift_; }
  bool is_zero() const { return shift_.is_zero(); }
  bool contains(const RationalWeight& x) const { return TwistClass(x) == *this; }

  TwistClass operator-() const { return TwistClass(-shift_); }
  friend TwistClass operator+(const TwistClass& a, const TwistClass& b) { return TwistClass(a.shift_ + b.shift_); }
  friend TwistClass operator-(const TwistClass& a, const TwistClass& b) { return TwistClass(a.shift_ - b.shift_); }
  friend bool operator==(const TwistClass&, const TwistClass&) = default;

  std::string str() const { return shift_.str(); }

private:
  RationalWeight shift_;
};

// Finite sum of c * e^(delta + mu), mu in X(T); zero coefficients are never stored.
class TorusElement {
public:
  using Map = std::unordered_map<Weight, Int, WeightHash>;

  TorusElement() = default;
  explicit TorusElement(std::size_t rank) : rank_(rank), twist_(rank) {}
  TorusElement(std::size_t rank, TwistClass twist) : rank_(rank), twist_(std::move(twist)) {}
  static TorusElement one(std::size_t rank);
  static TorusElement monomial(const RationalWeight& exponent, Int coeff = 1);
  static TorusElement monomial(const Weight& exponent, Int coeff = 1) {
    return monomial(RationalWeight(exponent), coeff);
  }

  std::size_t rank() const { return rank_; }
  const TwistClass& twist() const { return twist_; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Offset mu <-> exponent delta + mu.
  RationalWeight exponent(const Weight& offset) const;
  Weight offset_of(const RationalWeight& exponent) const;

  Int coeff(const Weight& offset) const;
  Int coeff_at(const RationalWeight& exponent) const;
  void add_term(const Weight& offset, Int c);
  void add_monomial(const RationalWeight& exponent, Int c);

  // Terms sorted by offset.
  std::vector<std::pair<Weight, Int>> sorted_terms() const;

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  TorusElement operator-() const;
  TorusElement scaled(Int k) const;
  // Multiplication by e^shift (exponent shift, twist changes accordingly).
  TorusElement shifted(const RationalWeight& shift) const;
  // Same element re-expressed in a new coset representative; requires twist equality.
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  // Sum of all coefficients (evaluation at t = 1).
  Int augmentation() const;
  std::string str() const;

private:
  std::size_t rank_ = 0;
  TwistClass twist_;
  Map terms_;
};

TorusElement multiply(const TorusElement& a, const TorusElement& b);
// e^lambda -> e^-lambda; twist negates.
TorusElement dualize(const TorusElement& a);
// Sum c * exp(2 pi i <lambda, angles>).
std::complex<double> numeric_evaluate(const TorusElement& a, std::span<const double> angles);

// Apply an integer matrix acting on X(T); throws ShiftNotStable if
// m(delta) - delta is not integral.
TorusElement apply_matrix(const IntMatrix& m, const TorusElement& a);

} // namespace lietwist

#endif
