// Integer and rational weight vectors, and small integer matrices acting on them.
//
// Coordinates are always taken over the fixed Z-basis of the character lattice
// X(T) chosen by the owning RootDatum. Covectors (coroots, pairing functionals)
// use the dual basis and share the Weight storage type.

#ifndef LIETWIST_WEIGHT_HPP_
#define LIETWIST_WEIGHT_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lietwist/checked.hpp"
#include "lietwist/rational.hpp"

namespace lietwist {

// Hard storage limit; the configurable rank cap (default 8) must not exceed it.
inline constexpr std::size_t kMaxRank = 12;

class Weight {
public:
  Weight() = default;
  explicit Weight(std::size_t n);
  Weight(std::initializer_list<Int> coords);
  static Weight from(std::span<const Int> coords);

  std::size_t size() const { return n_; }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const Int* begin() const { return c_.data(); }
  const Int* end() const { return c_.data() + n_; }
  std::span<const Int> coords() const { return {c_.data(), n_}; }

  bool is_zero() const;
  // Pairing with a covector in the dual basis.
  Int dot(const Weight& covector) const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight scaled(Int k) const;
  // this + k * o
  Weight plus_multiple(Int k, const Weight& o) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::size_t hash() const;
  std::string str() const;

private:
  std::array<Int, kMaxRank> c_{};
  std::uint8_t n_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

using Covector = Weight;

// numerators / den, gcd(numerators, den) = 1, den >= 1.
class RationalWeight {
public:
  RationalWeight() = default;
  explicit RationalWeight(const Weight& integral) : num_(integral), den_(1) {}
  RationalWeight(const Weight& numerators, Int den);
  static RationalWeight zero(std::size_t n) { return RationalWeight(Weight(n)); }
  static RationalWeight from(const std::vector<Rational>& coords);

  std::size_t size() const { return num_.size(); }
  const Weight& numerators() const { return num_; }
  Int den() const { return den_; }
  Rational operator[](std::size_t i) const { return Rational(num_[i], den_); }
  bool is_integral() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }
  // Requires is_integral().
  const Weight& integral() const;

  // Numerators rescaled to a multiple `d` of den().
  Weight scaled_to(Int d) const;
  Rational dot(const Covector& c) const { return Rational(num_.dot(c), den_); }

  RationalWeight operator-() const { return RationalWeight(-num_, den_); }
  friend RationalWeight operator+(const RationalWeight& a, const RationalWeight& b);
  friend RationalWeight operator-(const RationalWeight& a, const RationalWeight& b);
  RationalWeight scaled(const Rational& k) const;

  // Each coordinate reduced into [0, 1).
  RationalWeight fractional_part() const;
  // this - fractional_part(), an integral weight.
  Weight floor() const;

  friend bool operator==(const RationalWeight&, const RationalWeight&) = default;
  friend std::strong_ordering operator<=>(const RationalWeight& a, const RationalWeight& b);

  std::string str() const;

private:
  Weight num_;
  Int den_ = 1;
};

// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<Int>& data() const { return a_; }

  Weight row(std::size_t i) const;
  Weight col(std::size_t j) const;
  Weight apply(const Weight& v) const;
  RationalWeight apply(const RationalWeight& v) const;
  IntMatrix transpose() const;
  Int determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

  std::size_t hash() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const { return m.hash(); }
};

} // namespace lietwist

#endif
