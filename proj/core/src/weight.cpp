#include "lietwist/weight.hpp"

#include <algorithm>

namespace lietwist {

Weight::Weight(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxRank)
    fail(ErrorCode::RankCapExceeded, "rank " + std::to_string(n) + " exceeds storage limit");
}

Weight::Weight(std::initializer_list<Int> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::from(std::span<const Int> coords) {
  Weight w(coords.size());
  std::copy(coords.begin(), coords.end(), w.c_.begin());
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(begin(), end(), [](Int x) { return x == 0; });
}

Int Weight::dot(const Weight& covector) const {
  if (covector.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "pairing between vectors of different length");
  Int s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (c_[i] != 0 && covector.c_[i] != 0)
      s = add_checked(s, mul_checked(c_[i], covector.c_[i]));
  return s;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (std::size_t i = 0; i < n_; ++i)
    r.c_[i] = neg_checked(c_[i]);
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "adding vectors of different length");
  for (std::size_t i = 0; i < n_; ++i)
    c_[i] = add_checked(c_[i], o.c_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "subtracting vectors of different length");
  for (std::size_t i = 0; i < n_; ++i)
    c_[i] = sub_checked(c_[i], o.c_[i]);
  return *this;
}

Weight Weight::scaled(Int k) const {
  Weight r(*this);
  for (std::size_t i = 0; i < n_; ++i)
    r.c_[i] = mul_checked(c_[i], k);
  return r;
}

Weight Weight::plus_multiple(Int k, const Weight& o) const {
  if (o.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "adding vectors of different length");
  Weight r(*this);
  if (k == 0)
    return r;
  for (std::size_t i = 0; i < n_; ++i)
    if (o.c_[i] != 0)
      r.c_[i] = add_checked(c_[i], mul_checked(k, o.c_[i]));
  return r;
}

std::size_t Weight::hash() const {
  // splitmix-style mixing; deterministic across platforms
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t x = static_cast<std::uint64_t>(c_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    h ^= x;
  }
  return static_cast<std::size_t>(h);
}

std::string Weight::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ", ";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

// RationalWeight

RationalWeight::RationalWeight(const Weight& numerators, Int den) : num_(numerators), den_(den) {
  if (den == 0)
    fail(ErrorCode::ParseError, "rational weight with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = neg_checked(den_);
  }
  Int g = den_;
  for (Int x : num_)
    g = gcd_int(g, x);
  if (g > 1) {
    for (std::size_t i = 0; i < num_.size(); ++i)
      num_[i] /= g;
    den_ /= g;
  }
}

RationalWeight RationalWeight::from(const std::vector<Rational>& coords) {
  Int d = 1;
  for (const auto& q : coords)
    d = lcm_checked(d, q.den());
  Weight n(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    n[i] = mul_checked(coords[i].num(), d / coords[i].den());
  return RationalWeight(n, d);
}

const Weight& RationalWeight::integral() const {
  if (den_ != 1)
    fail(ErrorCode::InternalInconsistency, "expected an integral weight, got " + str());
  return num_;
}

Weight RationalWeight::scaled_to(Int d) const {
  if (d % den_ != 0)
    fail(ErrorCode::InternalInconsistency, "scale is not a multiple of the denominator");
  return num_.scaled(d / den_);
}

RationalWeight operator+(const RationalWeight& a, const RationalWeight& b) {
  Int d = lcm_checked(a.den_, b.den_);
  return RationalWeight(a.scaled_to(d) + b.scaled_to(d), d);
}

RationalWeight operator-(const RationalWeight& a, const RationalWeight& b) { return a + (-b); }

RationalWeight RationalWeight::scaled(const Rational& k) const {
  return RationalWeight(num_.scaled(k.num()), mul_checked(den_, k.den()));
}

RationalWeight RationalWeight::fractional_part() const {
  Weight n(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i)
    n[i] = floor_mod(num_[i], den_);
  return RationalWeight(n, den_);
}

Weight RationalWeight::floor() const {
  Weight n(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i)
    n[i] = floor_div(num_[i], den_);
  return n;
}

std::strong_ordering operator<=>(const RationalWeight& a, const RationalWeight& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto c = a[i] <=> b[i];
    if (c != 0)
      return c;
  }
  return a.size() <=> b.size();
}

std::string RationalWeight::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) s += ", ";
    s += (*this)[i].str();
  }
  return s + "]";
}

// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Weight IntMatrix::row(std::size_t i) const {
  return Weight::from(std::span<const Int>(a_.data() + i * cols_, cols_));
}

Weight IntMatrix::col(std::size_t j) const {
  Weight w(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    w[i] = (*this)(i, j);
  return w;
}

Weight IntMatrix::apply(const Weight& v) const {
  if (v.size() != cols_)
    fail(ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
  Weight r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      Int a = (*this)(i, j);
      if (a != 0 && v[j] != 0)
        s = add_checked(s, mul_checked(a, v[j]));
    }
    r[i] = s;
  }
  return r;
}

RationalWeight IntMatrix::apply(const RationalWeight& v) const {
  return RationalWeight(apply(v.numerators()), v.den());
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_)
    fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination
  IntMatrix m(*this);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = sub_checked(mul_checked(m(i, j), m(k, k)), mul_checked(m(i, k), m(k, j))) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return mul_checked(sign, m(n - 1, n - 1));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0)
          c(i, j) = add_checked(c(i, j), mul_checked(x, b(k, j)));
    }
  return c;
}

std::size_t IntMatrix::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ (rows_ * 131 + cols_);
  for (Int x : a_) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

} // namespace lietwist
