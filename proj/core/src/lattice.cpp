#include "lietwist/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace lietwist {

namespace {

// Column operations on `a` (n x k), mirrored on `u` (k x k).
struct ColumnEchelon {
  IntMatrix a;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;  // pivot row of column i, i < rank

  explicit ColumnEchelon(const IntMatrix& m) : a(m), u(IntMatrix::identity(m.cols())) { run(); }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < u.rows(); ++r) std::swap(u(r, i), u(r, j));
  }
  // col_i -= q * col_j
  void sub_col(std::size_t i, std::size_t j, Int q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, j) != 0) a(r, i) = sub_checked(a(r, i), mul_checked(q, a(r, j)));
    for (std::size_t r = 0; r < u.rows(); ++r)
      if (u(r, j) != 0) u(r, i) = sub_checked(u(r, i), mul_checked(q, u(r, j)));
  }
  void negate_col(std::size_t i) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = neg_checked(a(r, i));
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, i) = neg_checked(u(r, i));
  }

  void run() {
    std::size_t p = 0;
    const std::size_t k = a.cols();
    for (std::size_t r = 0; r < a.rows() && p < k; ++r) {
      // Euclid on row r across columns p..k-1
      while (true) {
        std::size_t best = k;
        for (std::size_t j = p; j < k; ++j)
          if (a(r, j) != 0 && (best == k || std::llabs(a(r, j)) < std::llabs(a(r, best))))
            best = j;
        if (best == k) break;
        swap_cols(p, best);
        bool done = true;
        for (std::size_t j = p + 1; j < k; ++j)
          if (a(r, j) != 0) {
            sub_col(j, p, floor_div(a(r, j), a(r, p)));
            if (a(r, j) != 0) done = false;
          }
        if (done) break;
      }
      if (a(r, p) == 0) continue;
      if (a(r, p) < 0) negate_col(p);
      for (std::size_t j = 0; j < p; ++j)
        sub_col(j, p, floor_div(a(r, j), a(r, p)));
      pivot_rows.push_back(r);
      ++p;
    }
  }
};

} // namespace

Lattice Lattice::from_generators(std::size_t ambient, const std::vector<Weight>& gens) {
  Lattice l(ambient);
  if (gens.empty())
    return l;
  IntMatrix m(ambient, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != ambient)
      fail(ErrorCode::DimensionMismatch, "lattice generator has wrong length");
    for (std::size_t i = 0; i < ambient; ++i)
      m(i, j) = gens[j][i];
  }
  ColumnEchelon ce(m);
  for (std::size_t i = 0; i < ce.pivot_rows.size(); ++i) {
    l.basis_.push_back(ce.a.col(i));
    l.pivots_.push_back(ce.pivot_rows[i]);
  }
  return l;
}

Lattice Lattice::full(std::size_t ambient) {
  std::vector<Weight> gens;
  for (std::size_t i = 0; i < ambient; ++i) {
    Weight e(ambient);
    e[i] = 1;
    gens.push_back(e);
  }
  return from_generators(ambient, gens);
}

Weight Lattice::reduce(const Weight& v) const {
  if (v.size() != n_)
    fail(ErrorCode::DimensionMismatch, "vector length differs from lattice ambient dimension");
  Weight x = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Int piv = basis_[i][pivots_[i]];
    Int q = floor_div(x[pivots_[i]], piv);
    x = x.plus_multiple(neg_checked(q), basis_[i]);
  }
  return x;
}

bool Lattice::contains(const Weight& v) const { return reduce(v).is_zero(); }

Lattice Lattice::scaled(Int k) const {
  std::vector<Weight> gens;
  for (const auto& b : basis_)
    gens.push_back(b.scaled(k));
  return from_generators(n_, gens);
}

IntMatrix Lattice::matrix() const {
  IntMatrix m(n_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < n_; ++i)
      m(i, j) = basis_[j][i];
  return m;
}

Lattice Lattice::intersect(const Lattice& other) const {
  if (other.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "intersecting lattices in different ambient spaces");
  // kernel of [A | -B] gives pairs (y, z) with A y = B z
  std::size_t ka = basis_.size(), kb = other.basis_.size();
  IntMatrix m(n_, ka + kb);
  for (std::size_t j = 0; j < ka; ++j)
    for (std::size_t i = 0; i < n_; ++i) m(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t i = 0; i < n_; ++i) m(i, ka + j) = neg_checked(other.basis_[j][i]);
  Lattice ker = integer_kernel(m);
  std::vector<Weight> gens;
  for (const auto& k : ker.basis()) {
    Weight x(n_);
    for (std::size_t j = 0; j < ka; ++j)
      x = x.plus_multiple(k[j], basis_[j]);
    gens.push_back(x);
  }
  return from_generators(n_, gens);
}

std::optional<std::vector<Int>> solve_integer_system(const IntMatrix& a, const Weight& b) {
  if (b.size() != a.rows())
    fail(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  ColumnEchelon ce(a);
  const std::size_t k = a.cols();
  std::vector<Int> y(k, 0);
  // forward substitution along the echelon
  Weight residual = b;
  std::size_t col = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (col < ce.pivot_rows.size() && ce.pivot_rows[col] == r) {
      Int piv = ce.a(r, col);
      if (residual[r] % piv != 0)
        return std::nullopt;
      Int q = residual[r] / piv;
      y[col] = q;
      for (std::size_t i = 0; i < a.rows(); ++i)
        residual[i] = sub_checked(residual[i], mul_checked(q, ce.a(i, col)));
      ++col;
    } else if (residual[r] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (ce.u(i, j) != 0 && y[j] != 0)
        x[i] = add_checked(x[i], mul_checked(ce.u(i, j), y[j]));
  return x;
}

Lattice integer_kernel(const IntMatrix& a) {
  ColumnEchelon ce(a);
  std::vector<Weight> gens;
  for (std::size_t j = ce.pivot_rows.size(); j < a.cols(); ++j)
    gens.push_back(ce.u.col(j));
  return Lattice::from_generators(a.cols(), gens);
}

std::optional<Weight> solve_in_lattice(const RationalWeight& target, const Lattice& gens,
                                       const Lattice& modulus) {
  if (target.size() != gens.ambient_dim() || modulus.ambient_dim() != gens.ambient_dim())
    fail(ErrorCode::DimensionMismatch, "solve_in_lattice: ambient dimensions differ");
  if (!target.is_integral())
    return std::nullopt;
  const std::size_t n = gens.ambient_dim();
  const std::size_t kg = gens.rank(), km = modulus.rank();
  IntMatrix m(n, kg + km);
  for (std::size_t j = 0; j < kg; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = gens.basis()[j][i];
  for (std::size_t j = 0; j < km; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, kg + j) = neg_checked(modulus.basis()[j][i]);
  auto sol = solve_integer_system(m, target.integral());
  if (!sol)
    return std::nullopt;
  Weight x(n);
  for (std::size_t j = 0; j < kg; ++j)
    x = x.plus_multiple((*sol)[j], gens.basis()[j]);
  return gens.intersect(modulus).reduce(x);
}

std::vector<Int> smith_invariants(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block becomes the pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || std::llabs(a(i, j)) < std::llabs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows)
      break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pr, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pc));
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int q = floor_div(a(i, t), a(t, t));
      for (std::size_t j = t; j < cols; ++j) a(i, j) = sub_checked(a(i, j), mul_checked(q, a(t, j)));
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int q = floor_div(a(t, j), a(t, t));
      for (std::size_t i = t; i < rows; ++i) a(i, j) = sub_checked(a(i, j), mul_checked(q, a(i, t)));
      if (a(t, j) != 0) clean = false;
    }
    if (!clean)
      continue;
    // divisibility condition: pivot must divide the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          for (std::size_t c = t; c < cols; ++c) a(t, c) = add_checked(a(t, c), a(i, c));
          divides = false;
          break;
        }
    if (!divides)
      continue;
    diag.push_back(std::llabs(a(t, t)));
    ++t;
  }
  return diag;
}

} // namespace lietwist
