// Integer lattices in Z^n: Hermite normal form, kernels, coset membership.

#ifndef LIETWIST_LATTICE_HPP_
#define LIETWIST_LATTICE_HPP_

#include <optional>
#include <vector>

#include "lietwist/weight.hpp"

namespace lietwist {

// A sublattice of Z^n held as a column-style Hermite basis: basis vector i has
// its first nonzero entry (positive) at pivot row pivots()[i], pivots strictly
// increase, and every other basis vector is reduced into [0, pivot) at each
// pivot row. The form is unique, so == compares lattices.
class Lattice {
public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient) : n_(ambient) {}
  static Lattice from_generators(std::size_t ambient, const std::vector<Weight>& gens);
  static Lattice full(std::size_t ambient);

  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Weight>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Weight& v) const;
  // Unique representative of v + L.
  Weight reduce(const Weight& v) const;
  Lattice scaled(Int k) const;
  Lattice intersect(const Lattice& other) const;
  // Columns of the basis as an n x rank matrix.
  IntMatrix matrix() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Weight> basis_;
  std::vector<std::size_t> pivots_;
};

// Integer solution x of A x = b (A is n x k, b has length n), or nullopt.
std::optional<std::vector<Int>> solve_integer_system(const IntMatrix& a, const Weight& b);

// Basis of the integer kernel {x in Z^k : A x = 0}.
Lattice integer_kernel(const IntMatrix& a);

// Some x in `gens` with x = target (mod `modulus`), canonically reduced modulo
// gens ∩ modulus; nullopt if none exists.
std::optional<Weight> solve_in_lattice(const RationalWeight& target, const Lattice& gens,
                                       const Lattice& modulus);

// Elementary divisors (Smith normal form diagonal, nonzero entries only).
std::vector<Int> smith_invariants(const IntMatrix& a);

} // namespace lietwist

#endif
