#pragma once

// Integer lattices: Smith / Hermite normal forms, finite abelian quotients
// Z^n / A Z^n and canonical coordinates for their classes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chipdual/exact.hpp"

namespace chipdual {

// A = U * D * V with U, V unimodular and D = diag(d_1 | d_2 | ... | d_n).
// U_inv and V_inv are carried along so class coordinates and lattice bases
// never need a second inversion.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;

  std::size_t size() const { return D.rows(); }
  IntVector diagonal() const;
};

// Nonsingular square input only; throws SingularMatrix otherwise.
SnfDecomposition smith_normal_form(const IntMatrix& a);

// Lower-triangular column Hermite basis of the lattice spanned by the
// columns of `generators` (n x m, full row rank required). Diagonal entries
// are positive and entries left of the diagonal lie in [0, diagonal).
IntMatrix hermite_basis(const IntMatrix& generators);

class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Factors equal to 1 are dropped; the rest must already form a
  // divisibility chain.
  explicit AbelianGroup(std::vector<Integer> invariant_factors);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  // 1 for the trivial group.
  Integer largest_invariant_factor() const;
  // Product of all factors except the largest (1 when there are < 2).
  Integer product_without_largest() const;
  std::size_t even_factor_count() const;

  // "Z_{d1} x Z_{d2} x ..." ("0" for the trivial group)
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  friend bool operator<(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ < b.factors_;
  }

 private:
  std::vector<Integer> factors_;
};

// Z^n / A Z^n for nonsingular A.
AbelianGroup quotient_group(const IntMatrix& a);

// (outer Z^n) / (inner Z^n) for lattices inner ⊆ outer given by nonsingular
// basis matrices. Throws InvalidInput when inner is not contained in outer.
AbelianGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner);

// Subgroup of Z^n / A Z^n generated by the classes of `generators`.
AbelianGroup generated_subgroup(const IntMatrix& a, const std::vector<IntVector>& generators);

// Canonical coordinates of a class of Z^n / A Z^n: residues of U^-1 v
// modulo the SNF diagonal.
struct ClassId {
  IntVector residues;
  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend bool operator<(const ClassId& a, const ClassId& b) {
    return a.residues < b.residues;
  }
};

// Owns the SNF of a nonsingular matrix and maps integer vectors to their
// class. Immutable after construction.
class ClassIndexer {
 public:
  explicit ClassIndexer(const IntMatrix& a);

  const IntMatrix& matrix() const { return a_; }
  const SnfDecomposition& snf() const { return snf_; }
  std::size_t dimension() const { return a_.rows(); }
  // |det A|
  const Integer& order() const { return order_; }
  AbelianGroup group() const;

  ClassId class_id(const IntVector& v) const;
  bool equivalent(const IntVector& v, const IntVector& w) const;

  // Mixed-radix position of a class in lexicographic residue order, in
  // [0, order). Requires order() to fit in 64 bits.
  std::uint64_t linear_index(const ClassId& id) const;
  std::uint64_t linear_index(const IntVector& v) const { return linear_index(class_id(v)); }

  // U * r for every residue vector r in lexicographic order (last
  // coordinate fastest). Exactly order() vectors, pairwise inequivalent.
  std::vector<IntVector> class_representatives(std::size_t cap = kDefaultEnumerationCap) const;

 private:
  IntMatrix a_;
  SnfDecomposition snf_;
  IntVector diag_;
  Integer order_;
};

ClassId class_id(const IntMatrix& a, const IntVector& v, const SnfDecomposition& snf);
std::vector<IntVector> enumerate_class_reps(const IntMatrix& a,
                                            std::size_t cap = kDefaultEnumerationCap);

// Integer basis (columns) of Z^n ∩ B Z^n for nonsingular rational B.
IntMatrix lattice_intersect_with_zn(const RatMatrix& b);

// Number of elements of order at most 2: prod gcd(2, d_i).
Integer count_order_le2(const AbelianGroup& g);

// Least k >= 1 with k v in the lattice spanned by the columns of `lattice`.
Integer element_order(const IntMatrix& lattice, const IntVector& v);

}  // namespace chipdual
