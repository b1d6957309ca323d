#pragma once

// Frackets: classes of K(L) (resp. K(M)) grouped by the fractional part of
// their image under M L^-1 (resp. L M^-1). The zero fracket F_0 is a
// subgroup and the other nonempty frackets are its cosets.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chipdual/exact.hpp"
#include "chipdual/lattice.hpp"
#include "chipdual/pair.hpp"

namespace chipdual {

enum class Side { L, M };

std::string to_string(Side side);

// Defining map of the side's frackets: M L^-1 for L, L M^-1 for M.
const RatMatrix& fracket_map(const ChipFiringPair& p, Side side);
const IntMatrix& side_matrix(const ChipFiringPair& p, Side side);
const ClassIndexer& side_classes(const ChipFiringPair& p, Side side);

struct Fracket {
  RatVector key;                            // canonical fractional vector
  std::vector<IntVector> representatives;   // one per class
  std::vector<ClassId> classes;
};

struct FracketPartition {
  Side side;
  std::vector<Fracket> frackets;  // ascending by key

  const Fracket* find(const RatVector& key) const;
  bool sizes_equal() const;
  std::size_t class_count() const;
};

FracketPartition fracket_partition(const ChipFiringPair& p, Side side,
                                   std::size_t cap = kDefaultEnumerationCap);

// Lattice route (no class enumeration):
// Λ = {v ∈ Z^n : map v ∈ Z^n} = Z^n ∩ (S O^-1) Z^n, F_0 ≅ Λ / S Z^n and
// K(S) / F_0 ≅ Z^n / Λ.
IntMatrix zero_fracket_lattice(const ChipFiringPair& p, Side side);
AbelianGroup fracket_quotient(const ChipFiringPair& p, Side side);
AbelianGroup zero_fracket_group(const ChipFiringPair& p, Side side);
Integer zero_fracket_order(const ChipFiringPair& p, Side side);

struct ZeroFracket {
  Side side;
  std::vector<IntVector> representatives;  // from the enumeration
  std::vector<ClassId> members;
  IntMatrix lattice;
  AbelianGroup quotient;                   // K(side) / F_0
  Integer order_from_lattice;              // |det side| / |quotient|

  // The two computations of |F_0| agree.
  bool consistent() const { return Integer(members.size()) == order_from_lattice; }
};

ZeroFracket zero_fracket(const ChipFiringPair& p, Side side,
                         std::size_t cap = kDefaultEnumerationCap);

// lcm of the denominators of all entries.
Integer flcm(const RatMatrix& a);
// gcd of the absolute values of all entries; throws InvalidInput when all
// entries are zero.
Integer gcd_entries(const IntMatrix& a);
Integer gcd_two(const IntMatrix& a, const IntMatrix& b);

// |det S| * map, integral: |L| M L^-1 for side L, |M| L M^-1 for side M.
IntMatrix scaled_fracket_map(const ChipFiringPair& p, Side side);

struct LargestFactorReport {
  Integer l_largest_factor;  // of K(L) / F_0^L
  Integer l_flcm;            // flcm(M L^-1)
  Integer m_largest_factor;  // of K(M) / F_0^M
  Integer m_flcm;            // flcm(L M^-1)
  bool holds() const { return l_largest_factor == l_flcm && m_largest_factor == m_flcm; }
};

LargestFactorReport verify_largest_invariant_factor(const ChipFiringPair& p);

struct SizeFormulaReport {
  Integer gcd_l;      // gcd(|L| M L^-1)
  Integer gcd_m;      // gcd(|M| L M^-1)
  Integer p_l;        // product of non-largest factors of K(L) / F_0^L
  Integer p_m;        // same for K(M) / F_0^M
  Integer predicted;  // gcd(gcd_l, gcd_m) / gcd(p_m, p_l)
  Integer actual_l;   // |F_0^L|
  Integer actual_m;   // |F_0^M|
  bool holds() const { return predicted == actual_l && actual_l == actual_m; }
};

SizeFormulaReport zero_fracket_size_formula(const ChipFiringPair& p);

struct CyclicShortcut {
  Side side;
  bool cyclic;
  Integer gcd_value;           // gcd(|S| O S^-1)
  Integer zero_fracket_order;  // |F_0|
  // The gcd when the side's quotient is cyclic.
  std::optional<Integer> value() const {
    return cyclic ? std::optional<Integer>(gcd_value) : std::nullopt;
  }
  // cyclic  <=>  |F_0| == gcd
  bool biconditional_holds() const { return cyclic == (gcd_value == zero_fracket_order); }
};

CyclicShortcut cyclic_shortcut(const ChipFiringPair& p, Side side);

}  // namespace chipdual
