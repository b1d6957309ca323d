#pragma once

// Duality between superstable and critical preimages of a chip-firing pair.
//
// On superstables of M the involution mu keeps s when
// {L M^-1 (2s)} == {L M^-1 c_max} and otherwise sends s to the superstable
// equivalent to c_max - s. The duality x -> c_max - mu(floor x) + {x} is a
// bijection from superstable preimages onto critical preimages, with
// inverse y -> mu(c_max - floor y) + {y}. For (M, M) pairs mu is the
// identity and the map is the classical c -> c_max - c.

#include <optional>
#include <string>
#include <vector>

#include "chipdual/exact.hpp"
#include "chipdual/lattice.hpp"
#include "chipdual/pair.hpp"

namespace chipdual {

enum class MuCase { Identity, Dual };

std::string to_string(MuCase c);

// Which branch mu takes on s (s must be a superstable of M).
MuCase mu_case(const ChipFiringPair& p, const Configuration& s);
// Throws InvalidInput if s is not a superstable of M.
Configuration involution_mu(const ChipFiringPair& p, const Configuration& s);

// Throw InvalidInput unless the argument is one of the pair's superstable
// (resp. critical) preimages.
Preimage duality(const ChipFiringPair& p, const Preimage& x);
Preimage duality_inverse(const ChipFiringPair& p, const Preimage& y);

struct DualityRecord {
  PairConfiguration superstable;
  PairConfiguration critical;
  MuCase mu_case;
};

// One record per superstable preimage, in superstable order.
std::vector<DualityRecord> duality_table(const ChipFiringPair& p);

// Superstables s of M with {L M^-1 (2s)} == {L M^-1 c_max}.
std::vector<Configuration> fixed_points(const ChipFiringPair& p);

struct FixedPointPrediction {
  Integer zero_fracket_order;  // |F_0^M|
  Integer order_le2_count;     // d, elements of order <= 2 in K(M) / F_0^M
  Integer predicted;           // |F_0^M| * d
  Integer actual;
  // actual is 0 or the prediction
  bool consistent() const { return actual == 0 || actual == predicted; }
};

FixedPointPrediction predicted_fixed_point_count(const ChipFiringPair& p);

struct NonzeroCriteria {
  AbelianGroup quotient;   // K(M) / F_0^M
  Integer c_max_order;     // order of c_max in the quotient
  bool odd_order_guarantee;
  // Present when the quotient is cyclic and c_max has even order:
  // |quotient| / ord(c_max) is even.
  std::optional<bool> cyclic_even_criterion;
  Integer actual;          // observed fixed-point count

  bool consistent() const {
    if (odd_order_guarantee && actual == 0) return false;
    if (cyclic_even_criterion && *cyclic_even_criterion != (actual != 0)) return false;
    return true;
  }
};

NonzeroCriteria nonzero_criteria(const ChipFiringPair& p);

}  // namespace chipdual
