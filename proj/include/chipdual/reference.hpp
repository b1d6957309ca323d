#pragma once

// Worked fixtures with their expected tables, used by the acceptance
// checks, the CLI (--fixture) and the tests.
//
// run3: the signed triangle with a sink,
//   L = [[3,1,-1],[1,2,-1],[-1,-1,3]]   M = [[3,-1,-1],[-1,2,-1],[-1,-1,3]]
// c6:   the signed 6-cycle whose pair has no coordinatewise-maximal
//       critical configuration.

#include <cstdint>
#include <string>
#include <vector>

#include "chipdual/exact.hpp"
#include "chipdual/pair.hpp"
#include "chipdual/signed_graph.hpp"

namespace chipdual::reference {

IntMatrix run3_L();
IntMatrix run3_M();
ChipFiringPair run3_pair();
// Vertices 0..2, sink 3; the only negative edge is 0-1.
SignedGraph run3_graph();

struct SuperstableCriticalRow {
  IntVector superstable;
  IntVector critical;
};
// Superstables of M_run3 next to c_max - s.
std::vector<SuperstableCriticalRow> run3_unsigned_table();

struct PairRow {
  IntVector superstable;       // S+
  RatVector superstable_pre;   // R+
  IntVector superstable_floor;
  IntVector critical;          // S+, as printed on the same row
  RatVector critical_pre;
  IntVector critical_floor;
};
std::vector<PairRow> run3_pair_table();

std::vector<RatVector> run3_l_fracket_keys();
std::vector<RatVector> run3_m_fracket_keys();
std::vector<IntVector> run3_zero_fracket_l();  // class representatives

// |L| M L^-1 and |M| L M^-1 as printed alongside the fracket table.
IntMatrix run3_printed_scaled_ml_inv();
IntMatrix run3_printed_scaled_lm_inv();

struct Erratum {
  std::string description;
  std::size_t row, col;  // zero-based
  Integer printed;
  Integer computed;
};
// Entries where the printed |L| M L^-1 disagrees with the computed matrix.
std::vector<Erratum> run3_erratum(const ChipFiringPair& p);

inline constexpr std::uint64_t kC6Pattern = 15;
ChipFiringPair c6_pair();
std::vector<IntVector> c6_criticals();

// Critical groups over all sign patterns of K_6, largest factor first.
std::vector<std::vector<long>> k6_critical_groups();

// Named fixture lookup for the CLI: "run3", "run3-unsigned", "c6".
ChipFiringPair fixture(const std::string& name);

}  // namespace chipdual::reference
