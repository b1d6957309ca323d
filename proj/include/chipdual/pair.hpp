#pragma once

// Chip-firing pairs (L, M): configurations c ∈ S+ and their preimages
// x = M L^-1 c ∈ R+, legal firing, and the superstable / critical
// configurations of the pair found class by class through floors.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "chipdual/exact.hpp"
#include "chipdual/lattice.hpp"
#include "chipdual/mmatrix.hpp"

namespace chipdual {

using Preimage = RatVector;

// One superstable or critical configuration of a pair, with the data the
// worked tables show next to it.
struct PairConfiguration {
  IntVector config;    // element of S+
  Preimage preimage;   // M L^-1 config, element of R+
  IntVector floor;     // floor(preimage), superstable/critical for M
  RatVector frac;      // preimage - floor
};

struct Classification {
  bool is_superstable = false;
  bool is_critical = false;
};

class ChipFiringPair {
 public:
  // Throws SingularMatrix if L is singular, InvalidInput on dimension
  // mismatch or if M is not an M-matrix.
  ChipFiringPair(const IntMatrix& l, const MMatrix& m,
                 std::size_t enumeration_cap = kDefaultEnumerationCap);
  ChipFiringPair(const IntMatrix& l, const IntMatrix& m,
                 std::size_t enumeration_cap = kDefaultEnumerationCap);

  const IntMatrix& L() const;
  const MMatrix& M() const;
  std::size_t size() const;
  const RatMatrix& l_m_inv() const;  // L M^-1 : R+ -> S+
  const RatMatrix& m_l_inv() const;  // M L^-1 : S+ -> R+
  const ClassIndexer& l_classes() const;
  const Integer& det_l() const;
  const Integer& det_m() const;

  bool rplus_member(const Preimage& x) const;
  bool splus_member(const IntVector& c) const;
  Preimage to_preimage(const IntVector& c) const;
  // Throws InvalidInput unless x ∈ R+.
  IntVector to_config(const Preimage& x) const;

  // Firing in R+ subtracts column i of M. Both require x ∈ R+;
  // fire_rplus throws if the site is not ready.
  bool ready_to_fire(const Preimage& x, std::size_t site) const;
  Preimage fire_rplus(const Preimage& x, std::size_t site) const;
  Preimage stabilize_rplus(const Preimage& x) const;
  Preimage stabilize_rplus(const Preimage& x, const SiteChooser& choose) const;
  // S+ dynamics, carried out on preimages.
  IntVector fire_splus(const IntVector& c, std::size_t site) const;
  IntVector stabilize_splus(const IntVector& c) const;

  // Floor criterion; requires c ∈ S+.
  Classification classify(const IntVector& c) const;

  // |det L| entries each, ascending by S+ configuration.
  const std::vector<PairConfiguration>& superstables() const;
  const std::vector<PairConfiguration>& criticals() const;
  // Position of the superstable / critical preimage of the L-class of
  // `config`.
  std::size_t superstable_slot(const IntVector& config) const;
  std::size_t critical_slot(const IntVector& config) const;
  // Entry describing preimage x, or nullopt if x is not a superstable
  // (resp. critical) preimage.
  std::optional<std::size_t> find_superstable(const Preimage& x) const;
  std::optional<std::size_t> find_critical(const Preimage& x) const;

 private:
  struct State;
  const State& tables() const;
  PairConfiguration describe(const Preimage& x) const;

  std::shared_ptr<State> state_;
};

}  // namespace chipdual
