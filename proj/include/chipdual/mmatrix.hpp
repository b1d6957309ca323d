#pragma once

// Chip-firing driven by an M-matrix: stabilization, z-superstability and
// the superstable / critical configuration of every class of Z^n / M Z^n.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "chipdual/exact.hpp"
#include "chipdual/lattice.hpp"

namespace chipdual {

using Configuration = IntVector;

// Positive diagonal, nonpositive off-diagonal, invertible, inverse >= 0.
bool is_m_matrix(const IntMatrix& m);

// Picks one of the currently ready sites (given in increasing order).
using SiteChooser = std::function<std::size_t(const std::vector<std::size_t>& ready)>;

class MMatrix {
 public:
  // Throws InvalidInput if `m` is not an M-matrix. The superstable and
  // critical tables are built on first use, guarded so that concurrent
  // readers see one build; copies share them.
  explicit MMatrix(const IntMatrix& m, std::size_t enumeration_cap = kDefaultEnumerationCap);

  const IntMatrix& matrix() const;
  std::size_t size() const;
  const RatMatrix& inverse() const;
  const ClassIndexer& classes() const;
  // det M (positive for an M-matrix)
  const Integer& determinant() const;
  // (M_11 - 1, ..., M_nn - 1)
  const Configuration& c_max() const;

  Configuration fire(const Configuration& c, std::size_t site) const;
  std::vector<std::size_t> ready_sites(const Configuration& c) const;
  bool is_stable(const Configuration& c) const { return ready_sites(c).empty(); }
  // Fires the lowest-index ready site until none is left.
  Configuration stabilize(const Configuration& c) const;
  Configuration stabilize(const Configuration& c, const SiteChooser& choose) const;

  // floor(M^-1 s): every z >= 0 with s - M z >= 0 lies below it.
  IntVector superstability_bound(const Configuration& s) const;
  // A nonzero z with 0 <= z <= bound and s - M z >= 0, if any.
  std::optional<IntVector> find_legal_multifiring(const Configuration& s,
                                                  const IntVector& bound) const;
  bool is_z_superstable(const Configuration& s) const;

  Configuration classical_dual(const Configuration& v) const;

  // Lexicographic order; criticals()[k] == classical_dual(superstables()[k]).
  const std::vector<Configuration>& superstables() const;
  const std::vector<Configuration>& criticals() const;

  // The unique superstable / critical configuration equivalent to v
  // (any integer vector, negatives included).
  const Configuration& sstab_of_class(const IntVector& v) const;
  const Configuration& crit_of_class(const IntVector& v) const;
  bool is_superstable(const Configuration& c) const;
  bool is_critical(const Configuration& c) const;

 private:
  struct State;
  const State& tables() const;

  std::shared_ptr<State> state_;
};

}  // namespace chipdual
