#pragma once

// Signed graphs and the (L, M) pairs of their reduced Laplacians, plus the
// complete / cycle sign-pattern families.
//
// Edge-list text format:
//
//   n <vertex count> sink <sink id>
//   u v +
//   u v -
//   ...
//
// Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chipdual/exact.hpp"
#include "chipdual/lattice.hpp"
#include "chipdual/pair.hpp"

namespace chipdual {

struct SignedEdge {
  std::size_t u;
  std::size_t v;
  int sign;  // +1 or -1
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

class SignedGraph {
 public:
  // Sink defaults to the highest-numbered vertex. Endpoints are stored
  // sorted (u < v); self-loops are rejected. Multi-edges are allowed.
  SignedGraph(std::size_t vertex_count, std::vector<SignedEdge> edges,
              std::optional<std::size_t> sink = std::nullopt);

  static SignedGraph parse(const std::string& text);
  std::string to_text() const;

  std::size_t vertex_count() const { return n_; }
  std::size_t sink() const { return sink_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  bool connected() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::size_t n_;
  std::vector<SignedEdge> edges_;
  std::size_t sink_;
};

struct ReducedLaplacians {
  IntMatrix L;  // signed
  IntMatrix M;  // underlying unsigned graph
};

// Sink row/column removed; the remaining vertices keep increasing order.
// Throws InvalidInput for a disconnected graph.
ReducedLaplacians reduced_laplacian_matrices(const SignedGraph& g);
// Throws SingularMatrix when L is singular.
ChipFiringPair reduced_laplacians(const SignedGraph& g,
                                  std::size_t enumeration_cap = kDefaultEnumerationCap);

enum class GraphFamily { Complete, Cycle };

std::string to_string(GraphFamily kind);
GraphFamily parse_family(const std::string& name);

// Number of edges not incident to the sink; only their signs reach L.
std::size_t pattern_bits(GraphFamily kind, std::size_t n);
// Bit k of `pattern` makes the k-th non-sink edge (sorted order) negative.
// Sink-incident edges are positive. Sink is vertex n - 1.
SignedGraph family(GraphFamily kind, std::size_t n, std::uint64_t pattern);

struct SweepEntry {
  std::uint64_t pattern;
  ChipFiringPair pair;
};

// Every sign pattern of the family, ascending by pattern index. All pairs
// share one M (and its tables). Patterns with singular L are skipped and
// listed in `singular`.
struct Sweep {
  GraphFamily kind;
  std::size_t n;
  std::vector<SweepEntry> entries;
  std::vector<std::uint64_t> singular;
};

inline constexpr std::size_t kDefaultPatternCap = std::size_t{1} << 20;

Sweep sweep(GraphFamily kind, std::size_t n, std::size_t threads = 1,
            std::size_t pattern_cap = kDefaultPatternCap);

struct HalfNReport {
  std::size_t n;
  std::size_t patterns_checked;
  std::vector<std::uint64_t> failures;
  bool holds() const { return failures.empty(); }
};

// (n/2) L M^-1 is integral for every signed K_n, n even.
HalfNReport verify_half_n_integrality(std::size_t n, std::size_t threads = 1);
bool half_n_integral(const ChipFiringPair& p, std::size_t n);

struct Z2SubgroupReport {
  bool generators_are_superstable_preimages = false;  // s_i = (n/2) e_i
  bool subset_sums_are_superstable_preimages = false;  // |I| <= (n-2)/2
  bool generators_have_order_le2 = false;              // in K(L)
  bool generators_in_zero_fracket = false;             // in F_0^L
  std::size_t distinct_subset_sum_classes = 0;
  AbelianGroup subgroup;                               // generated in K(L)
  AbelianGroup zero_fracket;                           // F_0^L
  std::size_t n = 0;

  bool subgroup_is_z2_power() const;
  bool holds() const;
};

// Builds s_i = (n/2) e_i for a pair coming from a signed K_n (n even) and
// checks that their classes span a copy of Z_2^(n-2) inside F_0^L.
Z2SubgroupReport kn_z2_subgroup(const ChipFiringPair& p, std::size_t n);

// True when the group has at least `rank` even invariant factors, i.e.
// contains Z_2^rank.
bool contains_z2_power(const AbelianGroup& g, std::size_t rank);

struct CriticalGroupScan {
  std::set<AbelianGroup> groups;                  // distinct K(L)
  std::vector<std::uint64_t> patterns_without_z2;  // K(L) lacks Z_2^(n-2)
  std::vector<std::uint64_t> zero_frackets_without_z2;
  bool certificate_holds() const {
    return patterns_without_z2.empty() && zero_frackets_without_z2.empty();
  }
};

CriticalGroupScan scan_critical_groups(const Sweep& s, std::size_t threads = 1);

}  // namespace chipdual
