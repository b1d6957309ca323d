#pragma once

// JSON and text serialization.
//
//   rational   "a/b" in lowest terms, "a" when b = 1 (bare integers accepted)
//   matrix     row-major array of rows of rationals / integers
//   pair       {"L": matrix, "M": matrix}
//   graph      {"n": count, "sink": id, "edges": [[u, v, "+"|"-"], ...]}
//   group      [d1, d2, ...] invariant factors, largest first

#include <string>
#include <vector>

#include <json.hpp>

#include "chipdual/duality.hpp"
#include "chipdual/exact.hpp"
#include "chipdual/frackets.hpp"
#include "chipdual/lattice.hpp"
#include "chipdual/pair.hpp"
#include "chipdual/signed_graph.hpp"

namespace chipdual {

using json = nlohmann::json;

json to_json(const Integer& x);  // number when it fits in 64 bits, else string
json to_json(const Rational& x);
json to_json(const IntVector& v);
json to_json(const RatVector& v);
json to_json(const IntMatrix& a);
json to_json(const RatMatrix& a);
json to_json(const AbelianGroup& g);
json to_json(const PairConfiguration& c);
json to_json(const DualityRecord& r);
json to_json(const SignedGraph& g);

Rational rational_from_json(const json& j);
Integer integer_from_json(const json& j);
IntVector int_vector_from_json(const json& j);
RatVector rat_vector_from_json(const json& j);
IntMatrix int_matrix_from_json(const json& j);
SignedGraph graph_from_json(const json& j);

json pair_to_json(const IntMatrix& l, const IntMatrix& m);
ChipFiringPair pair_from_json(const json& j);

// Report for one side: {side, keys, sizes, zero_fracket_members, quotient,
// predicted_size, actual_size}.
json fracket_report(const ChipFiringPair& p, Side side);

// Reads a whole file; throws InvalidInput if it cannot be opened.
std::string read_file(const std::string& path);
// A pair file is either {"L", "M"} JSON, graph JSON or an edge list.
ChipFiringPair load_pair(const std::string& path);
SignedGraph load_graph(const std::string& path);

// Column-aligned text table, also printable as CSV.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string render() const;
  std::string csv() const;
};

std::string render_matrix(const IntMatrix& a);
std::string render_matrix(const RatMatrix& a);

}  // namespace chipdual
