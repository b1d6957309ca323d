#include "chipdual/reference.hpp"

#include "chipdual/errors.hpp"

namespace chipdual::reference {

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// "4/3" style entries
RatVector rv(std::initializer_list<const char*> xs) {
  RatVector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

}  // namespace

IntMatrix run3_L() { return IntMatrix{{3, 1, -1}, {1, 2, -1}, {-1, -1, 3}}; }
IntMatrix run3_M() { return IntMatrix{{3, -1, -1}, {-1, 2, -1}, {-1, -1, 3}}; }
ChipFiringPair run3_pair() { return ChipFiringPair(run3_L(), run3_M()); }

SignedGraph run3_graph() {
  return SignedGraph(4, {{0, 1, -1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {2, 3, 1}}, 3);
}

std::vector<SuperstableCriticalRow> run3_unsigned_table() {
  return {{iv({0, 0, 0}), iv({2, 1, 2})}, {iv({0, 0, 1}), iv({2, 1, 1})},
          {iv({0, 0, 2}), iv({2, 1, 0})}, {iv({0, 1, 0}), iv({2, 0, 2})},
          {iv({0, 1, 1}), iv({2, 0, 1})}, {iv({1, 0, 0}), iv({1, 1, 2})},
          {iv({1, 1, 0}), iv({1, 0, 2})}, {iv({2, 0, 0}), iv({0, 1, 2})}};
}

std::vector<PairRow> run3_pair_table() {
  return {
      {iv({0, 0, 0}), rv({"0", "0", "0"}), iv({0, 0, 0}),
       iv({6, 4, 2}), rv({"2", "0", "2"}), iv({2, 0, 2})},
      {iv({1, 1, 0}), rv({"0", "1/2", "0"}), iv({0, 0, 0}),
       iv({7, 5, 2}), rv({"2", "1/2", "2"}), iv({2, 0, 2})},
      {iv({4, 3, 2}), rv({"2/3", "1/3", "2"}), iv({0, 0, 2}),
       iv({8, 6, 0}), rv({"8/3", "4/3", "0"}), iv({2, 1, 0})},
      {iv({5, 4, 2}), rv({"2/3", "5/6", "2"}), iv({0, 0, 2}),
       iv({9, 7, 0}), rv({"8/3", "11/6", "0"}), iv({2, 1, 0})},
      {iv({2, 2, 0}), rv({"0", "1", "0"}), iv({0, 1, 0}),
       iv({8, 6, 2}), rv({"2", "1", "2"}), iv({2, 1, 2})},
      {iv({3, 3, 0}), rv({"0", "3/2", "0"}), iv({0, 1, 0}),
       iv({9, 7, 2}), rv({"2", "3/2", "2"}), iv({2, 1, 2})},
      {iv({3, 2, 0}), rv({"4/3", "1/6", "0"}), iv({1, 0, 0}),
       iv({6, 4, 1}), rv({"7/3", "1/6", "1"}), iv({2, 0, 1})},
      {iv({4, 3, 0}), rv({"4/3", "2/3", "0"}), iv({1, 0, 0}),
       iv({7, 5, 1}), rv({"7/3", "2/3", "1"}), iv({2, 0, 1})},
      {iv({5, 4, 0}), rv({"4/3", "7/6", "0"}), iv({1, 1, 0}),
       iv({8, 6, 1}), rv({"7/3", "7/6", "1"}), iv({2, 1, 1})},
      {iv({6, 5, 0}), rv({"4/3", "5/3", "0"}), iv({1, 1, 0}),
       iv({9, 7, 1}), rv({"7/3", "5/3", "1"}), iv({2, 1, 1})},
      {iv({6, 4, 0}), rv({"8/3", "1/3", "0"}), iv({2, 0, 0}),
       iv({6, 5, 2}), rv({"2/3", "4/3", "2"}), iv({0, 1, 2})},
      {iv({7, 5, 0}), rv({"8/3", "5/6", "0"}), iv({2, 0, 0}),
       iv({7, 6, 2}), rv({"2/3", "11/6", "2"}), iv({0, 1, 2})},
  };
}

std::vector<RatVector> run3_l_fracket_keys() {
  return {rv({"0", "0", "0"}),     rv({"1/3", "1/6", "0"}), rv({"2/3", "1/3", "0"}),
          rv({"0", "1/2", "0"}),   rv({"1/3", "2/3", "0"}), rv({"2/3", "5/6", "0"})};
}

std::vector<RatVector> run3_m_fracket_keys() {
  return {rv({"0", "0", "0"}), rv({"0", "1/4", "0"}), rv({"0", "1/2", "0"}),
          rv({"0", "3/4", "0"})};
}

std::vector<IntVector> run3_zero_fracket_l() { return {iv({0, 0, 0}), iv({3, 3, 3})}; }

IntMatrix run3_printed_scaled_ml_inv() {
  return IntMatrix{{16, -16, -4}, {-10, 16, -2}, {0, 0, 2}};
}

IntMatrix run3_printed_scaled_lm_inv() {
  return IntMatrix{{16, 16, 8}, {10, 16, 6}, {0, 0, 8}};
}

std::vector<Erratum> run3_erratum(const ChipFiringPair& p) {
  const IntMatrix computed = to_integer(scaled(p.m_l_inv(), Rational(abs(p.det_l()))));
  const IntMatrix printed = run3_printed_scaled_ml_inv();
  std::vector<Erratum> out;
  for (std::size_t i = 0; i < printed.rows(); ++i)
    for (std::size_t j = 0; j < printed.cols(); ++j)
      if (printed(i, j) != computed(i, j))
        out.push_back({"|L| M L^-1 entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") printed as " + to_string(printed(i, j)) + ", computed " +
                           to_string(computed(i, j)),
                       i, j, printed(i, j), computed(i, j)});
  return out;
}

ChipFiringPair c6_pair() { return reduced_laplacians(family(GraphFamily::Cycle, 6, kC6Pattern)); }

std::vector<IntVector> c6_criticals() {
  return {iv({9, 15, 17, 15, 9}),   iv({12, 20, 23, 21, 13}), iv({13, 21, 23, 20, 12}),
          iv({7, 11, 12, 11, 7}),   iv({10, 16, 18, 17, 11}), iv({11, 17, 18, 16, 10})};
}

std::vector<std::vector<long>> k6_critical_groups() {
  return {{6, 6, 6, 6},  {36, 4, 4, 4}, {36, 12, 2, 2}, {50, 10, 2, 2},
          {64, 8, 2, 2}, {78, 6, 2, 2}, {132, 4, 2, 2}};
}

ChipFiringPair fixture(const std::string& name) {
  if (name == "run3") return run3_pair();
  if (name == "run3-unsigned") return ChipFiringPair(run3_M(), run3_M());
  if (name == "c6") return c6_pair();
  throw InvalidInput("unknown fixture '" + name + "' (run3, run3-unsigned, c6)");
}

}  // namespace chipdual::reference
