#include <set>

#include "support.hpp"

#include "chipdual/checks.hpp"
#include "chipdual/duality.hpp"
#include "chipdual/errors.hpp"
#include "chipdual/frackets.hpp"
#include "chipdual/signed_graph.hpp"

using namespace testing;

namespace {

ChipFiringPair run3() { return ChipFiringPair(L_run3(), M_run3()); }

// mu straight from its definition.
IntVector mu_oracle(const ChipFiringPair& p, const IntVector& s) {
  const IntVector& cmax = p.M().c_max();
  if (frac(p.l_m_inv() * scaled(s, Integer(2))) == frac(p.l_m_inv() * cmax)) return s;
  return p.M().sstab_of_class(cmax - s);
}

void check_bijection(const ChipFiringPair& p) {
  std::set<RatVector> images;
  for (const auto& s : p.superstables()) {
    CHECK(involution_mu(p, s.floor) == mu_oracle(p, s.floor));
    CHECK(involution_mu(p, involution_mu(p, s.floor)) == s.floor);
    const RatVector y = duality(p, s.preimage);
    // D(x) = c_max - mu(floor x) + frac x
    CHECK(y == p.M().c_max() - involution_mu(p, s.floor) + s.frac);
    CHECK(p.find_critical(y).has_value());
    CHECK(duality_inverse(p, y) == s.preimage);
    images.insert(y);
  }
  CHECK(images.size() == p.superstables().size());
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("involution on the worked pair") {
  const ChipFiringPair p = run3();
  CHECK(frac(p.l_m_inv() * iv({2, 2, 0})) == rv({"0", "1/2", "0"}));
  CHECK(is_zero(frac(p.l_m_inv() * iv({2, 1, 2}))));
  CHECK(mu_case(p, iv({1, 1, 0})) == MuCase::Dual);
  CHECK(involution_mu(p, iv({1, 1, 0})) == iv({0, 0, 1}));
  for (const auto& s : p.M().superstables())
    CHECK(involution_mu(p, involution_mu(p, s)) == s);
  const ChipFiringPair mm(M_run3(), M_run3());
  for (const auto& s : mm.M().superstables()) {
    CHECK(involution_mu(mm, s) == s);
    CHECK(mu_case(mm, s) == MuCase::Identity);
  }
  CHECK_THROWS_AS(involution_mu(p, iv({2, 1, 0})), InvalidInput);
}

TEST_CASE("duality on the worked pair") {
  const ChipFiringPair p = run3();
  CHECK(duality(p, rv({"4/3", "7/6", "0"})) == rv({"7/3", "7/6", "1"}));
  CHECK(p.to_config(rv({"7/3", "7/6", "1"})) == iv({8, 6, 1}));
  CHECK(duality_inverse(p, rv({"7/3", "7/6", "1"})) == rv({"4/3", "7/6", "0"}));
  // (0,0,0) is a fixed point of mu, so it goes to c_max = (2,1,2), the
  // preimage of (8,6,2).
  CHECK(mu_case(p, iv({0, 0, 0})) == MuCase::Identity);
  CHECK(duality(p, rv({"0", "0", "0"})) == rv({"2", "1", "2"}));
  CHECK(p.to_config(rv({"2", "1", "2"})) == iv({8, 6, 2}));
  CHECK_THROWS_AS(duality(p, rv({"1", "1", "1"})), InvalidInput);
  check_bijection(p);
}

TEST_CASE("duality of (M, M) is the classical map") {
  const ChipFiringPair mm(M_run3(), M_run3());
  CHECK(duality(mm, rv({"0", "0", "1"})) == rv({"2", "1", "1"}));
  CHECK(duality(mm, rv({"1", "1", "0"})) == rv({"1", "0", "2"}));
  CHECK(duality_inverse(mm, rv({"2", "1", "1"})) == rv({"0", "0", "1"}));
  check_bijection(mm);
}

TEST_CASE("duality table") {
  const ChipFiringPair p = run3();
  const auto table = duality_table(p);
  REQUIRE(table.size() == 12);
  const auto fp = fixed_points(p);
  const std::set<IntVector> fixed(fp.begin(), fp.end());
  for (const auto& r : table) {
    CHECK(duality(p, r.superstable.preimage) == r.critical.preimage);
    CHECK((r.mu_case == MuCase::Identity) == (fixed.count(r.superstable.floor) == 1));
  }
}

TEST_CASE("fixed points") {
  const ChipFiringPair p = run3();
  const auto fp = fixed_points(p);
  CHECK(fp.size() == 4);
  for (const auto& s : fp) CHECK(involution_mu(p, s) == s);
  const auto pred = predicted_fixed_point_count(p);
  CHECK(pred.zero_fracket_order == 2);
  CHECK(pred.order_le2_count == 2);
  CHECK(pred.predicted == 4);
  CHECK(pred.actual == 4);
  const ChipFiringPair mm(M_run3(), M_run3());
  CHECK(fixed_points(mm).size() == 8);
  const auto pm = predicted_fixed_point_count(mm);
  CHECK(pm.order_le2_count == 1);
  CHECK(pm.predicted == 8);
  CHECK(pm.consistent());
}

TEST_CASE("nonzero criteria") {
  const ChipFiringPair p = run3();
  const auto c = nonzero_criteria(p);
  CHECK(c.quotient == AbelianGroup({4}));
  CHECK(c.actual == 4);
  CHECK(c.c_max_order == element_order(zero_fracket_lattice(p, Side::M), p.M().c_max()));
  CHECK(4 % c.c_max_order == 0);
  CHECK(c.consistent());
  const auto cm = nonzero_criteria(ChipFiringPair(M_run3(), M_run3()));
  CHECK(cm.c_max_order == 1);
  CHECK(cm.odd_order_guarantee);
  CHECK(cm.consistent());
}

TEST_CASE("K_6 pair: prediction against enumeration") {
  const ChipFiringPair p = reduced_laplacians(family(GraphFamily::Complete, 6, 341));
  const auto pred = predicted_fixed_point_count(p);
  CHECK(pred.consistent());
  CHECK(Integer(fixed_points(p).size()) == pred.actual);
}

TEST_CASE("property: duality bijection and fixed-point count") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + t % 2;
    const ChipFiringPair p(random_invertible(rng, n, 40), random_m_matrix(rng, n, 40));
    check_bijection(p);
    const auto pred = predicted_fixed_point_count(p);
    CHECK(pred.consistent());
    std::size_t brute = 0;
    for (const auto& s : p.M().superstables())
      if (mu_oracle(p, s) == s) ++brute;
    CHECK(Integer(brute) == pred.actual);
    CHECK(nonzero_criteria(p).consistent());
  }
}

TEST_CASE("property: signed triangles satisfy the nonzero criteria") {
  for (std::uint64_t pattern = 0; pattern < 8; ++pattern) {
    std::vector<SignedEdge> edges{{0, 1, pattern & 1 ? -1 : 1}, {0, 2, pattern & 2 ? -1 : 1},
                                  {1, 2, pattern & 4 ? -1 : 1}, {0, 3, 1}, {2, 3, 1}};
    const ChipFiringPair p = reduced_laplacians(SignedGraph(4, edges));
    const auto c = nonzero_criteria(p);
    CHECK(c.consistent());
    if (c.odd_order_guarantee) CHECK_FALSE(fixed_points(p).empty());
  }
}

}  // TEST_SUITE
