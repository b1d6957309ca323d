#include <set>

#include "support.hpp"

#include "chipdual/errors.hpp"
#include "chipdual/mmatrix.hpp"
#include "chipdual/reference.hpp"
#include "chipdual/signed_graph.hpp"

using namespace testing;
namespace ref = chipdual::reference;

namespace {

Integer power(long b, long e) {
  Integer r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Random connected graph: a random spanning tree plus extra edges.
SignedGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<SignedEdge> edges;
  std::uniform_int_distribution<int> sign(0, 1);
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    edges.push_back({u, v, sign(rng) ? 1 : -1});
  }
  std::uniform_int_distribution<std::size_t> vert(0, n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t u = vert(rng), v = vert(rng);
    if (u != v) edges.push_back({u, v, sign(rng) ? 1 : -1});
  }
  return SignedGraph(n, edges, vert(rng));
}

}  // namespace

TEST_SUITE("signed_graph") {

TEST_CASE("worked graph gives the worked pair") {
  const auto lm = reduced_laplacian_matrices(ref::run3_graph());
  CHECK(lm.L == L_run3());
  CHECK(lm.M == M_run3());
}

TEST_CASE("all-positive signs give L = M") {
  for (std::size_t n : {3, 4, 5, 6}) {
    const auto k = reduced_laplacian_matrices(family(GraphFamily::Complete, n, 0));
    CHECK(k.L == k.M);
    CHECK(k.M == reduced_kn(n));
    const auto c = reduced_laplacian_matrices(family(GraphFamily::Cycle, n, 0));
    CHECK(c.L == c.M);
  }
}

TEST_CASE("K_6 with every internal edge negative") {
  const auto k = reduced_laplacian_matrices(family(GraphFamily::Complete, 6, 1023));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(k.L(i, j) == (i == j ? 5 : 1));
  CHECK(k.M == reduced_kn(6));
}

TEST_CASE("families") {
  CHECK(pattern_bits(GraphFamily::Complete, 6) == 10);
  CHECK(pattern_bits(GraphFamily::Cycle, 6) == 4);
  const SignedGraph c = family(GraphFamily::Cycle, 6, ref::kC6Pattern);
  CHECK(c.sink() == 5);
  CHECK(c.edges().size() == 6);
  for (const auto& e : c.edges()) CHECK(e.sign == (e.u == 5 || e.v == 5 ? 1 : -1));
  CHECK(parse_family("complete") == GraphFamily::Complete);
  CHECK(to_string(GraphFamily::Cycle) == "cycle");
  CHECK_THROWS_AS(parse_family("wheel"), InvalidInput);
  CHECK_THROWS_AS(family(GraphFamily::Complete, 4, 8), InvalidInput);
}

TEST_CASE("sweeps") {
  const Sweep k6 = sweep(GraphFamily::Complete, 6);
  CHECK(k6.entries.size() + k6.singular.size() == 1024);
  CHECK(k6.singular.empty());
  const Sweep c6 = sweep(GraphFamily::Cycle, 6);
  CHECK(c6.entries.size() + c6.singular.size() == 16);
  for (std::size_t i = 0; i < k6.entries.size(); ++i) {
    if (i % 97) continue;
    const auto& e = k6.entries[i];
    CHECK(e.pair.L() == reduced_laplacian_matrices(family(GraphFamily::Complete, 6, e.pattern)).L);
  }
  for (std::size_t i = 1; i < k6.entries.size(); ++i) CHECK(k6.entries[i - 1].pattern < k6.entries[i].pattern);
  CHECK_THROWS_AS(sweep(GraphFamily::Complete, 6, 1, 100), EnumerationCapExceeded);
}

TEST_CASE("sweep results do not depend on the thread count") {
  const Sweep a = sweep(GraphFamily::Complete, 5, 1);
  const Sweep b = sweep(GraphFamily::Complete, 5, 3);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].pattern == b.entries[i].pattern);
    CHECK(a.entries[i].pair.L() == b.entries[i].pair.L());
  }
  CHECK(a.singular == b.singular);
}

TEST_CASE("half-n integrality") {
  CHECK(verify_half_n_integrality(4).holds());
  CHECK(verify_half_n_integrality(4).patterns_checked == 8);
  CHECK(verify_half_n_integrality(6).holds());
  const ChipFiringPair pos = reduced_laplacians(family(GraphFamily::Complete, 6, 0));
  CHECK(pos.l_m_inv() == RatMatrix::identity(5));
  CHECK_THROWS_AS(verify_half_n_integrality(5), InvalidInput);
}

TEST_CASE("Z_2 subgroup inside the zero fracket") {
  for (std::uint64_t pattern = 0; pattern < 8; ++pattern) {
    const auto r = kn_z2_subgroup(reduced_laplacians(family(GraphFamily::Complete, 4, pattern)), 4);
    CHECK(r.holds());
    CHECK(r.subgroup == AbelianGroup({2, 2}));
  }
  for (std::uint64_t pattern : {0ULL, 5ULL, 300ULL, 1023ULL}) {
    const auto r = kn_z2_subgroup(reduced_laplacians(family(GraphFamily::Complete, 6, pattern)), 6);
    CHECK(r.holds());
    CHECK(r.subgroup == AbelianGroup({2, 2, 2, 2}));
  }
  CHECK(contains_z2_power(AbelianGroup({6, 6, 6, 6}), 4));
  CHECK_FALSE(contains_z2_power(AbelianGroup({3, 6}), 2));
}

TEST_CASE("K_6 critical groups") {
  const Sweep k6 = sweep(GraphFamily::Complete, 6);
  const CriticalGroupScan scan = scan_critical_groups(k6);
  std::set<AbelianGroup> expected;
  for (const auto& f : ref::k6_critical_groups()) {
    std::vector<Integer> asc;
    for (auto it = f.rbegin(); it != f.rend(); ++it) asc.emplace_back(*it);
    expected.insert(AbelianGroup(asc));
  }
  CHECK(scan.groups == expected);
  CHECK(scan.certificate_holds());
  const ChipFiringPair pos = reduced_laplacians(family(GraphFamily::Complete, 6, 0));
  CHECK(pos.l_classes().group() == AbelianGroup({6, 6, 6, 6}));
  CHECK(pos.det_m() == 1296);
}

TEST_CASE("spanning tree counts") {
  for (long n = 3; n <= 7; ++n) {
    CHECK(determinant(reduced_laplacian_matrices(family(GraphFamily::Complete, n, 1)).M) == power(n, n - 2));
    CHECK(determinant(reduced_laplacian_matrices(family(GraphFamily::Cycle, n, 1)).M) == n);
  }
}

TEST_CASE("multi-edges accumulate") {
  const SignedGraph g(3, {{0, 1, 1}, {0, 1, -1}, {1, 2, 1}, {0, 2, 1}});
  const auto lm = reduced_laplacian_matrices(g);
  CHECK(lm.L == IntMatrix{{3, 0}, {0, 3}});
  CHECK(lm.M == IntMatrix{{3, -2}, {-2, 3}});
}

TEST_CASE("invalid graphs") {
  CHECK_THROWS_AS(SignedGraph(3, {{0, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 3, 1}}), InvalidInput);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 1, 2}}), InvalidInput);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 1, 1}}, 4), InvalidInput);
  CHECK_THROWS_AS(reduced_laplacian_matrices(SignedGraph(4, {{0, 1, 1}, {2, 3, 1}})), InvalidInput);
}

TEST_CASE("edge-list parsing") {
  const std::string text = "# worked graph\nn 4 sink 3\n0 1 -\n0 2 +\n1 2 +\n0 3 +\n2 3 +\n";
  const SignedGraph g = SignedGraph::parse(text);
  CHECK(g == ref::run3_graph());
  CHECK(SignedGraph::parse(g.to_text()) == g);
  CHECK_THROWS_AS(SignedGraph::parse("0 1 +\n"), InvalidInput);
  CHECK_THROWS_AS(SignedGraph::parse("n 3 sink 2\n0 1 x\n"), InvalidInput);
  CHECK_THROWS_AS(SignedGraph::parse("n 3 sink 2\n0 1 + extra\n"), InvalidInput);
}

TEST_CASE("property: parse/emit round trip") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const SignedGraph g = random_graph(rng, 2 + t % 7);
    CHECK(SignedGraph::parse(g.to_text()) == g);
  }
}

TEST_CASE("property: sink-incident signs do not reach L") {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 50; ++t) {
    const SignedGraph g = random_graph(rng, 3 + t % 5);
    std::vector<SignedEdge> flipped = g.edges();
    for (auto& e : flipped)
      if (e.u == g.sink() || e.v == g.sink()) e.sign = -e.sign;
    const SignedGraph h(g.vertex_count(), flipped, g.sink());
    const auto a = reduced_laplacian_matrices(g), b = reduced_laplacian_matrices(h);
    CHECK(a.L == b.L);
    CHECK(a.M == b.M);
    CHECK(is_m_matrix(a.M));
  }
}

}  // TEST_SUITE
