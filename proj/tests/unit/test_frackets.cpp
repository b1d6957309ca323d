#include <algorithm>
#include <set>

#include "support.hpp"

#include "chipdual/checks.hpp"
#include "chipdual/errors.hpp"
#include "chipdual/frackets.hpp"
#include "chipdual/reference.hpp"
#include "chipdual/signed_graph.hpp"

using namespace testing;
namespace ref = chipdual::reference;

namespace {

ChipFiringPair run3() { return ChipFiringPair(L_run3(), M_run3()); }

std::set<RatVector> keys(const FracketPartition& f) {
  std::set<RatVector> out;
  for (const auto& x : f.frackets) out.insert(x.key);
  return out;
}

std::set<RatVector> as_set(const std::vector<RatVector>& v) { return {v.begin(), v.end()}; }

// Fracket structure of a pair, checked against the enumeration.
void check_structure(const ChipFiringPair& p, Side side) {
  const ClassIndexer& cls = side_classes(p, side);
  const FracketPartition part = fracket_partition(p, side);
  const ZeroFracket zero = zero_fracket(p, side);
  CHECK(part.sizes_equal());
  CHECK(Integer(part.class_count()) == cls.order());
  CHECK(zero.consistent());
  CHECK(Integer(zero.members.size()) * zero.quotient.order() == cls.order());
  CHECK(Integer(part.frackets.size()) == zero.quotient.order());
  const std::set<ClassId> members(zero.members.begin(), zero.members.end());
  // Subgroup: closed under sums and negatives.
  for (const auto& a : zero.representatives) {
    CHECK(members.count(cls.class_id(scaled(a, Integer(-1)))));
    for (const auto& b : zero.representatives) CHECK(members.count(cls.class_id(a + b)));
  }
  // Cosets: each fracket is v + F_0 for any of its members v.
  for (const auto& f : part.frackets) {
    const std::set<ClassId> block(f.classes.begin(), f.classes.end());
    const IntVector& v = f.representatives.front();
    std::set<ClassId> coset;
    for (const auto& w : zero.representatives) coset.insert(cls.class_id(v + w));
    CHECK(coset == block);
    CHECK(frac(fracket_map(p, side) * v) == f.key);
  }
}

}  // namespace

TEST_SUITE("frackets") {

TEST_CASE("worked fracket keys") {
  const ChipFiringPair p = run3();
  const FracketPartition l = fracket_partition(p, Side::L);
  CHECK(keys(l) == as_set(ref::run3_l_fracket_keys()));
  CHECK(l.frackets.size() == 6);
  for (const auto& f : l.frackets) CHECK(f.classes.size() == 2);
  const FracketPartition m = fracket_partition(p, Side::M);
  CHECK(keys(m) == as_set(ref::run3_m_fracket_keys()));
  CHECK(m.frackets.size() == 4);
  for (const auto& f : m.frackets) CHECK(f.classes.size() == 2);
  const ChipFiringPair mm(M_run3(), M_run3());
  const FracketPartition one = fracket_partition(mm, Side::L);
  REQUIRE(one.frackets.size() == 1);
  CHECK(is_zero(one.frackets[0].key));
  CHECK(one.frackets[0].classes.size() == 8);
}

TEST_CASE("zero frackets") {
  const ChipFiringPair p = run3();
  const ZeroFracket l = zero_fracket(p, Side::L);
  CHECK(l.quotient == AbelianGroup({6}));
  REQUIRE(l.members.size() == 2);
  const ClassIndexer& cls = p.l_classes();
  // (3,3,3) lies in the zero class; the other member is the class of (0,0,6).
  CHECK(cls.class_id(iv({3, 3, 3})) == cls.class_id(iv({0, 0, 0})));
  const std::set<ClassId> members(l.members.begin(), l.members.end());
  CHECK(members.count(cls.class_id(iv({0, 0, 0}))));
  CHECK(members.count(cls.class_id(iv({0, 0, 6}))));
  CHECK(members.count(cls.class_id(iv({2, 2, 0}))));
  CHECK(p.l_m_inv() * iv({0, 1, 0}) == rv({"2", "2", "0"}));
  const ZeroFracket m = zero_fracket(p, Side::M);
  CHECK(m.members.size() == 2);
  CHECK(m.quotient == AbelianGroup({4}));
  CHECK(zero_fracket_order(p, Side::L) == 2);
  CHECK(fracket_quotient(p, Side::M) == AbelianGroup({4}));
  CHECK(zero_fracket_group(p, Side::L) == AbelianGroup({2}));
  const ChipFiringPair mm(M_run3(), M_run3());
  CHECK(zero_fracket(mm, Side::L).members.size() == 8);
  CHECK(fracket_quotient(mm, Side::M).is_trivial());
}

TEST_CASE("flcm and gcds") {
  const ChipFiringPair p = run3();
  CHECK(flcm(p.m_l_inv()) == 6);
  CHECK(flcm(p.l_m_inv()) == 4);
  const IntMatrix sl = scaled_fracket_map(p, Side::L), sm = scaled_fracket_map(p, Side::M);
  CHECK(sm == ref::run3_printed_scaled_lm_inv());
  CHECK(sl == IntMatrix{{16, -16, -4}, {-10, 16, -2}, {0, 0, 12}});
  CHECK(gcd_two(sm, sl) == 2);
  CHECK(gcd_entries(IntMatrix{{4, -6}, {0, 10}}) == 2);
  CHECK_THROWS_AS(gcd_entries(IntMatrix(2, 2)), InvalidInput);
  const auto errata = ref::run3_erratum(p);
  REQUIRE(errata.size() == 1);
  CHECK(errata[0].row == 2);
  CHECK(errata[0].col == 2);
  CHECK(errata[0].printed == 2);
  CHECK(errata[0].computed == 12);
}

TEST_CASE("largest invariant factor and size formula") {
  const ChipFiringPair p = run3();
  const auto r = verify_largest_invariant_factor(p);
  CHECK(r.l_largest_factor == 6);
  CHECK(r.l_flcm == 6);
  CHECK(r.m_largest_factor == 4);
  CHECK(r.m_flcm == 4);
  CHECK(r.holds());
  const auto f = zero_fracket_size_formula(p);
  CHECK(f.predicted == 2);
  CHECK(f.actual_l == 2);
  CHECK(f.actual_m == 2);
  CHECK(f.holds());
  const ChipFiringPair mm(M_run3(), M_run3());
  CHECK(verify_largest_invariant_factor(mm).l_flcm == 1);
  CHECK(verify_largest_invariant_factor(mm).holds());
  const auto g = zero_fracket_size_formula(mm);
  CHECK(g.predicted == 8);
  CHECK(g.holds());
}

TEST_CASE("cyclic shortcut") {
  const ChipFiringPair p = run3();
  for (Side side : {Side::L, Side::M}) {
    const auto c = cyclic_shortcut(p, side);
    CHECK(c.cyclic);
    REQUIRE(c.value());
    CHECK(*c.value() == 2);
    CHECK(c.biconditional_holds());
  }
}

TEST_CASE("K_6 sample: non-cyclic quotient and formulas") {
  bool saw_noncyclic = false;
  for (std::uint64_t pattern : {0ULL, 1ULL, 37ULL, 341ULL, 682ULL, 1023ULL}) {
    const ChipFiringPair p = reduced_laplacians(family(GraphFamily::Complete, 6, pattern));
    CHECK(verify_largest_invariant_factor(p).holds());
    CHECK(zero_fracket_size_formula(p).holds());
    for (Side side : {Side::L, Side::M}) {
      const auto c = cyclic_shortcut(p, side);
      CHECK(c.biconditional_holds());
      if (!c.cyclic) {
        saw_noncyclic = true;
        CHECK_FALSE(c.value());
        CHECK(c.gcd_value != c.zero_fracket_order);
      }
    }
  }
  CHECK(saw_noncyclic);
}

TEST_CASE("property: fracket structure on worked and random pairs") {
  check_structure(run3(), Side::L);
  check_structure(run3(), Side::M);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + t % 2;
    const ChipFiringPair p(random_invertible(rng, n, 40), random_m_matrix(rng, n, 40));
    check_structure(p, Side::L);
    check_structure(p, Side::M);
    const Integer zl = zero_fracket_order(p, Side::L), zm = zero_fracket_order(p, Side::M);
    CHECK(zl == zm);
    CHECK(gcd(abs(p.det_l()), p.det_m()) % zl == 0);
    CHECK(verify_largest_invariant_factor(p).holds());
    CHECK(zero_fracket_size_formula(p).holds());
    for (Side side : {Side::L, Side::M}) CHECK(cyclic_shortcut(p, side).biconditional_holds());
  }
}

}  // TEST_SUITE
