#include "support.hpp"

#include "chipdual/duality.hpp"
#include "chipdual/errors.hpp"
#include "chipdual/io.hpp"
#include "chipdual/reference.hpp"

using namespace testing;
namespace ref = chipdual::reference;

namespace {

std::string data(const std::string& name) { return std::string(CHIPDUAL_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("scalars and vectors") {
  CHECK(to_json(Integer(-7)) == json(-7));
  CHECK(to_json(Integer("123456789012345678901234567890")) == json("123456789012345678901234567890"));
  CHECK(to_json(make_rational(-3, 6)) == json("-1/2"));
  CHECK(to_json(iv({1, 2})) == json::array({1, 2}));
  CHECK(rational_from_json(json("7/6")) == make_rational(7, 6));
  CHECK(rational_from_json(json(4)) == Rational(4));
  CHECK(integer_from_json(json("123456789012345678901234567890")) == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(integer_from_json(json("1/2")), InvalidInput);
  CHECK_THROWS_AS(rational_from_json(json(1.5)), InvalidInput);
  CHECK(rat_vector_from_json(to_json(rv({"1/3", "-2", "0"}))) == rv({"1/3", "-2", "0"}));
  CHECK(int_matrix_from_json(to_json(L_run3())) == L_run3());
  CHECK_THROWS_AS(int_matrix_from_json(json::parse("[[1,2],[3]]")), InvalidInput);
}

TEST_CASE("groups serialize largest factor first") {
  CHECK(to_json(AbelianGroup({2, 2, 12, 36})) == json::array({36, 12, 2, 2}));
  CHECK(to_json(AbelianGroup()) == json::array());
}

TEST_CASE("pairs and graphs") {
  const json j = pair_to_json(L_run3(), M_run3());
  const ChipFiringPair p = pair_from_json(j);
  CHECK(p.L() == L_run3());
  CHECK(p.M().matrix() == M_run3());
  const SignedGraph g = ref::run3_graph();
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK(pair_from_json(to_json(g)).L() == L_run3());
  json numeric = to_json(g);
  for (auto& e : numeric["edges"]) e[2] = e[2] == "+" ? 1 : -1;
  CHECK(graph_from_json(numeric) == g);
  CHECK_THROWS_AS(pair_from_json(json::parse(R"({"L": [[1]]})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 1, "?"]]})")), InvalidInput);
}

TEST_CASE("configuration records") {
  const ChipFiringPair p = ref::run3_pair();
  const json s = to_json(p.superstables().front());
  CHECK(s["config"] == json::array({0, 0, 0}));
  const auto table = duality_table(p);
  const json r = to_json(table.front());
  CHECK(r.contains("superstable"));
  CHECK(r.contains("critical"));
}

TEST_CASE("fracket report") {
  const json r = fracket_report(ref::run3_pair(), Side::L);
  CHECK(r["side"] == "L");
  CHECK(r["keys"].size() == 6);
  CHECK(r["sizes"] == json::array({2, 2, 2, 2, 2, 2}));
  CHECK(r["quotient"] == json::array({6}));
  CHECK(r["predicted_size"] == 2);
  CHECK(r["actual_size"] == 2);
}

TEST_CASE("data files") {
  CHECK(load_pair(data("run3.json")).L() == L_run3());
  CHECK(load_pair(data("run3.edges")).L() == L_run3());
  CHECK(load_graph(data("run3.edges")) == ref::run3_graph());
  CHECK(load_pair(data("c6.edges")).L() == ref::c6_pair().L());
  CHECK(load_pair(data("k6_all_negative.json")).size() == 5);
  CHECK_THROWS_AS(load_pair(data("missing.json")), InvalidInput);
}

TEST_CASE("text output") {
  TextTable t;
  t.header = {"a", "bb"};
  t.add({"1", "2"});
  t.add({"333", "4"});
  const std::string out = t.render();
  CHECK(out.find("a   | bb") != std::string::npos);
  CHECK(out.find("333 | 4") != std::string::npos);
  CHECK(t.csv() == "a,bb\n1,2\n333,4\n");
  CHECK(render_matrix(IntMatrix{{1, -2}, {3, 4}}).find("-2") != std::string::npos);
}

TEST_CASE("property: vector JSON round trip") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 50);
  for (int t = 0; t < 100; ++t) {
    RatVector v;
    for (int i = 0; i < 5; ++i) v.push_back(make_rational(num(rng), den(rng)));
    CHECK(rat_vector_from_json(json::parse(to_json(v).dump())) == v);
    const IntVector w = random_vector(rng, 4, -1000000, 1000000);
    CHECK(int_vector_from_json(json::parse(to_json(w).dump())) == w);
  }
}

}  // TEST_SUITE
