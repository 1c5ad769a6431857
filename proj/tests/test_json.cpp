#include <doctest.h>

#include "sofic/json_io.hpp"
#include "test_util.hpp"

using namespace sofic;
using namespace sofic::testing;
using nlohmann::json;

TEST_CASE("graph json round trip") {
  const LabeledGraph g = schreier_graph(2);
  const LabeledGraph back = graph_from_json(graph_to_json(g));
  CHECK(back.vertices() == g.vertices());
  CHECK(back.labels() == g.labels());
  CHECK(back.edge_triples() == g.edge_triples());
  CHECK(graph_to_json(back) == graph_to_json(g));

  const json parsed = json::parse(
      R"({"labels":["p","q"],"vertices":["v0","v1"],"edges":[["v0","p","v1"]]})");
  CHECK(graph_from_json(parsed).edge_count() == 1);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":[]})")),
                  ParseError);
}

TEST_CASE("handle json round trip") {
  const std::vector<MonoidHandle> handles{
      MonoidHandle::naturals(),
      MonoidHandle::bicyclic(),
      opposite(MonoidHandle::bicyclic()),
      MonoidHandle::free_monoid({"a", "b"}),
      MonoidHandle::free_commutative({"x", "y"}),
      map2_handle(),
      MonoidHandle::rewriting({"p", "q"},
                              RewriteSystem(2, {{{0, 1}, {}}})),
  };
  for (const MonoidHandle& h : handles) {
    CHECK(handle_from_json(handle_to_json(h)) == h);
  }

  CHECK(handle_from_json(json::parse(R"({"kind":"bicyclic"})")) ==
        MonoidHandle::bicyclic());
  const MonoidHandle rewriting = handle_from_json(json::parse(
      R"({"kind":"rewriting","alphabet":["p","q"],"rules":[["pq",""]]})"));
  CHECK(rewriting.rewrite_system().rules()[0].lhs == Word{0, 1});
  CHECK_THROWS_AS(handle_from_json(json::parse(R"({"kind":"weird"})")),
                  ParseError);
}

TEST_CASE("approx json round trip") {
  const MonoidHandle b = MonoidHandle::bicyclic();
  const ApproxMap phi(b, 3, Convention::diagrammatic,
                      {{b.identity(), Transformation::identity(3)},
                       {bicyclic_element(b, 1, 1), Transformation({0, 0, 2})}});
  const json j = approx_to_json(phi);
  CHECK(j["assignments"].contains("qp"));
  const ApproxMap back = approx_from_json(j, b);
  CHECK(back.x_size() == 3);
  CHECK(back.convention() == Convention::diagrammatic);
  CHECK(back.assignments() == phi.assignments());
  CHECK(approx_to_json(back) == j);
}

TEST_CASE("report json carries exact fractions") {
  const MonoidHandle h = map2_handle();
  std::map<Element, Transformation> assignments;
  for (uint32_t i = 0; i < 4; ++i) {
    assignments.emplace(finite_element(h, i), Transformation::identity(4));
  }
  const ApproxMap phi(h, 4, Convention::diagrammatic, std::move(assignments));
  const json j = report_to_json(defect_report(phi, all_elements(h)));
  CHECK(j["identity_defect"] == "0");
  CHECK(j["min_injectivity"] == "0");
  CHECK(j["k"].size() == 4);

  const WeissReport weiss =
      weiss_check(cycle_graph(6), MonoidHandle::naturals(), 2, Fraction(1, 3));
  const json wj = weiss_to_json(weiss);
  CHECK(wj["ratio"] == "1");
  CHECK(wj["pass"] == true);
}

TEST_CASE("certificate json") {
  const Transformation id = Transformation::identity(2);
  const json j = certificate_to_json(
      bicyclic_chain_certificate(id, id, id, id, Fraction(1, 10)));
  CHECK(j["d_k_h"] == "0");
  CHECK(j["injectivity_met"] == false);
  CHECK(j["conclusion"].is_string());
}

TEST_CASE("dot output marks the center") {
  const PointedBall ball = cayley_ball_graph(MonoidHandle::bicyclic(), 1);
  const std::string dot = to_dot(ball);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"1\" [peripheries=2]") != std::string::npos);
  CHECK(dot.find("\"p\" -> \"1\" [label=\"q\"]") != std::string::npos);
}
