#include <doctest.h>

#include <algorithm>

#include "sofic/approx.hpp"
#include "test_util.hpp"

using namespace sofic;
using namespace sofic::testing;

namespace {

// Exact approximation of a finite monoid via its left multiplications,
// optionally with some image perturbed.
ApproxMap regular_approx(const MonoidHandle& handle,
                         Convention convention = Convention::standard) {
  const FiniteMonoid& m = handle.finite_monoid();
  const auto image = convention == Convention::standard
                         ? left_regular_embedding(m)
                         : right_regular_embedding(m);
  std::map<Element, Transformation> assignments;
  for (uint32_t i = 0; i < m.size(); ++i) {
    assignments.emplace(finite_element(handle, i), image[i]);
  }
  return ApproxMap(handle, m.size(), convention, std::move(assignments));
}

ApproxMap perturb(const ApproxMap& phi, const Element& element,
                  uint32_t point, uint32_t value) {
  auto images = phi.image(element).images();
  images[point] = value;
  return phi.with_assignment(element, Transformation(std::move(images)));
}

}  // namespace

TEST_CASE("approx map basics") {
  const MonoidHandle b = MonoidHandle::bicyclic();
  const ApproxMap phi(b, 3, Convention::standard,
                      {{bicyclic_element(b, 0, 1), Transformation({0, 0, 1})}});
  CHECK(phi.image(bicyclic_element(b, 0, 1)) == Transformation({0, 0, 1}));
  CHECK(phi.image(b.identity()).is_identity());  // unassigned defaults to Id

  CHECK_THROWS_AS(ApproxMap(b, 3, Convention::standard,
                            {{b.identity(), Transformation({0, 1})}}),
                  ValidationError);
  CHECK_THROWS_AS(
      ApproxMap(b, 3, Convention::standard,
                {{MonoidHandle::naturals().identity(),
                  Transformation({0, 1, 2})}}),
      DomainError);
}

TEST_CASE("defect report") {
  SUBCASE("exact embedding of Z/5 has zero defects and full injectivity") {
    const MonoidHandle h = MonoidHandle::finite(cyclic_group(5));
    const DefectReport report =
        defect_report(regular_approx(h), all_elements(h));
    CHECK(report.max_product_defect == Fraction::zero());
    CHECK(report.identity_defect == Fraction::zero());
    CHECK(report.min_injectivity == Fraction::one());
    CHECK(report.passes(Fraction::zero(), Fraction::one()));
  }
  SUBCASE("collapsing everything to Id kills injectivity only") {
    const MonoidHandle b = MonoidHandle::bicyclic();
    const std::vector<Element> k{b.identity(), bicyclic_element(b, 0, 1),
                                 bicyclic_element(b, 1, 0),
                                 bicyclic_element(b, 1, 1)};
    const ApproxMap phi(b, 2, Convention::standard, {});
    const DefectReport report = defect_report(phi, k);
    CHECK(report.max_product_defect == Fraction::zero());
    CHECK(report.identity_defect == Fraction::zero());
    CHECK(report.min_injectivity == Fraction::zero());
  }
  SUBCASE("values match an independent recount") {
    auto gen = rng(61);
    const MonoidHandle h = MonoidHandle::finite(cyclic_group(4));
    for (int trial = 0; trial < 50; ++trial) {
      std::map<Element, Transformation> assignments;
      for (uint32_t i = 0; i < 4; ++i) {
        assignments.emplace(finite_element(h, i),
                            random_transformation(gen, 5));
      }
      const ApproxMap phi(h, 5,
                          trial % 2 ? Convention::standard
                                    : Convention::diagrammatic,
                          std::move(assignments));
      const auto k = all_elements(h);
      const DefectReport report = defect_report(phi, k);
      Fraction worst = Fraction::zero();
      for (const Element& k1 : k) {
        for (const Element& k2 : k) {
          worst = std::max(worst,
                           hamming(phi.image(multiply(k1, k2)),
                                   compose(phi.image(k1), phi.image(k2),
                                           phi.convention())));
        }
      }
      CHECK(report.max_product_defect == worst);
      Fraction closest = Fraction::one();
      for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) {
          closest = std::min(closest,
                             hamming(phi.image(k[i]), phi.image(k[j])));
        }
      }
      CHECK(report.min_injectivity == closest);
    }
  }
}

TEST_CASE("normalize identity") {
  const MonoidHandle h = MonoidHandle::finite(cyclic_group(8));
  const auto k = all_elements(h);
  const Fraction eps(1, 4);

  SUBCASE("already normalized input is unchanged") {
    const ApproxMap phi = regular_approx(h);
    const ApproxMap out = normalize_identity(phi, k, eps);
    CHECK(out.assignments() == phi.assignments());
  }
  SUBCASE("a perturbed identity is repaired and reverified") {
    const ApproxMap phi = perturb(regular_approx(h), h.identity(), 0, 1);
    REQUIRE(defect_report(phi, k).identity_defect == Fraction(1, 8));
    const ApproxMap out = normalize_identity(phi, k, eps);
    CHECK(out.image(h.identity()).is_identity());
    const DefectReport report = defect_report(out, k);
    CHECK(report.passes(eps, Fraction::one() - eps));
  }
  SUBCASE("inputs that fail the half-strength contract are rejected") {
    // distance 1/2 from Id is far beyond eps/2 = 1/8
    ApproxMap phi = regular_approx(h);
    for (uint32_t x = 0; x < 4; ++x) phi = perturb(phi, h.identity(), x, 7);
    CHECK_THROWS_AS(normalize_identity(phi, k, eps), ContractError);
  }
  SUBCASE("perturbed embeddings satisfy the contract whenever the input does") {
    auto gen = rng(67);
    const Fraction eps2(1, 2);
    int verified = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t m = 6 + gen() % 4;
      const MonoidHandle handle = MonoidHandle::finite(cyclic_group(m));
      ApproxMap phi = regular_approx(handle);
      const int edits = 1 + gen() % 2;
      for (int e = 0; e < edits; ++e) {
        phi = perturb(phi, finite_element(handle, gen() % m), gen() % m,
                      gen() % m);
      }
      const auto km = all_elements(handle);
      const Fraction half = eps2 / Fraction(2, 1);
      if (!defect_report(phi, km).passes(half, Fraction::one() - half)) {
        continue;
      }
      ++verified;
      const ApproxMap out = normalize_identity(phi, km, eps2);
      CHECK(out.image(handle.identity()).is_identity());
      CHECK(defect_report(out, km).passes(eps2, Fraction::one() - eps2));
    }
    CHECK(verified >= 45);  // single-edit inputs always satisfy the contract
  }
}

TEST_CASE("amplification of approximations") {
  const MonoidHandle n = MonoidHandle::naturals();
  auto nat = [&](unsigned long v) {
    return parse_element(n, std::to_string(v));
  };

  SUBCASE("power one is the same map") {
    const ApproxMap phi(n, 2, Convention::standard,
                        {{nat(1), Transformation({0, 0})}});
    const ApproxMap amp = amplify_approx(phi, 1);
    CHECK(amp.x_size() == 2);
    CHECK(amp.image(nat(1)) == Transformation({0, 0}));
  }
  SUBCASE("injectivity 1/2 becomes 7/8 at power 3") {
    const ApproxMap phi(n, 2, Convention::standard,
                        {{nat(0), Transformation::identity(2)},
                         {nat(1), Transformation({0, 0})}});
    const std::vector<Element> k{nat(0), nat(1)};
    REQUIRE(defect_report(phi, k).min_injectivity == Fraction(1, 2));
    const DefectReport amped = defect_report(amplify_approx(phi, 3), k);
    CHECK(amped.min_injectivity == Fraction(7, 8));
  }
  SUBCASE("product defect 1/4 becomes 7/16 at power 2") {
    const ApproxMap phi(n, 4, Convention::standard,
                        {{nat(0), Transformation::identity(4)},
                         {nat(1), Transformation({1, 2, 3, 0})},
                         {nat(2), Transformation({2, 3, 0, 0})}});
    const std::vector<Element> k{nat(0), nat(1)};
    REQUIRE(defect_report(phi, k).max_product_defect == Fraction(1, 4));
    const DefectReport amped = defect_report(amplify_approx(phi, 2), k);
    CHECK(amped.max_product_defect == Fraction(7, 16));
    CHECK(amped.min_injectivity == Fraction::one());  // rotations never agree
  }
  SUBCASE("every reported quantity follows the amplification law") {
    auto gen = rng(71);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t m = 2 + gen() % 3;
      const MonoidHandle handle = MonoidHandle::finite(cyclic_group(m));
      const std::size_t size = 2 + gen() % 4;
      std::map<Element, Transformation> assignments;
      for (uint32_t i = 0; i < m; ++i) {
        assignments.emplace(finite_element(handle, i),
                            random_transformation(gen, size));
      }
      const ApproxMap phi(handle, size, Convention::standard,
                          std::move(assignments));
      const unsigned power = 1 + gen() % 3;
      const auto k = all_elements(handle);
      const DefectReport before = defect_report(phi, k);
      const DefectReport after = defect_report(amplify_approx(phi, power), k);
      CHECK(after.max_product_defect ==
            before.max_product_defect.amplified(power));
      CHECK(after.identity_defect == before.identity_defect.amplified(power));
      CHECK(after.min_injectivity == before.min_injectivity.amplified(power));
    }
  }
}

TEST_CASE("products of approximations") {
  SUBCASE("a trivial factor only relabels") {
    const MonoidHandle h1 = MonoidHandle::finite(cyclic_group(3));
    const MonoidHandle trivial = MonoidHandle::finite(cyclic_group(1));
    const ApproxMap phi1 = regular_approx(h1);
    const ApproxMap combined = product_approx(phi1, regular_approx(trivial));
    CHECK(combined.x_size() == 3);
    const auto k = all_elements(combined.handle());
    const DefectReport report = defect_report(combined, k);
    CHECK(report.max_product_defect == Fraction::zero());
    CHECK(report.min_injectivity == Fraction::one());
  }
  SUBCASE("exact factors give an exact product") {
    const MonoidHandle z2 = MonoidHandle::finite(cyclic_group(2));
    const ApproxMap combined =
        product_approx(regular_approx(z2), regular_approx(z2));
    CHECK(combined.handle().finite_monoid().size() == 4);
    CHECK(combined.x_size() == 4);
    const DefectReport report =
        defect_report(combined, all_elements(combined.handle()));
    CHECK(report.max_product_defect == Fraction::zero());
    CHECK(report.identity_defect == Fraction::zero());
    CHECK(report.min_injectivity == Fraction::one());
  }
  SUBCASE("pairwise defects combine by the product formula") {
    const MonoidHandle z2 = MonoidHandle::finite(cyclic_group(2));
    // defect 1/3 in the first factor, 1/4 in the second
    ApproxMap phi1(z2, 3, Convention::standard,
                   {{finite_element(z2, 0), Transformation::identity(3)},
                    {finite_element(z2, 1), Transformation({1, 0, 2})}});
    phi1 = perturb(phi1, finite_element(z2, 0), 0, 1);
    ApproxMap phi2(z2, 4, Convention::standard,
                   {{finite_element(z2, 0), Transformation::identity(4)},
                    {finite_element(z2, 1), Transformation({1, 0, 3, 2})}});
    phi2 = perturb(phi2, finite_element(z2, 0), 0, 1);

    const ApproxMap combined = product_approx(phi1, phi2);
    const MonoidHandle& product = combined.handle();
    for (uint32_t a = 0; a < 2; ++a) {
      for (uint32_t b = 0; b < 2; ++b) {
        for (uint32_t c = 0; c < 2; ++c) {
          for (uint32_t d = 0; d < 2; ++d) {
            const Element k1 = finite_element(product, a * 2 + b);
            const Element k2 = finite_element(product, c * 2 + d);
            const Fraction d1 = hamming(
                phi1.image(multiply(finite_element(z2, a),
                                    finite_element(z2, c))),
                compose(phi1.image(finite_element(z2, a)),
                        phi1.image(finite_element(z2, c)),
                        Convention::standard));
            const Fraction d2 = hamming(
                phi2.image(multiply(finite_element(z2, b),
                                    finite_element(z2, d))),
                compose(phi2.image(finite_element(z2, b)),
                        phi2.image(finite_element(z2, d)),
                        Convention::standard));
            const Fraction expected =
                Fraction::one() -
                (Fraction::one() - d1) * (Fraction::one() - d2);
            CHECK(hamming(combined.image(multiply(k1, k2)),
                          compose(combined.image(k1), combined.image(k2),
                                  Convention::standard)) == expected);
          }
        }
      }
    }
    // identity defects 1/3 and 1/4 combine to 1/2 exactly
    const DefectReport report =
        defect_report(combined, all_elements(product));
    CHECK(report.identity_defect == Fraction(1, 2));
  }
  SUBCASE("mismatched conventions are refused") {
    const MonoidHandle z2 = MonoidHandle::finite(cyclic_group(2));
    CHECK_THROWS_AS(
        product_approx(regular_approx(z2),
                       regular_approx(z2, Convention::diagrammatic)),
        DomainError);
  }
  SUBCASE("non-finite handles are refused") {
    const ApproxMap word_map(MonoidHandle::naturals(), 2,
                             Convention::standard, {});
    CHECK_THROWS_AS(
        product_approx(word_map, regular_approx(
                                     MonoidHandle::finite(cyclic_group(2)))),
        DomainError);
  }
}

TEST_CASE("adjoin identity approximation") {
  SUBCASE("one idempotent at eps = 1/2") {
    const FiniteSemigroup s(std::vector<std::vector<uint32_t>>{{0}});
    const AdjoinIdentityApprox result =
        adjoin_identity_approx(s, {0, 1}, Fraction(1, 2));
    CHECK(result.y.size() == 2);
    CHECK(result.z_size == 3);
    CHECK(result.phi.x_size() == 6);
    CHECK(result.report.passes(Fraction(1, 2), Fraction(1, 2)));
  }
  SUBCASE("left zero pair at eps = 1/4") {
    const AdjoinIdentityApprox result = adjoin_identity_approx(
        left_zero_semigroup(2), {0, 1, 2}, Fraction(1, 4));
    CHECK(result.y.size() == 3);
    CHECK(result.z_size == 12);
    CHECK(result.phi.x_size() == 16);
    CHECK(result.report.passes(Fraction(1, 4), Fraction(3, 4)));
  }
  SUBCASE("displayed bounds hold exactly") {
    for (const Fraction eps : {Fraction(1, 2), Fraction(1, 4), Fraction(1, 10)}) {
      const AdjoinIdentityApprox result =
          adjoin_identity_approx(right_zero_semigroup(3), {0, 1, 2, 3}, eps);
      const Fraction z_ratio(
          static_cast<long long>(result.z_size),
          static_cast<long long>(result.phi.x_size()));
      CHECK(result.report.max_product_defect <= Fraction::one() - z_ratio);
      CHECK(result.report.min_injectivity >= z_ratio);
      CHECK(result.report.passes(eps, Fraction::one() - eps));
    }
  }
  SUBCASE("products with the identity are exact") {
    const AdjoinIdentityApprox result = adjoin_identity_approx(
        left_zero_semigroup(2), {0, 1, 2}, Fraction(1, 4));
    const MonoidHandle& handle = result.phi.handle();
    const Element one = handle.identity();
    for (const Element& k : result.k) {
      CHECK(hamming(result.phi.image(multiply(one, k)),
                    compose(result.phi.image(one), result.phi.image(k),
                            Convention::standard)) == Fraction::zero());
      CHECK(hamming(result.phi.image(multiply(k, one)),
                    compose(result.phi.image(k), result.phi.image(one),
                            Convention::standard)) == Fraction::zero());
    }
  }
  SUBCASE("epsilon bounds are validated") {
    const FiniteSemigroup s(std::vector<std::vector<uint32_t>>{{0}});
    CHECK_THROWS_AS(adjoin_identity_approx(s, {0}, Fraction(0, 1)),
                    DomainError);
    CHECK_THROWS_AS(adjoin_identity_approx(s, {0}, Fraction(3, 2)),
                    DomainError);
  }
}

TEST_CASE("graph to morphism bridge") {
  SUBCASE("long cycle for the naturals") {
    const MonoidHandle n = MonoidHandle::naturals();
    std::vector<Element> k;
    for (unsigned long i = 0; i <= 2; ++i) {
      k.push_back(parse_element(n, std::to_string(i)));
    }
    const GraphMorphismResult result =
        graph_to_morphism(cycle_graph(10), n, k, Fraction(1, 4));
    CHECK(result.r0 == 4);
    CHECK(result.r == 8);
    CHECK(result.weiss.pass);
    CHECK(result.report.max_product_defect == Fraction::zero());
    CHECK(result.report.identity_defect == Fraction::zero());
    CHECK(result.report.min_injectivity == Fraction::one());
    CHECK(result.phi.convention() == Convention::diagrammatic);
  }
  SUBCASE("fan graph for the two-element monoid") {
    const MonoidHandle h = MonoidHandle::finite(
        adjoin_identity(
            FiniteSemigroup(std::vector<std::vector<uint32_t>>{{0}})),
        {0}, {"a"});
    const std::vector<Element> k = {h.identity(), finite_element(h, 0)};
    const GraphMorphismResult result =
        graph_to_morphism(fan_graph(20), h, k, Fraction(1, 10));
    CHECK(result.r0 == 1);
    CHECK(result.r == 2);
    CHECK(result.report.max_product_defect == Fraction::zero());
    CHECK(result.report.min_injectivity == Fraction(20, 21));
    CHECK(result.report.passes(Fraction(1, 10), Fraction(9, 10)));
  }
  SUBCASE("good vertices move exactly along their ball isomorphism") {
    const MonoidHandle n = MonoidHandle::naturals();
    const std::vector<Element> k{parse_element(n, "0"), parse_element(n, "1")};
    const GraphMorphismResult result =
        graph_to_morphism(cycle_graph(8), n, k, Fraction(1, 4));
    // phi(1) rotates the cycle by one
    const Transformation& step = result.phi.image(parse_element(n, "1"));
    for (uint32_t v = 0; v < 8; ++v) CHECK(step(v) == (v + 1) % 8);
  }
  SUBCASE("the weiss gate rejects bad graphs") {
    const MonoidHandle n = MonoidHandle::naturals();
    const std::vector<Element> k{parse_element(n, "0"), parse_element(n, "1")};
    CHECK_THROWS_AS(graph_to_morphism(path_graph(3), n, k, Fraction(1, 100)),
                    ContractError);
  }
  SUBCASE("map({0,1}) on its schreier graph: the fixed-point rule leaks") {
    // The constants send good vertices onto the diagonal, which is not
    // good, so the (c0, a) product defect is large even though the graph
    // passes the Weiss gate. Kept as a record of what the construction
    // actually produces for a non-left-cancellative handle.
    const MonoidHandle h = map2_handle();
    const std::vector<Element> k{finite_element(h, 1), finite_element(h, 2),
                                 finite_element(h, 0)};
    const GraphMorphismResult result =
        graph_to_morphism(schreier_graph(6), h, k, Fraction(1, 10));
    CHECK(result.r0 == 2);
    CHECK(result.weiss.pass);
    CHECK(result.weiss.ratio == Fraction(62, 64));
    CHECK(result.report.max_product_defect == Fraction(31, 32));
    REQUIRE(result.report.max_product_pair.has_value());
    CHECK(to_string(result.report.max_product_pair->first) == "e0");
    CHECK(to_string(result.report.max_product_pair->second) == "e2");
    CHECK(result.report.min_injectivity >= Fraction(9, 10));
    CHECK_FALSE(result.report.is_morphism(Fraction(1, 10)));
  }
}

TEST_CASE("morphism to graph bridge") {
  SUBCASE("the right regular representation of Z/5 draws the cycle") {
    const MonoidHandle h = MonoidHandle::finite(cyclic_group(5), {1}, {"1"});
    const ApproxMap phi = regular_approx(h, Convention::diagrammatic);
    const LabeledGraph g = morphism_to_graph(phi);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    for (unsigned r = 1; r <= 4; ++r) {
      CHECK(good_vertex_set(g, h, r).size() == 5);
    }
    CHECK(weiss_check(g, h, 4, Fraction::zero()).pass);
  }
  SUBCASE("Z/2 x Z/2 draws its cayley graph") {
    const MonoidHandle h =
        MonoidHandle::finite(klein_four(), {1, 2}, {"s", "t"});
    const ApproxMap phi = regular_approx(h, Convention::diagrammatic);
    const LabeledGraph g = morphism_to_graph(phi);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 8);
    for (unsigned r = 1; r <= 2; ++r) {
      CHECK(weiss_check(g, h, r, Fraction::zero()).pass);
    }
  }
  SUBCASE("a perturbed representation still clears the Weiss bound") {
    // Z/32 with one generator image redirected: 5 -> 4 instead of 6. The
    // graph picks up a two-cycle, spoiling exactly the 2-balls of 3, 4
    // and 5, so |V(2)| = 29. With K = B_5(1) the defect report gives
    // eps = 1/16, and delta = eps * (|B_2|*|Sigma| + |B_2|^2) = 12/16,
    // whose guarantee (1-delta)|V| = 8 is comfortably met.
    const MonoidHandle h = MonoidHandle::finite(cyclic_group(32), {1}, {"1"});
    ApproxMap phi = regular_approx(h, Convention::diagrammatic);
    phi = perturb(phi, finite_element(h, 1), 5, 4);
    std::vector<Element> k;
    for (uint32_t i = 0; i <= 5; ++i) k.push_back(finite_element(h, i));

    const DefectReport report = defect_report(phi, k);
    const Fraction eps(1, 16);
    REQUIRE(report.max_product_defect == eps);
    REQUIRE(report.identity_defect == Fraction::zero());
    REQUIRE(report.is_injective(Fraction::one() - eps));

    const LabeledGraph g = morphism_to_graph(phi);
    const Fraction delta = eps * Fraction(12, 1);
    const WeissReport weiss = weiss_check(g, h, 2, delta);
    CHECK(weiss.pass);
    CHECK(weiss.good.size() == 29);
  }
  SUBCASE("the all-identity map leaves no good vertices") {
    const MonoidHandle n = MonoidHandle::naturals();
    const ApproxMap phi(n, 6, Convention::diagrammatic,
                        {{n.identity(), Transformation::identity(6)}});
    const LabeledGraph g = morphism_to_graph(phi);
    CHECK(g.edge_count() == 6);  // one loop per vertex
    CHECK(good_vertex_set(g, n, 1).empty());
  }
  SUBCASE("gates") {
    const MonoidHandle h = MonoidHandle::finite(cyclic_group(5), {1}, {"1"});
    CHECK_THROWS_AS(morphism_to_graph(regular_approx(h)), DomainError);

    const ApproxMap skewed = perturb(
        regular_approx(h, Convention::diagrammatic), h.identity(), 0, 1);
    CHECK_THROWS_AS(morphism_to_graph(skewed), ContractError);

    const MonoidHandle m2 = map2_handle();
    const ApproxMap phi2 = regular_approx(m2, Convention::diagrammatic);
    CHECK_THROWS_AS(morphism_to_graph(phi2), ContractError);
    CHECK_NOTHROW(morphism_to_graph(phi2, {}, true));
  }
  SUBCASE("epsilon for delta") {
    CHECK(epsilon_for_delta(MonoidHandle::bicyclic(), 1, Fraction(1, 2)) ==
          Fraction(1, 30));
    CHECK(epsilon_for_delta(MonoidHandle::naturals(), 2, Fraction(1, 1)) ==
          Fraction(1, 12));
  }
}

TEST_CASE("bicyclic chain certificate") {
  SUBCASE("all identity witnesses violate injectivity for eps < 1") {
    const Transformation id = Transformation::identity(4);
    const Certificate cert =
        bicyclic_chain_certificate(id, id, id, id, Fraction(1, 10));
    CHECK(cert.lemma_equality);
    CHECK(cert.triangle_bounds_hold);
    CHECK(cert.constraints_hold);
    CHECK(cert.d_k_h == Fraction::zero());
    CHECK_FALSE(cert.injectivity_met);
  }
  SUBCASE("constant against cycle realizes the lemma equality") {
    const Transformation f = Transformation::constant(3, 0);
    const Transformation g({1, 2, 0});
    const Transformation id = Transformation::identity(3);
    const Certificate cert =
        bicyclic_chain_certificate(id, f, g, id, Fraction(1, 5));
    CHECK(cert.d_fg_id == Fraction(2, 3));
    CHECK(cert.d_gf_id == Fraction(2, 3));
    CHECK(cert.lemma_equality);
  }
  SUBCASE("random witnesses always satisfy the chain inequalities") {
    auto gen = rng(73);
    for (int i = 0; i < 400; ++i) {
      const std::size_t n = 1 + gen() % 8;
      const Certificate cert = bicyclic_chain_certificate(
          random_transformation(gen, n), random_transformation(gen, n),
          random_transformation(gen, n), random_transformation(gen, n),
          Fraction(1, 6),
          i % 2 ? Convention::standard : Convention::diagrammatic);
      CHECK(cert.lemma_equality);
      CHECK(cert.triangle_bounds_hold);
      if (cert.constraints_hold) {
        CHECK(cert.d_k_h <= Fraction(4, 1) * cert.epsilon);
        // below the 1/5 threshold the injectivity requirement must break
        CHECK(Fraction::one() - cert.d_k_h > cert.epsilon);
        CHECK_FALSE(cert.injectivity_met);
      }
    }
  }
}
