// Acceptance suite: runs every toolkit-level guarantee at its stated
// tolerance and prints one pass/fail line per criterion. Exits non-zero if
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sofic/approx.hpp"
#include "sofic/json_io.hpp"
#include "sofic/search.hpp"
#include "test_util.hpp"

using namespace sofic;
using namespace sofic::testing;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::ostream&)> run;  // throws on failure
};

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

// 1. Hamming product formula: exact rational equality on random sequences.
void product_formula(std::ostream&) {
  auto gen = rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t len = 1 + gen() % 4;
    std::vector<Transformation> fs, gs;
    Fraction survival = Fraction::one();
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t n = 1 + gen() % 6;
      fs.push_back(random_transformation(gen, n));
      gs.push_back(random_transformation(gen, n));
      survival = survival * (Fraction::one() - hamming(fs[i], gs[i]));
    }
    require(hamming(product_combine(fs), product_combine(gs)) ==
                Fraction::one() - survival,
            "product formula mismatch at trial " + std::to_string(trial));
  }
}

// 2. d(fg, Id) = d(gf, Id), exhaustive at n=3 plus random pairs, and the
// fixed-point-count version.
void exchange_lemma(std::ostream&) {
  for (uint32_t i = 0; i < 27; ++i) {
    for (uint32_t j = 0; j < 27; ++j) {
      const Transformation f = map_monoid_element(3, i);
      const Transformation g = map_monoid_element(3, j);
      const Transformation id = Transformation::identity(3);
      for (auto conv : {Convention::standard, Convention::diagrammatic}) {
        require(hamming(compose(f, g, conv), id) ==
                    hamming(compose(g, f, conv), id),
                "exhaustive pair " + std::to_string(i) + "," +
                    std::to_string(j));
        require(fixed_point_count(compose(f, g, conv)) ==
                    fixed_point_count(compose(g, f, conv)),
                "fixed point count mismatch");
      }
    }
  }
  auto gen = rng(103);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + gen() % 12;
    const Transformation f = random_transformation(gen, n);
    const Transformation g = random_transformation(gen, n);
    const Transformation id = Transformation::identity(n);
    require(hamming(compose(f, g, Convention::standard), id) ==
                hamming(compose(g, f, Convention::standard), id),
            "random pair at trial " + std::to_string(trial));
    require(fixed_point_count(compose(f, g, Convention::standard)) ==
                fixed_point_count(compose(g, f, Convention::standard)),
            "fixed point count at trial " + std::to_string(trial));
  }
}

// 3. Amplification law on every reported quantity of random approximations.
void amplification_law(std::ostream&) {
  auto gen = rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + gen() % 4;
    const MonoidHandle handle = MonoidHandle::finite(cyclic_group(m));
    const std::size_t size = 2 + gen() % 5;
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
    require(after.max_product_defect ==
                before.max_product_defect.amplified(power),
            "product defect law at trial " + std::to_string(trial));
    require(after.identity_defect == before.identity_defect.amplified(power),
            "identity defect law at trial " + std::to_string(trial));
    require(after.min_injectivity == before.min_injectivity.amplified(power),
            "injectivity law at trial " + std::to_string(trial));
  }
}

// 4. The bicyclic brute-force floor: epsilon*(n) >= 1/5 in every computable
// mode, and exhaustive search confirms emptiness below the threshold.
void bicyclic_floor(std::ostream& log) {
  const Fraction fifth(1, 5);
  require(epsilon_star_bicyclic(1, EpsilonStarMode::relaxed).value ==
              Fraction::one(),
          "epsilon*(1) should be 1");
  const Fraction e2r = epsilon_star_bicyclic(2, EpsilonStarMode::relaxed).value;
  const Fraction e2f = epsilon_star_bicyclic(2, EpsilonStarMode::full).value;
  const Fraction e3r = epsilon_star_bicyclic(3, EpsilonStarMode::relaxed).value;
  log << "epsilon*: n=2 relaxed " << e2r.str() << ", n=2 full " << e2f.str()
      << ", n=3 relaxed " << e3r.str() << "; ";
  require(e2r >= fifth, "epsilon*(2, relaxed) below 1/5");
  require(e2f >= fifth, "epsilon*(2, full) below 1/5");
  require(e2r <= e2f, "relaxed exceeds full");
  require(e3r >= fifth, "epsilon*(3, relaxed) below 1/5");

  const MonoidHandle b = MonoidHandle::bicyclic();
  const std::vector<Element> k{b.identity(), bicyclic_element(b, 0, 1),
                               bicyclic_element(b, 1, 0),
                               bicyclic_element(b, 1, 1)};
  const SearchResult search = exhaustive_search(b, k, Fraction(1, 10), 2);
  require(search.status == SearchStatus::none_exists,
          "exhaustive search should rule out eps = 1/10 on two points");
}

// 5. Good-vertex counts of the example families.
void family_counts(std::ostream& log) {
  const MonoidHandle two = MonoidHandle::finite(
      adjoin_identity(FiniteSemigroup(std::vector<std::vector<uint32_t>>{{0}})),
      {0}, {"a"});
  const LabeledGraph fan = fan_graph(10);
  for (unsigned r = 1; r <= 3; ++r) {
    require(good_vertex_set(fan, two, r).size() == fan.vertex_count() - 1,
            "fan |V(r)| != |V|-1 at r=" + std::to_string(r));
  }

  const MonoidHandle m2 = map2_handle();
  for (unsigned n : {2u, 3u, 6u}) {
    const std::size_t good = good_vertex_set(schreier_graph(n), m2, 2).size();
    require(good >= (std::size_t{1} << n) - 2,
            "schreier |V(r)| < 2^n - 2 at n=" + std::to_string(n));
  }

  const MonoidHandle nat = MonoidHandle::naturals();
  for (unsigned r : {1u, 2u, 5u}) {
    require(good_vertex_set(path_graph(12), nat, r).size() == 12 - r,
            "path |V(r)| != n - r at r=" + std::to_string(r));
  }

  for (unsigned r : {2u, 3u}) {
    for (std::size_t n : {std::size_t{r} + 2, std::size_t{r} + 5}) {
      require(good_vertex_set(cycle_graph(n), nat, r).size() == n,
              "cycle V(r) != V at n=" + std::to_string(n));
    }
    require(good_vertex_set(cycle_graph(r + 1), nat, r).empty(),
            "cycle V(r) should be empty at n=r+1");
  }
  log << "note: at n=r+1 the induced ball gains the wrap edge, so V(r) is "
         "empty rather than V; ";
}

// 6. Graph-to-morphism bridge on the cycle and fan families.
void bridge_to_morphism(std::ostream&) {
  const MonoidHandle nat = MonoidHandle::naturals();
  std::vector<Element> k_nat;
  for (unsigned long i = 0; i <= 2; ++i) {
    k_nat.push_back(parse_element(nat, std::to_string(i)));
  }
  const GraphMorphismResult cycle =
      graph_to_morphism(cycle_graph(10), nat, k_nat, Fraction(1, 4));
  require(cycle.report.passes(Fraction(1, 4), Fraction(3, 4)),
          "cycle bridge failed verification");
  require(cycle.report.max_product_defect == Fraction::zero() &&
              cycle.report.identity_defect == Fraction::zero(),
          "cycle bridge has nonzero defects");
  require(cycle.report.min_injectivity == Fraction::one(),
          "cycle bridge injectivity should be 1");

  const MonoidHandle two = MonoidHandle::finite(
      adjoin_identity(FiniteSemigroup(std::vector<std::vector<uint32_t>>{{0}})),
      {0}, {"a"});
  const std::vector<Element> k_two{two.identity(), finite_element(two, 0)};
  const GraphMorphismResult fan =
      graph_to_morphism(fan_graph(20), two, k_two, Fraction(1, 10));
  require(fan.report.passes(Fraction(1, 10), Fraction(9, 10)),
          "fan bridge failed verification");

  // disagreements may only sit on bad vertices
  auto check_good_zero = [](const GraphMorphismResult& result,
                            const LabeledGraph& g,
                            const std::vector<Element>& k) {
    const std::set<std::string> good(result.weiss.good.begin(),
                                     result.weiss.good.end());
    for (const Element& k1 : k) {
      for (const Element& k2 : k) {
        const Transformation lhs = result.phi.image(multiply(k1, k2));
        const Transformation rhs = compose(result.phi.image(k1),
                                           result.phi.image(k2),
                                           result.phi.convention());
        for (uint32_t v = 0; v < result.phi.x_size(); ++v) {
          if (lhs(v) != rhs(v)) {
            require(good.count(g.vertices()[v]) == 0,
                    "defect on good vertex " + g.vertices()[v]);
          }
        }
      }
    }
  };
  check_good_zero(cycle, cycle_graph(10), k_nat);
  check_good_zero(fan, fan_graph(20), k_two);
}

// 7. Morphism-to-graph bridge: exact diagrammatic representations of small
// groups reproduce their Cayley graphs with every vertex good (delta = 0).
void bridge_to_graph(std::ostream&) {
  struct Case {
    MonoidHandle handle;
    unsigned diameter;
  };
  const std::vector<Case> cases{
      {MonoidHandle::finite(cyclic_group(5), {1}, {"1"}), 4},
      {MonoidHandle::finite(klein_four(), {1, 2}, {"s", "t"}), 2},
  };
  for (const auto& [handle, diameter] : cases) {
    const auto image = right_regular_embedding(handle.finite_monoid());
    std::map<Element, Transformation> assignments;
    for (uint32_t i = 0; i < handle.finite_monoid().size(); ++i) {
      assignments.emplace(finite_element(handle, i), image[i]);
    }
    const ApproxMap phi(handle, handle.finite_monoid().size(),
                        Convention::diagrammatic, std::move(assignments));
    require(defect_report(phi, all_elements(handle))
                .passes(Fraction::zero(), Fraction::one()),
            "representation is not exact");
    const LabeledGraph g = morphism_to_graph(phi);
    for (unsigned r = 1; r <= diameter; ++r) {
      // delta = 0 asks for a morphism at eps(0) = 0, which the exact
      // representation is; the graph must then have no bad vertices
      require(epsilon_for_delta(handle, r, Fraction::zero()) ==
                  Fraction::zero(),
              "eps(0) should be 0");
      const WeissReport report = weiss_check(g, handle, r, Fraction::zero());
      require(report.pass && report.good.size() == g.vertex_count(),
              "V(r) != V at r=" + std::to_string(r));
    }
  }
}

// 8. The adjoin-an-identity construction verifies at every listed epsilon.
void adjoin_identity_bounds(std::ostream&) {
  struct Case {
    std::string name;
    FiniteSemigroup s;
  };
  const std::vector<Case> cases{
      {"idempotent", FiniteSemigroup(std::vector<std::vector<uint32_t>>{{0}})},
      {"left-zero-2", left_zero_semigroup(2)},
      {"right-zero-3", right_zero_semigroup(3)},
  };
  for (const auto& [name, s] : cases) {
    std::vector<uint32_t> k;
    for (uint32_t i = 0; i <= s.size(); ++i) k.push_back(i);
    for (const Fraction eps :
         {Fraction(1, 2), Fraction(1, 4), Fraction(1, 10)}) {
      const AdjoinIdentityApprox result = adjoin_identity_approx(s, k, eps);
      require(result.report.passes(eps, Fraction::one() - eps),
              name + " fails at eps=" + eps.str());
      const Fraction z_ratio(static_cast<long long>(result.z_size),
                             static_cast<long long>(result.phi.x_size()));
      require(result.report.max_product_defect <= Fraction::one() - z_ratio,
              name + " defect above 1 - |Z|/|X|");
      require(result.report.min_injectivity >= z_ratio,
              name + " injectivity below |Z|/|X|");
    }
  }
}

// 9. The halving obstruction on the truncated Cayley ball and on random
// deterministic {p,q}-graphs.
void halving_obstruction(std::ostream& log) {
  const LabeledGraph ball =
      cayley_ball_graph(MonoidHandle::bicyclic(), 6).graph;
  const HalvingReport report = bicyclic_halving_check(ball, 2);
  require(report.pass, "truncated Cayley ball failed");
  require(2 * report.good.size() <= report.vertex_count,
          "|V(2)| > |V|/2 on the truncated ball");
  log << "|V(2)| = " << report.good.size() << " of " << report.vertex_count
      << " on the truncated ball; ";

  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t size = 10 + (seed * 7) % 31;  // up to 40 vertices
    const LabeledGraph g =
        random_deterministic_graph({"p", "q"}, size, seed);
    require(bicyclic_halving_check(g, 2).pass,
            "random graph failed at seed " + std::to_string(seed));
  }
}

// 10. The closed-form bicyclic multiplication against the rewriting oracle,
// and the triangular ball sizes.
void normal_form_engine(std::ostream&) {
  const MonoidHandle b = MonoidHandle::bicyclic();
  const MonoidHandle oracle =
      MonoidHandle::rewriting({"p", "q"}, RewriteSystem(2, {{{0, 1}, {}}}));
  auto gen = rng(109);
  for (int trial = 0; trial < 10000; ++trial) {
    const Word u = random_word(gen, 2, 12);
    const Word v = random_word(gen, 2, 12);
    require(to_string(multiply(normalize(b, u), normalize(b, v))) ==
                to_string(multiply(normalize(oracle, u), normalize(oracle, v))),
            "closed form disagrees with the oracle at trial " +
                std::to_string(trial));
  }
  for (unsigned r = 0; r <= 8; ++r) {
    const auto fast = elements_ball(b, r);
    const auto slow = elements_ball(oracle, r);
    require(fast.size() == (r + 1) * (r + 2) / 2,
            "|B_r| != (r+1)(r+2)/2 at r=" + std::to_string(r));
    require(fast.size() == slow.size(), "oracle ball size differs");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"hamming product formula, 1000 random sequences", product_formula},
      {"d(fg,Id) = d(gf,Id), exhaustive n=3 + 10^4 random pairs",
       exchange_lemma},
      {"amplification law on 200 random approximations", amplification_law},
      {"bicyclic floor: epsilon*(n) >= 1/5 and empty search at 1/10",
       bicyclic_floor},
      {"good-vertex counts of the fan/schreier/path/cycle families",
       family_counts},
      {"graph-to-morphism bridge on (naturals, C10) and (fan, {1,a})",
       bridge_to_morphism},
      {"morphism-to-graph bridge on Z/5 and Z/2xZ/2 at delta=0",
       bridge_to_graph},
      {"adjoin-identity construction at eps in {1/2, 1/4, 1/10}",
       adjoin_identity_bounds},
      {"bicyclic halving obstruction on ball(6) and 50 random graphs",
       halving_obstruction},
      {"bicyclic closed form vs rewriting oracle, 10^4 products",
       normal_form_engine},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string reason;
    try {
      criteria[i].run(log);
    } catch (const Failure& f) {
      ok = false;
      reason = f.message;
    } catch (const std::exception& e) {
      ok = false;
      reason = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". "
              << criteria[i].name << " (" << ms << " ms)";
    if (!log.str().empty()) std::cout << " -- " << log.str();
    if (!ok) {
      std::cout << " -- " << reason;
      ++failures;
    }
    std::cout << "\n";
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
  }
  return failures == 0 ? 0 : 1;
}
