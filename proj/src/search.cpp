#include "sofic/search.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace sofic {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_exists: return "none_exists";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::size_t maps_on(std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= n;
  return count;
}

std::vector<Transformation> all_maps(std::size_t n) {
  if (n > 7) {
    // 8^8 maps would already be past 16M entries
    throw BudgetError("cannot enumerate all maps on " + std::to_string(n) +
                      " points");
  }
  const std::size_t count = maps_on(n);
  std::vector<Transformation> maps;
  maps.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    maps.push_back(map_monoid_element(n, i));
  }
  return maps;
}

// Shared scaffolding for assignment searches: the sorted domain
// D = K u K^2 u {1}, the positions of K inside it, and the D-position of
// every ordered K-pair product.
struct AssignmentSpace {
  std::vector<Element> domain;           // sorted shortlex
  std::vector<std::size_t> k_positions;  // positions of K in domain
  std::vector<std::vector<std::size_t>> product_position;  // K x K -> domain
  std::size_t identity_position = 0;

  AssignmentSpace(const MonoidHandle& handle, const std::vector<Element>& k) {
    std::set<Element> closure(k.begin(), k.end());
    for (const Element& a : k) {
      for (const Element& b : k) closure.insert(multiply(a, b));
    }
    closure.insert(handle.identity());
    domain.assign(closure.begin(), closure.end());

    auto position = [&](const Element& e) {
      return static_cast<std::size_t>(
          std::lower_bound(domain.begin(), domain.end(), e) - domain.begin());
    };
    identity_position = position(handle.identity());
    std::set<Element> k_set(k.begin(), k.end());
    for (const Element& e : k_set) k_positions.push_back(position(e));
    product_position.resize(k_positions.size(),
                            std::vector<std::size_t>(k_positions.size()));
    std::vector<Element> k_sorted(k_set.begin(), k_set.end());
    for (std::size_t i = 0; i < k_sorted.size(); ++i) {
      for (std::size_t j = 0; j < k_sorted.size(); ++j) {
        product_position[i][j] = position(multiply(k_sorted[i], k_sorted[j]));
      }
    }
  }
};

// Worst violated constraint of an assignment, as a disagreement count over
// n points (so the score as a fraction is count / n).
struct Scorer {
  const std::vector<Transformation>& maps;
  const AssignmentSpace& space;
  Convention convention;
  std::size_t n;

  long long score(const std::vector<uint32_t>& assignment) const {
    long long worst = 0;
    const Transformation& at_identity =
        maps[assignment[space.identity_position]];
    worst = static_cast<long long>(n - fixed_point_count(at_identity));
    const auto& kp = space.k_positions;
    for (std::size_t i = 0; i < kp.size(); ++i) {
      for (std::size_t j = 0; j < kp.size(); ++j) {
        const Transformation product =
            compose(maps[assignment[kp[i]]], maps[assignment[kp[j]]],
                    convention);
        const Transformation& direct =
            maps[assignment[space.product_position[i][j]]];
        long long disagreements = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (product(static_cast<uint32_t>(x)) !=
              direct(static_cast<uint32_t>(x))) {
            ++disagreements;
          }
        }
        worst = std::max(worst, disagreements);
      }
    }
    for (std::size_t i = 0; i < kp.size(); ++i) {
      for (std::size_t j = i + 1; j < kp.size(); ++j) {
        long long disagreements = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (maps[assignment[kp[i]]](static_cast<uint32_t>(x)) !=
              maps[assignment[kp[j]]](static_cast<uint32_t>(x))) {
            ++disagreements;
          }
        }
        // injectivity violation: 1 - d(phi(ki), phi(kj))
        worst = std::max(worst, static_cast<long long>(n) - disagreements);
      }
    }
    return worst;
  }
};

ApproxMap assignment_to_map(const MonoidHandle& handle,
                            const AssignmentSpace& space,
                            const std::vector<Transformation>& maps,
                            const std::vector<uint32_t>& assignment,
                            std::size_t n, Convention convention) {
  std::map<Element, Transformation> out;
  for (std::size_t i = 0; i < space.domain.size(); ++i) {
    out.emplace(space.domain[i], maps[assignment[i]]);
  }
  return ApproxMap(handle, n, convention, std::move(out));
}

}  // namespace

SearchResult exhaustive_search(const MonoidHandle& handle,
                               const std::vector<Element>& k,
                               const Fraction& epsilon, std::size_t n,
                               Convention convention, std::size_t budget) {
  if (n == 0) throw DomainError("exhaustive_search: n must be positive");
  const AssignmentSpace space(handle, k);
  const std::size_t map_count = maps_on(n);
  double total = 1;
  for (std::size_t i = 0; i < space.domain.size(); ++i) {
    total *= static_cast<double>(map_count);
    if (total > static_cast<double>(budget)) {
      throw BudgetError(
          "exhaustive_search: space " + std::to_string(map_count) + "^" +
          std::to_string(space.domain.size()) + " exceeds budget " +
          std::to_string(budget) + "; use randomized_search");
    }
  }

  const std::vector<Transformation> maps = all_maps(n);
  const Scorer scorer{maps, space, convention, n};
  // disagreement count <= eps*n, i.e. count/n <= eps
  std::vector<uint32_t> assignment(space.domain.size(), 0);
  SearchResult result;
  for (;;) {
    ++result.examined;
    const long long worst = scorer.score(assignment);
    if (Fraction(worst, static_cast<long long>(n)) <= epsilon) {
      result.status = SearchStatus::found;
      result.phi = assignment_to_map(handle, space, maps, assignment, n,
                                     convention);
      result.report = defect_report(*result.phi, k);
      return result;
    }
    // next assignment in lexicographic order, last position fastest
    std::size_t pos = assignment.size();
    while (pos > 0) {
      --pos;
      if (++assignment[pos] < map_count) break;
      assignment[pos] = 0;
      if (pos == 0) {
        result.status = SearchStatus::none_exists;
        return result;
      }
    }
  }
}

SearchResult randomized_search(const MonoidHandle& handle,
                               const std::vector<Element>& k,
                               const Fraction& epsilon, std::size_t n,
                               Convention convention,
                               const RandomSearchOptions& options) {
  if (n == 0) throw DomainError("randomized_search: n must be positive");
  const AssignmentSpace space(handle, k);
  const std::vector<Transformation> maps = all_maps(n);
  const std::size_t map_count = maps.size();
  const Scorer scorer{maps, space, convention, n};

  std::mt19937_64 rng(options.seed);
  SearchResult result;
  auto good_enough = [&](long long worst) {
    return Fraction(worst, static_cast<long long>(n)) <= epsilon;
  };
  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    std::vector<uint32_t> assignment(space.domain.size());
    for (auto& a : assignment) {
      a = static_cast<uint32_t>(rng() % map_count);
    }
    long long current = scorer.score(assignment);
    for (std::size_t step = 0; step < options.max_steps && !good_enough(current);
         ++step) {
      ++result.examined;
      const std::size_t pos = rng() % assignment.size();
      const uint32_t old_value = assignment[pos];
      assignment[pos] = static_cast<uint32_t>(rng() % map_count);
      const long long changed = scorer.score(assignment);
      if (changed <= current) {
        current = changed;
      } else {
        assignment[pos] = old_value;
      }
    }
    if (good_enough(current)) {
      result.status = SearchStatus::found;
      result.phi = assignment_to_map(handle, space, maps, assignment, n,
                                     convention);
      result.report = defect_report(*result.phi, k);
      return result;
    }
  }
  result.status = SearchStatus::inconclusive;
  return result;
}

// --- epsilon*(n) for the bicyclic monoid --------------------------------------

EpsilonStarResult epsilon_star_bicyclic(std::size_t n, EpsilonStarMode mode) {
  if (n == 0) throw DomainError("epsilon_star_bicyclic: n must be positive");
  if (mode == EpsilonStarMode::relaxed && n > 3) {
    throw BudgetError("epsilon_star_bicyclic: relaxed mode supports n <= 3");
  }
  if (mode == EpsilonStarMode::full && n > 2) {
    throw BudgetError("epsilon_star_bicyclic: full mode supports n <= 2");
  }

  const MonoidHandle bicyclic = MonoidHandle::bicyclic();
  const Element one = bicyclic.identity();
  const Element p = bicyclic_element(bicyclic, 0, 1);
  const Element q = bicyclic_element(bicyclic, 1, 0);
  const Element qp = bicyclic_element(bicyclic, 1, 1);

  const std::size_t count = maps_on(n);
  const std::vector<Transformation> maps = all_maps(n);

  // disagreement counts and standard-composition table over all maps
  std::vector<std::vector<uint32_t>> dc(count, std::vector<uint32_t>(count));
  std::vector<std::vector<uint32_t>> prod(count,
                                          std::vector<uint32_t>(count));
  for (uint32_t i = 0; i < count; ++i) {
    for (uint32_t j = 0; j < count; ++j) {
      uint32_t disagreements = 0;
      for (uint32_t x = 0; x < n; ++x) {
        if (maps[i](x) != maps[j](x)) ++disagreements;
      }
      dc[i][j] = disagreements;
      prod[i][j] =
          map_monoid_index(compose(maps[i], maps[j], Convention::standard));
    }
  }
  const uint32_t id_index = map_monoid_index(Transformation::identity(n));

  long long best = static_cast<long long>(n) + 1;
  std::vector<uint32_t> best_tuple;

  if (mode == EpsilonStarMode::relaxed) {
    // tuple = (phi(1), phi(p), phi(q), phi(qp))
    for (uint32_t h = 0; h < count; ++h) {
      for (uint32_t f = 0; f < count; ++f) {
        for (uint32_t g = 0; g < count; ++g) {
          const uint32_t fg = prod[f][g];
          const uint32_t gf = prod[g][f];
          const long long base =
              std::max<long long>(dc[h][id_index], dc[h][fg]);
          for (uint32_t kk = 0; kk < count; ++kk) {
            const long long worst = std::max(
                {base, static_cast<long long>(dc[kk][gf]),
                 static_cast<long long>(n) - dc[kk][h]});
            if (worst < best) {
              best = worst;
              best_tuple = {h, f, g, kk};
            }
          }
        }
      }
    }
    EpsilonStarResult result{Fraction(best, static_cast<long long>(n)), {}};
    std::map<Element, Transformation> assignment{
        {one, maps[best_tuple[0]]},
        {p, maps[best_tuple[1]]},
        {q, maps[best_tuple[2]]},
        {qp, maps[best_tuple[3]]}};
    result.witness = ApproxMap(bicyclic, n, Convention::standard,
                               std::move(assignment));
    return result;
  }

  // full mode: assignments over all of K u K^2
  const std::vector<Element> k_elements{one, p, q, qp};
  AssignmentSpace space(bicyclic, k_elements);
  const std::size_t d = space.domain.size();
  std::vector<uint32_t> assignment(d, 0);
  std::vector<uint32_t> current;
  for (;;) {
    long long worst = dc[assignment[space.identity_position]][id_index];
    const auto& kp = space.k_positions;
    for (std::size_t i = 0; i < kp.size() && worst < best; ++i) {
      for (std::size_t j = 0; j < kp.size(); ++j) {
        const uint32_t composed =
            prod[assignment[kp[i]]][assignment[kp[j]]];
        worst = std::max<long long>(
            worst, dc[assignment[space.product_position[i][j]]][composed]);
      }
    }
    for (std::size_t i = 0; i < kp.size() && worst < best; ++i) {
      for (std::size_t j = i + 1; j < kp.size(); ++j) {
        worst = std::max<long long>(
            worst, static_cast<long long>(n) -
                       dc[assignment[kp[i]]][assignment[kp[j]]]);
      }
    }
    if (worst < best) {
      best = worst;
      current = assignment;
    }
    std::size_t pos = d;
    bool done = false;
    while (pos > 0) {
      --pos;
      if (++assignment[pos] < count) break;
      assignment[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }

  EpsilonStarResult result{Fraction(best, static_cast<long long>(n)), {}};
  std::map<Element, Transformation> out;
  for (std::size_t i = 0; i < d; ++i) {
    out.emplace(space.domain[i], maps[current[i]]);
  }
  result.witness =
      ApproxMap(bicyclic, n, Convention::standard, std::move(out));
  return result;
}

}  // namespace sofic
