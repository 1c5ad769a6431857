#ifndef SOFIC_SEARCH_HPP_
#define SOFIC_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "sofic/approx.hpp"

namespace sofic {

enum class SearchStatus { found, none_exists, inconclusive };

const char* to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<ApproxMap> phi;
  std::optional<DefectReport> report;
  std::size_t examined = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 50'000'000;

// Enumerates every assignment of maps on n points to K u K^2 u {1} in
// lexicographic order and returns the first verified (K, 1-eps)-injective
// (K, eps)-morphism, or none_exists after exhausting the space. Throws
// BudgetError when the space itself is larger than the budget; use
// randomized_search beyond that.
SearchResult exhaustive_search(const MonoidHandle& handle,
                               const std::vector<Element>& k,
                               const Fraction& epsilon, std::size_t n,
                               Convention convention = Convention::standard,
                               std::size_t budget = kDefaultSearchBudget);

struct RandomSearchOptions {
  uint64_t seed = 0;          // callers must choose one; runs are reproducible
  std::size_t max_steps = 200'000;
  std::size_t restarts = 20;
};

// Seeded hill climbing on max(defects, 1 - min injectivity); never proves
// non-existence, so the failure status is inconclusive.
SearchResult randomized_search(const MonoidHandle& handle,
                               const std::vector<Element>& k,
                               const Fraction& epsilon, std::size_t n,
                               Convention convention,
                               const RandomSearchOptions& options);

enum class EpsilonStarMode { relaxed, full };

struct EpsilonStarResult {
  Fraction value;
  std::optional<ApproxMap> witness;  // lexicographically least minimizer
};

// The exact optimum, over all assignments of maps on n points, of the
// largest constraint violated by a candidate bicyclic approximation on
// K = {1, p, q, qp}.
//
// relaxed mode (n <= 3) scores only the chain's constraints over the tuple
// (phi(1), phi(p), phi(q), phi(qp)): the identity defect, the (p,q) and
// (q,p) product defects, and 1 - d(phi(qp), phi(1)). full mode (n <= 2)
// scores every ordered product pair of K and every distinct pair's
// injectivity over assignments to all of K u K^2. Both minima are >= 1/5.
EpsilonStarResult epsilon_star_bicyclic(std::size_t n, EpsilonStarMode mode);

}  // namespace sofic

#endif  // SOFIC_SEARCH_HPP_
