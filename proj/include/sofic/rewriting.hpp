#ifndef SOFIC_REWRITING_HPP_
#define SOFIC_REWRITING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sofic/errors.hpp"

namespace sofic {

// Words are sequences of generator indices into some alphabet.
using Word = std::vector<uint32_t>;

inline constexpr std::size_t kDefaultRewriteStepBudget = 1'000'000;

// A string rewriting system whose rules all decrease the length-lex order
// (shorter right-hand side, or equal length and lexicographically smaller).
// That makes every rewriting sequence terminate; normal forms are unique
// only when the system happens to be confluent, which check_local_confluence
// can probe but nothing here tries to repair.
class RewriteSystem {
 public:
  struct Rule {
    Word lhs;
    Word rhs;
  };

  RewriteSystem(std::size_t alphabet_size, std::vector<Rule> rules);

  std::size_t alphabet_size() const { return alphabet_size_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // Rewrites to a normal form by always reducing the leftmost match,
  // trying rules in declaration order at each position.
  Word normalize(const Word& word,
                 std::size_t step_budget = kDefaultRewriteStepBudget) const;

  // Returns the system whose rules are the letter-wise reversals of this
  // one's; throws ValidationError if a reversed rule is no longer
  // length-lex reducing.
  RewriteSystem reversed() const;

  friend bool operator==(const RewriteSystem& a, const RewriteSystem& b);

 private:
  std::size_t alphabet_size_;
  std::vector<Rule> rules_;
};

struct ConfluenceViolation {
  Word overlap;      // word admitting two distinct one-step reductions
  Word normal_a;     // normal form reached via the first rule
  Word normal_b;     // normal form reached via the second rule
};

// Examines all critical pairs (overlaps and containments of left-hand
// sides) and reports those whose two reductions do not rejoin.
std::vector<ConfluenceViolation> check_local_confluence(
    const RewriteSystem& system,
    std::size_t step_budget = kDefaultRewriteStepBudget);

}  // namespace sofic

#endif  // SOFIC_REWRITING_HPP_
