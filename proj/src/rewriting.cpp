#include "sofic/rewriting.hpp"

#include <algorithm>

namespace sofic {

namespace {

// true iff b is strictly smaller than a in length-lex order
bool length_lex_less(const Word& b, const Word& a) {
  if (b.size() != a.size()) return b.size() < a.size();
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

auto at(const Word& word, std::size_t pos) {
  return word.begin() + static_cast<std::ptrdiff_t>(pos);
}

bool matches_at(const Word& word, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > word.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), at(word, pos));
}

Word replace_at(const Word& word, std::size_t pos, std::size_t len,
                const Word& replacement) {
  Word out;
  out.reserve(word.size() - len + replacement.size());
  out.insert(out.end(), word.begin(), at(word, pos));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), at(word, pos + len), word.end());
  return out;
}

}  // namespace

RewriteSystem::RewriteSystem(std::size_t alphabet_size,
                             std::vector<Rule> rules)
    : alphabet_size_(alphabet_size), rules_(std::move(rules)) {
  if (alphabet_size_ == 0) {
    throw ValidationError("rewrite system: empty alphabet");
  }
  for (const Rule& rule : rules_) {
    if (rule.lhs.empty()) {
      throw ValidationError("rewrite rule: empty left-hand side");
    }
    for (const Word* side : {&rule.lhs, &rule.rhs}) {
      for (uint32_t letter : *side) {
        if (letter >= alphabet_size_) {
          throw ValidationError("rewrite rule: letter out of alphabet");
        }
      }
    }
    if (!length_lex_less(rule.rhs, rule.lhs)) {
      throw ValidationError(
          "rewrite rule: right-hand side must be length-lex smaller than the "
          "left-hand side");
    }
  }
}

Word RewriteSystem::normalize(const Word& word, std::size_t step_budget) const {
  Word current = word;
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < current.size() && !changed; ++pos) {
      for (const Rule& rule : rules_) {
        if (matches_at(current, pos, rule.lhs)) {
          current = replace_at(current, pos, rule.lhs.size(), rule.rhs);
          if (++steps > step_budget) {
            throw BudgetError("rewriting exceeded step budget " +
                              std::to_string(step_budget));
          }
          changed = true;
          break;
        }
      }
    }
  }
  return current;
}

RewriteSystem RewriteSystem::reversed() const {
  std::vector<Rule> reversed_rules;
  reversed_rules.reserve(rules_.size());
  for (const Rule& rule : rules_) {
    Rule r{Word(rule.lhs.rbegin(), rule.lhs.rend()),
           Word(rule.rhs.rbegin(), rule.rhs.rend())};
    reversed_rules.push_back(std::move(r));
  }
  return RewriteSystem(alphabet_size_, std::move(reversed_rules));
}

bool operator==(const RewriteSystem& a, const RewriteSystem& b) {
  if (a.alphabet_size_ != b.alphabet_size_) return false;
  if (a.rules_.size() != b.rules_.size()) return false;
  for (std::size_t i = 0; i < a.rules_.size(); ++i) {
    if (a.rules_[i].lhs != b.rules_[i].lhs ||
        a.rules_[i].rhs != b.rules_[i].rhs) {
      return false;
    }
  }
  return true;
}

std::vector<ConfluenceViolation> check_local_confluence(
    const RewriteSystem& system, std::size_t step_budget) {
  std::vector<ConfluenceViolation> violations;
  const auto& rules = system.rules();

  auto record = [&](const Word& overlap, const Word& a, const Word& b) {
    Word na = system.normalize(a, step_budget);
    Word nb = system.normalize(b, step_budget);
    if (na != nb) violations.push_back({overlap, na, nb});
  };

  for (const auto& r1 : rules) {
    for (const auto& r2 : rules) {
      // proper overlap: a suffix of r1.lhs equals a prefix of r2.lhs
      for (std::size_t k = 1; k < r1.lhs.size() && k < r2.lhs.size(); ++k) {
        if (std::equal(at(r1.lhs, r1.lhs.size() - k), r1.lhs.end(),
                       r2.lhs.begin())) {
          Word overlap(r1.lhs.begin(), r1.lhs.end());
          overlap.insert(overlap.end(), at(r2.lhs, k), r2.lhs.end());
          Word via1 = replace_at(overlap, 0, r1.lhs.size(), r1.rhs);
          Word via2 = replace_at(overlap, r1.lhs.size() - k, r2.lhs.size(),
                                 r2.rhs);
          record(overlap, via1, via2);
        }
      }
      // containment: r2.lhs occurs strictly inside r1.lhs
      if (r2.lhs.size() < r1.lhs.size()) {
        for (std::size_t pos = 0; pos + r2.lhs.size() <= r1.lhs.size();
             ++pos) {
          if (std::equal(r2.lhs.begin(), r2.lhs.end(), at(r1.lhs, pos))) {
            Word via1 = r1.rhs;
            Word via2 =
                replace_at(r1.lhs, pos, r2.lhs.size(), r2.rhs);
            record(r1.lhs, via1, via2);
          }
        }
      }
    }
  }
  return violations;
}

}  // namespace sofic
