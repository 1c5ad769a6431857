#ifndef SOFIC_MONOID_HPP_
#define SOFIC_MONOID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sofic/finite_monoid.hpp"
#include "sofic/rewriting.hpp"

namespace sofic {

enum class MonoidKind {
  free_monoid,
  free_commutative,
  naturals,
  bicyclic,
  finite,
  rewriting,
};

enum class Cancellativity { yes, no, unknown };

const char* to_string(MonoidKind kind);
const char* to_string(Cancellativity c);

namespace detail {
struct HandleData;
}

class Element;

// A finitely generated monoid with a normal-form representation and a
// multiplication oracle. Built-in kinds: free monoids, free commutative
// monoids, (N,+), the bicyclic monoid <p,q : pq=1>, finite monoids by
// table, and custom length-lex rewriting presentations.
//
// Handles are cheap immutable values; all operations are pure.
class MonoidHandle {
 public:
  static MonoidHandle free_monoid(std::vector<std::string> alphabet);
  static MonoidHandle free_commutative(std::vector<std::string> alphabet);
  static MonoidHandle naturals();
  static MonoidHandle bicyclic();
  // generators lists element indices; empty means every non-identity
  // element. labels, when given, must align with generators.
  static MonoidHandle finite(FiniteMonoid monoid,
                             std::vector<uint32_t> generators = {},
                             std::vector<std::string> labels = {});
  static MonoidHandle rewriting(std::vector<std::string> alphabet,
                                RewriteSystem system);

  MonoidKind kind() const;
  // True for handles produced by opposite() on kinds realized by reversing
  // the multiplication in place (free and bicyclic).
  bool is_reversed() const;
  Cancellativity left_cancellative() const;

  std::size_t generator_count() const;
  const std::vector<std::string>& generator_labels() const;
  Element generator(std::size_t i) const;
  Element identity() const;

  // Only for kind() == finite / rewriting.
  const FiniteMonoid& finite_monoid() const;
  const RewriteSystem& rewrite_system() const;
  const std::vector<uint32_t>& finite_generators() const;

  // Structural equality; elements may only be combined across equal handles.
  friend bool operator==(const MonoidHandle& a, const MonoidHandle& b);
  friend bool operator!=(const MonoidHandle& a, const MonoidHandle& b) {
    return !(a == b);
  }

 private:
  explicit MonoidHandle(std::shared_ptr<const detail::HandleData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::HandleData> data_;

  friend class Element;
  friend Element normalize(const MonoidHandle&, const Word&);
  friend Element multiply(const Element&, const Element&);
  friend MonoidHandle opposite(const MonoidHandle&);
  friend std::string to_string(const Element&);
  friend Element parse_element(const MonoidHandle&, const std::string&);
};

// A monoid element in canonical form. For word-based kinds the form is the
// canonical word over generator indices (for the bicyclic monoid, q^a p^b);
// for finite kinds it is a single entry holding the element's table index.
class Element {
 public:
  const MonoidHandle& handle() const { return handle_; }
  const Word& form() const { return form_; }
  bool is_identity() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }
  // Shortlex on canonical forms; the deterministic order used everywhere.
  friend bool operator<(const Element& a, const Element& b);

 private:
  Element(MonoidHandle handle, Word form)
      : handle_(std::move(handle)), form_(std::move(form)) {}

  MonoidHandle handle_;
  Word form_;

  friend class MonoidHandle;
  friend Element normalize(const MonoidHandle&, const Word&);
  friend Element multiply(const Element&, const Element&);
  friend std::string to_string(const Element&);
  friend Element parse_element(const MonoidHandle&, const std::string&);
  friend Element bicyclic_element(const MonoidHandle&, uint64_t, uint64_t);
  friend Element finite_element(const MonoidHandle&, uint32_t);
};

// Canonical form of the product of the given generators, multiplied in
// handle order (for reversed handles this is the reversed concatenation).
Element normalize(const MonoidHandle& handle, const Word& word);

// Product of two elements of the same handle.
Element multiply(const Element& x, const Element& y);

// Renders the canonical form: "1" for the identity of word-based kinds,
// concatenated generator labels otherwise; decimal for naturals; "e<k>"
// (zero padded) for finite kinds.
std::string to_string(const Element& element);

// Parses an element string as a word in the underlying element set (the
// inverse of to_string on canonical strings; non-canonical words are
// normalized).
Element parse_element(const MonoidHandle& handle, const std::string& text);

inline constexpr std::size_t kDefaultBallBudget = 100'000;

// All elements reachable from the identity by right multiplication with at
// most r generators, sorted shortlex.
std::vector<Element> elements_ball(const MonoidHandle& handle, unsigned radius,
                                   std::size_t budget = kDefaultBallBudget);

// The opposite monoid: same elements, reversed multiplication. Finite
// tables are transposed, commutative kinds are returned unchanged,
// rewriting presentations get letter-wise reversed rules, and free /
// bicyclic handles reverse their multiplication in place.
MonoidHandle opposite(const MonoidHandle& handle);

// {s : s k is in omega for every k in K}, the K-interior of omega.
// Candidates are drawn from the ball whose radius bounds every possible
// solution for the built-in kinds; K must be non-empty.
std::vector<Element> folner_interior(const MonoidHandle& handle,
                                     const std::vector<Element>& omega,
                                     const std::vector<Element>& k,
                                     std::size_t budget = kDefaultBallBudget);

// The (a, b) of a bicyclic canonical form q^a p^b.
std::pair<uint64_t, uint64_t> bicyclic_pair(const Element& element);
// The element q^a p^b of a bicyclic handle.
Element bicyclic_element(const MonoidHandle& handle, uint64_t a, uint64_t b);
// The element with the given table index of a finite handle.
Element finite_element(const MonoidHandle& handle, uint32_t index);

}  // namespace sofic

#endif  // SOFIC_MONOID_HPP_
