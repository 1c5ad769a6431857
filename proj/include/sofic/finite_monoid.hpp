#ifndef SOFIC_FINITE_MONOID_HPP_
#define SOFIC_FINITE_MONOID_HPP_

#include <cstddef>
#include <vector>

#include "sofic/transformation.hpp"

namespace sofic {

// A finite semigroup given by its multiplication table. Associativity is
// checked exhaustively on construction; a failing triple is reported in the
// error message.
class FiniteSemigroup {
 public:
  explicit FiniteSemigroup(std::vector<std::vector<uint32_t>> table);

  std::size_t size() const { return table_.size(); }
  uint32_t product(uint32_t x, uint32_t y) const { return table_[x][y]; }
  const std::vector<std::vector<uint32_t>>& table() const { return table_; }

 private:
  std::vector<std::vector<uint32_t>> table_;
};

// A finite monoid: a validated table plus the index of the identity.
class FiniteMonoid {
 public:
  FiniteMonoid(std::vector<std::vector<uint32_t>> table, uint32_t identity);

  std::size_t size() const { return semigroup_.size(); }
  uint32_t identity() const { return identity_; }
  uint32_t product(uint32_t x, uint32_t y) const {
    return semigroup_.product(x, y);
  }
  const std::vector<std::vector<uint32_t>>& table() const {
    return semigroup_.table();
  }

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.identity_ == b.identity_ && a.table() == b.table();
  }

 private:
  FiniteSemigroup semigroup_;
  uint32_t identity_;
};

// Validates and wraps a table; throws ValidationError with a witness triple
// if the table is not associative or the identity index is not neutral.
FiniteMonoid finite_from_table(std::vector<std::vector<uint32_t>> table,
                               uint32_t identity_index);

// The monoid of all self-maps of {0,...,n-1} under the given composition
// convention. Elements are indexed by the lexicographic rank of their image
// sequence. Only n <= 4 is allowed (the table has n^n rows).
FiniteMonoid full_map_monoid(std::size_t n,
                             Convention convention = Convention::standard);

// Rank of a transformation in the element order used by full_map_monoid.
uint32_t map_monoid_index(const Transformation& t);
// Inverse of map_monoid_index.
Transformation map_monoid_element(std::size_t n, uint32_t index);

// True iff every left multiplication x |-> s*x is injective.
bool is_left_cancellative(const FiniteMonoid& m);

// The Cayley embedding m |-> L_m into the self-maps of the element set.
// Under the standard convention this is an injective monoid morphism:
// image of a product is the composition of the images, identity maps to Id.
std::vector<Transformation> left_regular_embedding(const FiniteMonoid& m);

// The companion embedding m |-> R_m, a morphism under the diagrammatic
// convention.
std::vector<Transformation> right_regular_embedding(const FiniteMonoid& m);

// Adds a fresh identity element to a semigroup. The new element gets the
// largest index, so S keeps its indices as a subsemigroup.
FiniteMonoid adjoin_identity(const FiniteSemigroup& s);

}  // namespace sofic

#endif  // SOFIC_FINITE_MONOID_HPP_
