#ifndef SOFIC_TRANSFORMATION_HPP_
#define SOFIC_TRANSFORMATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sofic/errors.hpp"
#include "sofic/fraction.hpp"

namespace sofic {

// Which factor of a product acts first. "standard" is ordinary function
// composition, (f*g)(x) = f(g(x)); "diagrammatic" applies the left factor
// first, (f*g)(x) = g(f(x)). Both stay available everywhere because Cayley
// embeddings want one and edge-following in labeled graphs wants the other.
enum class Convention { standard, diagrammatic };

inline const char* to_string(Convention c) {
  return c == Convention::standard ? "standard" : "diagrammatic";
}

// Default cap on the number of points a constructed transformation may act
// on (amplification and products grow domains multiplicatively).
inline constexpr std::size_t kDefaultPointBudget = 1u << 22;

// A total self-map of the finite set {0, ..., n-1}.
class Transformation {
 public:
  explicit Transformation(std::vector<uint32_t> images);

  // The identity map on n points.
  static Transformation identity(std::size_t n);
  // The constant map x |-> value on n points.
  static Transformation constant(std::size_t n, uint32_t value);

  std::size_t domain_size() const { return images_.size(); }
  uint32_t operator()(uint32_t x) const { return images_[x]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Transformation& a, const Transformation& b) {
    return !(a == b);
  }
  // Lexicographic order on image sequences (shorter domains first).
  friend bool operator<(const Transformation& a, const Transformation& b) {
    if (a.domain_size() != b.domain_size())
      return a.domain_size() < b.domain_size();
    return a.images_ < b.images_;
  }

 private:
  std::vector<uint32_t> images_;
};

// Product of two self-maps of the same set under the given convention.
Transformation compose(const Transformation& f, const Transformation& g,
                       Convention convention);

// Normalized Hamming distance |{x : f(x) != g(x)}| / n, as an exact
// fraction in [0, 1].
Fraction hamming(const Transformation& f, const Transformation& g);

// |{x : f(x) = x}|. Satisfies hamming(f, Id) = 1 - count/n.
std::size_t fixed_point_count(const Transformation& f);

// Diagonal action on n^power tuples: (x_1,...,x_p) |-> (f(x_1),...,f(x_p)).
// Tuples are indexed lexicographically, first coordinate most significant.
Transformation diagonal_amplify(const Transformation& f, unsigned power,
                                std::size_t point_budget = kDefaultPointBudget);

// Coordinate-wise action of fs[0] x ... x fs[k-1] on the Cartesian product
// of their domains, with mixed-radix lexicographic indexing (first
// coordinate most significant).
Transformation product_combine(const std::vector<Transformation>& fs,
                               std::size_t point_budget = kDefaultPointBudget);

}  // namespace sofic

#endif  // SOFIC_TRANSFORMATION_HPP_
