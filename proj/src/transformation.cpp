#include "sofic/transformation.hpp"

#include <numeric>

namespace sofic {

Transformation::Transformation(std::vector<uint32_t> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw ValidationError("Transformation: domain must be non-empty");
  }
  for (uint32_t y : images_) {
    if (y >= images_.size()) {
      throw ValidationError("Transformation: image " + std::to_string(y) +
                            " out of range for domain size " +
                            std::to_string(images_.size()));
    }
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return Transformation(std::move(images));
}

Transformation Transformation::constant(std::size_t n, uint32_t value) {
  return Transformation(std::vector<uint32_t>(n, value));
}

bool Transformation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Transformation compose(const Transformation& f, const Transformation& g,
                       Convention convention) {
  if (f.domain_size() != g.domain_size()) {
    throw DomainError("compose: domain sizes differ (" +
                      std::to_string(f.domain_size()) + " vs " +
                      std::to_string(g.domain_size()) + ")");
  }
  const Transformation& outer = convention == Convention::standard ? f : g;
  const Transformation& inner = convention == Convention::standard ? g : f;
  std::vector<uint32_t> images(f.domain_size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = outer(inner(static_cast<uint32_t>(x)));
  }
  return Transformation(std::move(images));
}

Fraction hamming(const Transformation& f, const Transformation& g) {
  if (f.domain_size() != g.domain_size()) {
    throw DomainError("hamming: domain sizes differ (" +
                      std::to_string(f.domain_size()) + " vs " +
                      std::to_string(g.domain_size()) + ")");
  }
  long long disagreements = 0;
  for (std::size_t x = 0; x < f.domain_size(); ++x) {
    if (f(static_cast<uint32_t>(x)) != g(static_cast<uint32_t>(x))) {
      ++disagreements;
    }
  }
  return Fraction(disagreements, static_cast<long long>(f.domain_size()));
}

std::size_t fixed_point_count(const Transformation& f) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < f.domain_size(); ++x) {
    if (f(static_cast<uint32_t>(x)) == x) ++count;
  }
  return count;
}

namespace {

std::size_t checked_power(std::size_t base, unsigned exponent,
                          std::size_t budget) {
  std::size_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > budget / base) {
      throw BudgetError("domain size " + std::to_string(base) + "^" +
                        std::to_string(exponent) + " exceeds budget " +
                        std::to_string(budget));
    }
    result *= base;
  }
  return result;
}

}  // namespace

Transformation diagonal_amplify(const Transformation& f, unsigned power,
                                std::size_t point_budget) {
  if (power == 0) {
    throw DomainError("diagonal_amplify: power must be positive");
  }
  const std::size_t n = f.domain_size();
  const std::size_t size = checked_power(n, power, point_budget);
  std::vector<uint32_t> images(size);
  std::vector<uint32_t> tuple(power, 0);
  for (std::size_t index = 0; index < size; ++index) {
    std::size_t out = 0;
    for (unsigned i = 0; i < power; ++i) {
      out = out * n + f(tuple[i]);
    }
    images[index] = static_cast<uint32_t>(out);
    // next tuple in lexicographic order
    for (unsigned i = power; i-- > 0;) {
      if (++tuple[i] < n) break;
      tuple[i] = 0;
    }
  }
  return Transformation(std::move(images));
}

Transformation product_combine(const std::vector<Transformation>& fs,
                               std::size_t point_budget) {
  if (fs.empty()) {
    throw DomainError("product_combine: empty sequence");
  }
  std::size_t size = 1;
  for (const Transformation& f : fs) {
    if (f.domain_size() != 0 && size > point_budget / f.domain_size()) {
      throw BudgetError("product of domain sizes exceeds budget " +
                        std::to_string(point_budget));
    }
    size *= f.domain_size();
  }
  const std::size_t k = fs.size();
  std::vector<uint32_t> tuple(k, 0);
  std::vector<uint32_t> images(size);
  for (std::size_t index = 0; index < size; ++index) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < k; ++i) {
      out = out * fs[i].domain_size() + fs[i](tuple[i]);
    }
    images[index] = static_cast<uint32_t>(out);
    for (std::size_t i = k; i-- > 0;) {
      if (++tuple[i] < fs[i].domain_size()) break;
      tuple[i] = 0;
    }
  }
  return Transformation(std::move(images));
}

}  // namespace sofic
