#include "sofic/finite_monoid.hpp"

#include <string>

namespace sofic {

namespace {

void validate_table(const std::vector<std::vector<uint32_t>>& table) {
  const std::size_t m = table.size();
  if (m == 0) throw ValidationError("table: must have at least one element");
  for (const auto& row : table) {
    if (row.size() != m) {
      throw ValidationError("table: not square");
    }
    for (uint32_t v : row) {
      if (v >= m) {
        throw ValidationError("table: entry " + std::to_string(v) +
                              " out of range");
      }
    }
  }
  for (uint32_t x = 0; x < m; ++x) {
    for (uint32_t y = 0; y < m; ++y) {
      const uint32_t xy = table[x][y];
      for (uint32_t z = 0; z < m; ++z) {
        if (table[xy][z] != table[x][table[y][z]]) {
          throw ValidationError(
              "table: not associative, witness (x,y,z)=(" +
              std::to_string(x) + "," + std::to_string(y) + "," +
              std::to_string(z) + "): (xy)z=" + std::to_string(table[xy][z]) +
              " but x(yz)=" + std::to_string(table[x][table[y][z]]));
        }
      }
    }
  }
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<uint32_t>> table)
    : table_(std::move(table)) {
  validate_table(table_);
}

FiniteMonoid::FiniteMonoid(std::vector<std::vector<uint32_t>> table,
                           uint32_t identity)
    : semigroup_(std::move(table)), identity_(identity) {
  const std::size_t m = semigroup_.size();
  if (identity_ >= m) {
    throw ValidationError("monoid: identity index out of range");
  }
  for (uint32_t x = 0; x < m; ++x) {
    if (semigroup_.product(identity_, x) != x ||
        semigroup_.product(x, identity_) != x) {
      throw ValidationError("monoid: index " + std::to_string(identity_) +
                            " is not neutral at element " + std::to_string(x));
    }
  }
}

FiniteMonoid finite_from_table(std::vector<std::vector<uint32_t>> table,
                               uint32_t identity_index) {
  return FiniteMonoid(std::move(table), identity_index);
}

uint32_t map_monoid_index(const Transformation& t) {
  const std::size_t n = t.domain_size();
  std::size_t rank = 0;
  for (std::size_t x = 0; x < n; ++x) {
    rank = rank * n + t(static_cast<uint32_t>(x));
  }
  return static_cast<uint32_t>(rank);
}

Transformation map_monoid_element(std::size_t n, uint32_t index) {
  std::vector<uint32_t> images(n);
  std::size_t rest = index;
  for (std::size_t x = n; x-- > 0;) {
    images[x] = static_cast<uint32_t>(rest % n);
    rest /= n;
  }
  return Transformation(std::move(images));
}

FiniteMonoid full_map_monoid(std::size_t n, Convention convention) {
  if (n == 0) throw DomainError("full_map_monoid: n must be positive");
  if (n > 4) {
    throw BudgetError("full_map_monoid: n=" + std::to_string(n) +
                      " exceeds the n<=4 limit (table would have n^n rows)");
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= n;
  std::vector<Transformation> elements;
  elements.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    elements.push_back(map_monoid_element(n, i));
  }
  std::vector<std::vector<uint32_t>> table(count,
                                           std::vector<uint32_t>(count));
  for (uint32_t i = 0; i < count; ++i) {
    for (uint32_t j = 0; j < count; ++j) {
      table[i][j] = map_monoid_index(compose(elements[i], elements[j],
                                             convention));
    }
  }
  return FiniteMonoid(std::move(table),
                      map_monoid_index(Transformation::identity(n)));
}

bool is_left_cancellative(const FiniteMonoid& m) {
  const std::size_t size = m.size();
  std::vector<bool> seen(size);
  for (uint32_t s = 0; s < size; ++s) {
    seen.assign(size, false);
    for (uint32_t t = 0; t < size; ++t) {
      const uint32_t st = m.product(s, t);
      if (seen[st]) return false;
      seen[st] = true;
    }
  }
  return true;
}

std::vector<Transformation> left_regular_embedding(const FiniteMonoid& m) {
  std::vector<Transformation> images;
  images.reserve(m.size());
  for (uint32_t s = 0; s < m.size(); ++s) {
    images.push_back(Transformation(m.table()[s]));
  }
  return images;
}

std::vector<Transformation> right_regular_embedding(const FiniteMonoid& m) {
  std::vector<Transformation> images;
  images.reserve(m.size());
  for (uint32_t s = 0; s < m.size(); ++s) {
    std::vector<uint32_t> row(m.size());
    for (uint32_t t = 0; t < m.size(); ++t) row[t] = m.product(t, s);
    images.push_back(Transformation(std::move(row)));
  }
  return images;
}

FiniteMonoid adjoin_identity(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  const uint32_t one = static_cast<uint32_t>(n);
  std::vector<std::vector<uint32_t>> table(n + 1,
                                           std::vector<uint32_t>(n + 1));
  for (uint32_t x = 0; x < n; ++x) {
    for (uint32_t y = 0; y < n; ++y) table[x][y] = s.product(x, y);
    table[x][one] = x;
    table[one][x] = x;
  }
  table[one][one] = one;
  return FiniteMonoid(std::move(table), one);
}

}  // namespace sofic
