#ifndef NILP2_TESTS_HELPERS_HPP
#define NILP2_TESTS_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "nilp2/fp_linalg.hpp"
#include "nilp2/group.hpp"

namespace nilp2::test {

inline Vector vec(std::initializer_list<Residue> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index k = 0;
  for (Residue x : xs) v(k++) = x;
  return v;
}

inline FpMatrix mat(Residue p, std::initializer_list<std::initializer_list<Residue>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (Residue x : row) m(i, j++) = x;
    ++i;
  }
  return {p, m};
}

inline FpMatrix random_matrix(std::mt19937_64& rng, Residue p, Index rows, Index cols) {
  std::uniform_int_distribution<Residue> d(0, p - 1);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
  return {p, m};
}

inline Vector random_vector(std::mt19937_64& rng, Residue p, Index dim) {
  return random_matrix(rng, p, 1, dim).row(0);
}

// Rank-deficient matrices show up far more often this way.
inline FpMatrix random_low_rank(std::mt19937_64& rng, Residue p, Index rows, Index cols, Index r) {
  return random_matrix(rng, p, rows, r) * random_matrix(rng, p, r, cols);
}

}  // namespace nilp2::test

#endif  // NILP2_TESTS_HELPERS_HPP
