#pragma once

// Sparse integer matrices and the two rank computations used for cochain
// complexes: elimination modulo a prime, and unit-pivot elimination over Z
// followed by a dense Smith form of whatever is left.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "semimon/exactlin.hpp"

namespace semimon {

struct SparseMatrix {
  using Entry = std::pair<std::size_t, std::int64_t>;  // (column, value)

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> row_entries;  // sorted by column, no zeros

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row_entries(r) {}

  std::size_t nonzeros() const;
  IntMatrix to_dense() const;
  static SparseMatrix from_dense(const IntMatrix& m);
};

/// Product a * b, for checking that consecutive differentials compose to zero.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

struct IntegerElimination {
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;  ///< nonunit Smith invariants, ascending
};

IntegerElimination eliminate_over_integers(const SparseMatrix& m);

}  // namespace semimon
