#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dfilab/field.hpp"

namespace dfilab {

/// Row-oriented sparse integer matrix. Integer entries are interpreted in
/// the target field at rank time (reduced mod p, or exactly over Q).
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::int64_t>;  // (column, value)

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  /// Accumulates into (row, col); duplicates are summed at rank time.
  void add(std::size_t row, std::size_t col, std::int64_t value);
  void append_row(std::vector<Entry> entries);
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

/// Exact rank over the field. Over Q this is fraction-free elimination in
/// 64-bit integers with a transparent fallback to GMP on overflow; over GF(p)
/// plain modular elimination. Columns are pivoted sparsest-first.
std::size_t rank(const SparseMatrix& matrix, const Field& field);

/// True iff `vector` lies in the row space of `matrix` over the field.
bool in_row_space(const SparseMatrix& matrix, const std::vector<SparseMatrix::Entry>& vector,
                  const Field& field);

}  // namespace dfilab
