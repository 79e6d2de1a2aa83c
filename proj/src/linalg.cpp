#include "dfilab/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dfilab/error.hpp"

namespace dfilab {

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows_.size() || col >= cols_)
    throw Error(ErrorCode::InvalidInput, "sparse matrix index out of range");
  if (value != 0) rows_[row].emplace_back(static_cast<std::uint32_t>(col), value);
}

void SparseMatrix::append_row(std::vector<Entry> entries) {
  for (const auto& [c, v] : entries)
    if (c >= cols_) throw Error(ErrorCode::InvalidInput, "sparse matrix column out of range");
  rows_.push_back(std::move(entries));
}

namespace {

struct Overflow {};

template <class Scalar>
using Row = std::vector<std::pair<std::uint32_t, Scalar>>;

// Modular arithmetic: pivot rows are normalized to leading coefficient 1.
struct ModOps {
  std::uint32_t p;

  using Scalar = std::uint32_t;
  Scalar convert(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<Scalar>(r);
  }
  bool is_zero(Scalar v) const { return v == 0; }
  Scalar inv(Scalar a) const {
    std::uint64_t result = 1, base = a, exp = p - 2;
    while (exp) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return static_cast<Scalar>(result);
  }
  void normalize_pivot(Row<Scalar>& row) const {
    const Scalar f = inv(row.front().second);
    for (auto& e : row) e.second = static_cast<Scalar>(std::uint64_t{e.second} * f % p);
  }
  // row <- row - row.lead * pivot   (pivot lead is 1)
  Row<Scalar> reduce(const Row<Scalar>& row, const Row<Scalar>& pivot) const {
    const std::uint64_t f = row.front().second;
    Row<Scalar> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        Scalar v = static_cast<Scalar>((p - f * pivot[j].second % p) % p);
        if (v) out.emplace_back(pivot[j].first, v);
        ++j;
      } else {
        Scalar v = static_cast<Scalar>((row[i].second + p - f * pivot[j].second % p) % p);
        if (v) out.emplace_back(row[i].first, v);
        ++i, ++j;
      }
    }
    return out;
  }
};

// Fraction-free integer elimination: row <- (a/g) row - (b/g) pivot, then
// divide out the content. Exact rank over Q.
struct Int64Ops {
  using Scalar = std::int64_t;
  Scalar convert(std::int64_t v) const { return v; }
  bool is_zero(Scalar v) const { return v == 0; }
  void normalize_pivot(Row<Scalar>& row) const { divide_content(row); }

  static Scalar mul(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Scalar sub(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static void divide_content(Row<Scalar>& row) {
    Scalar g = 0;
    for (const auto& e : row) g = std::gcd(g, e.second);
    if (g > 1)
      for (auto& e : row) e.second /= g;
  }
  Row<Scalar> reduce(const Row<Scalar>& row, const Row<Scalar>& pivot) const {
    Scalar a = pivot.front().second, b = row.front().second;
    if (a == std::numeric_limits<Scalar>::min() || b == std::numeric_limits<Scalar>::min())
      throw Overflow{};
    const Scalar g = std::gcd(a, b);
    a /= g;
    b /= g;
    Row<Scalar> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.emplace_back(row[i].first, mul(a, row[i].second));
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, sub(0, mul(b, pivot[j].second)));
        ++j;
      } else {
        Scalar v = sub(mul(a, row[i].second), mul(b, pivot[j].second));
        if (v) out.emplace_back(row[i].first, v);
        ++i, ++j;
      }
    }
    divide_content(out);
    return out;
  }
};

struct MpzOps {
  using Scalar = mpz_class;
  Scalar convert(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }
  bool is_zero(const Scalar& v) const { return sgn(v) == 0; }
  void normalize_pivot(Row<Scalar>& row) const { divide_content(row); }
  static void divide_content(Row<Scalar>& row) {
    mpz_class g = 0;
    for (const auto& e : row) {
      g = gcd(g, e.second);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& e : row) e.second /= g;
  }
  Row<Scalar> reduce(const Row<Scalar>& row, const Row<Scalar>& pivot) const {
    mpz_class a = pivot.front().second, b = row.front().second;
    const mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    Row<Scalar> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.emplace_back(row[i].first, a * row[i].second);
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, -b * pivot[j].second);
        ++j;
      } else {
        mpz_class v = a * row[i].second - b * pivot[j].second;
        if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
        ++i, ++j;
      }
    }
    divide_content(out);
    return out;
  }
};

// Sorts each row by permuted column, merges duplicates, drops zeros.
template <class Ops>
std::vector<Row<typename Ops::Scalar>> prepare(const std::vector<const std::vector<SparseMatrix::Entry>*>& rows,
                                               const std::vector<std::uint32_t>& column_rank, const Ops& ops) {
  std::vector<Row<typename Ops::Scalar>> out;
  out.reserve(rows.size());
  std::vector<SparseMatrix::Entry> tmp;
  for (const auto* src : rows) {
    tmp.assign(src->begin(), src->end());
    for (auto& e : tmp) e.first = column_rank[e.first];
    std::sort(tmp.begin(), tmp.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Row<typename Ops::Scalar> row;
    for (std::size_t i = 0; i < tmp.size();) {
      std::int64_t sum = 0;
      std::size_t j = i;
      for (; j < tmp.size() && tmp[j].first == tmp[i].first; ++j) {
        if (__builtin_add_overflow(sum, tmp[j].second, &sum))
          throw Error(ErrorCode::InvalidInput, "matrix entry overflow");
      }
      auto v = ops.convert(sum);
      if (!ops.is_zero(v)) row.emplace_back(tmp[i].first, std::move(v));
      i = j;
    }
    if (!row.empty()) out.push_back(std::move(row));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

template <class Ops>
std::size_t eliminate(std::vector<Row<typename Ops::Scalar>> rows, std::size_t cols, const Ops& ops) {
  std::vector<std::int64_t> pivot_of(cols, -1);
  std::vector<Row<typename Ops::Scalar>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      const auto lead = row.front().first;
      if (pivot_of[lead] < 0) {
        ops.normalize_pivot(row);
        pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      row = ops.reduce(row, pivots[pivot_of[lead]]);
    }
  }
  return pivots.size();
}

std::size_t rank_of_rows(const std::vector<const std::vector<SparseMatrix::Entry>*>& rows, std::size_t cols,
                         const Field& field) {
  // Sparsest columns first so leading entries tend to stay sparse.
  std::vector<std::uint32_t> count(cols, 0);
  for (const auto* r : rows)
    for (const auto& e : *r) ++count[e.first];
  std::vector<std::uint32_t> order(cols);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return count[a] < count[b]; });
  std::vector<std::uint32_t> column_rank(cols);
  for (std::uint32_t k = 0; k < cols; ++k) column_rank[order[k]] = k;

  if (!field.is_rational()) {
    ModOps ops{field.characteristic()};
    return eliminate(prepare(rows, column_rank, ops), cols, ops);
  }
  try {
    Int64Ops ops;
    return eliminate(prepare(rows, column_rank, ops), cols, ops);
  } catch (const Overflow&) {
    MpzOps ops;
    return eliminate(prepare(rows, column_rank, ops), cols, ops);
  }
}

}  // namespace

std::size_t rank(const SparseMatrix& matrix, const Field& field) {
  std::vector<const std::vector<SparseMatrix::Entry>*> rows;
  rows.reserve(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i) rows.push_back(&matrix.row(i));
  return rank_of_rows(rows, matrix.cols(), field);
}

bool in_row_space(const SparseMatrix& matrix, const std::vector<SparseMatrix::Entry>& vector,
                  const Field& field) {
  std::vector<const std::vector<SparseMatrix::Entry>*> rows;
  for (std::size_t i = 0; i < matrix.rows(); ++i) rows.push_back(&matrix.row(i));
  const auto base = rank_of_rows(rows, matrix.cols(), field);
  rows.push_back(&vector);
  return rank_of_rows(rows, matrix.cols(), field) == base;
}

}  // namespace dfilab
