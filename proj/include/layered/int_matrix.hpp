#pragma once

// Dense integer matrices and the two normal forms used by the bipotent
// extension code: row Hermite normal form (canonical lattice bases) and Smith
// normal form (invariant factors of Z^n / rowspan).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "layered/rational.hpp"

namespace layered {

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows must share one length; `cols` fixes the width when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  std::vector<IntVector> row_list() const;
  void append_row(std::span<const Integer> row);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  IntMatrix transpose() const;
  IntMatrix select_cols(std::span<const std::size_t> cols) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// v * M for a row vector v.
IntVector row_times(std::span<const Integer> v, const IntMatrix& m);
bool is_zero(std::span<const Integer> v);

struct HermiteForm {
  IntMatrix basis;      // non-zero rows of H, upper echelon
  IntMatrix transform;  // T with T * A = H (rows of T for the kept rows only)
  std::vector<std::size_t> pivots;
};

/// Row Hermite normal form of A: positive pivots, entries above each pivot
/// reduced into [0, pivot). Pivots are searched only among the first
/// `pivot_cols` columns (all columns by default); trailing columns are carried.
HermiteForm hermite_normal_form(const IntMatrix& a, std::optional<std::size_t> pivot_cols = std::nullopt);

struct SmithDecomposition {
  IntMatrix u;      // unimodular, rows x rows
  IntMatrix v;      // unimodular, cols x cols
  IntMatrix v_inv;  // inverse of v
  std::vector<Integer> invariant_factors;  // d_1 | d_2 | ... , all positive, length = rank
  std::size_t rank = 0;
  std::size_t free_rank = 0;               // cols - rank
  std::vector<Integer> torsion_invariants; // the d_i > 1

  /// U * R * V
  IntMatrix diagonal(const IntMatrix& r) const { return u * r * v; }
};

/// Smith normal form U*R*V = diag(d_1, ..., d_r, 0, ...).
///
/// Deterministic: the pivot at each stage is the entry of least absolute
/// value, ties broken left to right by column and then top to bottom.
SmithDecomposition smith_normal_form(const IntMatrix& r);

/// Basis (as rows) of {x in Z^rows : x * A = 0}.
IntMatrix left_kernel(const IntMatrix& a);

/// Basis of (rowspan_Q(A)) intersect Z^cols, i.e. the saturation of the row lattice.
IntMatrix saturation(const IntMatrix& a);

/// Integer x with x * A = target, if one exists.
std::optional<IntVector> solve_left(const IntMatrix& a, std::span<const Integer> target);

std::size_t rank(const IntMatrix& a);

std::string to_string(const IntMatrix& m);

}  // namespace layered
