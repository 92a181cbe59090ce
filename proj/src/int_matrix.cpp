#include "layered/int_matrix.hpp"

#include <algorithm>
#include <cassert>

#include "layered/error.hpp"

namespace layered {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void IntMatrix::append_row(std::span<const Integer> row) {
  if (row.size() != cols_)
    throw Error(Errc::DimensionMismatch, "row of length " + std::to_string(row.size()) + " appended to matrix with " +
                                             std::to_string(cols_) + " columns");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntVector row_times(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::DimensionMismatch, "vector-matrix product shape mismatch");
  IntVector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

HermiteForm hermite_normal_form(const IntMatrix& a, std::optional<std::size_t> pivot_cols) {
  IntMatrix h = a;
  IntMatrix t = IntMatrix::identity(a.rows());
  const std::size_t limit = std::min(pivot_cols.value_or(a.cols()), a.cols());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < limit && r < h.rows(); ++col) {
    // Euclid down the column until a single non-zero entry remains at row r.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (!best || abs(h(i, col)) < abs(h(*best, col))) best = i;
      }
      if (!best) break;
      h.swap_rows(r, *best);
      t.swap_rows(r, *best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(r, col);
        h.add_row_multiple(i, r, -q);
        t.add_row_multiple(i, r, -q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, col), h(r, col));
      h.add_row_multiple(i, r, -q);
      t.add_row_multiple(i, r, -q);
    }
    pivots.push_back(col);
    ++r;
  }
  HermiteForm out{IntMatrix(0, a.cols()), IntMatrix(0, a.rows()), pivots};
  for (std::size_t i = 0; i < r; ++i) {
    out.basis.append_row(h.row(i));
    out.transform.append_row(t.row(i));
  }
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& r) {
  const std::size_t m = r.rows();
  const std::size_t n = r.cols();
  IntMatrix a = r;
  SmithDecomposition out;
  out.u = IntMatrix::identity(m);
  out.v = IntMatrix::identity(n);
  out.v_inv = IntMatrix::identity(n);

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    out.v.swap_cols(x, y);
    out.v_inv.swap_rows(x, y);
  };
  // col[dst] += f * col[src]; the inverse update is row[src] -= f * row[dst].
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    out.v.add_col_multiple(dst, src, f);
    out.v_inv.add_row_multiple(src, dst, -f);
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    out.u.swap_rows(x, y);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    out.u.add_row_multiple(dst, src, f);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found_any = false;
    while (true) {
      // Least |entry| in the trailing block, scanning columns left to right.
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t j = t; j < n; ++j)
        for (std::size_t i = t; i < m; ++i) {
          if (a(i, j) == 0) continue;
          if (!pivot || abs(a(i, j)) < abs(a(pivot->first, pivot->second))) pivot = {i, j};
        }
      if (!pivot) break;
      found_any = true;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and re-pivot.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      add_row(t, *offending, Integer(1));
    }
    if (!found_any) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      out.u.negate_row(t);
    }
    out.invariant_factors.push_back(a(t, t));
  }
  out.rank = out.invariant_factors.size();
  out.free_rank = n - out.rank;
  for (const auto& d : out.invariant_factors)
    if (d > 1) out.torsion_invariants.push_back(d);
  return out;
}

IntMatrix left_kernel(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  IntMatrix k(0, a.rows());
  for (std::size_t i = snf.rank; i < a.rows(); ++i) k.append_row(snf.u.row(i));
  return hermite_normal_form(k).basis;
}

IntMatrix saturation(const IntMatrix& a) {
  // A = U^-1 D V^-1, so rowspan(A) = span{d_i w_i} with w_i the rows of V^-1.
  SmithDecomposition snf = smith_normal_form(a);
  IntMatrix s(0, a.cols());
  for (std::size_t i = 0; i < snf.rank; ++i) s.append_row(snf.v_inv.row(i));
  return hermite_normal_form(s).basis;
}

std::optional<IntVector> solve_left(const IntMatrix& a, std::span<const Integer> target) {
  if (target.size() != a.cols()) throw Error(Errc::DimensionMismatch, "target length does not match columns");
  // x A = b  <=>  (x U^-1) D = b V; y = x U^-1 then x = y U.
  SmithDecomposition snf = smith_normal_form(a);
  IntVector bv = row_times(target, snf.v);
  IntVector y(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j < snf.rank) {
      if (bv[j] % snf.invariant_factors[j] != 0) return std::nullopt;
      y[j] = bv[j] / snf.invariant_factors[j];
    } else if (bv[j] != 0) {
      return std::nullopt;
    }
  }
  return row_times(y, snf.u);
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + to_string(m(r, c));
    s += "]";
  }
  return s + "]";
}

}  // namespace layered
