#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exh/kernels.hpp"

namespace exh {

/// Dense k x p real matrix, row-major.
class PayoffMatrix {
 public:
  /// Throws InvalidInput for an empty shape, a wrong entry count, or
  /// non-finite entries.
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  PayoffMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  const std::vector<double>& entries() const noexcept { return entries_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

/// Smallest column index j such that for every row i, d(i, j) is that row's
/// maximum (Extreme::Max) or minimum (Extreme::Min); nullopt if none exists.
/// Indices are zero-based.
std::optional<std::size_t> saddle_column(const PayoffMatrix& d, Extreme which);

/// min over rows of the row maximum.
double minmax(const PayoffMatrix& d);
/// max over columns of the column minimum.
double maxmin(const PayoffMatrix& d);
/// max over rows of the row minimum (left side of the min-column identity).
double max_row_min(const PayoffMatrix& d);
/// min over columns of the column maximum.
double min_col_max(const PayoffMatrix& d);

}  // namespace exh
