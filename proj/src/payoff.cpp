#include "exh/payoff.hpp"

#include <algorithm>
#include <cmath>

#include "exh/error.hpp"

namespace exh {

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidInput("payoff matrix needs k >= 1 and p >= 1");
  if (entries_.size() != rows_ * cols_)
    throw InvalidInput("payoff matrix entry count does not match its shape");
  for (double x : entries_)
    if (!std::isfinite(x)) throw InvalidInput("non-finite payoff entry");
}

PayoffMatrix::PayoffMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : PayoffMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0, [&] {
        std::vector<double> e;
        const std::size_t width = rows.size() ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
          if (r.size() != width) throw InvalidInput("ragged payoff matrix");
          e.insert(e.end(), r.begin(), r.end());
        }
        return e;
      }()) {}

namespace {

double row_extreme(const PayoffMatrix& d, std::size_t i, Extreme which) {
  double best = d(i, 0);
  for (std::size_t j = 1; j < d.cols(); ++j)
    best = which == Extreme::Max ? std::max(best, d(i, j)) : std::min(best, d(i, j));
  return best;
}

double col_extreme(const PayoffMatrix& d, std::size_t j, Extreme which) {
  double best = d(0, j);
  for (std::size_t i = 1; i < d.rows(); ++i)
    best = which == Extreme::Max ? std::max(best, d(i, j)) : std::min(best, d(i, j));
  return best;
}

}  // namespace

std::optional<std::size_t> saddle_column(const PayoffMatrix& d, Extreme which) {
  std::vector<double> target(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i) target[i] = row_extreme(d, i, which);
  for (std::size_t j = 0; j < d.cols(); ++j) {
    bool all = true;
    for (std::size_t i = 0; i < d.rows() && all; ++i) all = d(i, j) == target[i];
    if (all) return j;
  }
  return std::nullopt;
}

double minmax(const PayoffMatrix& d) {
  double best = row_extreme(d, 0, Extreme::Max);
  for (std::size_t i = 1; i < d.rows(); ++i) best = std::min(best, row_extreme(d, i, Extreme::Max));
  return best;
}

double maxmin(const PayoffMatrix& d) {
  double best = col_extreme(d, 0, Extreme::Min);
  for (std::size_t j = 1; j < d.cols(); ++j) best = std::max(best, col_extreme(d, j, Extreme::Min));
  return best;
}

double max_row_min(const PayoffMatrix& d) {
  double best = row_extreme(d, 0, Extreme::Min);
  for (std::size_t i = 1; i < d.rows(); ++i) best = std::max(best, row_extreme(d, i, Extreme::Min));
  return best;
}

double min_col_max(const PayoffMatrix& d) {
  double best = col_extreme(d, 0, Extreme::Max);
  for (std::size_t j = 1; j < d.cols(); ++j) best = std::min(best, col_extreme(d, j, Extreme::Max));
  return best;
}

}  // namespace exh
