#pragma once

#include <cstdint>
#include <span>

#include "exh/family.hpp"
#include "exh/payoff.hpp"

namespace exh {

inline constexpr std::uint64_t kDefaultProductCap = 1'000'000;

struct ConvertOptions {
  /// Merge output sets with equal canonical vertex lists.
  bool dedup = false;
  /// Largest admissible number of selections p = m_1 * ... * m_k.
  std::uint64_t cap = kDefaultProductCap;
};

/// Number of selections p = m_1 * ... * m_k for `f`, saturating at UINT64_MAX.
std::uint64_t selection_count(const Family& f);

/// Converts a family into one of the dual kind representing the same
/// function. Every way of choosing one vertex from each input set yields one
/// output set, the hull of the chosen k vertices. Selections are enumerated
/// lexicographically in (j_1, ..., j_k), j_k varying fastest.
///
/// Throws CombinatorialBlowUp when p exceeds options.cap.
Family convert(const Family& f, const ConvertOptions& options = {});

/// The k x p matrix d(i, s) = <v_{i, j_i(s)}, g> where s runs over the
/// selections in output order and g is the lifted direction for delta. For an
/// upper input it has a saddle column for Extreme::Max and minmax == maxmin ==
/// eval(in, delta); for a lower input it has one for Extreme::Min and
/// max_row_min == min_col_max == eval(in, delta).
///
/// `out` must be convert(in) without dedup; throws DimensionMismatch otherwise.
PayoffMatrix conversion_certificate(const Family& in, const Family& out,
                                    std::span<const double> delta);

}  // namespace exh
