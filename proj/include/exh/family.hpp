#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "exh/polytope.hpp"

namespace exh {

enum class Kind { UpperExhauster, LowerExhauster, UpperCoexhauster, LowerCoexhauster };

constexpr bool is_coexhauster(Kind k) noexcept {
  return k == Kind::UpperCoexhauster || k == Kind::LowerCoexhauster;
}
constexpr bool is_upper(Kind k) noexcept {
  return k == Kind::UpperExhauster || k == Kind::UpperCoexhauster;
}
/// upper <-> lower within the same class.
constexpr Kind dual(Kind k) noexcept {
  switch (k) {
    case Kind::UpperExhauster: return Kind::LowerExhauster;
    case Kind::LowerExhauster: return Kind::UpperExhauster;
    case Kind::UpperCoexhauster: return Kind::LowerCoexhauster;
    case Kind::LowerCoexhauster: return Kind::UpperCoexhauster;
  }
  return k;
}
/// Length of member vertices for a family over R^space_dim.
constexpr std::size_t set_dim(Kind k, std::size_t space_dim) noexcept {
  return is_coexhauster(k) ? space_dim + 1 : space_dim;
}

/// File-format names: "upper_exhauster", "lower_coexhauster", ...
std::string_view kind_name(Kind k);
std::optional<Kind> parse_kind(std::string_view name);

/// A nonempty finite family of polytopes representing
///   upper exhauster:    h(D) = min_C max_{v in C} <v, D>
///   lower exhauster:    h(D) = max_C min_{w in C} <w, D>
///   upper coexhauster:  h(D) = min_C max_{[a,v] in C} a + <v, D>
///   lower coexhauster:  h(D) = max_C min_{[b,w] in C} b + <w, D>
/// Coexhauster points store the affine constant first.
class Family {
 public:
  /// Throws InvalidInput for space_dim == 0 or no sets, DimensionMismatch
  /// when a set's dimension is not set_dim(kind, space_dim).
  Family(Kind kind, std::size_t space_dim, std::vector<Polytope> sets);

  Kind kind() const noexcept { return kind_; }
  std::size_t space_dim() const noexcept { return space_dim_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<Polytope>& sets() const noexcept { return sets_; }
  const Polytope& operator[](std::size_t i) const { return sets_[i]; }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Kind kind_;
  std::size_t space_dim_;
  std::vector<Polytope> sets_;
};

}  // namespace exh
