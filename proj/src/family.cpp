#include "exh/family.hpp"

#include <string>

#include "exh/error.hpp"

namespace exh {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::UpperExhauster: return "upper_exhauster";
    case Kind::LowerExhauster: return "lower_exhauster";
    case Kind::UpperCoexhauster: return "upper_coexhauster";
    case Kind::LowerCoexhauster: return "lower_coexhauster";
  }
  return "unknown";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : {Kind::UpperExhauster, Kind::LowerExhauster, Kind::UpperCoexhauster,
                 Kind::LowerCoexhauster})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

Family::Family(Kind kind, std::size_t space_dim, std::vector<Polytope> sets)
    : kind_(kind), space_dim_(space_dim), sets_(std::move(sets)) {
  if (space_dim_ == 0) throw InvalidInput("family space dimension must be positive");
  if (sets_.empty()) throw InvalidInput("family must contain at least one set");
  const std::size_t want = set_dim(kind_, space_dim_);
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (sets_[i].dim() != want)
      throw DimensionMismatch("set " + std::to_string(i) + " has dimension " +
                              std::to_string(sets_[i].dim()) + ", " +
                              std::string(kind_name(kind_)) + " over R^" +
                              std::to_string(space_dim_) + " needs " + std::to_string(want));
}

}  // namespace exh
