#include "exh/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exh/error.hpp"

namespace exh {

namespace {

bool near(std::span<const double> a, std::span<const double> b, double tol) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (std::abs(a[c] - b[c]) > tol) return false;
  return true;
}

}  // namespace

int compare_lex(std::span<const double> a, std::span<const double> b) {
  for (std::size_t c = 0; c < a.size() && c < b.size(); ++c) {
    if (a[c] < b[c]) return -1;
    if (a[c] > b[c]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Polytope::Polytope(const std::vector<Vector>& vertices, double vertex_tol) {
  if (vertices.empty()) throw InvalidInput("polytope needs at least one vertex");
  dim_ = vertices.front().size();
  if (dim_ == 0) throw DimensionMismatch("polytope vertices must have positive length");

  std::vector<const Vector*> kept;
  kept.reserve(vertices.size());
  for (const Vector& v : vertices) {
    if (v.size() != dim_)
      throw DimensionMismatch("vertex of length " + std::to_string(v.size()) +
                              " in a polytope of dimension " + std::to_string(dim_));
    for (double x : v)
      if (!std::isfinite(x)) throw InvalidInput("non-finite vertex coordinate");
    const bool dup = std::any_of(kept.begin(), kept.end(),
                                 [&](const Vector* k) { return near(*k, v, vertex_tol); });
    if (!dup) kept.push_back(&v);
  }

  count_ = kept.size();
  soa_.resize(dim_ * count_);
  for (std::size_t j = 0; j < count_; ++j)
    for (std::size_t c = 0; c < dim_; ++c) soa_[c * count_ + j] = (*kept[j])[c];
}

Vector Polytope::vertex(std::size_t j) const {
  Vector v(dim_);
  for (std::size_t c = 0; c < dim_; ++c) v[c] = coord(j, c);
  return v;
}

std::vector<Vector> Polytope::vertices() const {
  std::vector<Vector> out;
  out.reserve(count_);
  for (std::size_t j = 0; j < count_; ++j) out.push_back(vertex(j));
  return out;
}

std::vector<Vector> Polytope::canonical_vertices() const {
  std::vector<Vector> out = vertices();
  std::sort(out.begin(), out.end(),
            [](const Vector& a, const Vector& b) { return compare_lex(a, b) < 0; });
  return out;
}

bool Polytope::contains_vertex(std::span<const double> point, double tol) const {
  if (point.size() != dim_) return false;
  for (std::size_t j = 0; j < count_; ++j) {
    bool match = true;
    for (std::size_t c = 0; c < dim_ && match; ++c)
      match = std::abs(coord(j, c) - point[c]) <= tol;
    if (match) return true;
  }
  return false;
}

bool same_set(const Polytope& a, const Polytope& b, double tol) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  const auto ca = a.canonical_vertices();
  const auto cb = b.canonical_vertices();
  for (std::size_t j = 0; j < ca.size(); ++j)
    if (!near(ca[j], cb[j], tol)) return false;
  return true;
}

}  // namespace exh
