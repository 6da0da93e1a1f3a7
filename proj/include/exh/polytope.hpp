#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "exh/tolerances.hpp"

namespace exh {

using Vector = std::vector<double>;

/// Convex hull of a finite point list in R^dim (V-representation).
///
/// Points need not be extreme; interior generators are harmless for support
/// evaluation. Points closer than the vertex tolerance (max-norm) to an
/// earlier point are dropped at construction, keeping first occurrences in
/// order. Coordinates are held coordinate-major for the projection kernels.
class Polytope {
 public:
  /// Throws InvalidInput on an empty list or non-finite coordinates and
  /// DimensionMismatch when vertex lengths differ or are zero.
  explicit Polytope(const std::vector<Vector>& vertices, double vertex_tol = kVertexTol);

  static Polytope singleton(Vector point) { return Polytope({std::move(point)}); }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return count_; }

  double coord(std::size_t vertex, std::size_t axis) const noexcept {
    return soa_[axis * count_ + vertex];
  }
  Vector vertex(std::size_t j) const;
  std::vector<Vector> vertices() const;

  /// Coordinate-major storage: soa()[axis * size() + vertex].
  std::span<const double> soa() const noexcept { return soa_; }

  /// Vertices sorted lexicographically; the basis for set identity.
  std::vector<Vector> canonical_vertices() const;

  /// True when some stored vertex equals `point` within `tol` (max-norm).
  bool contains_vertex(std::span<const double> point, double tol = kVertexTol) const;

  /// Exact, order-sensitive equality of the stored vertex lists.
  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.count_ == b.count_ && a.soa_ == b.soa_;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::vector<double> soa_;
};

/// Same point set up to vertex order: canonical vertex lists agree within tol.
bool same_set(const Polytope& a, const Polytope& b, double tol = kVertexTol);

/// Lexicographic three-way comparison of two equal-length vectors.
int compare_lex(std::span<const double> a, std::span<const double> b);

}  // namespace exh
