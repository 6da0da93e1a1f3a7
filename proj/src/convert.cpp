#include "exh/convert.hpp"

#include <limits>
#include <string>

#include "exh/error.hpp"
#include "exh/eval.hpp"
#include "exh/reduce.hpp"

namespace exh {

namespace {

/// Odometer over selections (j_1, ..., j_k), last index fastest.
class SelectionCursor {
 public:
  explicit SelectionCursor(const Family& f) : f_(f), index_(f.size(), 0) {}

  const std::vector<std::size_t>& index() const noexcept { return index_; }

  void advance() {
    for (std::size_t i = index_.size(); i-- > 0;) {
      if (++index_[i] < f_[i].size()) return;
      index_[i] = 0;
    }
  }

 private:
  const Family& f_;
  std::vector<std::size_t> index_;
};

}  // namespace

std::uint64_t selection_count(const Family& f) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t p = 1;
  for (const Polytope& c : f.sets()) {
    if (p > kMax / c.size()) return kMax;
    p *= c.size();
  }
  return p;
}

Family convert(const Family& f, const ConvertOptions& options) {
  const std::uint64_t p = selection_count(f);
  if (p > options.cap)
    throw CombinatorialBlowUp(p, options.cap, p == std::numeric_limits<std::uint64_t>::max());

  // Pull every vertex out once; selections index into these.
  std::vector<std::vector<Vector>> verts;
  verts.reserve(f.size());
  for (const Polytope& c : f.sets()) verts.push_back(c.vertices());

  std::vector<Polytope> sets;
  sets.reserve(static_cast<std::size_t>(p));
  SelectionCursor cursor(f);
  std::vector<Vector> chosen(f.size());
  for (std::uint64_t s = 0; s < p; ++s, cursor.advance()) {
    for (std::size_t i = 0; i < f.size(); ++i) chosen[i] = verts[i][cursor.index()[i]];
    sets.emplace_back(chosen);
  }

  Family out(dual(f.kind()), f.space_dim(), std::move(sets));
  return options.dedup ? dedup_sets(out) : out;
}

PayoffMatrix conversion_certificate(const Family& in, const Family& out,
                                    std::span<const double> delta) {
  if (out.kind() != dual(in.kind()) || out.space_dim() != in.space_dim())
    throw DimensionMismatch("certificate: output family is not the dual of the input");
  if (delta.size() != in.space_dim())
    throw DimensionMismatch("certificate: direction of length " + std::to_string(delta.size()) +
                            ", expected " + std::to_string(in.space_dim()));
  const std::uint64_t p = selection_count(in);
  if (p != out.size())
    throw DimensionMismatch("certificate: output has " + std::to_string(out.size()) +
                            " sets, input yields " + std::to_string(p) + " selections");

  const Vector g = lifted_direction(in.kind(), delta);
  const auto& k = kernels::active();
  std::vector<Vector> projections;
  projections.reserve(in.size());
  for (const Polytope& c : in.sets()) {
    Vector values(c.size());
    k.project(c.soa(), c.size(), g, values);
    projections.push_back(std::move(values));
  }

  const std::size_t rows = in.size();
  const std::size_t cols = static_cast<std::size_t>(p);
  std::vector<double> entries(rows * cols);
  SelectionCursor cursor(in);
  for (std::size_t s = 0; s < cols; ++s, cursor.advance()) {
    for (std::size_t i = 0; i < rows; ++i) {
      const std::size_t j = cursor.index()[i];
      if (!out[s].contains_vertex(in[i].vertex(j)))
        throw DimensionMismatch("certificate: output set " + std::to_string(s) +
                                " does not contain its selected vertex from input set " +
                                std::to_string(i));
      entries[i * cols + s] = projections[i][j];
    }
  }
  return PayoffMatrix(rows, cols, std::move(entries));
}

}  // namespace exh
