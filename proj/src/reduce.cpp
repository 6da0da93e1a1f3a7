#include "exh/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "exh/eval.hpp"
#include "exh/verify.hpp"

namespace exh {

Family dedup_sets(const Family& f, double tol) {
  const std::size_t n = f.size();
  std::vector<std::vector<Vector>> canon;
  canon.reserve(n);
  for (const Polytope& c : f.sets()) canon.push_back(c.canonical_vertices());

  auto lead = [&](std::size_t i) { return canon[i].front().front(); };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lead(a) < lead(b) || (lead(a) == lead(b) && a < b);
  });

  // Sweep in order of the leading coordinate; only sets whose leading
  // coordinates are within tol can coincide.
  std::vector<bool> dropped(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    if (dropped[i]) continue;
    for (std::size_t b = a + 1; b < n && lead(order[b]) - lead(i) <= tol; ++b) {
      const std::size_t j = order[b];
      if (dropped[j] || !same_set(f[i], f[j], tol)) continue;
      dropped[std::max(i, j)] = true;
      if (j < i) break;  // i itself is the later duplicate
    }
  }

  std::vector<Polytope> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) kept.push_back(f[i]);
  return Family(f.kind(), f.space_dim(), std::move(kept));
}

namespace {

// Decides whether a candidate set is the only one attaining the family value
// somewhere, using
//   upper kinds: F(D) = min_j (max_{w in C_j \ C} <w, g> - max_{v in C} <v, g>)
//   lower kinds: F(D) = min_j (min_{v in C} <v, g> - min_{w in C_j \ C} <w, g>)
// over the other live sets j. F > 0 exactly where C is uniquely active, and
// unlike the plain margin it has no flat ties from vertices that C shares with
// other sets, so a local search can climb it.
class ExclusiveMargin {
 public:
  ExclusiveMargin(const Family& f, const std::vector<bool>& alive, std::size_t cand)
      : kind_(f.kind()), upper_(is_upper(f.kind())), cand_(f[cand]), k_(kernels::active()) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (!alive[j] || j == cand) continue;
      std::vector<Vector> own;
      for (std::size_t v = 0; v < f[j].size(); ++v) {
        Vector pt = f[j].vertex(v);
        if (!cand_.contains_vertex(pt)) own.push_back(std::move(pt));
      }
      // C_j inside C: C can never beat C_j.
      if (own.empty()) {
        never_unique_ = true;
        return;
      }
      rivals_.emplace_back(own);
    }
  }

  bool never_unique() const noexcept { return never_unique_ || rivals_.empty(); }

  double operator()(std::span<const double> delta) const {
    const Vector g = lifted_direction(kind_, delta);
    const Extreme inner = upper_ ? Extreme::Max : Extreme::Min;
    const double mine = k_.extreme(cand_.soa(), cand_.size(), g, inner);
    double worst = std::numeric_limits<double>::infinity();
    for (const Polytope& r : rivals_) {
      const double v = k_.extreme(r.soa(), r.size(), g, inner);
      worst = std::min(worst, upper_ ? v - mine : mine - v);
    }
    return worst;
  }

 private:
  Kind kind_;
  bool upper_;
  const Polytope& cand_;
  const kernels::KernelTable& k_;
  std::vector<Polytope> rivals_;
  bool never_unique_ = false;
};

constexpr std::size_t kRefineStarts = 16;
constexpr int kRefineIters = 64;

// Seeded random search on the sphere of the given radius, maximizing the
// exclusive margin. Returns true once it exceeds tol.
bool margin_exceeds(const ExclusiveMargin& margin, Vector x, double start, double radius,
                    double tol, Rng& rng) {
  auto project = [radius](Vector& v) {
    double n2 = 0.0;
    for (double c : v) n2 += c * c;
    const double n = std::sqrt(n2);
    if (n > 0.0)
      for (double& c : v) c *= radius / n;
  };
  double best = start;
  double step = 0.25 * radius;
  Vector trial(x.size());
  int stalls = 0;
  for (int it = 0; it < kRefineIters && best <= tol; ++it) {
    for (std::size_t c = 0; c < x.size(); ++c) trial[c] = x[c] + step * rng.normal();
    project(trial);
    const double m = margin(trial);
    if (m >= best) {
      best = m;
      x = trial;
      stalls = 0;
    } else if (++stalls == 3) {
      step *= 0.5;
      stalls = 0;
    }
  }
  return best > tol;
}

}  // namespace

Family prune_sampled(const Family& f, const DirectionSampler& sampler, double tol) {
  if (f.size() < 2) return f;

  std::vector<Vector> dirs = canonical_probes(f.space_dim());
  for (Vector& d : sampler.directions()) dirs.push_back(std::move(d));

  // values[i][s]: inner support of set i at direction s.
  const bool upper = is_upper(f.kind());
  const Extreme inner = upper ? Extreme::Max : Extreme::Min;
  const auto& k = kernels::active();
  std::vector<std::vector<double>> values(f.size(), std::vector<double>(dirs.size()));
  for (std::size_t s = 0; s < dirs.size(); ++s) {
    const Vector g = lifted_direction(f.kind(), dirs[s]);
    for (std::size_t i = 0; i < f.size(); ++i)
      values[i][s] = k.extreme(f[i].soa(), f[i].size(), g, inner);
  }

  std::vector<bool> alive(f.size(), true);
  auto family_value = [&](std::size_t s, std::size_t skip) {
    bool first = true;
    double best = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!alive[i] || i == skip) continue;
      const double v = values[i][s];
      if (first || (upper ? v < best : v > best)) best = v;
      first = false;
    }
    return best;
  };
  std::vector<double> reference(dirs.size());
  for (std::size_t s = 0; s < dirs.size(); ++s) reference[s] = family_value(s, f.size());

  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f[a].size() > f[b].size(); });

  Rng rng(sampler.seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t remaining = f.size();
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i : order) {
    if (remaining == 1) break;
    bool removable = true;
    for (std::size_t s = 0; s < dirs.size() && removable; ++s)
      removable = std::abs(family_value(s, i) - reference[s]) <= tol;
    // Regions where the set alone attains the value can be narrow cones the
    // sample misses; climb the exclusive margin from the most promising
    // sampled directions.
    if (removable) {
      const ExclusiveMargin margin(f, alive, i);
      if (!margin.never_unique()) {
        ranked.clear();
        for (std::size_t s = 0; s < dirs.size(); ++s) ranked.emplace_back(margin(dirs[s]), s);
        const std::size_t starts = std::min(kRefineStarts, ranked.size());
        std::partial_sort(ranked.begin(), ranked.begin() + starts, ranked.end(),
                          [](const auto& a, const auto& b) { return a.first > b.first; });
        for (std::size_t t = 0; t < starts && removable; ++t)
          removable = !margin_exceeds(margin, dirs[ranked[t].second], ranked[t].first,
                                      sampler.radius, tol, rng);
      }
    }
    if (removable) {
      alive[i] = false;
      --remaining;
    }
  }

  std::vector<Polytope> kept;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (alive[i]) kept.push_back(f[i]);
  return Family(f.kind(), f.space_dim(), std::move(kept));
}

}  // namespace exh
