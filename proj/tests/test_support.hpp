#pragma once
// Independent reference evaluation and shared fixtures for the test suites.
// The oracle works on raw nested vectors with plain loops and never touches
// Polytope storage or the projection kernels.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "exh/exh.hpp"

namespace exh::testing {

using Points = std::vector<std::vector<double>>;
using RawFamily = std::vector<Points>;

inline double oracle_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// h(delta) straight from the definition, lifting delta to (1, delta) for
/// coexhausters.
inline double oracle_eval(Kind kind, const RawFamily& sets, const std::vector<double>& delta) {
  std::vector<double> g = delta;
  if (is_coexhauster(kind)) g.insert(g.begin(), 1.0);
  const bool upper = is_upper(kind);
  double outer = upper ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
  for (const Points& c : sets) {
    double inner = upper ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
    for (const auto& v : c)
      inner = upper ? std::max(inner, oracle_dot(v, g)) : std::min(inner, oracle_dot(v, g));
    outer = upper ? std::min(outer, inner) : std::max(outer, inner);
  }
  return outer;
}

inline RawFamily raw(const Family& f) {
  RawFamily out;
  for (const Polytope& c : f.sets()) out.push_back(c.vertices());
  return out;
}

inline double oracle_eval(const Family& f, const std::vector<double>& delta) {
  return oracle_eval(f.kind(), raw(f), delta);
}

inline Family make_family(Kind kind, std::size_t n, const RawFamily& sets) {
  std::vector<Polytope> ps;
  for (const Points& c : sets) ps.emplace_back(c);
  return Family(kind, n, std::move(ps));
}

inline std::vector<double> unit(std::size_t n, std::size_t i, double scale = 1.0) {
  std::vector<double> e(n, 0.0);
  e[i] = scale;
  return e;
}

// Lower exhauster in R^4 from the first worked example.
inline Family example1() {
  return make_family(Kind::LowerExhauster, 4,
                     {{{-1, 1, 1, 1}, {1, 1, 1, 1}}, {{1, -1, -1, -1}, {-1, -1, -1, -1}}});
}

// Its converted upper exhauster as listed with the example.
inline RawFamily example1_listed() {
  return {{{-1, 1, 1, 1}, {1, -1, -1, -1}},
          {{-1, 1, 1, 1}, {-1, -1, -1, -1}},
          {{1, 1, 1, 1}, {1, -1, -1, -1}},
          {{1, 1, 1, 1}, {-1, -1, -1, -1}}};
}

// Upper coexhauster over R^4: C1 = co{[1, e_1], [1, e_2], [1, e_3]}, C2 = {0}.
inline Family example2() {
  return make_family(Kind::UpperCoexhauster, 4,
                     {{{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}}, {{0, 0, 0, 0, 0}}});
}

inline RawFamily example2_listed() {
  return {{{1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}},
          {{1, 0, 1, 0, 0}, {0, 0, 0, 0, 0}},
          {{1, 0, 0, 1, 0}, {0, 0, 0, 0, 0}}};
}

inline Points square_points(double s = 1.0) { return {{s, s}, {s, -s}, {-s, s}, {-s, -s}}; }

inline Family square_family(Kind kind) { return make_family(kind, 2, {square_points()}); }

/// Canonical (sorted) vertex lists of every set, in family order.
inline std::vector<Points> canonical_sets(const Family& f) {
  std::vector<Points> out;
  for (const Polytope& c : f.sets()) out.push_back(c.canonical_vertices());
  return out;
}

inline std::vector<Points> canonical_sets(RawFamily sets) {
  for (Points& c : sets) std::sort(c.begin(), c.end());
  return sets;
}

/// Runs `body` once for every kernel variant this machine offers, restoring
/// the previous selection afterwards.
template <class Body>
void for_each_isa(Body&& body) {
  const kernels::Isa saved = kernels::active().isa;
  for (kernels::Isa isa : kernels::available_isas()) {
    kernels::set_active(isa);
    body(isa);
  }
  kernels::set_active(saved);
}

inline const Kind kAllKinds[] = {Kind::UpperExhauster, Kind::LowerExhauster,
                                 Kind::UpperCoexhauster, Kind::LowerCoexhauster};

}  // namespace exh::testing
