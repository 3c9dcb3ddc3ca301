/**
 * Sewing a ball into a sphere and the two census families: the even case
 * replaces B_S inside the boundary of C_{2k}(n) by the cone over its
 * boundary from vertex n+1; the odd case takes the boundary of B_S.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cyclic.hpp"
#include "faces.hpp"
#include "posets.hpp"
#include "squeezed.hpp"
#include "verify.hpp"

namespace sqz {

/**
 * Delta(B) = (Delta \ B) u (boundary(B) * {new_vertex}). The ball must be a
 * proper full-dimensional subcomplex of the sphere; both are sanity-checked
 * first and the result is sanity-checked as a sphere.
 */
inline Complex sew(const Complex& delta, const Complex& b, Vertex new_vertex) {
  if (delta.is_void() || b.is_void()) throw std::invalid_argument("sewing requires non-void complexes");
  if (!b.is_pure() || !delta.is_pure() || b.dim() != delta.dim())
    throw std::invalid_argument("ball must be a full-dimensional subcomplex of the sphere");
  for (const Face& f : b.facets())
    if (!std::binary_search(delta.facets().begin(), delta.facets().end(), f))
      throw std::invalid_argument("ball must be a full-dimensional subcomplex of the sphere");
  if (b.num_facets() == delta.num_facets()) throw std::invalid_argument("ball must be a proper subcomplex of the sphere");
  if (new_vertex <= 0 || delta.vertex_set().contains(new_vertex))
    throw std::invalid_argument("new vertex collides with an existing vertex");
  if (!sphere_sanity(delta).holds()) throw std::invalid_argument("ambient complex fails sphere sanity");
  if (!ball_sanity(b).holds()) throw std::invalid_argument("sewn complex fails ball sanity");

  Complex result = unite(complement(delta, b), join(boundary_complex(b), Complex::simplex(Face{new_vertex})));
  if (!sphere_sanity(result).holds()) throw std::logic_error("sewing produced a complex that fails sphere sanity");
  return result;
}

struct CensusEntry {
  Antichain antichain;
  Complex ball;
  Complex sphere;
  std::vector<Certificate> certificates;
};

namespace detail {

/// Maps fn over items with up to `jobs` threads; results keep input order.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, unsigned jobs, Fn fn) {
  using Out = decltype(fn(items.front()));
  std::vector<std::optional<Out>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || items.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, items.size()); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Out> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline void require_certified(const CensusEntry& e) {
  for (const Certificate& c : e.certificates)
    if (!c.holds())
      throw std::runtime_error("census certificate " + c.property + " failed for antichain " +
                               format_antichain(e.antichain));
}

inline std::vector<Antichain> constrained_antichains(int k, int n) {
  std::vector<Antichain> out;
  for_each_antichain(k, n, maximal_slope_point(k, n), [&](const GridAntichain& a) { out.push_back(R_map(a)); });
  return out;
}

}  // namespace detail

/**
 * For each antichain S of F_{2k}^{[1,n]} containing [1,2] u [n-2k+3, n]:
 * B_S and the sphere Delta(B_S) on [n+1], with Delta the boundary of
 * C_{2k}(n) unless another ambient sphere is supplied. Entries follow the
 * antichain enumeration order; any failed certificate throws.
 */
inline std::vector<CensusEntry> even_census(int k, int n, unsigned jobs = 1,
                                            const std::optional<Complex>& ambient = std::nullopt) {
  if (k < 2 || n < 2 * k + 2) throw std::invalid_argument("even census requires k >= 2 and n >= 2k + 2");
  const Complex delta = ambient ? *ambient : cyclic_boundary(CyclicParams(2 * k, n));
  const Face base = Face::interval(1, n);
  const Face extended = Face::interval(1, n + 1);
  return detail::parallel_map(detail::constrained_antichains(k, n), jobs, [&](const Antichain& s) {
    CensusEntry e{s, relative_ball(s), {}, {}};
    e.sphere = sew(delta, e.ball, n + 1);
    e.certificates = {is_i_neighborly(e.ball, k - 1, base), is_r_stacked(e.ball, k - 1),
                      is_i_neighborly(e.sphere, k, extended), sphere_sanity(e.sphere)};
    detail::require_certified(e);
    return e;
  });
}

/// For each qualifying S: B_S and its boundary, a (k-1)-neighborly (2k-2)-sphere on [n].
inline std::vector<CensusEntry> odd_census(int k, int n, unsigned jobs = 1) {
  if (k < 2 || n < 2 * k) throw std::invalid_argument("odd census requires k >= 2 and n >= 2k");
  const Face base = Face::interval(1, n);
  return detail::parallel_map(detail::constrained_antichains(k, n), jobs, [&](const Antichain& s) {
    CensusEntry e{s, relative_ball(s), {}, {}};
    e.sphere = boundary_complex(e.ball);
    e.certificates = {is_r_stacked(e.ball, k - 1), is_i_neighborly(e.ball, k - 1, base),
                      is_i_neighborly(e.sphere, k - 1, base), sphere_sanity(e.sphere)};
    detail::require_certified(e);
    return e;
  });
}

struct CensusCount {
  int n;
  std::uint64_t census;
  std::uint64_t bound;  ///< number of antichains of F_{2k}^{[1, n-2k]}
  bool ok;
};

/**
 * Exact census sizes (antichains of P_k^n containing the maximal-slope point)
 * against the comparison count of antichains of F_{2k}^{[1, n-2k]}, which is
 * isomorphic to F_{2k}^{[3, n-2k+2]}.
 */
inline std::vector<CensusCount> census_counts(int k, int n_min, int n_max) {
  if (k < 1 || n_min < 2 * k || n_max < n_min) throw std::invalid_argument("census counts require k >= 1 and 2k <= n_min <= n_max");
  std::vector<CensusCount> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const std::uint64_t census = count_antichains(k, n, maximal_slope_point(k, n));
    const int window = n - 2 * k;
    const std::uint64_t bound = window >= 2 * k ? count_antichains(k, window) : 1;
    rows.push_back({n, census, bound, census >= bound});
  }
  return rows;
}

}  // namespace sqz
