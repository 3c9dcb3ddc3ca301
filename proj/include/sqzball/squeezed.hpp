/**
 * Squeezed balls B(S, m), relative squeezed balls B_S = B(S) \ B(S - 1),
 * the differences B(S, i) \ B(T, i) for T <_p S, and the blocks D_j and
 * Gamma_{j,l} of their decomposition by leading pairs.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <vector>

#include "faces.hpp"
#include "posets.hpp"

namespace sqz {

/// Parameters of a (relative) squeezed ball: S, an optional subtracted T, and a minimum start.
struct SqueezedSpec {
  Antichain S;
  std::optional<Antichain> T;
  int min_start = 1;
};

namespace detail {

/// Pure complex on the ideal of S restricted to min >= m; void when that is empty.
inline Complex ideal_complex(const Antichain& s, int m) {
  std::vector<Face> faces;
  for (const FFacet& x : ideal_with_min(s, m)) faces.push_back(x.face());
  return Complex::generated_by(std::move(faces));
}

inline void require_prec(const Antichain& s, const Antichain& t) {
  if (!antichain_prec(t, s)) throw std::invalid_argument("subtracted antichain must satisfy T <_p S");
}

}  // namespace detail

/// B(S, m): the pure (2k-1)-complex whose facets are the ideal of S with minimum >= m.
inline Complex squeezed_ball(const Antichain& s, int m = 1) {
  if (s.empty()) throw std::invalid_argument("antichain must be non-empty");
  return detail::ideal_complex(s, m);
}

/// B(S, i) \ B(T, i) for T <_p S.
inline Complex relative_ball_general(const Antichain& s, const Antichain& t, int i) {
  detail::require_prec(s, t);
  Complex bs = detail::ideal_complex(s, i);
  if (bs.is_void()) throw std::invalid_argument("B(S, i) is void");
  return complement(bs, detail::ideal_complex(t, i));
}

/// B_S = B(S) \ B(S - 1).
inline Complex relative_ball(const Antichain& s) {
  if (s.empty()) throw std::invalid_argument("antichain must be non-empty");
  return complement(detail::ideal_complex(s, 1), detail::ideal_complex(shift_down(s), 1));
}

inline Complex build_ball(const SqueezedSpec& spec) {
  if (!spec.T) return squeezed_ball(spec.S, spec.min_start);
  return relative_ball_general(spec.S, *spec.T, spec.min_start);
}

/// D_j: facets [j, j+1] u H of F(S) that are not in F(T).
inline Complex block_D(const Antichain& s, const Antichain& t, int j) {
  detail::require_prec(s, t);
  std::vector<Face> faces;
  for (const FFacet& g : order_ideal(s))
    if (g.min() == j && !detail::in_ideal(t, g)) faces.push_back(g.face());
  return Complex::generated_by(std::move(faces));
}

/// Gamma_{j,l} = B(S([j+1, j+2l]), j+2l+1) \ B(T([j, j+2l-1]), j+2l+1).
inline Complex block_Gamma(const Antichain& s, const Antichain& t, int j, int l) {
  if (l < 1 || l > s.k()) throw std::invalid_argument("l must satisfy 1 <= l <= k");
  detail::require_prec(s, t);
  const Antichain upper = restrict(s, Face::interval(j + 1, j + 2 * l));
  const Antichain lower = restrict(t, Face::interval(j, j + 2 * l - 1));
  return complement(detail::ideal_complex(upper, j + 2 * l + 1), detail::ideal_complex(lower, j + 2 * l + 1));
}

/**
 * Checks B(S, i) = U_{j >= i} B(S([j, j+1]), j+2) * [j, j+1] and the
 * one-step form B(S, i) = (B(S([i, i+1]), i+2) * [i, i+1]) u B(S, i+1).
 */
inline bool verify_decomposition(const Antichain& s, int i) {
  if (s.empty()) throw std::invalid_argument("antichain must be non-empty");
  auto piece = [&](int j) {
    const Antichain tail = restrict(s, Face{j, j + 1});
    return join(detail::ideal_complex(tail, j + 2), Complex::simplex(Face{j, j + 1}));
  };
  const Complex lhs = detail::ideal_complex(s, i);
  Complex rhs;
  for (int j = i; j < s.n(); ++j) rhs = unite(rhs, piece(j));
  const Complex one_step = i < s.n() ? unite(piece(i), detail::ideal_complex(s, i + 1)) : detail::ideal_complex(s, i + 1);
  return lhs == rhs && lhs == one_step;
}

/// B(S, i) \ B(T, i) = U_{j >= i} D_j, as facet sets.
inline bool verify_block_union(const Antichain& s, const Antichain& t, int i) {
  const Complex whole = relative_ball_general(s, t, i);
  Complex blocks;
  for (int j = i; j <= s.n(); ++j) blocks = unite(blocks, block_D(s, t, j));
  return whole == blocks;
}

/// D_j = (B(S([j, j+1]), j+2) \ B(T([j, j+1]), j+2)) * [j, j+1].
inline bool verify_block_join_form(const Antichain& s, const Antichain& t, int j) {
  const Face pair{j, j + 1};
  const Complex path = complement(detail::ideal_complex(restrict(s, pair), j + 2),
                                  detail::ideal_complex(restrict(t, pair), j + 2));
  return block_D(s, t, j) == join(path, Complex::simplex(pair));
}

/**
 * For D_{j+1} non-void, checks
 *   D_j n D_{j+1} = (B(S([j+1, j+2]), j+2) \ B(T([j, j+1]), j+2)) * {j+1}
 * and the initial-segment form D_j n D_{j+1} = U_l Gamma_{j,l} * [j+1, j+2l-1].
 */
inline bool verify_intersection_formula(const Antichain& s, const Antichain& t, int j) {
  const Complex next = block_D(s, t, j + 1);
  if (next.is_void()) throw std::invalid_argument("hypothesis of lemma violated");
  const Complex lhs = intersect(block_D(s, t, j), next);

  const Complex core = complement(detail::ideal_complex(restrict(s, Face{j + 1, j + 2}), j + 2),
                                  detail::ideal_complex(restrict(t, Face{j, j + 1}), j + 2));
  const Complex elegant = join(core, Complex::simplex(Face{j + 1}));

  Complex segments;
  for (int l = 1; l <= s.k(); ++l)
    segments = unite(segments, join(block_Gamma(s, t, j, l), Complex::simplex(Face::interval(j + 1, j + 2 * l - 1))));
  return lhs == elegant && lhs == segments;
}

/// D_{j+1} n D_i subset of D_{j+1} n D_{i+1} for 1 <= i < j.
inline bool verify_nesting(const Antichain& s, const Antichain& t, int j) {
  const Complex next = block_D(s, t, j + 1);
  for (int i = 1; i < j; ++i)
    if (!is_subcomplex(intersect(next, block_D(s, t, i)), intersect(next, block_D(s, t, i + 1)))) return false;
  return true;
}

/**
 * Number of facets of B_S for S containing [1,2] u [n-2k+3, n], computed as
 * |P_A| with A = R^{-1}(S) and P_A = P(A) \ P(A - 1). The map
 * x -> x - (x_1 - 1)(1, ..., 1) is checked to be a bijection onto
 * {x in P : x_1 = 1}, and the count is checked against the facets of B_S.
 */
inline std::int64_t facet_count_relative(const Antichain& s) {
  if (s.k() < 1 || s.n() < 2 * s.k()) throw std::invalid_argument("antichain must contain the maximal-slope element");
  const GridPoint g = maximal_slope_point(s.k(), s.n());
  if (!s.contains(R_map(g))) throw std::invalid_argument("antichain must contain the maximal-slope element");

  const GridAntichain a = R_inv(s);
  const auto ideal = order_ideal(a);
  const auto shifted = order_ideal(shift_down(a));
  std::vector<GridPoint> pa;
  std::set_difference(ideal.begin(), ideal.end(), shifted.begin(), shifted.end(), std::back_inserter(pa));

  const auto target = order_ideal(GridAntichain(s.k(), s.n(), {g}));
  std::vector<GridPoint> image;
  for (const GridPoint& x : pa) {
    std::vector<int> y(x.coords());
    const int offset = x[0] - 1;
    for (int& c : y) c -= offset;
    image.emplace_back(std::move(y));
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end() || image != target)
    throw std::logic_error("leading-coordinate normalization is not a bijection onto P({G})");

  const auto count = static_cast<std::int64_t>(pa.size());
  if (count != static_cast<std::int64_t>(relative_ball(s).num_facets()))
    throw std::logic_error("bijection count disagrees with the facet count of B_S");
  return count;
}

}  // namespace sqz
