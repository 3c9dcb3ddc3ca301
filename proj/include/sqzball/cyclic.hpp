/**
 * Boundary complexes of cyclic polytopes, with facets identified through
 * Gale's evenness condition. Vertex m(t_i) of the moment curve is labeled i.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "faces.hpp"

namespace sqz {

struct CyclicParams {
  int d;
  int n;

  CyclicParams(int dim, int vertices) : d(dim), n(vertices) {
    if (!(n > d && d >= 2)) throw std::invalid_argument("cyclic polytope requires n > d >= 2");
  }
};

/**
 * All sets {i_1, i_1+1, ..., i_k, i_k+1} with m <= i_1, i_k <= n-1 and
 * i_{j+1} >= i_j + 2, in lexicographic order. For k = 0 this is the single
 * empty set.
 */
inline std::vector<Face> adjacent_pair_unions(int k, int m, int n) {
  if (k < 0) throw std::invalid_argument("number of pairs must be non-negative");
  std::vector<Face> out;
  std::vector<Vertex> buf;
  auto rec = [&](auto&& self, int pairs_left, int lo) -> void {
    if (pairs_left == 0) {
      out.emplace_back(buf);
      return;
    }
    for (int i = std::max(lo, 1); i + 2 * pairs_left - 1 <= n; ++i) {
      buf.push_back(i);
      buf.push_back(i + 1);
      self(self, pairs_left - 1, i + 2);
      buf.pop_back();
      buf.pop_back();
    }
  };
  rec(rec, k, m);
  return out;
}

/// Gale's evenness condition for a d-subset of [n].
inline bool gale_even(const Face& f, const CyclicParams& p) {
  if (f.size() != static_cast<std::size_t>(p.d)) throw std::invalid_argument("face size must equal d");
  if (!f.empty() && f.back() > p.n) throw std::invalid_argument("face must be a subset of [n]");
  // Checking consecutive non-elements suffices: counts over longer gaps are sums.
  int previous_gap = 0;
  int between = 0;
  for (int v = 1; v <= p.n; ++v) {
    if (f.contains(v)) {
      ++between;
      continue;
    }
    if (previous_gap != 0 && between % 2 != 0) return false;
    previous_gap = v;
    between = 0;
  }
  return true;
}

/**
 * Boundary complex of C_d(n). Even d uses the cyclic-pair structure of the
 * evenness condition; odd d filters all d-subsets.
 */
inline Complex cyclic_boundary(const CyclicParams& p) {
  std::vector<Face> facets;
  if (p.d % 2 == 0) {
    const int k = p.d / 2;
    facets = adjacent_pair_unions(k, 1, p.n);
    // Facets using the wrap-around pair {1, n}.
    for (const Face& h : adjacent_pair_unions(k - 1, 2, p.n - 1)) {
      std::vector<Vertex> v{1};
      v.insert(v.end(), h.begin(), h.end());
      v.push_back(p.n);
      facets.emplace_back(std::move(v));
    }
  } else {
    std::vector<Vertex> buf;
    auto rec = [&](auto&& self, int next) -> void {
      if (buf.size() == static_cast<std::size_t>(p.d)) {
        Face f(buf);
        if (gale_even(f, p)) facets.push_back(std::move(f));
        return;
      }
      for (int v = next; v <= p.n; ++v) {
        buf.push_back(v);
        self(self, v + 1);
        buf.pop_back();
      }
    };
    rec(rec, 1);
  }
  return Complex::generated_by(std::move(facets));
}

}  // namespace sqz
