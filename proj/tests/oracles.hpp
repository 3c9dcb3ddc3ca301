// Brute-force reference computations for the test suites. These work on
// plain integer vectors and bitmasks over [n] and share no code paths with
// the library beyond the types used to compare results.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Set = std::vector<int>;

inline Set from_mask(std::uint32_t mask, int n) {
  Set s;
  for (int v = 1; v <= n; ++v)
    if (mask & (1u << (v - 1))) s.push_back(v);
  return s;
}

inline std::uint32_t to_mask(const Set& s) {
  std::uint32_t m = 0;
  for (int v : s) m |= 1u << (v - 1);
  return m;
}

/// Gale's evenness over every pair of non-elements, not just consecutive ones.
inline bool gale(const Set& f, int n) {
  const std::uint32_t m = to_mask(f);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if ((m >> (i - 1)) & 1u || (m >> (j - 1)) & 1u) continue;
      int between = 0;
      for (int l = i + 1; l < j; ++l) between += (m >> (l - 1)) & 1u;
      if (between % 2) return false;
    }
  return true;
}

inline std::vector<Set> gale_facets(int d, int n) {
  std::vector<Set> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == d && gale(from_mask(m, n), n)) out.push_back(from_mask(m, n));
  std::sort(out.begin(), out.end());
  return out;
}

/// Every subset of [n] contained in some facet, as bitmasks.
inline std::set<std::uint32_t> faces(const std::vector<Set>& facets, int n) {
  std::set<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    for (const Set& f : facets)
      if ((m & ~to_mask(f)) == 0) {
        out.insert(m);
        break;
      }
  return out;
}

/// f_{-1}, f_0, ..., f_{d-1}.
inline std::vector<std::int64_t> f_vector(const std::vector<Set>& facets, int n, int d) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(d + 1), 0);
  for (std::uint32_t m : faces(facets, n)) ++f[static_cast<std::size_t>(__builtin_popcount(m))];
  return f;
}

/// h-vector by expanding sum_i f_{i-1} (x - 1)^{d-i} as a polynomial.
inline std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f, int d) {
  std::vector<std::int64_t> poly(static_cast<std::size_t>(d + 1), 0);  // poly[e] = coefficient of x^e
  for (int i = 0; i <= d; ++i) {
    std::vector<std::int64_t> term{1};
    for (int r = 0; r < d - i; ++r) {
      std::vector<std::int64_t> next(term.size() + 1, 0);
      for (std::size_t e = 0; e < term.size(); ++e) {
        next[e + 1] += term[e];
        next[e] -= term[e];
      }
      term = next;
    }
    for (std::size_t e = 0; e < term.size(); ++e) poly[e] += f[static_cast<std::size_t>(i)] * term[e];
  }
  std::vector<std::int64_t> h;
  for (int j = 0; j <= d; ++j) h.push_back(poly[static_cast<std::size_t>(d - j)]);
  return h;
}

inline std::vector<Set> maximal(const std::set<std::uint32_t>& faces, int n) {
  std::vector<Set> out;
  for (std::uint32_t m : faces) {
    bool covered = false;
    for (std::uint32_t o : faces)
      if (o != m && (m & ~o) == 0) covered = true;
    if (!covered) out.push_back(from_mask(m, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Maximal faces of {s : s n t = 0, s u t a face}.
inline std::vector<Set> link(const std::vector<Set>& facets, const Set& t, int n) {
  const auto all = faces(facets, n);
  const std::uint32_t tm = to_mask(t);
  std::set<std::uint32_t> lk;
  for (std::uint32_t s : all)
    if ((s & tm) == 0 && all.count(s | tm)) lk.insert(s);
  return maximal(lk, n);
}

/// Ridges of a pure complex with facet size d that lie in exactly one facet.
inline std::vector<Set> boundary_ridges(const std::vector<Set>& facets, int n, int d) {
  std::vector<Set> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) != d - 1) continue;
    int owners = 0;
    for (const Set& f : facets)
      if ((m & ~to_mask(f)) == 0) ++owners;
    if (owners == 1) out.push_back(from_mask(m, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool leq(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// P_k^n as explicit tuples.
inline std::vector<Set> grid(int k, int n) {
  std::vector<Set> out;
  for (std::uint32_t m = 0; m < (1u << std::max(0, n - k)); ++m)
    if (__builtin_popcount(m) == k) out.push_back(from_mask(m, n - k));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of antichains by testing every subset of the poset.
inline std::uint64_t antichain_count(const std::vector<Set>& poset, const Set* must = nullptr) {
  const std::size_t m = poset.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool ok = true;
    bool has_must = must == nullptr;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1u)) continue;
      if (must && poset[i] == *must) has_must = true;
      for (std::size_t j = i + 1; j < m && ok; ++j)
        if (((mask >> j) & 1u) && (leq(poset[i], poset[j]) || leq(poset[j], poset[i]))) ok = false;
    }
    if (ok && has_must) ++count;
  }
  return count;
}

/// Unions of k adjacent pairs in [m, n] by filtering all 2k-subsets.
inline std::vector<Set> pair_unions(int k, int m, int n) {
  std::vector<Set> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 2 * k) continue;
    Set s = from_mask(mask, n);
    bool ok = s.empty() || s.front() >= m;
    for (std::size_t j = 0; ok && j < s.size(); j += 2) ok = s[j + 1] == s[j] + 1;
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Downward closure inside the pair-union poset by single-pair moves.
inline std::set<Set> down_closure(const std::vector<Set>& generators) {
  std::set<Set> seen(generators.begin(), generators.end());
  std::vector<Set> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    Set s = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.size(); j += 2) {
      Set t = s;
      t[j] -= 1;
      t[j + 1] -= 1;
      if (t[j] < 1 || (j >= 2 && t[j] <= t[j - 1])) continue;
      if (seen.insert(t).second) stack.push_back(t);
    }
  }
  return seen;
}

}  // namespace oracle
