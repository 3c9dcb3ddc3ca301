/**
 * Certificates for neighborliness, stackedness, shellability and ball /
 * sphere sanity. Stackedness is decided both by skeleton comparison with
 * the boundary and through the h-vector; a disagreement is a hard error.
 * PL type is never certified directly: a shelling witness is the strong
 * evidence, pseudomanifold and mod-2 homology checks are sanity only.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "faces.hpp"
#include "posets.hpp"
#include "squeezed.hpp"

namespace sqz {

enum class Verdict { holds, fails, inconclusive };

using ShellingOrder = std::vector<Face>;

/// Violating face, shelling order, failing position, or a free-form note.
using Witness = std::variant<std::monostate, Face, ShellingOrder, std::size_t, std::string>;

struct Certificate {
  std::string property;
  Verdict verdict = Verdict::fails;
  Witness witness;

  bool holds() const noexcept { return verdict == Verdict::holds; }
};

/**
 * i-neighborly with respect to V: every subset of V with at most i elements
 * is a face. The witness on failure is the first missing i-subset.
 */
inline Certificate is_i_neighborly(const Complex& c, int i, const Face& v) {
  if (i < 1) throw std::invalid_argument("neighborliness index must be at least 1");
  Certificate cert{"neighborly(" + std::to_string(i) + ")", Verdict::holds, {}};
  if (!c.is_void() && !v.contains(c.vertex_set()))
    throw std::invalid_argument("vertex set of the complex must lie in V");
  const int r = std::min<int>(i, static_cast<int>(v.size()));
  FaceSet faces;
  for (const Face& f : c.facets()) for_each_subface(f, r, [&](Face g) {
      if (static_cast<int>(g.size()) == r) faces.insert(std::move(g));
    });
  std::vector<Vertex> buf;
  bool found_missing = false;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (found_missing) return;
    if (static_cast<int>(buf.size()) == r) {
      Face f(buf);
      if (!faces.contains(f)) {
        found_missing = true;
        cert.verdict = Verdict::fails;
        cert.witness = f;
      }
      return;
    }
    for (std::size_t idx = next; idx < v.size(); ++idx) {
      buf.push_back(v[idx]);
      self(self, idx + 1);
      buf.pop_back();
    }
  };
  rec(rec, 0);
  return cert;
}

/**
 * r-stacked: every face of dimension <= dim(b) - r - 1 lies on the boundary.
 * Cross-checked with h_i = 0 for all i >= r + 1.
 */
inline Certificate is_r_stacked(const Complex& b, int r) {
  if (b.is_void() || !b.is_pure()) throw std::invalid_argument("stackedness requires a pure non-void complex");
  if (r < 0) throw std::invalid_argument("stackedness index must be non-negative");
  const int dim = b.dim();
  const Complex boundary = boundary_complex(b);
  if (boundary.is_empty()) throw std::invalid_argument("closed complex has no boundary");

  Certificate cert{"stacked(" + std::to_string(r) + ")", Verdict::holds, {}};
  if (dim - r - 1 >= -1) {
    for (const Face& f : all_faces(b, dim - r - 1)) {
      if (!boundary.contains_face(f)) {
        cert.verdict = Verdict::fails;
        cert.witness = f;
        break;
      }
    }
  }

  const HVector h = h_vector(f_vector(b), dim + 1);
  bool h_says = true;
  for (std::size_t i = static_cast<std::size_t>(r) + 1; i < h.size(); ++i)
    if (h[i] != 0) h_says = false;
  if (h_says != cert.holds())
    throw std::logic_error("internal inconsistency: skeleton and h-vector stackedness verdicts disagree");
  return cert;
}

namespace detail {

/// Whether facet f meets the union of `placed` in a pure complex of codimension one.
inline bool meets_in_codim_one(const Face& f, const std::vector<Face>& placed) {
  std::vector<Face> inter;
  inter.reserve(placed.size());
  for (const Face& g : placed) inter.push_back(f.set_intersection(g));
  const Complex meet = Complex::generated_by(std::move(inter));
  return std::all_of(meet.facets().begin(), meet.facets().end(),
                     [&](const Face& m) { return m.size() + 1 == f.size(); });
}

}  // namespace detail

/**
 * Checks that `order` is a shelling of the pure complex c: each facet after
 * the first meets the union of its predecessors in a pure complex of
 * codimension one. Witness: the order on success, the first failing
 * (zero-based) position otherwise.
 */
inline Certificate is_shelling(const Complex& c, const ShellingOrder& order) {
  if (!c.is_pure()) throw std::invalid_argument("shelling check requires a pure complex");
  ShellingOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != c.facets()) throw std::invalid_argument("order is not a permutation of the facets");
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<Face> placed(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j));
    if (!detail::meets_in_codim_one(order[j], placed)) return {"shellable", Verdict::fails, j};
  }
  return {"shellable", Verdict::holds, order};
}

/**
 * Backtracking search for a shelling. Candidates are tried in lexicographic
 * order and failed prefix sets are memoized. Each placement costs one node;
 * exceeding `budget` nodes gives an inconclusive verdict.
 */
inline Certificate find_shelling(const Complex& c, std::uint64_t budget = 1'000'000) {
  if (c.is_void() || !c.is_pure()) throw std::invalid_argument("shelling search requires a pure non-void complex");
  const auto& facets = c.facets();
  const std::size_t m = facets.size();
  std::vector<bool> used(m, false);
  std::vector<std::size_t> order;
  std::unordered_set<std::vector<bool>> dead;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  auto rec = [&](auto&& self) -> bool {
    if (order.size() == m) return true;
    if (dead.contains(used)) return false;
    std::vector<Face> placed;
    for (std::size_t i : order) placed.push_back(facets[i]);
    for (std::size_t idx = 0; idx < m; ++idx) {
      if (used[idx]) continue;
      if (!order.empty() && !detail::meets_in_codim_one(facets[idx], placed)) continue;
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      used[idx] = true;
      order.push_back(idx);
      if (self(self)) return true;
      order.pop_back();
      used[idx] = false;
      if (out_of_budget) return false;
    }
    dead.insert(used);
    return false;
  };

  if (rec(rec)) {
    ShellingOrder witness;
    for (std::size_t i : order) witness.push_back(facets[i]);
    return {"shellable", Verdict::holds, witness};
  }
  if (out_of_budget)
    return {"shellable", Verdict::inconclusive, "inconclusive: node budget " + std::to_string(budget) + " exhausted"};
  return {"shellable", Verdict::fails, std::string("exhaustive search found no shelling")};
}

/**
 * The shelling of B(S) \ B(T) for k = 2: blocks D_1, D_2, ... in turn, each
 * ordered by the reverse order along its path
 * B(S([i, i+1]), i+2) \ B(T([i, i+1]), i+2). Certified before returning.
 */
inline ShellingOrder k2_shelling(const Antichain& s, const Antichain& t) {
  if (s.k() != 2) throw std::invalid_argument("explicit shelling order is defined for k = 2 only");
  if (s.empty()) throw std::invalid_argument("antichain must be non-empty");
  detail::require_prec(s, t);
  ShellingOrder order;
  for (int i = 1; i < s.n(); ++i) {
    const Face pair{i, i + 1};
    const Complex path = complement(detail::ideal_complex(restrict(s, pair), i + 2),
                                    detail::ideal_complex(restrict(t, pair), i + 2));
    if (path.is_void()) continue;
    std::vector<Face> edges = path.facets();
    std::sort(edges.rbegin(), edges.rend());
    for (const Face& e : edges) order.push_back(pair.set_union(e));
  }
  const Certificate cert = is_shelling(relative_ball_general(s, t, 1), order);
  if (!cert.holds()) throw std::logic_error("k = 2 block order failed to certify as a shelling");
  return order;
}

namespace detail {

/// Connectivity of the facet graph in which facets sharing a ridge are adjacent.
inline bool ridge_connected(const Complex& c) {
  const auto& facets = c.facets();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Face, std::size_t> first_owner;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (Vertex v : facets[i]) {
      auto [it, inserted] = first_owner.emplace(facets[i].without(v), i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

inline std::string betti_text(const std::vector<int>& betti) {
  std::string s = "reduced betti (";
  for (std::size_t i = 0; i < betti.size(); ++i) s += (i ? "," : "") + std::to_string(betti[i]);
  return s + ")";
}

}  // namespace detail

/// Pure and every ridge in at most two facets.
inline Certificate is_pseudomanifold(const Complex& c) {
  if (c.is_void() || !c.is_pure()) return {"pseudomanifold", Verdict::fails, std::string("not a pure non-void complex")};
  for (const auto& [ridge, count] : ridge_degrees(c))
    if (count > 2) return {"pseudomanifold", Verdict::fails, ridge};
  return {"pseudomanifold", Verdict::holds, {}};
}

/// Closed pseudomanifold, ridge-connected, with the mod-2 homology of a sphere.
inline Certificate sphere_sanity(const Complex& c) {
  const std::string prop = "sphere-homology";
  if (c.is_void() || !c.is_pure()) return {prop, Verdict::fails, std::string("not a pure non-void complex")};
  for (const auto& [ridge, count] : ridge_degrees(c))
    if (count != 2) return {prop, Verdict::fails, ridge};
  if (!detail::ridge_connected(c)) return {prop, Verdict::fails, std::string("facet graph is disconnected")};
  const auto betti = z2_reduced_betti(c);
  for (std::size_t i = 0; i < betti.size(); ++i)
    if (betti[i] != (i + 1 == betti.size() ? 1 : 0)) return {prop, Verdict::fails, detail::betti_text(betti)};
  return {prop, Verdict::holds, {}};
}

/// Pseudomanifold with non-empty boundary, ridge-connected, acyclic mod 2, boundary a sanity sphere.
inline Certificate ball_sanity(const Complex& c) {
  const std::string prop = "ball-homology";
  if (c.is_void() || !c.is_pure()) return {prop, Verdict::fails, std::string("not a pure non-void complex")};
  bool has_boundary = false;
  for (const auto& [ridge, count] : ridge_degrees(c)) {
    if (count > 2) return {prop, Verdict::fails, ridge};
    has_boundary = has_boundary || count == 1;
  }
  if (!has_boundary) return {prop, Verdict::fails, std::string("no boundary ridges")};
  if (!detail::ridge_connected(c)) return {prop, Verdict::fails, std::string("facet graph is disconnected")};
  const auto betti = z2_reduced_betti(c);
  for (int b : betti)
    if (b != 0) return {prop, Verdict::fails, detail::betti_text(betti)};
  const Certificate boundary = sphere_sanity(boundary_complex(c));
  if (!boundary.holds()) return {prop, Verdict::fails, std::string("boundary is not a sanity sphere")};
  return {prop, Verdict::holds, {}};
}

}  // namespace sqz
