/**
 * Simplicial complexes stored by their maximal faces, together with the
 * generic operations used throughout the library: skeleta, links,
 * antistars, joins, facet differences, f- and h-vectors, ridge-rule
 * boundaries and mod-2 homology.
 *
 * All values are immutable after construction and every operation is a
 * pure function.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace sqz {

using Vertex = int;

/**
 * A face: a strictly increasing list of positive vertex labels. The empty
 * face is allowed and has dimension -1.
 */
class Face {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  Face() = default;
  Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}
  explicit Face(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (verts_[i] <= 0 || (i > 0 && verts_[i] <= verts_[i - 1]))
        throw std::invalid_argument("face vertices must be strictly increasing positive labels");
    }
  }

  static Face from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return Face(std::move(vertices));
  }

  /// The integer interval [first, last]; empty when first > last.
  static Face interval(Vertex first, Vertex last) {
    std::vector<Vertex> v;
    for (Vertex x = first; x <= last; ++x) v.push_back(x);
    return Face(std::move(v));
  }

  std::size_t size() const noexcept { return verts_.size(); }
  int dim() const noexcept { return static_cast<int>(verts_.size()) - 1; }
  bool empty() const noexcept { return verts_.empty(); }
  const_iterator begin() const noexcept { return verts_.begin(); }
  const_iterator end() const noexcept { return verts_.end(); }
  Vertex operator[](std::size_t i) const { return verts_[i]; }
  Vertex front() const { return verts_.front(); }
  Vertex back() const { return verts_.back(); }
  const std::vector<Vertex>& vertices() const noexcept { return verts_; }

  bool contains(Vertex v) const { return std::binary_search(verts_.begin(), verts_.end(), v); }
  bool contains(const Face& other) const {
    return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end());
  }

  Face without(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(verts_.size());
    for (Vertex x : verts_)
      if (x != v) out.push_back(x);
    return Face(std::move(out));
  }
  Face set_union(const Face& other) const {
    std::vector<Vertex> out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return Face(std::move(out));
  }
  Face set_difference(const Face& other) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return Face(std::move(out));
  }
  Face set_intersection(const Face& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return Face(std::move(out));
  }

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> verts_;
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : f) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h ^ f.size();
  }
};

using FaceSet = std::unordered_set<Face, FaceHash>;

/// Calls fn on every subset of `face` with at most max_size elements.
template <class Fn>
void for_each_subface(const Face& face, int max_size, Fn&& fn) {
  const std::size_t s = face.size();
  if (s >= 31) throw std::invalid_argument("face too large for subset enumeration");
  const auto& v = face.vertices();
  std::vector<Vertex> buf;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    buf.clear();
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (1u << i)) buf.push_back(v[i]);
    fn(Face(buf));
  }
}

/**
 * A simplicial complex given by its maximal faces. The void complex has no
 * faces at all; the empty complex has exactly the empty face. Facets are kept
 * sorted, so equality is equality of labeled complexes.
 */
class Complex {
 public:
  Complex() = default;

  static Complex void_complex() { return Complex(); }
  static Complex empty_complex() { return from_maximal({Face{}}); }
  /// The full simplex on the vertices of `face`.
  static Complex simplex(Face face) { return from_maximal({std::move(face)}); }

  /// The complex generated by `faces`; void when the list is empty.
  static Complex generated_by(std::vector<Face> faces) {
    if (faces.empty()) return Complex();
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    const std::size_t first = faces.front().size();
    const bool uniform = std::all_of(faces.begin(), faces.end(),
                                     [first](const Face& f) { return f.size() == first; });
    if (!uniform) {
      std::vector<Face> by_size = faces;
      std::stable_sort(by_size.begin(), by_size.end(),
                       [](const Face& a, const Face& b) { return a.size() > b.size(); });
      std::vector<Face> kept;
      for (const Face& f : by_size) {
        bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& g) {
          return g.size() > f.size() && g.contains(f);
        });
        if (!covered) kept.push_back(f);
      }
      std::sort(kept.begin(), kept.end());
      faces = std::move(kept);
    }
    return from_maximal(std::move(faces));
  }

  bool is_void() const noexcept { return void_; }
  bool is_empty() const noexcept { return !void_ && facets_.size() == 1 && facets_.front().empty(); }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }

  int dim() const {
    if (void_) throw std::invalid_argument("void has no faces");
    int d = -1;
    for (const Face& f : facets_) d = std::max(d, f.dim());
    return d;
  }

  bool is_pure() const {
    if (void_) return true;
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
  }

  bool contains_face(const Face& face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) { return f.contains(face); });
  }

  Face vertex_set() const {
    std::vector<Vertex> all;
    for (const Face& f : facets_) all.insert(all.end(), f.begin(), f.end());
    return Face::from_unsorted(std::move(all));
  }

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  static Complex from_maximal(std::vector<Face> facets) {
    Complex c;
    c.void_ = false;
    c.facets_ = std::move(facets);
    return c;
  }

  bool void_ = true;
  std::vector<Face> facets_;
};

/// f-vector (f_{-1}, f_0, ..., f_{d-1}); counts[i + 1] holds f_i.
struct FVector {
  std::vector<std::int64_t> counts;

  std::int64_t f(int i) const { return counts.at(static_cast<std::size_t>(i + 1)); }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// h-vector (h_0, ..., h_d).
struct HVector {
  std::vector<std::int64_t> h;

  std::int64_t operator[](std::size_t i) const { return h.at(i); }
  std::size_t size() const noexcept { return h.size(); }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Binomial coefficient; zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

inline void require_non_void(const Complex& c) {
  if (c.is_void()) throw std::invalid_argument("void has no faces");
}

inline bool disjoint(const Face& a, const Face& b) { return a.set_intersection(b).empty(); }

}  // namespace detail

/// Every face of dimension at most k.
inline std::set<Face> all_faces(const Complex& c, int k) {
  detail::require_non_void(c);
  if (k < -1) throw std::invalid_argument("skeleton dimension must be at least -1");
  std::set<Face> out;
  for (const Face& f : c.facets()) for_each_subface(f, k + 1, [&](Face g) { out.insert(std::move(g)); });
  return out;
}

/// The k-skeleton as a complex.
inline Complex skeleton(const Complex& c, int k) {
  auto faces = all_faces(c, k);
  return Complex::generated_by(std::vector<Face>(faces.begin(), faces.end()));
}

inline Complex link(const Complex& c, const Face& t) {
  if (!c.contains_face(t)) throw std::invalid_argument("not a face");
  std::vector<Face> out;
  for (const Face& m : c.facets())
    if (m.contains(t)) out.push_back(m.set_difference(t));
  return Complex::generated_by(std::move(out));
}

/// All faces of c that do not contain t. Returns c when t is not a face.
inline Complex antistar(const Complex& c, const Face& t) {
  detail::require_non_void(c);
  if (!c.contains_face(t)) return c;
  std::vector<Face> out;
  for (const Face& m : c.facets()) {
    if (!m.contains(t)) {
      out.push_back(m);
      continue;
    }
    for (Vertex v : t) out.push_back(m.without(v));
  }
  return Complex::generated_by(std::move(out));
}

inline Complex join(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return Complex::void_complex();
  if (!detail::disjoint(a.vertex_set(), b.vertex_set()))
    throw std::invalid_argument("join requires disjoint vertex sets");
  std::vector<Face> out;
  for (const Face& f : a.facets())
    for (const Face& g : b.facets()) out.push_back(f.set_union(g));
  return Complex::generated_by(std::move(out));
}

/**
 * The subcomplex of `a` generated by the facets of `a` that are not facets
 * of `g`. Both must be pure of one dimension, with every facet of `g` a facet
 * of `a`. Removing a void complex is a no-op.
 */
inline Complex complement(const Complex& a, const Complex& g) {
  if (g.is_void()) return a;
  if (a.is_void()) throw std::invalid_argument("cannot remove facets from the void complex");
  if (!a.is_pure() || !g.is_pure() || a.dim() != g.dim())
    throw std::invalid_argument("complement requires pure complexes of equal dimension");
  const auto& af = a.facets();
  for (const Face& f : g.facets())
    if (!std::binary_search(af.begin(), af.end(), f))
      throw std::invalid_argument("subtracted complex is not a full-dimensional subcomplex");
  std::vector<Face> out;
  std::set_difference(af.begin(), af.end(), g.facets().begin(), g.facets().end(), std::back_inserter(out));
  return Complex::generated_by(std::move(out));
}

inline Complex unite(const Complex& a, const Complex& b) {
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  std::vector<Face> out = a.facets();
  out.insert(out.end(), b.facets().begin(), b.facets().end());
  return Complex::generated_by(std::move(out));
}

inline Complex intersect(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return Complex::void_complex();
  std::vector<Face> out;
  for (const Face& f : a.facets())
    for (const Face& g : b.facets()) out.push_back(f.set_intersection(g));
  return Complex::generated_by(std::move(out));
}

/// True iff every face of a is a face of b.
inline bool is_subcomplex(const Complex& a, const Complex& b) {
  if (a.is_void()) return true;
  if (b.is_void()) return false;
  return std::all_of(a.facets().begin(), a.facets().end(), [&](const Face& f) { return b.contains_face(f); });
}

inline FVector f_vector(const Complex& c) {
  detail::require_non_void(c);
  const int d = c.dim();
  FVector fv{std::vector<std::int64_t>(static_cast<std::size_t>(d + 2), 0)};
  for (const Face& f : all_faces(c, d)) ++fv.counts[f.size()];
  return fv;
}

/**
 * h-vector of a (d-1)-dimensional complex from its f-vector, defined by
 * sum_j h_j x^{d-j} = sum_i f_{i-1} (x-1)^{d-i}.
 */
inline HVector h_vector(const FVector& f, int d) {
  if (d < 0 || f.counts.size() != static_cast<std::size_t>(d + 1))
    throw std::invalid_argument("f-vector length does not match d");
  HVector h{std::vector<std::int64_t>(static_cast<std::size_t>(d + 1), 0)};
  for (int j = 0; j <= d; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) {
      const std::int64_t term = binomial(d - i, j - i) * f.counts[static_cast<std::size_t>(i)];
      s += ((j - i) % 2 == 0) ? term : -term;
    }
    h.h[static_cast<std::size_t>(j)] = s;
  }
  return h;
}

/// Number of facets containing each ridge of a pure complex.
inline std::map<Face, int> ridge_degrees(const Complex& c) {
  std::map<Face, int> deg;
  for (const Face& f : c.facets())
    for (Vertex v : f) ++deg[f.without(v)];
  return deg;
}

/**
 * Boundary of a pure pseudomanifold: the closure of the ridges lying in
 * exactly one facet. The empty complex when there are none.
 */
inline Complex boundary_complex(const Complex& b) {
  detail::require_non_void(b);
  if (!b.is_pure()) throw std::invalid_argument("boundary requires a pure complex");
  std::vector<Face> out;
  for (const auto& [ridge, count] : ridge_degrees(b)) {
    if (count >= 3) throw std::invalid_argument("not a pseudomanifold");
    if (count == 1) out.push_back(ridge);
  }
  if (out.empty()) return Complex::empty_complex();
  return Complex::generated_by(std::move(out));
}

namespace detail {

inline std::size_t gf2_rank(std::vector<boost::dynamic_bitset<>> rows) {
  std::unordered_map<std::size_t, boost::dynamic_bitset<>> pivots;
  std::size_t rank = 0;
  for (auto& row : rows) {
    while (row.any()) {
      const std::size_t p = row.find_first();
      auto it = pivots.find(p);
      if (it == pivots.end()) {
        pivots.emplace(p, row);
        ++rank;
        break;
      }
      row ^= it->second;
    }
  }
  return rank;
}

}  // namespace detail

/// Reduced Betti numbers over GF(2) in dimensions -1 .. dim(c).
inline std::vector<int> z2_reduced_betti(const Complex& c) {
  detail::require_non_void(c);
  const int d = c.dim();
  std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(d + 2));
  for (const Face& f : all_faces(c, d)) by_size[f.size()].push_back(f);

  // rank[s] = rank of the boundary map from faces of size s to size s-1.
  std::vector<std::size_t> rank(static_cast<std::size_t>(d + 3), 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    std::unordered_map<Face, std::size_t, FaceHash> index;
    for (std::size_t i = 0; i < by_size[s - 1].size(); ++i) index.emplace(by_size[s - 1][i], i);
    std::vector<boost::dynamic_bitset<>> rows;
    rows.reserve(by_size[s].size());
    for (const Face& f : by_size[s]) {
      boost::dynamic_bitset<> row(by_size[s - 1].size());
      for (Vertex v : f) row.set(index.at(f.without(v)));
      rows.push_back(std::move(row));
    }
    rank[s] = detail::gf2_rank(std::move(rows));
  }
  std::vector<int> betti;
  for (std::size_t s = 0; s < by_size.size(); ++s)
    betti.push_back(static_cast<int>(by_size[s].size() - rank[s] - rank[s + 1]));
  return betti;
}

}  // namespace sqz
