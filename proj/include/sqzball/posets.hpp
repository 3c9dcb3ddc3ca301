/**
 * The posets F_{2k}^{[m,n]} (unions of k adjacent pairs) and P_k^n
 * (strictly increasing k-tuples bounded by n-k), both under the
 * componentwise order, together with antichains, order ideals, the shift
 * S - 1, restrictions S(J), the isomorphism R : P -> F and antichain
 * enumeration.
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cyclic.hpp"
#include "faces.hpp"

namespace sqz {

/// An element of F_{2k}: a disjoint union of k adjacent pairs {i, i+1}.
class FFacet {
 public:
  FFacet() = default;

  explicit FFacet(Face face) : face_(std::move(face)) {
    if (face_.size() % 2 != 0) throw std::invalid_argument("F-element must have an even number of vertices");
    for (std::size_t j = 0; j < face_.size(); j += 2)
      if (face_[j + 1] != face_[j] + 1)
        throw std::invalid_argument("F-element must be a union of adjacent pairs");
  }

  static FFacet from_starts(const std::vector<int>& starts) {
    std::vector<Vertex> v;
    for (int s : starts) {
      v.push_back(s);
      v.push_back(s + 1);
    }
    return FFacet(Face(std::move(v)));
  }

  const Face& face() const noexcept { return face_; }
  const std::vector<Vertex>& coords() const noexcept { return face_.vertices(); }
  int k() const noexcept { return static_cast<int>(face_.size() / 2); }

  std::vector<int> starts() const {
    std::vector<int> s;
    for (std::size_t j = 0; j < face_.size(); j += 2) s.push_back(face_[j]);
    return s;
  }

  /// Smallest vertex; the empty element behaves as +infinity.
  int min() const noexcept { return face_.empty() ? std::numeric_limits<int>::max() : face_.front(); }

  friend auto operator<=>(const FFacet&, const FFacet&) = default;
  friend bool operator==(const FFacet&, const FFacet&) = default;

 private:
  Face face_;
};

/// An element of P_k^n: a strictly increasing k-tuple of positive integers.
class GridPoint {
 public:
  GridPoint() = default;
  GridPoint(std::initializer_list<int> coords) : GridPoint(std::vector<int>(coords)) {}
  explicit GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] < 1 || (i > 0 && coords_[i] <= coords_[i - 1]))
        throw std::invalid_argument("grid point must be strictly increasing and positive");
  }

  const std::vector<int>& coords() const noexcept { return coords_; }
  int k() const noexcept { return static_cast<int>(coords_.size()); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int min() const noexcept { return coords_.empty() ? std::numeric_limits<int>::max() : coords_.front(); }

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;

 private:
  std::vector<int> coords_;
};

/// Componentwise order G <=_p F.
template <class E>
bool leq_p(const E& g, const E& f) {
  const auto& a = g.coords();
  const auto& b = f.coords();
  if (a.size() != b.size()) throw std::invalid_argument("mixed ambient");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// G <_p F: G <=_p F - (1, ..., 1). Vacuously true for the empty element.
template <class E>
bool prec_p(const E& g, const E& f) {
  const auto& a = g.coords();
  const auto& b = f.coords();
  if (a.size() != b.size()) throw std::invalid_argument("mixed ambient");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] >= b[i]) return false;
  return true;
}

template <class E>
bool comparable(const E& a, const E& b) {
  return leq_p(a, b) || leq_p(b, a);
}

inline std::vector<FFacet> enumerate_F(int k, int m, int n) {
  std::vector<FFacet> out;
  for (Face& f : adjacent_pair_unions(k, m, n)) out.emplace_back(std::move(f));
  return out;
}

/// P_k^n in lexicographic order.
inline std::vector<GridPoint> enumerate_P(int k, int n) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  std::vector<GridPoint> out;
  std::vector<int> buf;
  const int top = n - k;
  auto rec = [&](auto&& self, int next) -> void {
    if (buf.size() == static_cast<std::size_t>(k)) {
      out.emplace_back(buf);
      return;
    }
    for (int x = next; x + (k - static_cast<int>(buf.size())) - 1 <= top; ++x) {
      buf.push_back(x);
      self(self, x + 1);
      buf.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace detail {

template <class E>
struct PosetTraits;

template <>
struct PosetTraits<FFacet> {
  static std::vector<FFacet> ground(int k, int n) { return enumerate_F(k, 1, n); }
  static bool in_ambient(const FFacet& e, int k, int n) { return e.k() == k && (e.face().empty() || e.face().back() <= n); }
  static FFacet minus_one(const FFacet& e) {
    std::vector<Vertex> v(e.coords());
    for (auto& x : v) --x;
    return FFacet(Face(std::move(v)));
  }
};

template <>
struct PosetTraits<GridPoint> {
  static std::vector<GridPoint> ground(int k, int n) { return enumerate_P(k, n); }
  static bool in_ambient(const GridPoint& e, int k, int n) { return e.k() == k && (k == 0 || e.coords().back() <= n - k); }
  static GridPoint minus_one(const GridPoint& e) {
    std::vector<int> v(e.coords());
    for (auto& x : v) --x;
    return GridPoint(std::move(v));
  }
};

}  // namespace detail

/**
 * A set of pairwise incomparable elements of F_{2k}^{[1,n]} or P_k^n,
 * stored sorted lexicographically. May be empty; the k = 0 antichain {()}
 * is distinct from the empty antichain.
 */
template <class Element>
class BasicAntichain {
 public:
  BasicAntichain(int k, int n, std::vector<Element> elements = {}) : k_(k), n_(n), elems_(std::move(elements)) {
    if (k < 0 || n < 0) throw std::invalid_argument("ambient parameters must be non-negative");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (const Element& e : elems_)
      if (!detail::PosetTraits<Element>::in_ambient(e, k, n))
        throw std::invalid_argument("antichain element outside the ambient poset");
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (std::size_t j = i + 1; j < elems_.size(); ++j)
        if (comparable(elems_[i], elems_[j])) throw std::invalid_argument("elements are comparable; not an antichain");
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<Element>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  bool contains(const Element& e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

  friend bool operator==(const BasicAntichain&, const BasicAntichain&) = default;

 private:
  int k_;
  int n_;
  std::vector<Element> elems_;
};

using Antichain = BasicAntichain<FFacet>;
using GridAntichain = BasicAntichain<GridPoint>;

namespace detail {

template <class E>
void require_same_ambient(const BasicAntichain<E>& a, const BasicAntichain<E>& b) {
  if (a.k() != b.k() || a.n() != b.n()) throw std::invalid_argument("mixed ambient");
}

template <class E>
bool in_ideal(const BasicAntichain<E>& s, const E& x) {
  return std::any_of(s.begin(), s.end(), [&](const E& a) { return leq_p(x, a); });
}

}  // namespace detail

/// T <=_p S: every element of T lies below some element of S.
template <class E>
bool antichain_leq(const BasicAntichain<E>& t, const BasicAntichain<E>& s) {
  detail::require_same_ambient(t, s);
  return std::all_of(t.begin(), t.end(), [&](const E& g) { return detail::in_ideal(s, g); });
}

/// T <_p S: every element of T lies strictly below (by all-ones) some element of S.
template <class E>
bool antichain_prec(const BasicAntichain<E>& t, const BasicAntichain<E>& s) {
  detail::require_same_ambient(t, s);
  return std::all_of(t.begin(), t.end(), [&](const E& g) {
    return std::any_of(s.begin(), s.end(), [&](const E& f) { return prec_p(g, f); });
  });
}

template <class E>
std::vector<E> maximal_elements(std::vector<E> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<E> out;
  for (const E& x : xs) {
    bool dominated = std::any_of(xs.begin(), xs.end(), [&](const E& y) { return !(x == y) && leq_p(x, y); });
    if (!dominated) out.push_back(x);
  }
  return out;
}

/// The order ideal generated by an antichain, in lexicographic order.
template <class E>
std::vector<E> order_ideal(const BasicAntichain<E>& s) {
  std::vector<E> out;
  if (s.empty()) return out;
  for (E& x : detail::PosetTraits<E>::ground(s.k(), s.n()))
    if (detail::in_ideal(s, x)) out.push_back(std::move(x));
  return out;
}

/// {x - 1 : x in S, min(x) > 1}.
template <class E>
BasicAntichain<E> shift_down(const BasicAntichain<E>& s) {
  std::vector<E> out;
  for (const E& x : s)
    if (x.min() > 1) out.push_back(detail::PosetTraits<E>::minus_one(x));
  return BasicAntichain<E>(s.k(), s.n(), std::move(out));
}

/// Elements of the ideal of S whose minimum is at least m.
inline std::vector<FFacet> ideal_with_min(const Antichain& s, int m) {
  if (m < 1) throw std::invalid_argument("minimum start must be at least 1");
  std::vector<FFacet> out;
  for (FFacet& x : order_ideal(s))
    if (x.min() >= m) out.push_back(std::move(x));
  return out;
}

/**
 * S(J) for an interval J = [j, j+2l-1] with 1 <= l <= k: the maximal
 * elements of {H subset of [j+2l, n] : J u H in F(S)}, an antichain of
 * F_{2(k-l)}. Returns {()} when J itself is in F(S) and l = k, and the empty
 * antichain when no H exists (including when J leaves [n]).
 */
inline Antichain restrict(const Antichain& s, const Face& j_interval) {
  const std::size_t size = j_interval.size();
  if (size == 0 || size % 2 != 0 || j_interval.back() - j_interval.front() + 1 != static_cast<int>(size))
    throw std::invalid_argument("J must be an interval of even size");
  const int l = static_cast<int>(size / 2);
  if (l > s.k()) throw std::invalid_argument("J is longer than the elements of S");
  const int j = j_interval.front();
  std::vector<FFacet> hits;
  for (FFacet& h : enumerate_F(s.k() - l, j + 2 * l, s.n())) {
    FFacet joined(j_interval.set_union(h.face()));
    if (detail::in_ideal(s, joined)) hits.push_back(std::move(h));
  }
  return Antichain(s.k() - l, s.n(), maximal_elements(std::move(hits)));
}

inline FFacet R_map(const GridPoint& x) {
  std::vector<Vertex> v;
  for (int j = 0; j < x.k(); ++j) {
    v.push_back(x[j] + j);
    v.push_back(x[j] + j + 1);
  }
  return FFacet(Face(std::move(v)));
}

inline GridPoint R_inv(const FFacet& f) {
  std::vector<int> x;
  const auto s = f.starts();
  for (std::size_t j = 0; j < s.size(); ++j) x.push_back(s[j] - static_cast<int>(j));
  return GridPoint(std::move(x));
}

inline Antichain R_map(const GridAntichain& a) {
  std::vector<FFacet> out;
  for (const GridPoint& x : a) out.push_back(R_map(x));
  return Antichain(a.k(), a.n(), std::move(out));
}

inline GridAntichain R_inv(const Antichain& s) {
  std::vector<GridPoint> out;
  for (const FFacet& f : s) out.push_back(R_inv(f));
  return GridAntichain(s.k(), s.n(), std::move(out));
}

/// G = (1, n-2k+2, ..., n-k), whose image under R is [1,2] u [n-2k+3, n].
inline GridPoint maximal_slope_point(int k, int n) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("maximal-slope element requires k >= 1 and n >= 2k");
  std::vector<int> x{1};
  for (int j = 2; j <= k; ++j) x.push_back(n - 2 * k + j);
  return GridPoint(std::move(x));
}

namespace detail {

/**
 * Depth-first enumeration of antichains of P_k^n in lexicographic order of
 * their sorted element lists; visit receives element indices into `ground`.
 */
template <class Visit>
void enumerate_antichain_indices(const std::vector<GridPoint>& ground, std::optional<std::size_t> must, Visit&& visit) {
  const std::size_t m = ground.size();
  std::vector<boost::dynamic_bitset<>> incomparable(m, boost::dynamic_bitset<>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!comparable(ground[i], ground[j])) incomparable[i].set(j);

  std::vector<std::size_t> chosen;
  boost::dynamic_bitset<> all(m);
  all.set();
  if (must) {
    all &= incomparable[*must];
    all.set(*must);
  }
  auto rec = [&](auto&& self, const boost::dynamic_bitset<>& allowed, bool has_must) -> void {
    if (!must || has_must) visit(chosen);
    const std::size_t from = chosen.empty() ? 0 : chosen.back() + 1;
    for (std::size_t j = (from == 0 ? allowed.find_first() : allowed.find_next(from - 1)); j < m;
         j = allowed.find_next(j)) {
      if (must && !has_must && j > *must) break;
      chosen.push_back(j);
      self(self, allowed & incomparable[j], has_must || (must && j == *must));
      chosen.pop_back();
    }
  };
  rec(rec, all, false);
}

inline std::optional<std::size_t> index_of(const std::vector<GridPoint>& ground, const std::optional<GridPoint>& x) {
  if (!x) return std::nullopt;
  auto it = std::lower_bound(ground.begin(), ground.end(), *x);
  if (it == ground.end() || !(*it == *x)) throw std::invalid_argument("required element is not in P_k^n");
  return static_cast<std::size_t>(it - ground.begin());
}

}  // namespace detail

/**
 * Calls visit(const GridAntichain&) on every antichain of P_k^n exactly once,
 * optionally only those containing `must_contain`, in lexicographic order of
 * sorted element lists (the empty antichain first).
 */
template <class Visit>
void for_each_antichain(int k, int n, const std::optional<GridPoint>& must_contain, Visit&& visit) {
  const auto ground = enumerate_P(k, n);
  const auto must = detail::index_of(ground, must_contain);
  detail::enumerate_antichain_indices(ground, must, [&](const std::vector<std::size_t>& idx) {
    std::vector<GridPoint> elems;
    elems.reserve(idx.size());
    for (std::size_t i : idx) elems.push_back(ground[i]);
    visit(GridAntichain(k, n, std::move(elems)));
  });
}

inline std::vector<GridAntichain> enumerate_antichains(int k, int n, const std::optional<GridPoint>& must_contain = {}) {
  std::vector<GridAntichain> out;
  for_each_antichain(k, n, must_contain, [&](const GridAntichain& a) { out.push_back(a); });
  return out;
}

inline std::uint64_t count_antichains(int k, int n, const std::optional<GridPoint>& must_contain = {}) {
  const auto ground = enumerate_P(k, n);
  std::uint64_t count = 0;
  detail::enumerate_antichain_indices(ground, detail::index_of(ground, must_contain),
                                      [&](const std::vector<std::size_t>&) { ++count; });
  return count;
}

// Text format: elements as parenthesized comma-separated tuples separated by
// spaces, e.g. "(1,2,7,8) (3,4,6,7)". The empty antichain is the empty string.

template <class E>
std::string format_antichain(const BasicAntichain<E>& a) {
  std::string out;
  for (const E& e : a) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < e.coords().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e.coords()[i]);
    }
    out += ')';
  }
  return out;
}

/**
 * Parses an antichain of F_{2k}^{[1,n]}. Tuples of length 2k are read as
 * F-elements; tuples of length k (k >= 1) are read as points of P_k^n and
 * mapped through R.
 */
inline Antichain parse_antichain(std::string_view text, int k, int n) {
  std::vector<FFacet> elems;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("malformed antichain at offset " + std::to_string(pos) + ": " + what);
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> tuple;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
    } else {
      while (true) {
        skip_ws();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc()) fail("expected integer");
        pos = static_cast<std::size_t>(ptr - text.data());
        tuple.push_back(value);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    if (tuple.size() == static_cast<std::size_t>(2 * k)) {
      elems.emplace_back(Face(tuple));
    } else if (k >= 1 && tuple.size() == static_cast<std::size_t>(k)) {
      GridPoint x(tuple);
      if (x.coords().back() > n - k) fail("grid point outside P_k^n");
      elems.push_back(R_map(x));
    } else {
      fail("tuple length must be 2k or k");
    }
  }
  return Antichain(k, n, std::move(elems));
}

}  // namespace sqz
