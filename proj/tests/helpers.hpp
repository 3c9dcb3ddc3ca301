#pragma once

#include <vector>

#include "oracles.hpp"
#include "sqzball/sqzball.hpp"

namespace testing_support {

inline std::vector<oracle::Set> sets(const sqz::Complex& c) {
  std::vector<oracle::Set> out;
  for (const sqz::Face& f : c.facets()) out.push_back(f.vertices());
  return out;
}

inline std::vector<oracle::Set> sets(const std::vector<sqz::Face>& faces) {
  std::vector<oracle::Set> out;
  for (const sqz::Face& f : faces) out.push_back(f.vertices());
  return out;
}

inline sqz::Complex complex_of(std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<sqz::Face> fs;
  for (auto f : facets) fs.emplace_back(std::vector<int>(f));
  return sqz::Complex::generated_by(fs);
}

inline sqz::Antichain antichain_of(int k, int n, std::initializer_list<std::initializer_list<int>> elems) {
  std::vector<sqz::FFacet> v;
  for (auto e : elems) v.emplace_back(sqz::Face(std::vector<int>(e)));
  return sqz::Antichain(k, n, v);
}

/// Antichains of F_{2k}^{[1,n]} containing the maximal-slope element, in enumeration order.
inline std::vector<sqz::Antichain> constrained(int k, int n) {
  std::vector<sqz::Antichain> out;
  sqz::for_each_antichain(k, n, sqz::maximal_slope_point(k, n),
                          [&](const sqz::GridAntichain& a) { out.push_back(sqz::R_map(a)); });
  return out;
}

inline std::vector<sqz::Antichain> all_antichains(int k, int n) {
  std::vector<sqz::Antichain> out;
  sqz::for_each_antichain(k, n, std::nullopt, [&](const sqz::GridAntichain& a) { out.push_back(sqz::R_map(a)); });
  return out;
}

}  // namespace testing_support
