/**
 * Facet-list text format and JSON certificates.
 *
 * Facet list: a header `complex d=<facet-size> n=<max-vertex-label>`, then
 * one facet per line as space-separated ascending integers. The single line
 * `EMPTY` encodes the empty complex and `VOID` the void complex (both with
 * d=0 n=0). LF line endings, no trailing spaces.
 */
#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "faces.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace sqz {

struct FacetFile {
  Complex complex;
  int d = 0;
  int n = 0;
};

inline void write_facet_list(std::ostream& out, const Complex& c) {
  if (c.is_void()) {
    out << "complex d=0 n=0\nVOID\n";
    return;
  }
  if (c.is_empty()) {
    out << "complex d=0 n=0\nEMPTY\n";
    return;
  }
  const Face vs = c.vertex_set();
  out << "complex d=" << c.dim() + 1 << " n=" << (vs.empty() ? 0 : vs.back()) << '\n';
  for (const Face& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

inline std::string to_facet_list(const Complex& c) {
  std::ostringstream os;
  write_facet_list(os, c);
  return os.str();
}

inline FacetFile read_facet_list(std::istream& in) {
  auto fail = [](int line, const std::string& what) -> void {
    throw std::invalid_argument("facet list line " + std::to_string(line) + ": " + what);
  };
  std::string line;
  if (!std::getline(in, line)) fail(1, "missing header");
  FacetFile file;
  {
    std::istringstream hs(line);
    std::string tag, dpart, npart, extra;
    hs >> tag >> dpart >> npart;
    if (tag != "complex" || dpart.rfind("d=", 0) != 0 || npart.rfind("n=", 0) != 0 || (hs >> extra))
      fail(1, "expected 'complex d=<facet-size> n=<max-vertex-label>'");
    try {
      file.d = std::stoi(dpart.substr(2));
      file.n = std::stoi(npart.substr(2));
    } catch (const std::exception&) {
      fail(1, "malformed header numbers");
    }
    if (file.d < 0 || file.n < 0) fail(1, "negative header values");
  }
  std::vector<Face> facets;
  std::optional<Complex> special;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (special) fail(lineno, "content after EMPTY/VOID");
    if (line == "EMPTY" || line == "VOID") {
      if (!facets.empty()) fail(lineno, "EMPTY/VOID mixed with facets");
      special = line == "EMPTY" ? Complex::empty_complex() : Complex::void_complex();
      continue;
    }
    std::istringstream ls(line);
    std::vector<Vertex> v;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception&) {
        fail(lineno, "not an integer: " + tok);
      }
      if (used != tok.size()) fail(lineno, "not an integer: " + tok);
      if (x > file.n) fail(lineno, "vertex label exceeds n");
      v.push_back(x);
    }
    if (static_cast<int>(v.size()) > file.d) fail(lineno, "facet larger than d");
    try {
      facets.emplace_back(std::move(v));
    } catch (const std::invalid_argument& e) {
      fail(lineno, e.what());
    }
  }
  if (special) {
    file.complex = *special;
  } else {
    if (facets.empty()) fail(lineno, "no facets; use EMPTY or VOID");
    file.complex = Complex::generated_by(std::move(facets));
  }
  return file;
}

inline FacetFile parse_facet_list(const std::string& text) {
  std::istringstream is(text);
  return read_facet_list(is);
}

inline nlohmann::json witness_json(const Witness& w) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const Face& f) const { return f.vertices(); }
    nlohmann::json operator()(const ShellingOrder& order) const {
      nlohmann::json arr = nlohmann::json::array();
      for (const Face& f : order) arr.push_back(f.vertices());
      return arr;
    }
    nlohmann::json operator()(std::size_t index) const { return index; }
    nlohmann::json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, w);
}

/// {"property": string, "verdict": bool, "witness": value|null}; inconclusive reports false.
inline nlohmann::json to_json(const Certificate& c) {
  return nlohmann::json{{"property", c.property}, {"verdict", c.holds()}, {"witness", witness_json(c.witness)}};
}

}  // namespace sqz
