// Command-line front end. run() is kept separate from main() so that the
// test suite can drive every subcommand in-process.
#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqzball/sqzball.hpp"

namespace sqz::cli {

namespace detail {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Antichain argument, either inline text or @path.
inline Antichain antichain_arg(const std::string& text, int k, int n) {
  if (!text.empty() && text.front() == '@') return parse_antichain(slurp(text.substr(1)), k, n);
  return parse_antichain(text, k, n);
}

inline FacetFile facet_file_arg(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return read_facet_list(in);
}

inline std::string sphere_file_name(std::size_t index) {
  std::ostringstream os;
  os << "sphere_" << std::setw(4) << std::setfill('0') << index << ".txt";
  return os.str();
}

}  // namespace detail

/// Runs one subcommand. Exit codes: 0 success, 1 verification failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Squeezed balls, relative squeezed balls and sewn neighborly spheres"};
  app.name(args.empty() ? "sqzball" : std::filesystem::path(args.front()).filename().string());
  app.require_subcommand(1);

  int d = 0, n = 0, k = 0, min_start = 1, n_min = 0, n_max = 0;
  unsigned jobs = 1;
  std::uint64_t budget = 1'000'000;
  bool contains_max = false, count_only = false, k2 = false;
  std::string kind, antichain_text, subtract_text, input, check, parity, out_dir, ambient;

  auto* cyclic = app.add_subcommand("cyclic", "Facets of the boundary of the cyclic polytope C_d(n)");
  cyclic->add_option("--d", d, "Dimension")->required();
  cyclic->add_option("--n", n, "Number of vertices")->required();

  auto* antichains = app.add_subcommand("antichains", "Enumerate antichains of F_{2k}^{[1,n]}");
  antichains->add_option("--k", k)->required();
  antichains->add_option("--n", n)->required();
  antichains->add_flag("--contains-max", contains_max, "Only antichains containing [1,2] u [n-2k+3,n]");
  antichains->add_flag("--count-only", count_only, "Print only the number of antichains");

  auto* ball = app.add_subcommand("ball", "Build a squeezed or relative squeezed ball");
  ball->add_option("--kind", kind)->required()->check(CLI::IsMember({"squeezed", "relative"}));
  ball->add_option("--k", k)->required();
  ball->add_option("--n", n)->required();
  ball->add_option("--antichain", antichain_text, "Tuples such as \"(1,2,7,8) (3,4,6,7)\" or @path")->required();
  ball->add_option("--min-start", min_start, "Minimum vertex of the facets kept");
  auto* ball_subtract = ball->add_option("--subtract", subtract_text, "Antichain T with T <_p S");

  auto* verify = app.add_subcommand("verify", "Certify a property of a facet-list file");
  verify->add_option("--input", input)->required();
  verify->add_option("--check", check, "neighborly=I | stacked=R | shelling | sphere | ball | pseudomanifold")->required();
  verify->add_option("--budget", budget, "Node budget for the shelling search");

  auto* shelling = app.add_subcommand("shelling", "Search for or construct a shelling order");
  auto* shelling_input = shelling->add_option("--input", input, "Facet-list file to search");
  shelling->add_option("--budget", budget, "Node budget for the search");
  shelling->add_flag("--k2", k2, "Use the explicit k = 2 block order for B(S) \\ B(T)");
  shelling->add_option("--k", k);
  shelling->add_option("--n", n);
  auto* shelling_antichain = shelling->add_option("--antichain", antichain_text);
  auto* shelling_subtract = shelling->add_option("--subtract", subtract_text, "Defaults to S - 1");

  auto* census = app.add_subcommand("census", "Generate the even (sewn) or odd (boundary) sphere census");
  census->add_option("--parity", parity)->required()->check(CLI::IsMember({"even", "odd"}));
  census->add_option("--k", k)->required();
  census->add_option("--n", n)->required();
  census->add_option("--out", out_dir, "Directory for sphere files and manifest.json");
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* census_ambient = census->add_option("--ambient", ambient, "Ambient sphere for the even case (experimental)");

  auto* counts = app.add_subcommand("census-counts", "Census sizes against the antichain comparison count");
  counts->add_option("--k", k)->required();
  counts->add_option("--n-min", n_min)->required();
  counts->add_option("--n-max", n_max)->required();

  std::vector<const char*> argv;
  argv.push_back(args.empty() ? "sqzball" : args.front().c_str());
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (cyclic->parsed()) {
      write_facet_list(out, cyclic_boundary(CyclicParams(d, n)));
      return 0;
    }

    if (antichains->parsed()) {
      std::optional<GridPoint> must;
      if (contains_max) must = maximal_slope_point(k, n);
      if (count_only) {
        out << count_antichains(k, n, must) << '\n';
      } else {
        for_each_antichain(k, n, must, [&](const GridAntichain& a) { out << format_antichain(R_map(a)) << '\n'; });
      }
      return 0;
    }

    if (ball->parsed()) {
      const Antichain s = detail::antichain_arg(antichain_text, k, n);
      Complex result;
      if (kind == "squeezed") {
        if (ball_subtract->count()) throw detail::UsageError("--subtract applies to --kind relative only");
        result = squeezed_ball(s, min_start);
      } else if (!ball_subtract->count() && min_start == 1) {
        result = relative_ball(s);
      } else {
        const Antichain t = ball_subtract->count() ? detail::antichain_arg(subtract_text, k, n) : shift_down(s);
        result = relative_ball_general(s, t, min_start);
      }
      write_facet_list(out, result);
      return 0;
    }

    if (verify->parsed()) {
      const FacetFile file = detail::facet_file_arg(input);
      const Complex& c = file.complex;
      Certificate cert;
      auto param = [&](const std::string& prefix) {
        try {
          return std::stoi(check.substr(prefix.size()));
        } catch (const std::exception&) {
          throw detail::UsageError("malformed --check value: " + check);
        }
      };
      if (check.rfind("neighborly=", 0) == 0) {
        cert = is_i_neighborly(c, param("neighborly="), Face::interval(1, file.n));
      } else if (check.rfind("stacked=", 0) == 0) {
        cert = is_r_stacked(c, param("stacked="));
      } else if (check == "shelling") {
        cert = find_shelling(c, budget);
      } else if (check == "sphere") {
        cert = sphere_sanity(c);
      } else if (check == "ball") {
        cert = ball_sanity(c);
      } else if (check == "pseudomanifold") {
        cert = is_pseudomanifold(c);
      } else {
        throw detail::UsageError("unknown --check value: " + check);
      }
      out << to_json(cert).dump() << '\n';
      return cert.holds() ? 0 : 1;
    }

    if (shelling->parsed()) {
      Certificate cert;
      if (k2) {
        if (shelling_input->count() || !shelling_antichain->count())
          throw detail::UsageError("--k2 needs --k, --n and --antichain, not --input");
        const Antichain s = detail::antichain_arg(antichain_text, k, n);
        const Antichain t = shelling_subtract->count() ? detail::antichain_arg(subtract_text, k, n) : shift_down(s);
        cert = is_shelling(relative_ball_general(s, t, 1), k2_shelling(s, t));
      } else {
        if (!shelling_input->count()) throw detail::UsageError("shelling needs --input or --k2");
        cert = find_shelling(detail::facet_file_arg(input).complex, budget);
      }
      out << to_json(cert).dump() << '\n';
      return cert.holds() ? 0 : 1;
    }

    if (census->parsed()) {
      const bool even = parity == "even";
      if (census_ambient->count() && !even) throw detail::UsageError("--ambient applies to the even census only");
      std::optional<Complex> ambient_complex;
      if (census_ambient->count()) ambient_complex = detail::facet_file_arg(ambient).complex;
      const auto entries = even ? even_census(k, n, jobs, ambient_complex) : odd_census(k, n, jobs);

      std::set<std::vector<Face>> spheres, restrictions;
      nlohmann::json manifest;
      manifest["parity"] = parity;
      manifest["k"] = k;
      manifest["n"] = n;
      manifest["count"] = entries.size();
      manifest["experimental"] = ambient_complex.has_value();
      manifest["entries"] = nlohmann::json::array();
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const CensusEntry& e = entries[i];
        spheres.insert(e.sphere.facets());
        if (even) restrictions.insert(antistar(e.sphere, Face{n + 1}).facets());
        nlohmann::json entry{{"index", i + 1},
                             {"antichain", format_antichain(e.antichain)},
                             {"ball_facets", e.ball.num_facets()},
                             {"sphere_facets", e.sphere.num_facets()},
                             {"certificates", nlohmann::json::array()}};
        for (const Certificate& c : e.certificates)
          entry["certificates"].push_back({{"property", c.property}, {"verdict", c.holds()}});
        if (!out_dir.empty()) {
          const std::string name = detail::sphere_file_name(i + 1);
          std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
          write_facet_list(f, e.sphere);
          entry["file"] = name;
        }
        manifest["entries"].push_back(std::move(entry));
      }
      const bool distinct = spheres.size() == entries.size() && (!even || restrictions.size() == entries.size());
      manifest["pairwise_distinct"] = distinct;
      if (out_dir.empty()) {
        out << manifest.dump(2) << '\n';
      } else {
        std::ofstream f(std::filesystem::path(out_dir) / "manifest.json", std::ios::binary);
        f << manifest.dump(2) << '\n';
        out << "wrote " << entries.size() << " spheres to " << out_dir << '\n';
      }
      return distinct ? 0 : 1;
    }

    if (counts->parsed()) {
      bool all_ok = true;
      out << "n census bound ok\n";
      for (const CensusCount& row : census_counts(k, n_min, n_max)) {
        out << row.n << ' ' << row.census << ' ' << row.bound << ' ' << (row.ok ? "yes" : "no") << '\n';
        all_ok = all_ok && row.ok;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace sqz::cli
