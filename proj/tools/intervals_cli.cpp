// Command line front end: poset inspection and export, interval posets,
// Coxeter polynomials, derived-invariant comparison, theorem sweeps, the
// path-poset conjecture harness, and the orientation search.
//
// Exit codes: 0 success (and "equal" verdicts), 1 computed inequality or a
// failed verification, 2 usage or input errors.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "intervals/intervals.hpp"

namespace {

using namespace intervals;

void print_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << "\n";
  if (p.has_labels())
    for (int v = 0; v < p.size(); ++v) out << "# " << v << ": " << p.label(v) << "\n";
  for (auto [u, v] : p.covers()) out << "cover " << u << " " << v << "\n";
}

/// compare operand: a poset file, `int:<file>`, `prod:<file>:<file>`,
/// `dyck:a:b`, or `lattice:a:b`.
Poset parse_spec(const std::string& spec) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t colon = s.find(':', start);
      if (colon == std::string::npos) {
        parts.push_back(s.substr(start));
        return parts;
      }
      parts.push_back(s.substr(start, colon - start));
      start = colon + 1;
    }
  };
  auto as_int = [](const std::string& t) { return detail::parse_index(t, "side length"); };
  if (spec.rfind("int:", 0) == 0)
    return interval_poset(read_poset_file(spec.substr(4))).poset;
  if (spec.rfind("prod:", 0) == 0) {
    std::vector<std::string> parts = split(spec.substr(5));
    if (parts.size() != 2) throw ParseError("prod: needs exactly two poset files");
    return product(read_poset_file(parts[0]), read_poset_file(parts[1]));
  }
  if (spec.rfind("dyck:", 0) == 0) {
    std::vector<std::string> parts = split(spec.substr(5));
    if (parts.size() != 2) throw ParseError("dyck: needs two side lengths");
    return dyck_paths_poset(as_int(parts[0]), as_int(parts[1])).poset;
  }
  if (spec.rfind("lattice:", 0) == 0) {
    std::vector<std::string> parts = split(spec.substr(8));
    if (parts.size() != 2) throw ParseError("lattice: needs two side lengths");
    return lattice_paths_poset(as_int(parts[0]), as_int(parts[1])).poset;
  }
  return read_poset_file(spec);
}

int run(int argc, char** argv) {
  CLI::App app{"finite posets, interval categories, and derived invariants"};
  app.require_subcommand(1);

  CLI::App* poset_cmd = app.add_subcommand("poset", "inspect a poset file");
  poset_cmd->require_subcommand(1);
  std::string show_file, dot_file;
  CLI::App* show_cmd = poset_cmd->add_subcommand("show", "print elements and covers");
  show_cmd->add_option("file", show_file, "poset file")->required();
  CLI::App* dot_cmd = poset_cmd->add_subcommand("dot", "export the Hasse diagram as DOT");
  dot_cmd->add_option("file", dot_file, "poset file")->required();

  std::string intervals_file;
  CLI::App* intervals_cmd =
      app.add_subcommand("intervals", "print the interval poset of a poset file");
  intervals_cmd->add_option("file", intervals_file, "poset file")->required();

  std::string coxeter_file, coxeter_gamma;
  bool coxeter_zero = false;
  CLI::App* coxeter_cmd =
      app.add_subcommand("coxeter", "Coxeter polynomial, ascending coefficients");
  coxeter_cmd->add_option("file", coxeter_file, "poset file");
  coxeter_cmd->add_option("--gamma", coxeter_gamma,
                          "idealmap file; use the pair poset of the ideal map");
  coxeter_cmd->add_flag("--zero", coxeter_zero,
                        "with --gamma: use the zero-pattern category instead");

  std::vector<std::string> compare_specs;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "derived-equivalence invariants of two posets");
  compare_cmd->add_option("specs", compare_specs,
                          "poset file, int:<file>, prod:<f1>:<f2>, dyck:a:b, lattice:a:b")
      ->expected(2);

  std::vector<int> vt_exhaustive;
  int vt_random = -1;
  unsigned long long vt_seed = 0;
  int vt_jobs = 0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-theorem", "tilting and Coxeter checks over ideal-map instances");
  verify_cmd->add_option("--exhaustive", vt_exhaustive,
                         "all posets up to the two sizes, all ideal maps")
      ->expected(2);
  verify_cmd->add_option("--random", vt_random, "number of random instances");
  verify_cmd->add_option("--seed", vt_seed, "seed for --random");
  verify_cmd->add_option("--jobs", vt_jobs, "worker threads, 0 = auto");

  int conj_a = 0, conj_b = 0;
  long long conj_max = 200;
  CLI::App* conj_cmd =
      app.add_subcommand("conjecture", "path-poset derived-invariant comparison");
  conj_cmd->add_option("a", conj_a, "vertical side")->required();
  conj_cmd->add_option("b", conj_b, "horizontal side")->required();
  conj_cmd->add_option("--max-size", conj_max, "largest allowed path count");

  int orient_n = 0;
  CLI::App* orient_cmd = app.add_subcommand(
      "orientations-int", "Coxeter polynomials of interval posets of line orientations");
  orient_cmd->add_option("n", orient_n, "number of vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (show_cmd->parsed()) {
    print_poset(std::cout, read_poset_file(show_file));
    return 0;
  }
  if (dot_cmd->parsed()) {
    std::cout << poset_to_dot(read_poset_file(dot_file));
    return 0;
  }
  if (intervals_cmd->parsed()) {
    print_poset(std::cout, interval_poset(read_poset_file(intervals_file)).poset);
    return 0;
  }
  if (coxeter_cmd->parsed()) {
    bool have_file = !coxeter_file.empty();
    bool have_gamma = !coxeter_gamma.empty();
    if (have_file == have_gamma)
      throw ParseError("coxeter needs exactly one of a poset file or --gamma");
    if (coxeter_zero && !have_gamma) throw ParseError("--zero requires --gamma");
    ThinCategory cat = [&]() {
      if (have_file) return incidence_category(read_poset_file(coxeter_file));
      GammaData g = build_gamma(read_ideal_map_file(coxeter_gamma));
      return coxeter_zero ? gamma_zero_category(g) : incidence_category(g.gamma());
    }();
    std::cout << coxeter_polynomial(cat).polynomial.coeff_line() << "\n";
    return 0;
  }
  if (compare_cmd->parsed()) {
    InvariantComparison r = derived_invariant_report(
        incidence_category(parse_spec(compare_specs[0])),
        incidence_category(parse_spec(compare_specs[1])));
    std::cout << r.machine_lines()
              << "polynomials " << (r.polynomials_equal ? "equal" : "differ") << "\n";
    return r.all_equal() ? 0 : 1;
  }
  if (verify_cmd->parsed()) {
    if (!vt_exhaustive.empty() && vt_random >= 0)
      throw ParseError("choose one of --exhaustive and --random");
    SweepReport rep;
    if (vt_random >= 0) {
      std::cout << "random sweep: " << vt_random << " instances, seed " << vt_seed
                << ", sizes up to 4\n";
      rep = theorem_sweep_random(vt_random, vt_seed, 4, 4, vt_jobs);
    } else {
      int nx = 3, ny = 3;
      if (!vt_exhaustive.empty()) {
        nx = vt_exhaustive[0];
        ny = vt_exhaustive[1];
      }
      std::cout << "exhaustive sweep: all posets with |X| <= " << nx << ", |Y| <= "
                << ny << ", all ideal maps\n";
      rep = theorem_sweep_exhaustive(nx, ny, vt_jobs);
    }
    std::cout << rep.summary();
    std::cout << (rep.all_pass() ? "all instances pass\n" : "some instances fail\n");
    return rep.all_pass() ? 0 : 1;
  }
  if (conj_cmd->parsed()) {
    ConjectureReport r = conjecture_report(conj_a, conj_b, conj_max);
    std::cout << r.text();
    return r.invariants.all_equal() ? 0 : 1;
  }
  if (orient_cmd->parsed()) {
    OrientationReport r = orientations_int_search(orient_n);
    std::cout << r.text();
    return r.found_difference ? 1 : 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const intervals::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
