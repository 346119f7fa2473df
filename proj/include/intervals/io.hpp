#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "intervals/errors.hpp"
#include "intervals/exact.hpp"
#include "intervals/gamma.hpp"
#include "intervals/poset.hpp"
#include "intervals/rep.hpp"

namespace intervals {

namespace detail {

/// Strips a # comment and splits on whitespace.
inline std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

inline int parse_index(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("expected a nonnegative ") + what + ", got '" + tok +
                     "'");
  }
}

}  // namespace detail

/// Reads the text format: `poset <n>` then one `cover <i> <j>` line per Hasse
/// cover; # starts a comment. Indices are 0-based decimals.
inline Poset read_poset(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> covers;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "poset") {
      if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": repeated poset header");
      if (toks.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": poset header needs one count");
      n = detail::parse_index(toks[1], "count");
    } else if (toks[0] == "cover") {
      if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": cover before poset header");
      if (toks.size() != 3) throw ParseError("line " + std::to_string(lineno) + ": cover needs two indices");
      covers.push_back({detail::parse_index(toks[1], "index"),
                        detail::parse_index(toks[2], "index")});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing poset header");
  return Poset::from_covers(n, covers);
}

inline Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open poset file '" + path + "'");
  try {
    return read_poset(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << "\n";
  for (auto [u, v] : p.covers()) out << "cover " << u << " " << v << "\n";
}

/// Hasse diagram in DOT, bottom-to-top, covers only.
inline std::string poset_to_dot(const Poset& p) {
  auto escape = [](const std::string& s) {
    std::string e;
    for (char c : s) {
      if (c == '"' || c == '\\') e += '\\';
      e += c;
    }
    return e;
  };
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (int v = 0; v < p.size(); ++v)
    os << "  n" << v << " [label=\"" << escape(p.label(v)) << "\"];\n";
  for (auto [u, v] : p.covers()) os << "  n" << u << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

/// Reads `idealmap`, `X <poset-file>`, `Y <poset-file>`, then one
/// `F <y> <x1> <x2> ...` line per element of Y. Poset paths are resolved
/// relative to the directory of the idealmap file. Closedness and
/// monotonicity are validated on construction.
inline IdealMap read_ideal_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open idealmap file '" + path + "'");
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::string line;
  int lineno = 0;
  bool header = false;
  std::optional<Poset> x, y;
  std::vector<std::vector<char>> assignment;
  std::vector<char> seen;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(path + ": line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "idealmap") {
      if (header) throw fail("repeated idealmap header");
      if (toks.size() != 1) throw fail("idealmap header takes no arguments");
      header = true;
    } else if (toks[0] == "X" || toks[0] == "Y") {
      if (!header) throw fail("poset reference before idealmap header");
      if (toks.size() != 2) throw fail("expected one file name");
      Poset p = read_poset_file((dir / toks[1]).string());
      if (toks[0] == "X") {
        if (x) throw fail("repeated X");
        x = std::move(p);
      } else {
        if (y) throw fail("repeated Y");
        y = std::move(p);
        assignment.assign(static_cast<std::size_t>(y->size()), {});
        seen.assign(static_cast<std::size_t>(y->size()), 0);
      }
    } else if (toks[0] == "F") {
      if (!x || !y) throw fail("F line before X and Y");
      if (toks.size() < 2) throw fail("F needs an element of Y");
      int b = detail::parse_index(toks[1], "index");
      if (b >= y->size()) throw fail("Y index out of range");
      if (seen[static_cast<std::size_t>(b)]) throw fail("repeated F line");
      seen[static_cast<std::size_t>(b)] = 1;
      std::vector<char> subset(static_cast<std::size_t>(x->size()), 0);
      for (std::size_t i = 2; i < toks.size(); ++i) {
        int v = detail::parse_index(toks[i], "index");
        if (v >= x->size()) throw fail("X index out of range");
        subset[static_cast<std::size_t>(v)] = 1;
      }
      assignment[static_cast<std::size_t>(b)] = std::move(subset);
    } else {
      throw fail("unknown directive '" + toks[0] + "'");
    }
  }
  ++lineno;
  if (!header) throw fail("missing idealmap header");
  if (!x || !y) throw fail("missing X or Y");
  for (int b = 0; b < y->size(); ++b)
    if (!seen[static_cast<std::size_t>(b)])
      throw fail("missing F line for y=" + std::to_string(b));
  return IdealMap(std::move(*x), std::move(*y), std::move(assignment));
}

/// Writes the idealmap file; the poset files named inside must be written
/// separately next to it.
inline void write_ideal_map(std::ostream& out, const IdealMap& f,
                            const std::string& x_file, const std::string& y_file) {
  out << "idealmap\nX " << x_file << "\nY " << y_file << "\n";
  for (int b = 0; b < f.y().size(); ++b) {
    out << "F " << b;
    for (int v = 0; v < f.x().size(); ++v)
      if (f.contains(b, v)) out << " " << v;
    out << "\n";
  }
}

inline std::string rational_token(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

/// Debug dump: `dim <idx> <d>` per element, then `map <i> <j>` per cover with
/// the matrix rows as p/q tokens.
inline void write_module(std::ostream& out, const Module& m) {
  const Poset& p = m.poset();
  for (int z = 0; z < p.size(); ++z) out << "dim " << z << " " << m.dim(z) << "\n";
  for (auto [u, v] : p.covers()) {
    out << "map " << u << " " << v << "\n";
    const Matrix<Rat>& f = m.map(u, v);
    for (int i = 0; i < f.rows(); ++i) {
      for (int j = 0; j < f.cols(); ++j) out << (j ? " " : "") << rational_token(f(i, j));
      out << "\n";
    }
  }
}

}  // namespace intervals
