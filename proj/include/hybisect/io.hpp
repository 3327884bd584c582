#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hybisect/hypergraph.hpp"

namespace hybisect {

// Canonical text format. First line "n r" (uniform) or "n mixed maxr";
// every following non-comment line is an edge as space-separated vertex
// indices, optionally followed by "x k" for multiplicity k. Lines starting
// with '#' are ignored.

namespace detail {

struct ParsedLine {
  std::vector<int> vertices;
  long long mult = 1;
};

inline ParsedLine parse_edge_line(const std::string& line, const std::string& where) {
  std::istringstream in(line);
  ParsedLine out;
  std::string tok;
  while (in >> tok) {
    if (tok == "x") {
      if (!(in >> out.mult) || out.mult < 1)
        throw std::runtime_error(where + ": bad multiplicity");
      std::string rest;
      if (in >> rest) throw std::runtime_error(where + ": trailing tokens after multiplicity");
      break;
    }
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.vertices.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error(where + ": not a vertex index: '" + tok + "'");
    }
  }
  return out;
}

inline bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

inline Hypergraph read_hypergraph(std::istream& in, const std::string& name = "<stream>") {
  std::string line;
  int lineno = 0;
  int n = -1, r = -1;
  std::vector<std::vector<int>> edges;
  std::vector<long long> mult;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank_or_comment(line)) continue;
    std::string where = name + ":" + std::to_string(lineno);
    if (n < 0) {
      std::istringstream hs(line);
      std::string second;
      if (!(hs >> n >> second) || n < 0)
        throw std::runtime_error(where + ": expected header 'n r'");
      if (second == "mixed")
        throw std::runtime_error(where + ": mixed hypergraph; use the mixed reader");
      try {
        r = std::stoi(second);
      } catch (const std::exception&) {
        throw std::runtime_error(where + ": expected header 'n r'");
      }
      if (r < 2) throw std::runtime_error(where + ": uniformity must be at least 2");
      continue;
    }
    auto parsed = detail::parse_edge_line(line, where);
    if (static_cast<int>(parsed.vertices.size()) != r)
      throw std::runtime_error(where + ": edge has " + std::to_string(parsed.vertices.size()) +
                               " vertices, expected " + std::to_string(r));
    for (int v : parsed.vertices)
      if (v < 0 || v >= n) throw std::runtime_error(where + ": vertex out of range");
    edges.push_back(std::move(parsed.vertices));
    mult.push_back(parsed.mult);
  }
  if (n < 0) throw std::runtime_error(name + ": empty input, expected header 'n r'");
  try {
    return make_hypergraph(n, r, std::move(edges), std::move(mult));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(name + ": " + e.what());
  }
}

inline MixedHypergraph read_mixed_hypergraph(std::istream& in,
                                             const std::string& name = "<stream>") {
  std::string line;
  int lineno = 0;
  int n = -1, max_r = -1;
  std::vector<std::vector<int>> edges;
  std::vector<long long> mult;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank_or_comment(line)) continue;
    std::string where = name + ":" + std::to_string(lineno);
    if (n < 0) {
      std::istringstream hs(line);
      std::string kw;
      if (!(hs >> n >> kw >> max_r) || kw != "mixed" || n < 0 || max_r < 2)
        throw std::runtime_error(where + ": expected header 'n mixed maxr'");
      continue;
    }
    auto parsed = detail::parse_edge_line(line, where);
    if (static_cast<int>(parsed.vertices.size()) < 2 ||
        static_cast<int>(parsed.vertices.size()) > max_r)
      throw std::runtime_error(where + ": edge size out of [2, maxr]");
    for (int v : parsed.vertices)
      if (v < 0 || v >= n) throw std::runtime_error(where + ": vertex out of range");
    edges.push_back(std::move(parsed.vertices));
    mult.push_back(parsed.mult);
  }
  if (n < 0) throw std::runtime_error(name + ": empty input, expected header 'n mixed maxr'");
  try {
    return make_mixed_hypergraph(n, max_r, std::move(edges), std::move(mult));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(name + ": " + e.what());
  }
}

inline void write_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << h.n << " " << h.r << "\n";
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    for (std::size_t j = 0; j < h.edges[i].size(); ++j)
      out << (j ? " " : "") << h.edges[i][j];
    if (h.mult[i] != 1) out << " x " << h.mult[i];
    out << "\n";
  }
}

inline void write_mixed_hypergraph(const MixedHypergraph& h, std::ostream& out) {
  out << h.n << " mixed " << h.max_r << "\n";
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    for (std::size_t j = 0; j < h.edges[i].size(); ++j)
      out << (j ? " " : "") << h.edges[i][j];
    if (h.mult[i] != 1) out << " x " << h.mult[i];
    out << "\n";
  }
}

inline Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in, path);
}

inline MixedHypergraph read_mixed_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_mixed_hypergraph(in, path);
}

inline void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_hypergraph(h, out);
}

inline void write_mixed_hypergraph_file(const MixedHypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_mixed_hypergraph(h, out);
}

// Structured-object mirror of the text format, for tooling.
inline nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  return nlohmann::json{
      {"n", h.n}, {"r", h.r}, {"edges", h.edges}, {"multiplicities", h.mult}};
}

inline nlohmann::json hypergraph_to_json(const MixedHypergraph& h) {
  return nlohmann::json{
      {"n", h.n}, {"max_r", h.max_r}, {"edges", h.edges}, {"multiplicities", h.mult}};
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  return make_hypergraph(j.at("n").get<int>(), j.at("r").get<int>(),
                         j.at("edges").get<std::vector<std::vector<int>>>(),
                         j.value("multiplicities", std::vector<long long>{}));
}

inline MixedHypergraph mixed_hypergraph_from_json(const nlohmann::json& j) {
  return make_mixed_hypergraph(j.at("n").get<int>(), j.at("max_r").get<int>(),
                               j.at("edges").get<std::vector<std::vector<int>>>(),
                               j.value("multiplicities", std::vector<long long>{}));
}

}  // namespace hybisect
