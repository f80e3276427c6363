#include "fmmc/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fmmc/errors.hpp"

namespace fmmc {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Graph read_graph(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InvalidInput("graph file: bad header, want 'n m'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v))
      throw InvalidInput("graph file: expected " + std::to_string(m) + " edges, read " +
                         std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  return read_graph(in);
}

Embedding read_embedding_csv(std::istream& in) {
  std::vector<double> coords;
  int rows = 0;
  int dim = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int count = 0;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      errno = 0;
      char* end = nullptr;
      const double x = std::strtod(cell.c_str(), &end);
      while (end != nullptr && (*end == ' ' || *end == '\t')) ++end;
      if (end == cell.c_str() || *end != '\0' || errno == ERANGE)
        throw InvalidInput("embedding csv: bad number '" + cell + "' on row " +
                           std::to_string(rows));
      coords.push_back(x);
      ++count;
    }
    if (dim < 0) dim = count;
    if (count != dim)
      throw InvalidInput("embedding csv: row " + std::to_string(rows) + " has " +
                         std::to_string(count) + " columns, expected " + std::to_string(dim));
    ++rows;
  }
  return Embedding(rows, rows == 0 ? 0 : dim, std::move(coords));
}

void write_embedding_csv(std::ostream& out, const Embedding& f) {
  for (int v = 0; v < f.num_points(); ++v) {
    auto p = f.point(v);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out << ',';
      out << format_double(p[k]);
    }
    out << '\n';
  }
}

Embedding read_embedding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open embedding file '" + path + "'");
  return read_embedding_csv(in);
}

}  // namespace fmmc
