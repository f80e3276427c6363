#pragma once

#include <iosfwd>
#include <string>

#include "fmmc/graph.hpp"

namespace fmmc {

// Graph text format: "n m" on the first line, then m lines "u v".
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);

// Embedding CSV: row v holds the coordinates of f(v), printed with 17
// significant digits so that a write/read cycle is bit-exact.
Embedding read_embedding_csv(std::istream& in);
void write_embedding_csv(std::ostream& out, const Embedding& f);
Embedding read_embedding_file(const std::string& path);

// "%.17g" formatting shared by the text writers.
std::string format_double(double x);

}  // namespace fmmc
