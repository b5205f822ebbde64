#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bandrec/graph.hpp"

namespace bandrec {

// Edge-list format: a header line "n m", then m lines "u v" with 0-based
// node ids. Canonical output writes u < v, edges in ascending order, single
// spaces and LF line endings.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Graph parse_graph(std::string_view text);
Graph parse_graph_file(const std::filesystem::path& path);

std::string format_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::filesystem::path& path);

}  // namespace bandrec
