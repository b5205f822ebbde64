#include "bandrec/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace bandrec {
namespace {

// Splits one line into exactly two non-negative integers.
std::pair<long long, long long> read_pair(std::string_view line, int line_no) {
  long long values[2];
  std::size_t pos = 0;
  for (int field = 0; field < 2; ++field) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, values[field]);
    if (ec != std::errc{} || ptr == first) {
      throw ParseError(line_no, "expected two integers, got \"" + std::string(line) + "\"");
    }
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  if (pos != line.size()) {
    throw ParseError(line_no, "trailing characters in \"" + std::string(line) + "\"");
  }
  return {values[0], values[1]};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");

  auto [n, m] = read_pair(lines[0], 1);
  if (n < 1 || n > 1'000'000) throw ParseError(1, "node count must lie in 1..1000000");
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError(1, "edge count out of range for n");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(static_cast<int>(lines.size()),
                     "header declares " + std::to_string(m) + " edges but file has " +
                         std::to_string(lines.size() - 1) + " edge lines");
  }

  std::vector<std::vector<Node>> seen(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    auto [u, v] = read_pair(lines[i], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "node out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
    const auto lo = static_cast<Node>(std::min(u, v));
    const auto hi = static_cast<Node>(std::max(u, v));
    auto& row = seen[lo];
    if (std::find(row.begin(), row.end(), hi) != row.end()) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(lo) + "," + std::to_string(hi) + "}");
    }
    row.push_back(hi);
    edges.emplace_back(lo, hi);
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void write_graph_file(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_graph(g);
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace bandrec
