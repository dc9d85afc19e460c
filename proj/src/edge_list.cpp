// Copyright 2026 The domforce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "domforce/edge_list.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "domforce/errors.hpp"

namespace domforce {
namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Reads exactly two integers from a line; nullopt on anything else.
std::optional<std::pair<long long, long long>> two_ints(std::string_view line) {
  std::istringstream in{std::string(line)};
  long long a = 0;
  long long b = 0;
  if (!(in >> a >> b)) return std::nullopt;
  std::string extra;
  if (in >> extra) return std::nullopt;
  return std::make_pair(a, b);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto ints = two_ints(line);
    if (!ints) fail(line_no, "expected two integers");
    if (!header) {
      if (ints->first < 1) fail(line_no, "order must be at least 1");
      if (ints->second < 0) fail(line_no, "edge count must be non-negative");
      if (ints->first > 1'000'000) fail(line_no, "order too large");
      header = ints;
      continue;
    }
    if (static_cast<long long>(edges.size()) == header->second) {
      fail(line_no, "more edge lines than declared");
    }
    auto [u, v] = *ints;
    if (u < 0 || v < 0 || u >= header->first || v >= header->first) {
      fail(line_no, "vertex id out of range");
    }
    if (u == v) fail(line_no, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!header) throw ParseError("edge list: missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw ParseError("edge list: header declares " +
                     std::to_string(header->second) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(header->first), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      out << "# label " << v << ' ' << g.label(v) << '\n';
    }
  }
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace domforce
