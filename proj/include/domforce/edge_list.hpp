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

#ifndef DOMFORCE_EDGE_LIST_HPP
#define DOMFORCE_EDGE_LIST_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "domforce/graph.hpp"

namespace domforce {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n m
//   u v      (m lines, 0-based ids)
//
// Blank lines and '#' lines are skipped anywhere. Throws ParseError with a
// line number on malformed input.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::filesystem::path& path);

/// Writes the header and edges (u < v, sorted). When the graph carries a
/// label table it is emitted first as "# label <id> <name>" comments.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace domforce

#endif  // DOMFORCE_EDGE_LIST_HPP
