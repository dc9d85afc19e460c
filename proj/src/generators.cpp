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

#include "domforce/generators.hpp"

#include <array>
#include <charconv>
#include <string>
#include <utility>

#include "domforce/errors.hpp"

namespace domforce {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
};

constexpr std::array<FamilyInfo, 15> kFamilies{{
    {Family::path, "path", 1},
    {Family::cycle, "cycle", 1},
    {Family::complete, "complete", 1},
    {Family::complete_bipartite, "bipartite", 2},
    {Family::star, "star", 1},
    {Family::wheel, "wheel", 1},
    {Family::ladder, "ladder", 1},
    {Family::hypercube, "hypercube", 1},
    {Family::coconut_tree, "coconut", 2},
    {Family::diamond_snake, "diamond", 1},
    {Family::triangular_snake, "triangular", 1},
    {Family::helm, "helm", 1},
    {Family::pineapple, "pineapple", 2},
    {Family::dove_tail, "dovetail", 1},
    {Family::petersen, "petersen", 0},
}};

const FamilyInfo& info(Family family) {
  for (const auto& fi : kFamilies) {
    if (fi.family == family) return fi;
  }
  throw GraphError("unknown family");
}

constexpr int kMaxHypercubeDimension = 20;
constexpr int kMaxParameter = 1'000'000;

void require_param(const FamilySpec& spec, int index, int min_value,
                   std::string_view what) {
  int value = spec.params[index];
  if (value < min_value || value > kMaxParameter) {
    throw GraphError(std::string(info(spec.family).name) + ": " +
                     std::string(what) + " must be at least " +
                     std::to_string(min_value) + ", got " +
                     std::to_string(value));
  }
}

void validate(const FamilySpec& spec) {
  const auto& fi = info(spec.family);
  if (static_cast<int>(spec.params.size()) != fi.arity) {
    throw GraphError(std::string(fi.name) + " takes " +
                     std::to_string(fi.arity) + " parameter(s), got " +
                     std::to_string(spec.params.size()));
  }
  switch (spec.family) {
    case Family::path:
    case Family::complete:
    case Family::star:
    case Family::ladder:
    case Family::diamond_snake:
    case Family::triangular_snake:
      require_param(spec, 0, 1, "n");
      break;
    case Family::cycle:
      require_param(spec, 0, 3, "n");
      break;
    case Family::complete_bipartite:
    case Family::coconut_tree:
      require_param(spec, 0, 1, "m");
      require_param(spec, 1, 1, "n");
      break;
    case Family::wheel:
      require_param(spec, 0, 4, "n");
      break;
    case Family::hypercube:
      require_param(spec, 0, 0, "k");
      if (spec.params[0] > kMaxHypercubeDimension) {
        throw GraphError("hypercube: dimension above " +
                         std::to_string(kMaxHypercubeDimension));
      }
      break;
    case Family::helm:
      require_param(spec, 0, 4, "m");
      break;
    case Family::pineapple:
      require_param(spec, 0, 3, "m");
      require_param(spec, 1, 2, "n");
      break;
    case Family::dove_tail:
      require_param(spec, 0, 2, "n");
      break;
    case Family::petersen:
      break;
  }
}

std::string indexed(char prefix, int i) { return prefix + std::to_string(i); }

// Appends prefix1..prefixN.
void push_labels(std::vector<std::string>& labels, char prefix, int count,
                 int first = 1) {
  for (int i = 0; i < count; ++i) labels.push_back(indexed(prefix, first + i));
}

struct Built {
  int order = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
};

Built construct(const FamilySpec& spec) {
  Built b;
  auto& e = b.edges;
  auto& labels = b.labels;
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path: {
      b.order = p[0];
      for (int i = 0; i + 1 < p[0]; ++i) e.push_back({i, i + 1});
      push_labels(labels, 'v', p[0]);
      break;
    }
    case Family::cycle: {
      b.order = p[0];
      for (int i = 0; i < p[0]; ++i) e.push_back({i, (i + 1) % p[0]});
      push_labels(labels, 'v', p[0]);
      break;
    }
    case Family::complete: {
      b.order = p[0];
      for (int i = 0; i < p[0]; ++i) {
        for (int j = i + 1; j < p[0]; ++j) e.push_back({i, j});
      }
      push_labels(labels, 'v', p[0]);
      break;
    }
    case Family::complete_bipartite: {
      int m = p[0], n = p[1];
      b.order = m + n;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) e.push_back({i, m + j});
      }
      push_labels(labels, 'u', m);
      push_labels(labels, 'v', n);
      break;
    }
    case Family::star: {
      int n = p[0];
      b.order = n + 1;
      for (int j = 1; j <= n; ++j) e.push_back({0, j});
      labels.push_back("u1");
      push_labels(labels, 'v', n);
      break;
    }
    case Family::wheel: {
      int rim = p[0] - 1;
      b.order = p[0];
      for (int i = 0; i < rim; ++i) {
        e.push_back({0, 1 + i});
        e.push_back({1 + i, 1 + (i + 1) % rim});
      }
      push_labels(labels, 'v', p[0], 0);
      break;
    }
    case Family::ladder: {
      int n = p[0];
      b.order = 2 * n;
      for (int i = 0; i < n; ++i) {
        e.push_back({i, n + i});
        if (i + 1 < n) {
          e.push_back({i, i + 1});
          e.push_back({n + i, n + i + 1});
        }
      }
      push_labels(labels, 'u', n);
      push_labels(labels, 'v', n);
      break;
    }
    case Family::hypercube: {
      int k = p[0];
      b.order = 1 << k;
      for (int v = 0; v < b.order; ++v) {
        for (int bit = 0; bit < k; ++bit) {
          int w = v ^ (1 << bit);
          if (v < w) e.push_back({v, w});
        }
        std::string bits;
        for (int bit = k - 1; bit >= 0; --bit) bits += ((v >> bit) & 1) ? '1' : '0';
        labels.push_back(k == 0 ? "e" : bits);
      }
      break;
    }
    case Family::coconut_tree: {
      int m = p[0], n = p[1];
      b.order = m + n;
      for (int i = 0; i + 1 < m; ++i) e.push_back({i, i + 1});
      for (int j = 0; j < n; ++j) e.push_back({0, m + j});
      push_labels(labels, 'v', m);
      push_labels(labels, 'u', n);
      break;
    }
    case Family::diamond_snake: {
      int n = p[0];
      b.order = 3 * n + 1;
      auto u = [](int i) { return i; };
      auto v = [n](int i) { return n + i; };
      auto w = [n](int i) { return 2 * n + 1 + i; };
      for (int i = 0; i < n; ++i) {
        e.push_back({u(i), v(i)});
        e.push_back({u(i), v(i + 1)});
        e.push_back({w(i), v(i)});
        e.push_back({w(i), v(i + 1)});
      }
      push_labels(labels, 'u', n);
      push_labels(labels, 'v', n + 1);
      push_labels(labels, 'w', n);
      break;
    }
    case Family::triangular_snake: {
      int n = p[0];
      b.order = 2 * n + 1;
      for (int i = 0; i < n; ++i) {
        e.push_back({i, i + 1});
        e.push_back({n + 1 + i, i});
        e.push_back({n + 1 + i, i + 1});
      }
      push_labels(labels, 'v', n + 1);
      push_labels(labels, 'u', n);
      break;
    }
    case Family::helm: {
      int m = p[0];
      b.order = 2 * m + 1;
      for (int i = 0; i < m; ++i) {
        e.push_back({0, 1 + i});
        e.push_back({1 + i, 1 + (i + 1) % m});
        e.push_back({1 + i, 1 + m + i});
      }
      push_labels(labels, 'v', m + 1, 0);
      push_labels(labels, 'u', m);
      break;
    }
    case Family::pineapple: {
      int m = p[0], n = p[1];
      b.order = m + n;
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) e.push_back({i, j});
      }
      for (int j = 0; j < n; ++j) e.push_back({0, m + j});
      push_labels(labels, 'v', m);
      push_labels(labels, 'u', n);
      break;
    }
    case Family::dove_tail: {
      int n = p[0];
      b.order = n + 1;
      for (int i = 1; i <= n; ++i) {
        e.push_back({0, i});
        if (i < n) e.push_back({i, i + 1});
      }
      push_labels(labels, 'v', n + 1, 0);
      break;
    }
    case Family::petersen: {
      b.order = 10;
      for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, 5 + i});
        e.push_back({5 + i, 5 + (i + 2) % 5});
      }
      push_labels(labels, 'u', 5);
      push_labels(labels, 'v', 5);
      break;
    }
  }
  return b;
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad parameter '" + std::string(text) + "' in family spec '" +
                     std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  validate(spec);
  Built b = construct(spec);
  return Graph(b.order, b.edges, std::move(b.labels));
}

Graph splitting(const Graph& g, const SolverLimits& limits) {
  const int n = g.order();
  limits.require(2 * n);
  std::vector<Edge> edges = g.edges();
  std::vector<Edge> original = edges;
  for (const Edge& e : original) {
    edges.push_back({e.u + n, e.v});
    edges.push_back({e.v + n, e.u});
  }
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
  for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v) + "'");
  return Graph(2 * n, edges, std::move(labels));
}

Graph build(const GraphSpec& spec, const SolverLimits& limits) {
  Graph g = generate(spec.base);
  for (int i = 0; i < spec.split_depth; ++i) g = splitting(g, limits);
  return g;
}

std::string family_display_label(const FamilySpec& spec, Vertex v) {
  validate(spec);
  Built b = construct(spec);
  if (v < 0 || v >= b.order) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for " +
                     to_string(spec));
  }
  return b.labels[v];
}

std::string_view family_name(Family family) { return info(family).name; }

int family_arity(Family family) { return info(family).arity; }

GraphSpec parse_graph_spec(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  GraphSpec out;
  constexpr std::string_view kSplit = "split(";
  while (text.starts_with(kSplit)) {
    if (!text.ends_with(')')) {
      throw ParseError("unbalanced split(...) in '" + std::string(whole) + "'");
    }
    text = trim(text.substr(kSplit.size(), text.size() - kSplit.size() - 1));
    ++out.split_depth;
  }
  auto colon = text.find(':');
  std::string_view name = trim(text.substr(0, colon));
  const FamilyInfo* found = nullptr;
  for (const auto& fi : kFamilies) {
    if (fi.name == name) found = &fi;
  }
  if (found == nullptr) {
    throw ParseError("unknown family '" + std::string(name) + "' in '" +
                     std::string(whole) + "'");
  }
  out.base.family = found->family;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      out.base.params.push_back(parse_int(trim(rest.substr(0, comma)), whole));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (static_cast<int>(out.base.params.size()) != found->arity) {
    throw ParseError(std::string(found->name) + " takes " +
                     std::to_string(found->arity) + " parameter(s) in '" +
                     std::string(whole) + "'");
  }
  validate(out.base);
  return out;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

std::string to_string(const GraphSpec& spec) {
  std::string out = to_string(spec.base);
  for (int i = 0; i < spec.split_depth; ++i) out = "split(" + out + ")";
  return out;
}

}  // namespace domforce
