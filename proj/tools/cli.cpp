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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domforce/catalog.hpp"
#include "domforce/domination.hpp"
#include "domforce/edge_list.hpp"
#include "domforce/errors.hpp"
#include "domforce/forcing.hpp"
#include "domforce/generators.hpp"
#include "domforce/solvers.hpp"

namespace domforce::cli {
namespace {

using Json = nlohmann::ordered_json;

struct InputOptions {
  std::string family;
  std::string file;
  std::string format = "text";
  std::optional<int> cap;
};

struct LoadedGraph {
  Graph graph;
  std::string source;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  auto* family = cmd->add_option("--family", in.family,
                                 "family spec, e.g. cycle:5 or split(path:4)");
  auto* file = cmd->add_option("--file", in.file, "edge-list file");
  family->excludes(file);
}

void add_output(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--format", in.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cap", in.cap, "maximum order for exact solvers")
      ->check(CLI::Range(1, kHardMaxOrder));
}

SolverLimits limits_for(const InputOptions& in) {
  SolverLimits limits = SolverLimits::from_environment();
  if (in.cap) limits.max_order = *in.cap;
  return limits;
}

LoadedGraph load(const InputOptions& in, const SolverLimits& limits) {
  if (in.family.empty() == in.file.empty()) {
    throw std::invalid_argument("exactly one of --family or --file is required");
  }
  if (!in.family.empty()) {
    GraphSpec spec = parse_graph_spec(in.family);
    return {build(spec, limits), to_string(spec)};
  }
  return {load_edge_list(in.file), in.file};
}

std::string id_list(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Json set_json(const Graph& g, const VertexSet& s) {
  Json ids = Json::array();
  Json labels = Json::array();
  for (Vertex v : s.members()) {
    ids.push_back(v);
    labels.push_back(g.label(v));
  }
  return Json{{"ids", ids}, {"labels", labels}};
}

std::string set_text(const Graph& g, const VertexSet& s) {
  return "ids " + id_list(s) + " labels " + g.format_set(s);
}

Json graph_json(const LoadedGraph& lg) {
  return Json{{"source", lg.source},
              {"order", lg.graph.order()},
              {"size", lg.graph.edge_count()}};
}

std::string graph_text(const LoadedGraph& lg) {
  return "graph " + lg.source + "  order " + std::to_string(lg.graph.order()) +
         "  size " + std::to_string(lg.graph.edge_count()) + "\n";
}

std::string paths_text(const Graph& g, const InvariantResult& r, bool labels) {
  std::string out;
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    if (i > 0) out += " | ";
    for (std::size_t j = 0; j < r.paths[i].size(); ++j) {
      if (j > 0) out += '-';
      Vertex v = r.paths[i][j];
      out += labels ? g.label(v) : std::to_string(v);
    }
  }
  return out;
}

// Parses "0,1,3" into a vertex set of g; an empty string is the empty set.
VertexSet parse_initial(const Graph& g, const std::string& text) {
  VertexSet s(g.order());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw ParseError("empty entry in --initial '" + text + "'");
    }
    std::string_view tok(item.data() + b, e - b + 1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw ParseError("bad vertex id '" + std::string(tok) + "' in --initial");
    }
    if (v < 0 || v >= g.order()) {
      throw ParseError("vertex id " + std::to_string(v) +
                       " out of range for order " + std::to_string(g.order()));
    }
    s.insert(v);
  }
  return s;
}

int cmd_generate(const InputOptions& in, std::ostream& out) {
  SolverLimits limits = limits_for(in);
  LoadedGraph lg = load(in, limits);
  const Graph& g = lg.graph;
  if (in.format == "json") {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    Json labels = Json::array();
    for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
    Json doc = graph_json(lg);
    doc["edges"] = edges;
    doc["labels"] = labels;
    out << doc.dump(2) << '\n';
  } else {
    out << "# " << lg.source << '\n';
    write_edge_list(out, g);
  }
  return kExitOk;
}

struct ComputeFlags {
  bool z = false;
  bool gamma = false;
  bool fd = false;
  bool pt = false;
  bool pathcover = false;
  bool all = false;
};

int cmd_compute(const InputOptions& in, ComputeFlags flags, std::ostream& out) {
  SolverLimits limits = limits_for(in);
  LoadedGraph lg = load(in, limits);
  const Graph& g = lg.graph;
  if (flags.all) flags = {true, true, true, true, true, true};
  if (!(flags.z || flags.gamma || flags.fd || flags.pt || flags.pathcover)) {
    flags.z = flags.gamma = flags.fd = true;
  }

  std::vector<InvariantResult> results;
  if (flags.z) results.push_back(zero_forcing_number(g, limits));
  if (flags.gamma) results.push_back(domination_number(g, limits));
  if (flags.fd) results.push_back(dom_forcing_number(g, limits));
  if (flags.pt) results.push_back(min_propagation_time(g, limits));
  if (flags.pathcover) results.push_back(path_cover_number(g, limits));

  if (in.format == "json") {
    Json list = Json::array();
    for (const auto& r : results) {
      Json item{{"invariant", invariant_name(r.invariant)},
                {"value", r.value},
                {"witness", set_json(g, r.witness)},
                {"explored", r.explored}};
      if (r.invariant == Invariant::path_cover) item["paths"] = r.paths;
      list.push_back(item);
    }
    out << Json{{"graph", graph_json(lg)}, {"results", list}}.dump(2) << '\n';
    return kExitOk;
  }
  out << graph_text(lg);
  for (const auto& r : results) {
    char head[32];
    std::snprintf(head, sizeof head, "%-7s %3d  ",
                  std::string(invariant_name(r.invariant)).c_str(), r.value);
    out << head;
    if (r.invariant == Invariant::path_cover) {
      out << "paths " << paths_text(g, r, false) << "  labels "
          << paths_text(g, r, true) << '\n';
    } else {
      out << set_text(g, r.witness) << '\n';
    }
  }
  return kExitOk;
}

int cmd_trace(const InputOptions& in, const std::string& initial,
              std::ostream& out) {
  SolverLimits limits = limits_for(in);
  LoadedGraph lg = load(in, limits);
  const Graph& g = lg.graph;
  VertexSet b = parse_initial(g, initial);
  ForcingTrace trace = forcing_closure(g, b);
  std::optional<int> pt;
  if (trace.complete()) pt = trace.round_count();

  if (in.format == "json") {
    Json rounds = Json::array();
    for (const auto& round : trace.rounds) {
      Json forces = Json::array();
      for (const Force& f : round.forces) {
        forces.push_back({{"forcer", f.forcer},
                          {"forced", f.forced},
                          {"forcer_label", g.label(f.forcer)},
                          {"forced_label", g.label(f.forced)}});
      }
      rounds.push_back({{"index", round.index}, {"forces", forces}});
    }
    Json doc{{"graph", graph_json(lg)},
             {"initial", set_json(g, trace.initial)},
             {"rounds", rounds},
             {"final", set_json(g, trace.final_black)},
             {"complete", trace.complete()},
             {"propagation_time", pt ? Json(*pt) : Json(nullptr)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << graph_text(lg);
  out << "initial " << set_text(g, trace.initial) << '\n';
  for (const auto& round : trace.rounds) {
    out << "round " << round.index << ":";
    for (const Force& f : round.forces) {
      out << ' ' << g.label(f.forcer) << "->" << g.label(f.forced) << " ("
          << f.forcer << "->" << f.forced << ')';
    }
    out << '\n';
  }
  out << "final " << set_text(g, trace.final_black) << '\n';
  if (pt) {
    out << "propagation_time " << *pt << '\n';
  } else {
    out << "stalled: not a zero forcing set\n";
  }
  return kExitOk;
}

int cmd_bounds(const InputOptions& in, bool split, std::ostream& out) {
  SolverLimits limits = limits_for(in);
  LoadedGraph lg = load(in, limits);
  const Graph& g = lg.graph;
  InvariantResult fd = dom_forcing_number(g, limits);
  BoundOptions options;
  options.include_split = split;
  std::vector<BoundReport> reports = fd_bounds(g, options, limits);

  auto applies_to_g = [](const BoundReport& r) {
    return r.source != BoundSource::split_double;
  };
  if (in.format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) {
      Json item{{"source", bound_source_name(r.source)},
                {"lower", r.lower},
                {"upper", r.upper},
                {"applies_to", applies_to_g(r) ? "graph" : "splitting"}};
      if (applies_to_g(r)) {
        item["contains_fd"] = r.lower <= fd.value && fd.value <= r.upper;
      }
      list.push_back(item);
    }
    Json doc{{"graph", graph_json(lg)},
             {"F_d", {{"value", fd.value}, {"witness", set_json(g, fd.witness)}}},
             {"bounds", list}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << graph_text(lg);
  out << "F_d " << fd.value << "  " << set_text(g, fd.witness) << '\n';
  for (const auto& r : reports) {
    char line[96];
    std::snprintf(line, sizeof line, "%-14s [%d, %d]  ",
                  std::string(bound_source_name(r.source)).c_str(), r.lower,
                  r.upper);
    out << line;
    if (!applies_to_g(r)) {
      out << "bounds F_d of the splitting graph\n";
    } else if (r.lower <= fd.value && fd.value <= r.upper) {
      out << "contains F_d\n";
    } else {
      out << "VIOLATED by F_d\n";
    }
  }
  return kExitOk;
}

struct RawOverride {
  std::string name;
  std::string lo;
  std::string hi;
};

RawOverride parse_override(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw std::invalid_argument("--param expects name=lo..hi, got '" + text + "'");
  }
  std::string name = text.substr(0, eq);
  std::string range = text.substr(eq + 1);
  auto dots = range.find("..");
  if (dots == std::string::npos) return {name, range, range};
  return {name, range.substr(0, dots), range.substr(dots + 2)};
}

int resolve_value(const catalog::ParamSpec& ps, const std::string& text) {
  for (std::size_t i = 0; i < ps.choices.size(); ++i) {
    if (ps.choices[i] == text) return static_cast<int>(i);
  }
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw std::invalid_argument("bad value '" + text + "' for parameter " + ps.name);
  }
  return v;
}

struct VerifyOptions {
  std::string theorem;
  std::vector<std::string> params;
  std::string profile = "quick";
  bool list = false;
};

Json result_json(const catalog::TheoremCheckResult& r) {
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  return Json{{"theorem", r.theorem_id},
              {"measure", catalog::measure_name(r.measure)},
              {"params", params},
              {"graph", r.graph},
              {"order", r.order},
              {"expected",
               {{"kind", r.expected.is_exact() ? "exact" : "interval"},
                {"lo", r.expected.lo},
                {"hi", r.expected.hi},
                {"formula", r.expected.formula}}},
              {"computed", r.computed ? Json(*r.computed) : Json(nullptr)},
              {"verdict", catalog::verdict_name(r.verdict)},
              {"millis", r.millis},
              {"witness", r.witness},
              {"note", r.note}};
}

int cmd_verify(const InputOptions& in, const VerifyOptions& vo, std::ostream& out) {
  using namespace catalog;
  if (vo.list) {
    for (const ClosedForm& form : entries()) {
      out << form.id;
      for (const ParamSpec& ps : form.params) {
        out << ' ' << ps.name << '=' << ps.quick_lo << ".." << ps.quick_hi;
      }
      out << '\n';
    }
    return kExitOk;
  }
  SolverLimits limits = limits_for(in);
  Profile profile = parse_profile(vo.profile);
  std::vector<RawOverride> raw;
  for (const auto& p : vo.params) raw.push_back(parse_override(p));

  std::vector<TheoremCheckResult> results;
  std::vector<bool> used(raw.size(), false);
  bool any_form = false;
  for (const ClosedForm& form : entries()) {
    if (form.id.find(vo.theorem) == std::string::npos) continue;
    any_form = true;
    std::vector<ParamRange> overrides;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      for (const ParamSpec& ps : form.params) {
        if (ps.name != raw[i].name) continue;
        overrides.push_back(
            {ps.name, resolve_value(ps, raw[i].lo), resolve_value(ps, raw[i].hi)});
        used[i] = true;
      }
    }
    auto part = verify(form.id, overrides, profile, limits);
    results.insert(results.end(), part.begin(), part.end());
  }
  if (!any_form) {
    throw std::invalid_argument("no theorem id contains '" + vo.theorem + "'");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!used[i]) {
      throw std::invalid_argument("no selected theorem has parameter '" +
                                  raw[i].name + "'");
    }
  }

  Summary s = summarize(results);
  if (in.format == "json") {
    Json list = Json::array();
    for (const auto& r : results) list.push_back(result_json(r));
    Json doc{{"profile", profile_name(profile)},
             {"results", list},
             {"summary",
              {{"total", s.total},
               {"match", s.match},
               {"in_interval", s.in_interval},
               {"mismatch", s.mismatch},
               {"skipped", s.skipped},
               {"millis", s.millis}}}};
    out << doc.dump(2) << '\n';
  } else {
    out << format_table(results);
  }
  return s.mismatch > 0 ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact zero forcing, domination and dom-forcing computations",
               "domforce"};
  app.require_subcommand(1);

  InputOptions in;
  ComputeFlags flags;
  std::string initial;
  bool split = false;
  VerifyOptions vo;

  auto* generate = app.add_subcommand("generate", "emit a family graph as an edge list");
  generate->add_option("--family", in.family, "family spec")->required();
  add_output(generate, in);

  auto* compute = app.add_subcommand("compute", "compute invariants with witnesses");
  add_input(compute, in);
  add_output(compute, in);
  compute->add_flag("--z", flags.z, "zero forcing number");
  compute->add_flag("--gamma", flags.gamma, "domination number");
  compute->add_flag("--fd", flags.fd, "dom-forcing number");
  compute->add_flag("--pt", flags.pt, "minimum propagation time");
  compute->add_flag("--pathcover", flags.pathcover, "induced path cover number");
  compute->add_flag("--all", flags.all, "all of the above");

  auto* trace = app.add_subcommand("trace", "run the color-change rule from a set");
  add_input(trace, in);
  add_output(trace, in);
  trace->add_option("--initial", initial, "comma-separated vertex ids")->required();

  auto* bounds = app.add_subcommand("bounds", "report the dom-forcing bounds");
  add_input(bounds, in);
  add_output(bounds, in);
  bounds->add_flag("--split", split, "include the splitting-graph bound");

  auto* verify = app.add_subcommand("verify", "check the closed-form catalog");
  add_output(verify, in);
  verify->add_option("--theorem", vo.theorem, "only ids containing this text");
  verify->add_option("--param", vo.params, "override a range: name=lo..hi");
  verify->add_option("--profile", vo.profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--list", vo.list, "list theorem ids and quick ranges");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(in, out);
    if (compute->parsed()) return cmd_compute(in, flags, out);
    if (trace->parsed()) return cmd_trace(in, initial, out);
    if (bounds->parsed()) return cmd_bounds(in, split, out);
    return cmd_verify(in, vo, out);
  } catch (const CapExceeded& e) {
    err << "domforce: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "domforce: error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace domforce::cli
