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

#include "domforce/catalog.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "domforce/domination.hpp"
#include "domforce/errors.hpp"
#include "domforce/solvers.hpp"

namespace domforce::catalog {
namespace {

long floor_div(long a, long b) {
  long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

GraphSpec family(Family f, std::vector<int> params, int splits = 0) {
  return GraphSpec{FamilySpec{f, std::move(params)}, splits};
}

ParamSpec param(std::string name, int qlo, int qhi, int flo, int fhi) {
  return ParamSpec{std::move(name), qlo, qhi, flo, fhi};
}

auto always = [](const Params&) { return true; };

Expected exact(long v, std::string formula) {
  return Expected::exact(v, std::move(formula));
}

// Param-free claim helpers keep the table below readable.
Claim claim(Measure m, std::function<Expected(const Params&)> f) {
  return Claim{m, std::move(f)};
}

long split_path_gamma(long n) {
  switch (n % 4) {
    case 0: return n / 2;
    case 2: return (n + 2) / 2;
    default: return (n + 1) / 2;
  }
}

std::vector<ClosedForm> build_entries() {
  using M = Measure;
  std::vector<ClosedForm> out;

  // Paths and cycles.
  out.push_back({"fd_path", {param("n", 1, 12, 1, 20)}, always,
                 [](const Params& p) { return family(Family::path, {p[0]}); },
                 {claim(M::fd, [](const Params& p) {
                   return exact(p[0] / 3 + 1, "floor(n/3)+1");
                 })}});
  out.push_back({"z_gamma_path", {param("n", 1, 12, 1, 20)}, always,
                 [](const Params& p) { return family(Family::path, {p[0]}); },
                 {claim(M::z, [](const Params&) { return exact(1, "1"); }),
                  claim(M::gamma, [](const Params& p) {
                    return exact(ceil_div(p[0], 3), "ceil(n/3)");
                  })}});
  out.push_back({"fd_cycle", {param("n", 3, 15, 3, 20)}, always,
                 [](const Params& p) { return family(Family::cycle, {p[0]}); },
                 {claim(M::fd, [](const Params& p) {
                   long n = p[0];
                   return n % 3 == 2 ? exact(n / 3 + 2, "floor(n/3)+2 (n=2 mod 3)")
                                     : exact(n / 3 + 1, "floor(n/3)+1 (n=0,1 mod 3)");
                 })}});
  out.push_back({"z_gamma_cycle", {param("n", 3, 15, 3, 20)}, always,
                 [](const Params& p) { return family(Family::cycle, {p[0]}); },
                 {claim(M::z, [](const Params&) { return exact(2, "2"); }),
                  claim(M::gamma, [](const Params& p) {
                    return exact(ceil_div(p[0], 3), "ceil(n/3)");
                  })}});

  // Ladders.
  auto ladder = [](const Params& p) { return family(Family::ladder, {p[0]}); };
  out.push_back({"z_ladder", {param("n", 2, 8, 2, 10)}, always, ladder,
                 {claim(M::z, [](const Params&) { return exact(2, "2"); })}});
  out.push_back({"gamma_ladder", {param("n", 2, 8, 2, 10)}, always, ladder,
                 {claim(M::gamma, [](const Params& p) {
                   return exact(p[0] / 2 + 1, "floor(n/2+1)");
                 })}});
  out.push_back({"fd_ladder", {param("n", 2, 8, 2, 10)}, always, ladder,
                 {claim(M::fd, [](const Params& p) {
                   return exact(ceil_div(p[0], 2) + 1, "ceil(n/2)+1");
                 })}});

  // Coconut trees CT(m, n).
  auto coconut = [](const Params& p) {
    return family(Family::coconut_tree, {p[0], p[1]});
  };
  std::vector<ParamSpec> mn{param("m", 1, 6, 1, 8), param("n", 1, 4, 1, 6)};
  out.push_back({"gamma_coconut", mn, always, coconut,
                 {claim(M::gamma, [](const Params& p) {
                   return exact(1 + ceil_div(p[0] - 2, 3), "1+ceil((m-2)/3)");
                 })}});
  out.push_back({"z_coconut", mn, always, coconut,
                 {claim(M::z, [](const Params& p) { return exact(p[1], "n"); })}});
  out.push_back({"fd_coconut", mn, always, coconut,
                 {claim(M::fd, [](const Params& p) {
                   return exact(p[1] + ceil_div(p[0] - 1, 3), "n+ceil((m-1)/3)");
                 })}});

  // Diamond and triangular snakes.
  auto diamond = [](const Params& p) { return family(Family::diamond_snake, {p[0]}); };
  out.push_back({"z_gamma_diamond", {param("n", 1, 5, 1, 7)}, always, diamond,
                 {claim(M::z, [](const Params& p) { return exact(p[0] + 1, "n+1"); }),
                  claim(M::gamma, [](const Params& p) { return exact(p[0] + 1, "n+1"); })}});
  out.push_back({"fd_diamond", {param("n", 1, 5, 1, 7)}, always, diamond,
                 {claim(M::fd, [](const Params& p) {
                   long n = p[0];
                   return n % 2 == 0 ? exact(3 * n / 2, "3n/2 (n even)")
                                     : exact((3 * n + 1) / 2, "(3n+1)/2 (n odd)");
                 })}});
  out.push_back({"fd_triangular", {param("n", 1, 6, 1, 9)}, always,
                 [](const Params& p) { return family(Family::triangular_snake, {p[0]}); },
                 {claim(M::z, [](const Params& p) { return exact(p[0] + 1, "n+1"); }),
                  claim(M::fd, [](const Params& p) { return exact(p[0] + 1, "n+1"); })}});

  // Families with F_d = Z.
  out.push_back({"fd_hypercube", {param("k", 1, 4, 1, 4)}, always,
                 [](const Params& p) { return family(Family::hypercube, {p[0]}); },
                 {claim(M::z, [](const Params& p) { return exact(1L << (p[0] - 1), "2^(k-1)"); }),
                  claim(M::fd, [](const Params& p) { return exact(1L << (p[0] - 1), "2^(k-1)"); })}});
  out.push_back({"fd_complete", {param("n", 2, 10, 2, 14)}, always,
                 [](const Params& p) { return family(Family::complete, {p[0]}); },
                 {claim(M::z, [](const Params& p) { return exact(p[0] - 1, "n-1"); }),
                  claim(M::fd, [](const Params& p) { return exact(p[0] - 1, "n-1"); })}});
  out.push_back({"fd_wheel", {param("n", 4, 10, 4, 16)}, always,
                 [](const Params& p) { return family(Family::wheel, {p[0]}); },
                 {claim(M::z, [](const Params&) { return exact(3, "3"); }),
                  claim(M::fd, [](const Params&) { return exact(3, "3"); })}});
  out.push_back({"fd_dovetail", {param("n", 2, 10, 2, 16)}, always,
                 [](const Params& p) { return family(Family::dove_tail, {p[0]}); },
                 {claim(M::z, [](const Params&) { return exact(2, "2"); }),
                  claim(M::fd, [](const Params&) { return exact(2, "2"); })}});
  out.push_back({"fd_bipartite", {param("m", 2, 6, 2, 8), param("n", 2, 6, 2, 8)}, always,
                 [](const Params& p) {
                   return family(Family::complete_bipartite, {p[0], p[1]});
                 },
                 {claim(M::z, [](const Params& p) { return exact(p[0] + p[1] - 2, "m+n-2"); }),
                  claim(M::fd, [](const Params& p) { return exact(p[0] + p[1] - 2, "m+n-2"); })}});
  out.push_back({"star_values", {param("n", 2, 8, 2, 12)}, always,
                 [](const Params& p) { return family(Family::star, {p[0]}); },
                 {claim(M::gamma, [](const Params&) { return exact(1, "1"); }),
                  claim(M::z, [](const Params& p) { return exact(p[0] - 1, "n-1"); }),
                  claim(M::fd, [](const Params& p) { return exact(p[0], "n"); })}});
  out.push_back({"fd_pineapple", {param("m", 3, 6, 3, 8), param("n", 2, 5, 2, 8)}, always,
                 [](const Params& p) { return family(Family::pineapple, {p[0], p[1]}); },
                 {claim(M::fd, [](const Params& p) { return exact(p[0] + p[1] - 2, "m+n-2"); })}});

  // Helm: F_d = gamma.
  out.push_back({"gamma_fd_helm", {param("m", 4, 7, 4, 10)}, always,
                 [](const Params& p) { return family(Family::helm, {p[0]}); },
                 {claim(M::gamma, [](const Params& p) { return exact(p[0], "m"); }),
                  claim(M::fd, [](const Params& p) { return exact(p[0], "m"); })}});

  // Characterizations, checked in both directions as 0/1 indicators.
  out.push_back({"fd_eq_gamma_path", {param("n", 1, 12, 1, 20)}, always,
                 [](const Params& p) { return family(Family::path, {p[0]}); },
                 {claim(M::fd_eq_gamma, [](const Params& p) {
                   return exact(p[0] % 3 != 0 ? 1 : 0, "[3 does not divide n]");
                 })}});
  out.push_back({"fd_eq_gamma_cycle", {param("n", 3, 15, 3, 20)}, always,
                 [](const Params& p) { return family(Family::cycle, {p[0]}); },
                 {claim(M::fd_eq_gamma, [](const Params& p) {
                   return exact(p[0] % 3 == 1 ? 1 : 0, "[n = 3k+1]");
                 })}});
  {
    ParamSpec base = param("graph", 0, 1, 0, 1);
    base.choices = {"path", "cycle"};
    out.push_back({"z_eq_fd_path_cycle", {base, param("n", 1, 15, 1, 20)},
                   [](const Params& p) { return p[0] == 0 || p[1] >= 3; },
                   [](const Params& p) {
                     return family(p[0] == 0 ? Family::path : Family::cycle, {p[1]});
                   },
                   {claim(M::z_eq_fd, [](const Params& p) {
                     if (p[0] == 0) return exact(p[1] <= 2 ? 1 : 0, "[n in {1,2}]");
                     return exact(p[1] <= 4 ? 1 : 0, "[n in {3,4}]");
                   })}});
  }

  out.push_back({"fd_petersen", {}, always,
                 [](const Params&) { return family(Family::petersen, {}); },
                 {claim(M::z, [](const Params&) { return exact(5, "5"); }),
                  claim(M::fd, [](const Params&) { return exact(5, "5"); })}});

  // Splitting graphs.
  out.push_back({"split_star", {param("n", 2, 6, 2, 8)}, always,
                 [](const Params& p) { return family(Family::star, {p[0]}, 1); },
                 {claim(M::gamma, [](const Params&) { return exact(2, "2"); }),
                  claim(M::z, [](const Params& p) { return exact(2 * p[0] - 2, "2n-2"); }),
                  claim(M::fd, [](const Params& p) { return exact(2 * p[0] - 1, "2n-1"); })}});
  auto split_path = [](const Params& p) { return family(Family::path, {p[0]}, 1); };
  out.push_back({"split_path_small", {param("n", 2, 4, 2, 4)}, always, split_path,
                 {claim(M::fd, [](const Params& p) { return exact(p[0], "n"); })}});
  out.push_back({"split_path_large", {param("n", 5, 10, 5, 12)}, always, split_path,
                 {claim(M::fd, [](const Params& p) {
                   long n = p[0];
                   switch (n % 4) {
                     case 0:
                       return Expected::interval((n + 2) / 2, (n + 4) / 2,
                                                 "[(n+2)/2, (n+4)/2] (n=0 mod 4)");
                     case 2: return exact((n + 2) / 2, "(n+2)/2 (n=2 mod 4)");
                     default: return exact((n + 3) / 2, "(n+3)/2 (n=1,3 mod 4)");
                   }
                 })}});
  out.push_back({"split_path_zg", {param("n", 2, 10, 2, 12)}, always, split_path,
                 {claim(M::z, [](const Params&) { return exact(2, "2"); }),
                  claim(M::gamma, [](const Params& p) {
                    return exact(split_path_gamma(p[0]),
                                 "n/2, (n+1)/2, (n+2)/2 for n=0, 1|3, 2 mod 4");
                  })}});
  out.push_back({"split_cycle_bound", {param("n", 4, 10, 4, 12)}, always,
                 [](const Params& p) { return family(Family::cycle, {p[0]}, 1); },
                 {claim(M::z, [](const Params&) { return exact(4, "4"); }),
                  claim(M::fd, [](const Params& p) {
                    long n = p[0];
                    long upper = n % 4 == 0 ? (n + 4) / 2
                                 : n % 4 == 2 ? (n + 6) / 2
                                              : (n + 5) / 2;
                    return Expected::interval(
                        4, upper, "[4, (n+4)/2 | (n+5)/2 | (n+6)/2 for n=0 | 1,3 | 2 mod 4]");
                  })}});
  out.push_back({"split_ladder", {param("n", 2, 6, 2, 6)}, always,
                 [](const Params& p) { return family(Family::ladder, {p[0]}, 1); },
                 {claim(M::z, [](const Params&) { return exact(4, "4"); }),
                  claim(M::gamma, [](const Params& p) {
                    return exact(2 * ceil_div(p[0], 3), "2*ceil(n/3)");
                  }),
                  claim(M::fd, [](const Params& p) {
                    long g = 2 * ceil_div(p[0], 3);
                    return Expected::interval(g, g + 2, "[2*ceil(n/3), 2+2*ceil(n/3)]");
                  })}});
  {
    // The base graph G has `order` vertices; the claim bounds F_d(S(G)).
    ParamSpec base = param("graph", 0, 2, 0, 2);
    base.choices = {"path", "cycle", "star"};
    auto base_graph = [](const Params& p) {
      switch (p[0]) {
        case 0: return family(Family::path, {p[1]});
        case 1: return family(Family::cycle, {p[1]});
        default: return family(Family::star, {p[1] - 1});
      }
    };
    out.push_back({"split_double", {base, param("order", 2, 10, 2, 12)},
                   [](const Params& p) { return p[0] != 1 || p[1] >= 3; },
                   [base_graph](const Params& p) {
                     GraphSpec s = base_graph(p);
                     s.split_depth = 1;
                     return s;
                   },
                   {claim(M::fd, [base_graph](const Params& p) {
                     long fd = dom_forcing_number(build(base_graph(p))).value;
                     return Expected::interval(1, 2 * fd, "[1, 2*F_d(G)]");
                   })}});
  }
  return out;
}

// Lazily computed invariants of one instance graph.
class InstanceEvaluator {
 public:
  InstanceEvaluator(const Graph& g, const SolverLimits& limits)
      : g_(g), limits_(limits) {}

  const InvariantResult& z() {
    if (!z_) z_ = zero_forcing_number(g_, limits_);
    return *z_;
  }
  const InvariantResult& gamma() {
    if (!gamma_) gamma_ = domination_number(g_, limits_);
    return *gamma_;
  }
  const InvariantResult& fd() {
    if (!fd_) fd_ = dom_forcing_number(g_, limits_);
    return *fd_;
  }

  std::pair<long, std::string> measure(Measure m) {
    auto describe = [&](const char* name, const InvariantResult& r) {
      return std::string(name) + "=" + std::to_string(r.value) + " " +
             g_.format_set(r.witness);
    };
    switch (m) {
      case Measure::z: return {z().value, g_.format_set(z().witness)};
      case Measure::gamma: return {gamma().value, g_.format_set(gamma().witness)};
      case Measure::fd: return {fd().value, g_.format_set(fd().witness)};
      case Measure::fd_eq_gamma:
        return {fd().value == gamma().value ? 1 : 0,
                describe("F_d", fd()) + "; " + describe("gamma", gamma())};
      case Measure::z_eq_fd:
        return {z().value == fd().value ? 1 : 0,
                describe("Z", z()) + "; " + describe("F_d", fd())};
    }
    throw std::logic_error("unhandled measure");
  }

 private:
  const Graph& g_;
  SolverLimits limits_;
  std::optional<InvariantResult> z_;
  std::optional<InvariantResult> gamma_;
  std::optional<InvariantResult> fd_;
};

std::string render_expected(const Expected& e) {
  if (e.is_exact()) return std::to_string(e.lo);
  return "[" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "]";
}

void check_instance(const ClosedForm& form, const Params& params,
                    const SolverLimits& limits,
                    std::vector<TheoremCheckResult>& out) {
  const GraphSpec spec = form.graph(params);
  std::vector<std::pair<std::string, int>> named;
  for (std::size_t i = 0; i < form.params.size(); ++i) {
    named.emplace_back(form.params[i].name, params[i]);
  }

  std::optional<Graph> g;
  std::string skip_reason;
  try {
    g = build(spec, limits);
    limits.require(g->order());
  } catch (const CapExceeded& e) {
    skip_reason = e.what();
  }

  std::optional<InstanceEvaluator> eval;
  if (skip_reason.empty()) eval.emplace(*g, limits);
  for (const Claim& c : form.claims) {
    TheoremCheckResult r;
    r.theorem_id = form.id;
    r.measure = c.measure;
    r.params = named;
    r.param_text = describe_params(form, params);
    r.graph = to_string(spec);
    r.expected = c.expected(params);
    if (!skip_reason.empty()) {
      r.verdict = Verdict::skipped;
      r.note = skip_reason;
      out.push_back(std::move(r));
      continue;
    }
    r.order = g->order();
    auto start = std::chrono::steady_clock::now();
    auto [value, witness] = eval->measure(c.measure);
    r.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    r.computed = value;
    r.witness = std::move(witness);
    r.verdict = judge(r.expected, value);
    if (r.verdict == Verdict::mismatch) {
      r.note = "expected " + r.expected.formula + " = " +
               render_expected(r.expected) + ", computed " +
               std::to_string(value) + " on " + r.graph + " (" + r.param_text +
               "), witness " + r.witness;
    }
    out.push_back(std::move(r));
  }
}

}  // namespace

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::z: return "Z";
    case Measure::gamma: return "gamma";
    case Measure::fd: return "F_d";
    case Measure::fd_eq_gamma: return "[F_d=gamma]";
    case Measure::z_eq_fd: return "[Z=F_d]";
  }
  return "?";
}

std::string_view profile_name(Profile p) {
  return p == Profile::quick ? "quick" : "full";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::in_interval: return "in-interval";
    case Verdict::mismatch: return "MISMATCH";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

Profile parse_profile(std::string_view name) {
  if (name == "quick") return Profile::quick;
  if (name == "full") return Profile::full;
  throw std::invalid_argument("unknown profile '" + std::string(name) + "'");
}

Expected Expected::exact(long value, std::string formula) {
  return Expected{Kind::exact, value, value, std::move(formula)};
}

Expected Expected::interval(long lo, long hi, std::string formula) {
  if (lo > hi) throw std::logic_error("interval with lo > hi: " + formula);
  return Expected{Kind::interval, lo, hi, std::move(formula)};
}

const std::vector<ClosedForm>& entries() {
  static const std::vector<ClosedForm> table = build_entries();
  return table;
}

const ClosedForm& find(std::string_view id) {
  for (const auto& form : entries()) {
    if (form.id == id) return form;
  }
  throw std::out_of_range("unknown theorem id '" + std::string(id) + "'");
}

Expected expected(std::string_view id, Measure measure, const Params& params) {
  const ClosedForm& form = find(id);
  if (params.size() != form.params.size() || !form.valid(params)) {
    throw std::invalid_argument("parameters outside the domain of " + form.id);
  }
  for (const Claim& c : form.claims) {
    if (c.measure == measure) return c.expected(params);
  }
  throw std::invalid_argument(form.id + " makes no claim about " +
                              std::string(measure_name(measure)));
}

std::vector<Params> instances(const ClosedForm& form, Profile profile,
                              std::span<const ParamRange> overrides) {
  std::vector<std::pair<int, int>> ranges;
  for (const ParamSpec& ps : form.params) {
    auto range = profile == Profile::quick ? std::make_pair(ps.quick_lo, ps.quick_hi)
                                           : std::make_pair(ps.full_lo, ps.full_hi);
    for (const ParamRange& o : overrides) {
      if (o.name == ps.name) range = {o.lo, o.hi};
    }
    ranges.push_back(range);
  }
  std::vector<Params> out;
  Params current(form.params.size());
  // Odometer over the ranges, last parameter fastest.
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == ranges.size()) {
      if (form.valid(current)) out.push_back(current);
      return;
    }
    for (int v = ranges[i].first; v <= ranges[i].second; ++v) {
      current[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

std::string describe_params(const ClosedForm& form, const Params& params) {
  if (form.params.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < form.params.size(); ++i) {
    const ParamSpec& ps = form.params[i];
    if (i > 0) out += ", ";
    out += ps.name + "=";
    int v = params[i];
    if (!ps.choices.empty() && v >= 0 && v < static_cast<int>(ps.choices.size())) {
      out += ps.choices[v];
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

Verdict judge(const Expected& expected, long computed) {
  if (expected.is_exact()) {
    return computed == expected.lo ? Verdict::match : Verdict::mismatch;
  }
  return expected.lo <= computed && computed <= expected.hi ? Verdict::in_interval
                                                            : Verdict::mismatch;
}

std::vector<TheoremCheckResult> verify(std::string_view id,
                                       std::span<const ParamRange> overrides,
                                       Profile profile, const SolverLimits& limits) {
  const ClosedForm& form = find(id);
  for (const ParamRange& o : overrides) {
    bool known = false;
    for (const ParamSpec& ps : form.params) known = known || ps.name == o.name;
    if (!known) {
      throw std::invalid_argument(form.id + " has no parameter '" + o.name + "'");
    }
  }
  std::vector<TheoremCheckResult> out;
  for (const Params& p : instances(form, profile, overrides)) {
    check_instance(form, p, limits, out);
  }
  return out;
}

std::vector<TheoremCheckResult> verify_all(Profile profile, const SolverLimits& limits,
                                           std::string_view filter) {
  std::vector<TheoremCheckResult> out;
  for (const ClosedForm& form : entries()) {
    if (!filter.empty() && form.id.find(filter) == std::string::npos) continue;
    for (const Params& p : instances(form, profile)) {
      check_instance(form, p, limits, out);
    }
  }
  return out;
}

Summary summarize(std::span<const TheoremCheckResult> results) {
  Summary s;
  for (const auto& r : results) {
    ++s.total;
    s.millis += r.millis;
    switch (r.verdict) {
      case Verdict::match: ++s.match; break;
      case Verdict::in_interval: ++s.in_interval; break;
      case Verdict::mismatch: ++s.mismatch; break;
      case Verdict::skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::string format_table(std::span<const TheoremCheckResult> results) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %-12s %-22s %-24s %9s %8s %-11s %9s\n",
                "theorem", "measure", "params", "graph", "expected", "computed",
                "verdict", "ms");
  out << line;
  for (const auto& r : results) {
    std::string computed = r.computed ? std::to_string(*r.computed) : "-";
    std::snprintf(line, sizeof line, "%-20s %-12s %-22s %-24s %9s %8s %-11s %9.2f\n",
                  r.theorem_id.c_str(), std::string(measure_name(r.measure)).c_str(),
                  r.param_text.c_str(), r.graph.c_str(),
                  render_expected(r.expected).c_str(), computed.c_str(),
                  std::string(verdict_name(r.verdict)).c_str(), r.millis);
    out << line;
    if (!r.note.empty()) out << "    " << r.note << '\n';
  }
  Summary s = summarize(results);
  out << s.total << " checks: " << s.match << " match, " << s.in_interval
      << " in-interval, " << s.mismatch << " MISMATCH, " << s.skipped
      << " skipped\n";
  return out.str();
}

}  // namespace domforce::catalog
