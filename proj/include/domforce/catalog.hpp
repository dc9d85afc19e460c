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

#ifndef DOMFORCE_CATALOG_HPP
#define DOMFORCE_CATALOG_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domforce/generators.hpp"
#include "domforce/limits.hpp"

// Closed-form values and bounds for the dom-forcing number and its companion
// invariants on named graph families, each checked against exact computation.
namespace domforce::catalog {

/// What a claim measures on the instance graph. The two *_eq_* measures are
/// 0/1 indicators used by the characterization entries.
enum class Measure { z, gamma, fd, fd_eq_gamma, z_eq_fd };

enum class Profile { quick, full };

enum class Verdict { match, in_interval, mismatch, skipped };

std::string_view measure_name(Measure m);
std::string_view profile_name(Profile p);
std::string_view verdict_name(Verdict v);
/// Throws std::invalid_argument on an unknown name.
Profile parse_profile(std::string_view name);

struct Expected {
  enum class Kind { exact, interval };

  Kind kind = Kind::exact;
  long lo = 0;
  long hi = 0;
  std::string formula;

  static Expected exact(long value, std::string formula);
  static Expected interval(long lo, long hi, std::string formula);

  bool is_exact() const { return kind == Kind::exact; }
};

/// Parameter values, aligned with ClosedForm::params.
using Params = std::vector<int>;

struct ParamSpec {
  std::string name;
  int quick_lo = 0;
  int quick_hi = 0;
  int full_lo = 0;
  int full_hi = 0;
  /// Optional display names for enumerated parameters (value = index).
  std::vector<std::string> choices = {};
};

struct Claim {
  Measure measure;
  std::function<Expected(const Params&)> expected;
};

/// One theorem: a parameterized family, the domain where it is claimed, and
/// the expected value or interval for each measured invariant.
struct ClosedForm {
  std::string id;
  std::vector<ParamSpec> params;
  std::function<bool(const Params&)> valid;
  std::function<GraphSpec(const Params&)> graph;
  std::vector<Claim> claims;
};

/// All entries in canonical order.
const std::vector<ClosedForm>& entries();

/// Throws std::out_of_range for an unknown id.
const ClosedForm& find(std::string_view id);

/// Expected value or interval of `measure` for theorem `id` at `params`.
/// Throws std::invalid_argument when the params are outside the theorem's
/// domain or the theorem makes no claim about `measure`.
Expected expected(std::string_view id, Measure measure, const Params& params);

/// Overrides the range of one named parameter.
struct ParamRange {
  std::string name;
  int lo = 0;
  int hi = 0;
};

/// Parameter tuples of `form` for a profile, in lexicographic order, with
/// any named ranges replaced and invalid tuples dropped.
std::vector<Params> instances(const ClosedForm& form, Profile profile,
                              std::span<const ParamRange> overrides = {});

std::string describe_params(const ClosedForm& form, const Params& params);

struct TheoremCheckResult {
  std::string theorem_id;
  Measure measure = Measure::fd;
  std::vector<std::pair<std::string, int>> params;
  std::string param_text;
  std::string graph;
  int order = 0;
  Expected expected;
  std::optional<long> computed;
  Verdict verdict = Verdict::skipped;
  double millis = 0.0;
  /// Certificate behind `computed` in display labels; for indicators, the
  /// witnesses of both compared invariants.
  std::string witness;
  /// Skip reason, or the mismatch diagnostic.
  std::string note;
};

/// Verdict rule: match iff exact and equal; in_interval iff an interval
/// claim contains the value; mismatch otherwise.
Verdict judge(const Expected& expected, long computed);

/// Checks theorem `id` over `profile`'s ranges with `overrides` applied.
/// Instances above the solver cap become `skipped` records.
std::vector<TheoremCheckResult> verify(std::string_view id,
                                       std::span<const ParamRange> overrides,
                                       Profile profile = Profile::quick,
                                       const SolverLimits& limits = {});

/// Every entry whose id contains `filter` (all entries when empty), in
/// catalog order then parameter order.
std::vector<TheoremCheckResult> verify_all(Profile profile,
                                           const SolverLimits& limits = {},
                                           std::string_view filter = {});

struct Summary {
  int total = 0;
  int match = 0;
  int in_interval = 0;
  int mismatch = 0;
  int skipped = 0;
  double millis = 0.0;
};

Summary summarize(std::span<const TheoremCheckResult> results);

/// Human-readable report table with one row per result and a summary line.
std::string format_table(std::span<const TheoremCheckResult> results);

}  // namespace domforce::catalog

#endif  // DOMFORCE_CATALOG_HPP
