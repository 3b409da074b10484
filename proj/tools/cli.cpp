// Copyright 2026 The udesign Authors
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

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "udesign/bounds.hpp"
#include "udesign/design_verify.hpp"
#include "udesign/error.hpp"
#include "udesign/group_designs.hpp"
#include "udesign/moments.hpp"
#include "udesign/repdims.hpp"
#include "udesign/uset_io.hpp"
#include "udesign/weighted_opt.hpp"

namespace udesign::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  double tol = kDefaultDesignTol;
  double cluster_tol = kDefaultClusterTol;
  double unitarity_tol = kDefaultUnitarityTol;

  int d = 0, r = 0, s = 0, t = 0, q = 0, max_t = 4;
  std::size_t n = 0, max_size = kDefaultMaxGroupSize;
  std::uint64_t seed = 0;
  long max_iter = kDefaultFitMaxIter;
  bool orthogonal = false;
  std::string alpha, beta, side = "code", criterion = "potential";
  std::string file, out;
};

struct Outcome {
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();
  std::optional<bool> verdict;
};

ordered_json big(const BigCount& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

// Non-finite doubles have no JSON spelling; report them as null.
ordered_json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ordered_json report_json(const VerificationReport& rep) {
  return {{"criterion", to_string(rep.criterion)},
          {"t", rep.t},
          {"moment", big(rep.moment)},
          {"potential", real(rep.potential)},
          {"gap", real(rep.gap)},
          {"statistic", real(rep.statistic)},
          {"residual", real(rep.residual)},
          {"verdict", rep.verdict}};
}

struct Parameter {
  double value = 0.0;
  std::optional<boost::rational<long long>> exact;
};

Parameter parse_parameter(const std::string& text, const char* name) {
  static const std::regex rational(R"(^\s*(-?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, rational)) {
    try {
      const long long num = std::stoll(m[1].str());
      const long long den = m[2].matched ? std::stoll(m[2].str()) : 1;
      if (den == 0) throw InputError(std::string("--") + name + ": zero denominator");
      boost::rational<long long> r(num, den);
      return {static_cast<double>(num) / static_cast<double>(den), r};
    } catch (const std::out_of_range&) {
      throw InputError(std::string("--") + name + ": value out of range");
    }
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("--") + name + ": not a number: " + text);
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw InputError(std::string("--") + name + ": not a number: " + text);
  }
  return {v, std::nullopt};
}

ordered_json bound_json(const BoundReport& b) {
  ordered_json j;
  j["value"] = real(b.value);
  if (b.exact) {
    j["exact"] = std::to_string(b.exact->numerator()) +
                 (b.exact->denominator() == 1 ? "" : "/" + std::to_string(b.exact->denominator()));
  } else {
    j["exact"] = nullptr;
  }
  j["equality"] = b.equality;
  return j;
}

Criterion parse_criterion(const std::string& name) {
  if (name == "potential") return Criterion::kFramePotential;
  if (name == "zonal") return Criterion::kZonalSums;
  if (name == "operator") return Criterion::kMomentOperator;
  throw InputError("unknown criterion: " + name);
}

void write_set(const Options& o, const UnitarySet& x, Outcome& res) {
  if (o.out.empty()) return;
  save_set(x, o.out);
  res.outputs["written"] = o.out;
}

void write_set(const Options& o, const WeightedUnitarySet& x, Outcome& res) {
  if (o.out.empty()) return;
  save_set(x, o.out);
  res.outputs["written"] = o.out;
}

Outcome cmd_dims(const Options& o) {
  Outcome res;
  res.inputs = {{"d", o.d}, {"r", o.r}, {"s", o.s}};
  const BigCount value = dim_hom(o.d, o.r, o.s);
  res.outputs["dim_hom"] = big(value);
  res.outputs["signatures"] = enumerate_signatures(o.d, o.r, o.s).size();
  if (auto closed = dim_hom_closed(o.d, o.r, o.s)) {
    if (*closed != value) {
      throw InvariantViolation("closed form " + closed->str() + " disagrees with " + value.str());
    }
    res.outputs["closed_form"] = big(*closed);
  } else {
    res.outputs["closed_form"] = nullptr;
  }
  return res;
}

Outcome cmd_moment(const Options& o) {
  Outcome res;
  res.inputs = {{"d", o.d}, {"t", o.t}};
  const BigCount value = haar_moment(o.d, o.t);
  res.outputs["moment"] = big(value);
  if (o.t <= kBruteForceMaxT) {
    const BigCount brute = haar_moment_bruteforce(o.d, o.t);
    if (brute != value) {
      throw InvariantViolation("permutation count " + brute.str() + " disagrees with " +
                               value.str());
    }
    res.outputs["permutation_count"] = big(brute);
  } else {
    res.outputs["permutation_count"] = nullptr;
  }
  return res;
}

Outcome cmd_verify(const Options& o) {
  Outcome res;
  res.inputs = {{"file", o.file}, {"t", o.t}, {"criterion", o.criterion}};
  const Criterion c = parse_criterion(o.criterion);
  const WeightedUnitarySet w = load_set(o.file, o.unitarity_tol);
  const VerificationReport rep = verify(w, o.t, c, o.tol);
  res.outputs = report_json(rep);
  res.outputs["size"] = w.size();
  res.outputs["d"] = w.dim();
  res.verdict = rep.verdict;
  return res;
}

Outcome cmd_strength(const Options& o) {
  Outcome res;
  res.inputs = {{"file", o.file}, {"max_t", o.max_t}};
  const WeightedUnitarySet w = load_set(o.file, o.unitarity_tol);
  ordered_json per_t = ordered_json::array();
  for (int t = 1; t <= o.max_t; ++t) per_t.push_back(report_json(is_design(w, t, o.tol)));
  res.outputs["per_t"] = per_t;
  const int s = strength(w, o.max_t, o.tol);
  res.outputs["strength"] = s;
  res.outputs["absolute_design_bound"] = s >= 1 ? big(absolute_design_bound(w.dim(), s)) : nullptr;
  return res;
}

Outcome cmd_profile(const Options& o) {
  Outcome res;
  res.inputs = {{"file", o.file}};
  const WeightedUnitarySet w = load_set(o.file, o.unitarity_tol);
  const DistanceProfile p = distance_profile(w.base(), o.cluster_tol);
  ordered_json clusters = ordered_json::array();
  bool orthogonal = false;
  for (const auto& c : p.clusters) {
    clusters.push_back(
        {{"value", c.value}, {"min", c.min}, {"max", c.max}, {"multiplicity", c.multiplicity}});
    if (c.min <= o.cluster_tol) orthogonal = true;
  }
  res.outputs["size"] = w.size();
  res.outputs["degree"] = p.degree();
  res.outputs["clusters"] = clusters;
  res.outputs["phase_duplicate_pairs"] = p.phase_duplicate_pairs;
  res.outputs["warnings"] = p.warnings;
  if (p.degree() >= 1) {
    const BigCount bound = absolute_code_bound(w.dim(), p.degree(), orthogonal);
    res.outputs["has_orthogonal_pair"] = orthogonal;
    res.outputs["absolute_code_bound"] = big(bound);
    res.outputs["within_bound"] = BigCount(w.size()) <= bound;
  }
  return res;
}

Outcome cmd_bounds(const std::string& kind, const Options& o) {
  Outcome res;
  if (kind == "design") {
    res.inputs = {{"d", o.d}, {"t", o.t}};
    res.outputs["bound"] = big(absolute_design_bound(o.d, o.t));
    return res;
  }
  if (kind == "code") {
    res.inputs = {{"d", o.d}, {"s", o.s}, {"orthogonal", o.orthogonal}};
    res.outputs["bound"] = big(absolute_code_bound(o.d, o.s, o.orthogonal));
    return res;
  }
  if (o.side != "code" && o.side != "design") throw InputError("--side must be code or design");
  const Parameter a = parse_parameter(o.alpha, "alpha");
  if (kind == "rel1") {
    res.inputs = {{"d", o.d}, {"alpha", o.alpha}, {"side", o.side}};
    BoundReport b;
    if (o.side == "design") {
      b = rel_design_bound_1(o.d, a.value);
    } else {
      b = a.exact ? rel_code_bound_1(o.d, *a.exact) : rel_code_bound_1(o.d, a.value);
    }
    res.outputs = bound_json(b);
    return res;
  }
  const Parameter b = parse_parameter(o.beta, "beta");
  res.inputs = {{"d", o.d}, {"alpha", o.alpha}, {"beta", o.beta}, {"side", o.side}};
  BoundReport rep;
  if (o.side == "design") {
    rep = rel_design_bound_2(o.d, a.value, b.value);
  } else if (a.exact && b.exact) {
    rep = rel_code_bound_2(o.d, *a.exact, *b.exact);
  } else {
    rep = rel_code_bound_2(o.d, a.value, b.value);
  }
  res.outputs = bound_json(rep);
  return res;
}

Outcome cmd_group(const std::string& kind, const Options& o) {
  Outcome res;
  UnitarySet x;
  std::optional<std::size_t> expected;
  if (kind == "clifford") {
    res.inputs = {{"q", o.q}};
    x = clifford_design(o.q);
    const auto q = static_cast<std::size_t>(o.q);
    expected = q * q * q * (q * q - 1);
  } else if (kind == "chau") {
    res.inputs = {{"d", o.d}};
    x = chau_design(o.d);
    const auto d = static_cast<std::size_t>(o.d);
    expected = d * d * (d * d - 1);
  } else {
    res.inputs = {{"file", o.file}, {"max_size", o.max_size}};
    const WeightedUnitarySet gens = load_set(o.file, o.unitarity_tol);
    x = close_group(gens.base(), o.max_size);
  }
  res.outputs["d"] = x.dim();
  res.outputs["size"] = x.size();
  if (expected) {
    res.outputs["expected_size"] = *expected;
    const VerificationReport rep = is_design(WeightedUnitarySet(x), 2, o.tol);
    res.outputs["design_check"] = report_json(rep);
    res.verdict = rep.verdict && x.size() == *expected;
  }
  write_set(o, x, res);
  return res;
}

Outcome cmd_chartab(const std::string& kind, const Options& o) {
  Outcome res;
  if (kind == "check") {
    res.inputs = {{"file", o.file}, {"t", o.t}};
    const CharacterData table = load_chartab(o.file);
    const VerificationReport rep = character_design_check(table, o.t, o.tol);
    res.outputs = report_json(rep);
    res.outputs["group_order"] = table.group_order;
    res.outputs["degree"] = table.degree;
    res.outputs["classes"] = table.classes.size();
    res.verdict = rep.verdict;
    return res;
  }
  res.inputs = {{"file", o.file}};
  const WeightedUnitarySet w = load_set(o.file, o.unitarity_tol);
  const CharacterData table = abs_character_data(w.base());
  res.outputs["group_order"] = table.group_order;
  res.outputs["degree"] = table.degree;
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!(f << format_chartab(table))) throw InputError("cannot write " + o.out);
    res.outputs["written"] = o.out;
  }
  return res;
}

Outcome cmd_weighted(const std::string& kind, const Options& o) {
  Outcome res;
  const WeightedUnitarySet w = load_set(o.file, o.unitarity_tol);
  if (kind == "fit") {
    res.inputs = {{"file", o.file}, {"t", o.t}, {"max_iter", o.max_iter}};
    const FitResult fit = fit_weights(w.base(), o.t, o.tol, o.max_iter);
    std::vector<Matrix> mats;
    std::vector<double> weights;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < fit.weights.size(); ++i) {
      if (fit.weights[i] <= 0.0) continue;
      mats.push_back(w.base()[i]);
      weights.push_back(fit.weights[i]);
      if (!w.base().labels().empty()) labels.push_back(w.base().labels()[i]);
    }
    double total = 0.0;
    for (double v : weights) total += v;
    for (double& v : weights) v /= total;
    res.outputs["iterations"] = fit.iterations;
    res.outputs["converged"] = fit.converged;
    res.outputs["stationary"] = fit.stationary;
    res.outputs["moment"] = fit.moment;
    res.outputs["potential"] = fit.potential;
    res.outputs["gap"] = fit.gap;
    res.outputs["support"] = weights.size();
    res.outputs["weights"] = fit.weights;
    res.verdict = fit.gap <= o.tol * fit.moment;
    write_set(o, WeightedUnitarySet(UnitarySet(w.dim(), std::move(mats), std::move(labels)),
                                    std::move(weights)),
              res);
    return res;
  }
  res.inputs = {{"file", o.file}, {"t", o.t}};
  const WeightedUnitarySet pruned = prune_support(w, o.t, o.tol);
  const VerificationReport rep = is_design(pruned, o.t, 2.0 * o.tol);
  res.outputs["input_support"] = w.size();
  res.outputs["support"] = pruned.size();
  res.outputs["dim_hom_bound"] = big(dim_hom(w.dim(), o.t, o.t));
  res.outputs["design_check"] = report_json(rep);
  res.outputs["weights"] = pruned.weights();
  res.verdict = rep.verdict;
  write_set(o, pruned, res);
  return res;
}

Outcome cmd_sample(const Options& o) {
  Outcome res;
  res.inputs = {{"d", o.d}, {"n", o.n}, {"seed", o.seed}};
  const UnitarySet x = sample_haar(o.d, o.n, o.seed);
  res.outputs["size"] = x.size();
  write_set(o, x, res);
  return res;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitary design and code toolkit", "udesign"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tol", o.tol, "relative design tolerance")->capture_default_str();
  app.add_option("--cluster-tol", o.cluster_tol, "distance clustering gap")->capture_default_str();
  app.add_option("--unitarity-tol", o.unitarity_tol, "max ||U^*U - I|| on input")
      ->capture_default_str();

  const auto positive = CLI::PositiveNumber;
  const auto nonneg = CLI::NonNegativeNumber;

  auto* dims = app.add_subcommand("dims", "dim Hom(d, r, s) with closed-form cross-check");
  dims->add_option("--d", o.d)->required()->check(positive);
  dims->add_option("--r", o.r)->required()->check(nonneg);
  dims->add_option("--s", o.s)->required()->check(nonneg);

  auto* moment = app.add_subcommand("moment", "Haar moment of |tr U|^{2t}");
  moment->add_option("--d", o.d)->required()->check(positive);
  moment->add_option("--t", o.t)->required()->check(nonneg);

  auto* verify_cmd = app.add_subcommand("verify", "check the t-design property");
  verify_cmd->add_option("file", o.file)->required();
  verify_cmd->add_option("--t", o.t)->required()->check(nonneg);
  verify_cmd->add_option("--criterion", o.criterion)
      ->check(CLI::IsMember({"potential", "zonal", "operator"}))
      ->capture_default_str();

  auto* strength_cmd = app.add_subcommand("strength", "largest t with the design property");
  strength_cmd->add_option("file", o.file)->required();
  strength_cmd->add_option("--max-t", o.max_t)->required()->check(positive);

  auto* profile = app.add_subcommand("profile", "distance profile |tr(U^* V)|^2");
  profile->add_option("file", o.file)->required();

  auto* bounds = app.add_subcommand("bounds", "absolute and relative size bounds");
  bounds->require_subcommand(1);
  auto* b_design = bounds->add_subcommand("design", "lower bound for t-designs");
  b_design->add_option("--d", o.d)->required()->check(positive);
  b_design->add_option("--t", o.t)->required()->check(positive);
  auto* b_code = bounds->add_subcommand("code", "upper bound for s-distance sets");
  b_code->add_option("--d", o.d)->required()->check(positive);
  b_code->add_option("--s", o.s)->required()->check(positive);
  b_code->add_flag("--orthogonal", o.orthogonal, "some pair is orthogonal");
  auto* b_rel1 = bounds->add_subcommand("rel1", "relative bound, one distance value");
  auto* b_rel2 = bounds->add_subcommand("rel2", "relative bound, two distance values");
  for (auto* sub : {b_rel1, b_rel2}) {
    sub->add_option("--d", o.d)->required()->check(positive);
    sub->add_option("--alpha", o.alpha, "integer, p/q or decimal")->required();
    sub->add_option("--side", o.side)->check(CLI::IsMember({"code", "design"}))->capture_default_str();
  }
  b_rel2->add_option("--beta", o.beta, "integer, p/q or decimal")->required();

  auto* group = app.add_subcommand("group", "group designs");
  group->require_subcommand(1);
  auto* g_cliff = group->add_subcommand("clifford", "Clifford group of prime dimension q");
  g_cliff->add_option("--q", o.q)->required()->check(positive);
  auto* g_chau = group->add_subcommand("chau", "minimal Clifford subgroup design");
  g_chau->add_option("--d", o.d)->required()->check(positive);
  auto* g_close = group->add_subcommand("close", "close a generator set modulo phase");
  g_close->add_option("file", o.file)->required();
  g_close->add_option("--max-size", o.max_size)->check(positive)->capture_default_str();
  for (auto* sub : {g_cliff, g_chau, g_close}) sub->add_option("--out", o.out, "write uset-v1");

  auto* chartab = app.add_subcommand("chartab", "character tables");
  chartab->require_subcommand(1);
  auto* c_check = chartab->add_subcommand("check", "design test from a chartab-v1 file");
  c_check->add_option("file", o.file)->required();
  c_check->add_option("--t", o.t)->required()->check(nonneg);
  auto* c_export = chartab->add_subcommand("export", "|tr| records of a closed group");
  c_export->add_option("file", o.file)->required();
  c_export->add_option("--out", o.out, "write chartab-v1");

  auto* weighted = app.add_subcommand("weighted", "weighted designs");
  weighted->require_subcommand(1);
  auto* w_fit = weighted->add_subcommand("fit", "minimize the weighted frame potential");
  w_fit->add_option("--max-iter", o.max_iter)->check(positive)->capture_default_str();
  auto* w_prune = weighted->add_subcommand("prune", "reduce the support of a weighted design");
  for (auto* sub : {w_fit, w_prune}) {
    sub->add_option("file", o.file)->required();
    sub->add_option("--t", o.t)->required()->check(positive);
    sub->add_option("--out", o.out, "write uset-v1");
  }

  auto* sample = app.add_subcommand("sample", "Haar-random unitaries");
  sample->add_option("--d", o.d)->required()->check(positive);
  sample->add_option("--n", o.n)->required()->check(positive);
  sample->add_option("--seed", o.seed)->required();
  sample->add_option("--out", o.out, "write uset-v1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::string name;
  Outcome res;
  try {
    if (!(o.tol > 0.0) || !(o.cluster_tol > 0.0) || !(o.unitarity_tol > 0.0)) {
      throw InputError("tolerances must be positive");
    }
    auto chosen = [](CLI::App* parent) { return parent->get_subcommands().front(); };
    CLI::App* sub = chosen(&app);
    name = sub->get_name();
    if (sub == dims) {
      res = cmd_dims(o);
    } else if (sub == moment) {
      res = cmd_moment(o);
    } else if (sub == verify_cmd) {
      res = cmd_verify(o);
    } else if (sub == strength_cmd) {
      res = cmd_strength(o);
    } else if (sub == profile) {
      res = cmd_profile(o);
    } else if (sub == sample) {
      res = cmd_sample(o);
    } else {
      const std::string kind = chosen(sub)->get_name();
      name += " " + kind;
      if (sub == bounds) res = cmd_bounds(kind, o);
      if (sub == group) res = cmd_group(kind, o);
      if (sub == chartab) res = cmd_chartab(kind, o);
      if (sub == weighted) res = cmd_weighted(kind, o);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  ordered_json report;
  report["command"] = name;
  report["argv"] = std::vector<std::string>(argv + 1, argv + argc);
  report["inputs"] = res.inputs;
  report["tolerances"] = {
      {"tol", o.tol}, {"cluster_tol", o.cluster_tol}, {"unitarity_tol", o.unitarity_tol}};
  report["outputs"] = res.outputs;
  report["verdict"] = res.verdict ? ordered_json(*res.verdict) : ordered_json(nullptr);
  out << report.dump(2) << "\n";
  if (res.verdict && !*res.verdict) return kVerdictFalse;
  return kOk;
}

}  // namespace udesign::cli
