// Copyright 2026 The ampc Authors.
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

#include "ampc/harness/config.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "ampc/core/rng.h"

namespace ampc {
namespace {

namespace pt = boost::property_tree;

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const std::string item = Trim(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double ToDouble(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(fmt::format("config: '{}' is not a number: '{}'", key, text));
  }
  return v;
}

int ToInt(const std::string& key, const std::string& text) {
  const double v = ToDouble(key, text);
  if (v != static_cast<double>(static_cast<int>(v))) {
    throw std::invalid_argument(fmt::format("config: '{}' must be an integer", key));
  }
  return static_cast<int>(v);
}

bool ToBool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw std::invalid_argument(fmt::format("config: '{}' must be a boolean", key));
}

// Reads one section and rejects keys nobody asked for, so typos fail loudly.
class Section {
 public:
  Section(const pt::ptree& root, const std::string& name) : name_(name) {
    if (auto child = root.get_child_optional(pt::ptree::path_type(name, '\0'))) {
      tree_ = *child;
    }
  }
  ~Section() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : tree_) {
      if (!seen_.count(key)) {
        throw std::invalid_argument(fmt::format("config: unknown key [{}] {}", name_, key));
      }
    }
  }

  const pt::ptree& tree() const { return tree_; }
  void MarkAllSeen() {
    for (const auto& kv : tree_) seen_.insert(kv.first);
  }

  std::optional<std::string> Raw(const std::string& key) {
    seen_.insert(key);
    auto v = tree_.get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v) return std::nullopt;
    return Trim(*v);
  }
  void Get(const std::string& key, double* out) {
    if (auto v = Raw(key)) *out = ToDouble(Full(key), *v);
  }
  void Get(const std::string& key, int* out) {
    if (auto v = Raw(key)) *out = ToInt(Full(key), *v);
  }
  void Get(const std::string& key, bool* out) {
    if (auto v = Raw(key)) *out = ToBool(Full(key), *v);
  }
  void Get(const std::string& key, std::string* out) {
    if (auto v = Raw(key)) *out = *v;
  }
  void Get(const std::string& key, std::array<double, 2>* out) {
    if (auto v = Raw(key)) {
      const auto items = SplitList(*v);
      if (items.size() != 2) {
        throw std::invalid_argument(fmt::format("config: '{}' needs two values", Full(key)));
      }
      *out = {ToDouble(Full(key), items[0]), ToDouble(Full(key), items[1])};
    }
  }
  std::string Full(const std::string& key) const { return name_ + "." + key; }

 private:
  std::string name_;
  pt::ptree tree_;
  std::set<std::string> seen_;
};

void ParseExperiment(const pt::ptree& root, ExperimentConfig* c) {
  Section s(root, "experiment");
  s.Get("env", &c->env);
  if (auto v = s.Raw("optimizers")) c->optimizers = SplitList(*v);
  s.Get("iterations", &c->iterations);
  s.Get("episodes", &c->episodes);
  s.Get("steps", &c->steps);
  if (auto v = s.Raw("seeds")) {
    c->seeds.clear();
    for (const auto& item : SplitList(*v)) {
      const int seed = ToInt("experiment.seeds", item);
      if (seed < 0) throw std::invalid_argument("config: seeds must be >= 0");
      c->seeds.push_back(static_cast<std::uint64_t>(seed));
    }
  }
  s.Get("start_at_worst", &c->start_at_worst);
  s.Get("worst_scan_points", &c->worst_scan_points);
}

void ParseMppi(const pt::ptree& root, ExperimentConfig* c) {
  Section s(root, "mppi");
  s.Get("horizon", &c->mppi.horizon);
  s.Get("rollouts", &c->mppi.rollouts);
  s.Get("theta_per_rollout", &c->mppi.theta_per_rollout);
}

void ParseSpace(const pt::ptree& root, ExperimentConfig* c) {
  Section s(root, "search");
  std::vector<Dimension> dims;
  for (const auto& [key, value] : s.tree()) {
    const auto items = SplitList(value.get_value<std::string>());
    if (items.size() != 2) {
      throw std::invalid_argument(fmt::format("config: search.{} needs 'lower, upper'", key));
    }
    dims.push_back({key, ToDouble("search." + key, items[0]), ToDouble("search." + key, items[1])});
  }
  s.MarkAllSeen();
  if (!dims.empty()) c->space = SearchSpace(std::move(dims));

  Section f(root, "fixed");
  for (const auto& [key, value] : f.tree()) {
    c->fixed[key] = ToDouble("fixed." + key, Trim(value.get_value<std::string>()));
  }
  f.MarkAllSeen();
}

void ParseOptimizers(const pt::ptree& root, ExperimentConfig* c) {
  OptimizerSettings& o = c->optimizer;
  {
    Section s(root, "bore");
    s.Get("gamma_1", &o.gamma_1);
    s.Get("gamma_n", &o.gamma_n);
  }
  {
    Section s(root, "acquisition");
    AcquisitionOptions& a = o.bore.acquisition;
    std::string method = "random-local";
    s.Get("method", &method);
    if (method == "random-local") {
      a.method = AcquisitionMethod::kRandomLocal;
    } else if (method == "cmaes") {
      a.method = AcquisitionMethod::kCmaes;
    } else {
      throw std::invalid_argument("config: acquisition.method must be random-local or cmaes");
    }
    s.Get("candidates", &a.candidates);
    s.Get("local_iterations", &a.local_iterations);
    s.Get("initial_step", &a.initial_step);
    s.Get("shrink", &a.shrink);
    s.Get("incumbents", &a.include_incumbents);
    o.bo.maximizer = a;
  }
  {
    Section s(root, "rf");
    RandomForestOptions& f = o.bore.forest;
    s.Get("n_trees", &f.n_trees);
    s.Get("max_depth", &f.max_depth);
    s.Get("min_samples_split", &f.min_samples_split);
    s.Get("min_samples_leaf", &f.min_samples_leaf);
    s.Get("max_features", &f.max_features);
  }
  {
    Section s(root, "mlp");
    MlpOptions& m = o.bore.mlp;
    s.Get("hidden", &m.hidden);
    s.Get("epochs", &m.epochs);
    s.Get("batch_size", &m.batch_size);
    s.Get("learning_rate", &m.learning_rate);
  }
  {
    Section s(root, "gp");
    s.Get("delta", &o.bo.delta);
    s.Get("restarts", &o.bo.gp.restarts);
    s.Get("max_iterations", &o.bo.gp.max_iterations);
    s.Get("jitter", &o.bo.gp.jitter);
    s.Get("max_jitter", &o.bo.gp.max_jitter);
  }
  {
    Section s(root, "tpe");
    s.Get("gamma", &o.tpe.gamma);
    s.Get("candidates", &o.tpe.candidates);
    s.Get("bandwidth_floor", &o.tpe.bandwidth_floor);
    s.Get("prior_weight", &o.tpe.prior_weight);
    s.Get("magic_clip", &o.tpe.magic_clip);
  }
  {
    Section s(root, "cmaes");
    s.Get("popsize", &o.cmaes.popsize);
    s.Get("sigma0", &o.cmaes.sigma0);
    s.Get("sigma0_raw_units", &o.cmaes.sigma0_raw_units);
    s.Get("max_resamples", &o.cmaes.max_resamples);
  }
}

void ParseEnvs(const pt::ptree& root, ExperimentConfig* c) {
  {
    Section s(root, "env.pendulum");
    PendulumOptions& p = c->pendulum;
    s.Get("dt", &p.dt);
    s.Get("gravity", &p.gravity);
    s.Get("mass", &p.mass);
    s.Get("max_speed", &p.max_speed);
    s.Get("max_torque", &p.max_torque);
    s.Get("true_length", &p.true_length);
  }
  {
    Section s(root, "env.planar");
    PlanarOptions& p = c->planar;
    s.Get("dt", &p.dt);
    s.Get("damping", &p.damping);
    s.Get("max_speed", &p.max_speed);
    s.Get("max_force", &p.max_force);
    s.Get("collision_penalty", &p.collision_penalty);
    s.Get("start", &p.start);
    s.Get("goal", &p.goal);
    s.Get("obstacle_center", &p.obstacle_center);
    s.Get("true_half_extents", &p.true_half_extents);
  }
}

}  // namespace

std::vector<std::string> RequiredDimensions(const Environment& env) {
  std::vector<std::string> names = {"lambda", "sigma_eps"};
  for (const auto& p : env.ParamNames()) {
    names.push_back(p + "_mu");
    names.push_back(p + "_sigma");
  }
  return names;
}

void ExperimentConfig::Validate() const {
  if (iterations < 1 || episodes < 1 || steps < 1 || worst_scan_points < 1) {
    throw std::invalid_argument("config: iterations, episodes, steps and scan points must be >= 1");
  }
  if (mppi.horizon < 1 || mppi.rollouts < 1) {
    throw std::invalid_argument("config: mppi horizon and rollouts must be >= 1");
  }
  if (seeds.empty()) throw std::invalid_argument("config: at least one seed is required");
  if (optimizers.empty()) throw std::invalid_argument("config: no optimizers listed");
  const auto& known = OptimizerNames();
  for (const auto& name : optimizers) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw std::invalid_argument("config: unknown optimizer '" + name + "'");
    }
  }
  if (space.size() == 0) throw std::invalid_argument("config: empty search space");
  const auto env_ptr = MakeEnvironment(*this);
  const auto required = RequiredDimensions(*env_ptr);
  for (const auto& dim : space.dims()) {
    if (std::find(required.begin(), required.end(), dim.name) == required.end()) {
      throw std::invalid_argument("config: search dimension '" + dim.name +
                                  "' does not belong to env " + env);
    }
  }
  for (const auto& name : required) {
    const bool searched = space.IndexOf(name).has_value();
    const bool pinned = fixed.count(name) > 0;
    if (searched == pinned) {
      throw std::invalid_argument("config: '" + name +
                                  "' must be exactly one of searched or fixed");
    }
  }
  (void)GammaSchedule(optimizer.gamma_1, optimizer.gamma_n, iterations);
}

std::string ExperimentConfig::Fingerprint() const {
  std::string text = fmt::format("env={};ne={};ns={};T={};M={};tpr={};scan={};", env, episodes,
                                 steps, mppi.horizon, mppi.rollouts, mppi.theta_per_rollout,
                                 worst_scan_points);
  for (const auto& d : space.dims()) {
    text += fmt::format("s:{}={:.17g},{:.17g};", d.name, d.lower, d.upper);
  }
  for (const auto& [k, v] : fixed) text += fmt::format("f:{}={:.17g};", k, v);
  if (env == "pendulum") {
    const auto& p = pendulum;
    text += fmt::format("p:{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}", p.dt, p.gravity,
                        p.mass, p.max_speed, p.max_torque, p.true_length);
  } else {
    const auto& p = planar;
    text += fmt::format("q:{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},", p.dt, p.damping,
                        p.max_speed, p.max_force, p.collision_penalty);
    for (const auto* a : {&p.start, &p.goal, &p.obstacle_center, &p.true_half_extents}) {
      text += fmt::format("{:.17g},{:.17g},", (*a)[0], (*a)[1]);
    }
  }
  return fmt::format("{:016x}", StreamId(text.c_str()));
}

ExperimentConfig ParseConfig(std::istream& in) {
  pt::ptree root;
  try {
    pt::read_ini(in, root);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  static const std::set<std::string> kSections = {
      "experiment", "mppi", "search", "fixed", "bore", "acquisition", "rf",
      "mlp",        "gp",   "tpe",    "cmaes", "env.pendulum", "env.planar"};
  for (const auto& [name, child] : root) {
    if (!kSections.count(name)) throw std::invalid_argument("config: unknown section [" + name + "]");
  }
  ExperimentConfig c;
  ParseExperiment(root, &c);
  ParseMppi(root, &c);
  ParseSpace(root, &c);
  ParseOptimizers(root, &c);
  ParseEnvs(root, &c);
  c.optimizer.iterations = c.iterations;
  c.optimizer.cmaes.box_widths.clear();
  for (const auto& d : c.space.dims()) c.optimizer.cmaes.box_widths.push_back(d.upper - d.lower);
  c.Validate();
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return ParseConfig(in);
}

std::unique_ptr<Environment> MakeEnvironment(const ExperimentConfig& config) {
  if (config.env == "pendulum") return std::make_unique<Pendulum>(config.pendulum);
  if (config.env == "planar") return std::make_unique<PlanarReach>(config.planar);
  throw std::invalid_argument("unknown env '" + config.env + "'");
}

DecodedPoint DecodePoint(const ExperimentConfig& config, const Environment& env,
                         std::span<const double> unit) {
  const std::vector<double> phys = config.space.Denormalize(unit);
  auto value = [&](const std::string& name) {
    if (auto i = config.space.IndexOf(name)) return phys[*i];
    const auto it = config.fixed.find(name);
    if (it == config.fixed.end()) throw std::invalid_argument("no value for '" + name + "'");
    return it->second;
  };
  DecodedPoint d;
  d.phi.lambda = value("lambda");
  d.phi.sigma_eps = value("sigma_eps");
  for (const auto& p : env.ParamNames()) {
    d.psi.params.push_back({value(p + "_mu"), value(p + "_sigma")});
  }
  d.phi.Validate();
  d.psi.Validate();
  return d;
}

}  // namespace ampc
