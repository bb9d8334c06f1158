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

#include "ampc/harness/experiment.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "ampc/envs/episode.h"

namespace ampc {
namespace {

constexpr std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                     37, 41, 43, 47, 53, 59, 61, 67, 71, 73};

Evaluation EvaluateOnce(const ExperimentConfig& config, const Environment& env,
                        const DecodedPoint& d, const RngStream& rng) {
  Evaluation ev;
  for (int e = 0; e < config.episodes; ++e) {
    const EpisodeResult r =
        RunEpisode(env, config.mppi, d.phi, d.psi, config.steps, rng.Split(e));
    if (!std::isfinite(r.total_reward)) throw std::runtime_error("non-finite episode return");
    ev.returns.push_back(r.total_reward);
    ev.collision_steps += r.collision_steps;
    ev.episodes_with_collision += r.collision_steps > 0 ? 1 : 0;
  }
  ev.g = std::accumulate(ev.returns.begin(), ev.returns.end(), 0.0) /
         static_cast<double>(ev.returns.size());
  return ev;
}

std::string Num(double v) { return fmt::format("{:.17g}", v); }

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

Evaluation EvaluatePoint(const ExperimentConfig& config, const Environment& env,
                         std::span<const double> unit, const RngStream& rng) {
  const DecodedPoint d = DecodePoint(config, env, unit);
  try {
    return EvaluateOnce(config, env, d, rng);
  } catch (const std::runtime_error& e) {
    spdlog::warn("evaluation failed ({}); retrying on a fresh stream", e.what());
  }
  try {
    Evaluation ev = EvaluateOnce(config, env, d, rng.Split(StreamId("retry")));
    ev.retried = true;
    return ev;
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string("evaluation failed twice: ") + e.what());
  }
}

double AvgCumReward(std::span<const double> g, std::size_t t) {
  if (t < 1 || t > g.size()) throw std::domain_error("AvgCumReward: t out of range");
  return std::accumulate(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(t), 0.0) /
         static_cast<double>(t);
}

Point HaltonPoint(std::uint64_t index, std::size_t dim) {
  if (dim > std::size(kPrimes)) throw std::invalid_argument("HaltonPoint: too many dimensions");
  Point x(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::uint64_t base = kPrimes[k];
    double f = 1.0, r = 0.0;
    for (std::uint64_t i = index; i > 0; i /= base) {
      f /= static_cast<double>(base);
      r += f * static_cast<double>(i % base);
    }
    x[k] = r;
  }
  return x;
}

WorstStart FindWorstStart(const ExperimentConfig& config, const Environment& env,
                          const RngStream& rng) {
  const std::size_t dim = config.space.size();
  WorstStart worst;
  worst.g = std::numeric_limits<double>::infinity();
  for (int k = 0; k < config.worst_scan_points; ++k) {
    const Point x = k == 0 ? config.space.Center() : HaltonPoint(static_cast<std::uint64_t>(k), dim);
    const Evaluation ev = EvaluatePoint(config, env, x, rng.Split(static_cast<std::uint64_t>(k)));
    if (k == 0) worst.center_g = ev.g;
    if (ev.g < worst.g) {
      worst.x = x;
      worst.g = ev.g;
      worst.returns = ev.returns;
    }
  }
  return worst;
}

WorstStart LoadOrFindWorstStart(const ExperimentConfig& config, const Environment& env,
                                std::uint64_t seed, const std::string& cache_dir) {
  const std::string fingerprint = config.Fingerprint();
  const std::string path =
      cache_dir.empty() ? "" : fmt::format("{}/worst_start_seed{}.csv", cache_dir, seed);
  if (!path.empty()) {
    std::ifstream in(path);
    std::string line;
    std::map<std::string, std::vector<std::string>> fields;
    while (std::getline(in, line)) {
      auto items = SplitCsv(line);
      if (items.empty()) continue;
      const std::string key = items.front();
      items.erase(items.begin());
      fields[key] = items;
    }
    if (fields.count("fingerprint") && fields["fingerprint"] == std::vector{fingerprint} &&
        fields.count("x") && fields["x"].size() == config.space.size()) {
      WorstStart ws;
      for (const auto& v : fields["x"]) ws.x.push_back(std::stod(v));
      ws.g = std::stod(fields.at("g").at(0));
      ws.center_g = std::stod(fields.at("center_g").at(0));
      for (const auto& v : fields["returns"]) ws.returns.push_back(std::stod(v));
      return ws;
    }
  }
  const WorstStart ws = FindWorstStart(config, env, RngStream(seed, StreamId("worst-start")));
  if (!path.empty()) {
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(path);
    out << "fingerprint," << fingerprint << "\n";
    out << "g," << Num(ws.g) << "\n";
    out << "center_g," << Num(ws.center_g) << "\n";
    out << "x";
    for (double v : ws.x) out << "," << Num(v);
    out << "\nreturns";
    for (double v : ws.returns) out << "," << Num(v);
    out << "\n";
  }
  return ws;
}

std::string CsvHeader(const ExperimentConfig& config) {
  std::string h = "iter,seed,optimizer,g,best_so_far,avg_cum_reward";
  for (const auto& d : config.space.dims()) h += "," + d.name;
  return h;
}

std::string CsvRow(const RunRow& row) {
  std::string s = fmt::format("{},{},{},{},{},{}", row.iter, row.seed, row.optimizer,
                              Num(row.g), Num(row.best_so_far), Num(row.avg_cum_reward));
  for (double v : row.physical) s += "," + Num(v);
  return s;
}

RunResult RunTune(const ExperimentConfig& config, const std::string& optimizer,
                  std::uint64_t seed, const RunOptions& options) {
  const auto env = MakeEnvironment(config);
  const std::size_t dim = config.space.size();
  auto opt = MakeOptimizer(optimizer, dim, config.optimizer);
  auto* bore = dynamic_cast<Bore*>(opt.get());

  RunResult result;
  result.optimizer = opt->Name();
  result.seed = seed;
  if (config.start_at_worst) {
    result.start = LoadOrFindWorstStart(config, *env, seed, options.out_dir);
    result.data.Append({result.start->x, result.start->g, result.start->returns});
    opt->Observe(result.start->x, result.start->g);
  }

  std::ofstream csv;
  if (!options.out_dir.empty()) {
    std::filesystem::create_directories(options.out_dir);
    csv.open(fmt::format("{}/{}_seed{}.csv", options.out_dir, result.optimizer, seed));
    csv << CsvHeader(config) << "\n" << std::flush;
  }

  const RngStream eval_base(seed, StreamId("evaluate"));
  const RngStream opt_base(seed, StreamId(result.optimizer.c_str()));
  std::vector<double> g_history;
  for (int t = 1; t <= config.iterations; ++t) {
    RngStream rng = opt_base.Split(static_cast<std::uint64_t>(t));
    Point x = opt->Suggest(result.data, t, rng);
    if (x.size() != dim || !SearchSpace::InUnitBox(x)) {
      throw std::logic_error(result.optimizer + " suggested a point outside the box");
    }
    if (bore != nullptr) result.bore.push_back(bore->last());

    const Evaluation ev =
        EvaluatePoint(config, *env, x, eval_base.Split(static_cast<std::uint64_t>(t)));
    result.data.Append({x, ev.g, ev.returns});
    opt->Observe(x, ev.g);
    result.evaluations.push_back(ev);

    g_history.push_back(ev.g);
    RunRow row;
    row.iter = t;
    row.seed = seed;
    row.optimizer = result.optimizer;
    row.g = ev.g;
    row.best_so_far = *std::max_element(g_history.begin(), g_history.end());
    row.avg_cum_reward = AvgCumReward(g_history, g_history.size());
    row.physical = config.space.Denormalize(x);
    row.unit = std::move(x);
    if (csv.is_open()) csv << CsvRow(row) << "\n" << std::flush;
    if (options.on_row) options.on_row(row);
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::map<std::string, std::vector<RunResult>> RunBenchmark(const ExperimentConfig& config,
                                                          const RunOptions& options) {
  std::map<std::string, std::vector<RunResult>> runs;
  for (const auto& name : config.optimizers) {
    for (std::uint64_t seed : config.seeds) {
      spdlog::info("{} seed {}", name, seed);
      runs[name].push_back(RunTune(config, name, seed, options));
    }
  }
  if (!options.out_dir.empty()) {
    WriteSummary(options.out_dir + "/summary.csv", Summarize(runs));
  }
  return runs;
}

std::vector<SummaryRow> Summarize(const std::map<std::string, std::vector<RunResult>>& runs) {
  auto mean_std = [](const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::pair{mean, v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0};
  };
  std::vector<SummaryRow> out;
  for (const auto& [name, results] : runs) {
    if (results.empty()) continue;
    std::size_t iters = results.front().rows.size();
    for (const auto& r : results) iters = std::min(iters, r.rows.size());
    for (std::size_t i = 0; i < iters; ++i) {
      std::vector<double> avg, best;
      for (const auto& r : results) {
        avg.push_back(r.rows[i].avg_cum_reward);
        best.push_back(r.rows[i].best_so_far);
      }
      SummaryRow s;
      s.iter = static_cast<int>(i) + 1;
      s.optimizer = name;
      std::tie(s.mean, s.std) = mean_std(avg);
      std::tie(s.best_mean, s.best_std) = mean_std(best);
      s.seeds = static_cast<int>(results.size());
      out.push_back(s);
    }
  }
  return out;
}

void WriteSummary(const std::string& path, const std::vector<SummaryRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "iter,optimizer,mean_avg_cum_reward,std_avg_cum_reward,mean_best_so_far,"
         "std_best_so_far,seeds\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},{},{},{}\n", r.iter, r.optimizer, Num(r.mean), Num(r.std),
                       Num(r.best_mean), Num(r.best_std), r.seeds);
  }
}

std::vector<SummaryRow> ReadSummary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<SummaryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = SplitCsv(line);
    if (f.size() != 7) throw std::runtime_error("malformed summary line: " + line);
    rows.push_back({std::stoi(f[0]), f[1], std::stod(f[2]), std::stod(f[3]), std::stod(f[4]),
                    std::stod(f[5]), std::stoi(f[6])});
  }
  return rows;
}

std::string RenderSvg(const std::vector<SummaryRow>& rows, double band) {
  constexpr double kW = 800, kH = 500, kLeft = 80, kRight = 170, kTop = 30, kBottom = 60;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  std::map<std::string, std::vector<const SummaryRow*>> series;
  std::vector<std::string> order;
  double x_max = 1, y_lo = std::numeric_limits<double>::infinity(), y_hi = -y_lo;
  for (const auto& r : rows) {
    if (!series.count(r.optimizer)) order.push_back(r.optimizer);
    series[r.optimizer].push_back(&r);
    x_max = std::max(x_max, static_cast<double>(r.iter));
    y_lo = std::min(y_lo, r.mean - band * r.std);
    y_hi = std::max(y_hi, r.mean + band * r.std);
  }
  if (rows.empty()) y_lo = 0, y_hi = 1;
  if (y_hi - y_lo < 1e-12) y_lo -= 1, y_hi += 1;
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;
  auto px = [&](double x) { return kLeft + (x - 1) / std::max(1.0, x_max - 1) * (kW - kLeft - kRight); };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * (kH - kTop - kBottom); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kW, kH);
  // Axes and ticks.
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", kLeft,
                     kTop, kH - kBottom);
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", kLeft,
                     kH - kBottom, kW - kRight);
  for (int i = 0; i <= 5; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / 5.0;
    svg += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 6, py(y) + 4, y);
    const double x = 1 + (x_max - 1) * i / 5.0;
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.0f}</text>\n",
                       px(x), kH - kBottom + 18, x);
  }
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">iteration</text>\n",
                     (kLeft + kW - kRight) / 2, kH - 15);
  svg += fmt::format(
      "<text transform=\"translate(18,{:.1f}) rotate(-90)\" text-anchor=\"middle\">"
      "averaged cumulative reward</text>\n",
      (kTop + kH - kBottom) / 2);

  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto& pts = series[order[s]];
    const char* color = kColors[s % std::size(kColors)];
    std::string band_path, line;
    for (const auto* r : pts) band_path += fmt::format("{:.2f},{:.2f} ", px(r->iter), py(r->mean + band * r->std));
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      band_path += fmt::format("{:.2f},{:.2f} ", px((*it)->iter), py((*it)->mean - band * (*it)->std));
    }
    for (const auto* r : pts) line += fmt::format("{:.2f},{:.2f} ", px(r->iter), py(r->mean));
    svg += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.2\" stroke=\"none\"/>\n",
                       band_path, color);
    svg += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                       line, color);
    const double ly = kTop + 20.0 * static_cast<double>(s);
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"{3}\" "
        "stroke-width=\"3\"/><text x=\"{4:.1f}\" y=\"{5:.1f}\">{6}</text>\n",
        kW - kRight + 15, ly, kW - kRight + 40, color, kW - kRight + 46, ly + 4, order[s]);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ampc
