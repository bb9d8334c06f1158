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

#include "ampc/classifiers/mlp.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ampc {
namespace {

double Sigmoid(double o) {
  if (o >= 0.0) return 1.0 / (1.0 + std::exp(-o));
  const double e = std::exp(o);
  return e / (1.0 + e);
}

// log(1 + exp(o)) without overflow.
double Softplus(double o) { return std::max(o, 0.0) + std::log1p(std::exp(-std::abs(o))); }

// Offsets into the flat parameter vector.
struct Layout {
  std::size_t w1, b1, w2, b2, w3, b3, total;

  Layout(int d, int h) {
    w1 = 0;
    b1 = w1 + static_cast<std::size_t>(h) * d;
    w2 = b1 + h;
    b2 = w2 + static_cast<std::size_t>(h) * h;
    w3 = b2 + h;
    b3 = w3 + h;
    total = b3 + 1;
  }
};

}  // namespace

void Mlp::Initialize(int input_dim, RngStream& rng) {
  if (input_dim < 1) throw std::invalid_argument("Mlp: input_dim < 1");
  input_dim_ = input_dim;
  const int h = options_.hidden;
  const Layout layout(input_dim, h);
  params_.assign(layout.total, 0.0);
  auto fill = [&](std::size_t begin, std::size_t count, double limit) {
    for (std::size_t i = 0; i < count; ++i) params_[begin + i] = rng.Uniform(-limit, limit);
  };
  fill(layout.w1, static_cast<std::size_t>(h) * input_dim, std::sqrt(6.0 / input_dim));
  fill(layout.w2, static_cast<std::size_t>(h) * h, std::sqrt(6.0 / h));
  fill(layout.w3, h, std::sqrt(3.0 / h));
}

double Mlp::Logit(std::span<const double> x) const {
  const int d = input_dim_;
  const int h = options_.hidden;
  const Layout layout(d, h);
  const double* p = params_.data();
  std::vector<double> h1(h), h2(h);
  for (int i = 0; i < h; ++i) {
    double a = p[layout.b1 + i];
    const double* row = p + layout.w1 + static_cast<std::size_t>(i) * d;
    for (int k = 0; k < d; ++k) a += row[k] * x[k];
    h1[i] = a > 0.0 ? a : 0.0;
  }
  for (int i = 0; i < h; ++i) {
    double a = p[layout.b2 + i];
    const double* row = p + layout.w2 + static_cast<std::size_t>(i) * h;
    for (int k = 0; k < h; ++k) a += row[k] * h1[k];
    h2[i] = a > 0.0 ? a : 0.0;
  }
  double o = p[layout.b3];
  for (int k = 0; k < h; ++k) o += p[layout.w3 + k] * h2[k];
  return o;
}

double Mlp::PredictProba(std::span<const double> x) const {
  if (!fitted_) throw std::logic_error("Mlp: predict before fit");
  if (constant_) return *constant_;
  return Sigmoid(Logit(x));
}

double Mlp::LossAndGradient(std::span<const Point> x, std::span<const int> z,
                            std::vector<double>* grad) const {
  if (x.size() != z.size() || x.empty()) {
    throw std::invalid_argument("Mlp::LossAndGradient: bad batch");
  }
  const int d = input_dim_;
  const int h = options_.hidden;
  const Layout layout(d, h);
  const double* p = params_.data();
  if (grad != nullptr) grad->assign(layout.total, 0.0);
  const double scale = 1.0 / static_cast<double>(x.size());

  std::vector<double> a1(h), h1(h), a2(h), h2(h), d1(h), d2(h);
  double loss = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double* xn = x[n].data();
    for (int i = 0; i < h; ++i) {
      double a = p[layout.b1 + i];
      const double* row = p + layout.w1 + static_cast<std::size_t>(i) * d;
      for (int k = 0; k < d; ++k) a += row[k] * xn[k];
      a1[i] = a;
      h1[i] = a > 0.0 ? a : 0.0;
    }
    for (int i = 0; i < h; ++i) {
      double a = p[layout.b2 + i];
      const double* row = p + layout.w2 + static_cast<std::size_t>(i) * h;
      for (int k = 0; k < h; ++k) a += row[k] * h1[k];
      a2[i] = a;
      h2[i] = a > 0.0 ? a : 0.0;
    }
    double o = p[layout.b3];
    for (int k = 0; k < h; ++k) o += p[layout.w3 + k] * h2[k];
    loss += Softplus(o) - z[n] * o;
    if (grad == nullptr) continue;

    double* g = grad->data();
    const double delta_o = (Sigmoid(o) - z[n]) * scale;
    g[layout.b3] += delta_o;
    for (int k = 0; k < h; ++k) {
      g[layout.w3 + k] += delta_o * h2[k];
      d2[k] = a2[k] > 0.0 ? delta_o * p[layout.w3 + k] : 0.0;
    }
    std::fill(d1.begin(), d1.end(), 0.0);
    for (int i = 0; i < h; ++i) {
      if (d2[i] == 0.0) continue;
      g[layout.b2 + i] += d2[i];
      double* grow = g + layout.w2 + static_cast<std::size_t>(i) * h;
      const double* row = p + layout.w2 + static_cast<std::size_t>(i) * h;
      for (int k = 0; k < h; ++k) {
        grow[k] += d2[i] * h1[k];
        d1[k] += row[k] * d2[i];
      }
    }
    for (int i = 0; i < h; ++i) {
      if (a1[i] <= 0.0 || d1[i] == 0.0) continue;
      g[layout.b1 + i] += d1[i];
      double* grow = g + layout.w1 + static_cast<std::size_t>(i) * d;
      for (int k = 0; k < d; ++k) grow[k] += d1[i] * xn[k];
    }
  }
  return loss * scale;
}

void Mlp::Fit(const LabelledSet& data, RngStream& rng) {
  data.Validate();
  constant_.reset();
  loss_history_.clear();
  fitted_ = true;
  input_dim_ = static_cast<int>(data.x.front().size());
  if (!data.HasBothClasses()) {
    constant_ = static_cast<double>(data.Positives()) / static_cast<double>(data.size());
    return;
  }

  Initialize(input_dim_, rng);
  const std::size_t n = data.size();
  const std::size_t batch = static_cast<std::size_t>(std::max(1, options_.batch_size));
  std::vector<double> m(params_.size(), 0.0), v(params_.size(), 0.0), grad;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Point> bx;
  std::vector<int> bz;
  double beta1_t = 1.0;
  double beta2_t = 1.0;

  for (int epoch = 0; epoch < options_.epochs; ++epoch) {
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.Index(i + 1)]);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += batch) {
      const std::size_t stop = std::min(n, start + batch);
      bx.clear();
      bz.clear();
      for (std::size_t i = start; i < stop; ++i) {
        bx.push_back(data.x[order[i]]);
        bz.push_back(data.z[order[i]]);
      }
      epoch_loss += LossAndGradient(bx, bz, &grad) * static_cast<double>(stop - start);

      beta1_t *= options_.beta1;
      beta2_t *= options_.beta2;
      for (std::size_t k = 0; k < params_.size(); ++k) {
        m[k] = options_.beta1 * m[k] + (1.0 - options_.beta1) * grad[k];
        v[k] = options_.beta2 * v[k] + (1.0 - options_.beta2) * grad[k] * grad[k];
        const double m_hat = m[k] / (1.0 - beta1_t);
        const double v_hat = v[k] / (1.0 - beta2_t);
        params_[k] -= options_.learning_rate * m_hat / (std::sqrt(v_hat) + options_.epsilon);
      }
    }
    loss_history_.push_back(epoch_loss / static_cast<double>(n));
  }
}

}  // namespace ampc
