// Copyright 2026 The SQNN Authors. All Rights Reserved.
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

#include "sqnn/optimize.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <optional>

#include "sqnn/errors.h"

namespace sqnn {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double InfNorm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct Point {
  double alpha = 0.0;
  double value = 0.0;
  double slope = 0.0;  // directional derivative
  std::vector<double> x;
  std::vector<double> grad;
};

class LineSearch {
 public:
  LineSearch(const Objective& f, const std::vector<double>& x, const std::vector<double>& dir,
             double f0, double slope0, const LbfgsOptions& opt, int iteration)
      : f_(f), x_(x), dir_(dir), f0_(f0), slope0_(slope0), opt_(opt), iteration_(iteration) {}

  // Returns true and fills *out with a point meeting the strong Wolfe
  // conditions, or with the best sufficient-decrease point found when the
  // evaluation budget runs out. Returns false if no such point was found.
  bool Run(double alpha0, Point* out) {
    Point prev{0.0, f0_, slope0_, x_, {}};
    double alpha = alpha0;
    for (int i = 0; evaluations_ < opt_.max_line_search_evaluations; ++i) {
      Point cur = Evaluate(alpha);
      if (cur.value > f0_ + opt_.c1 * alpha * slope0_ || (i > 0 && cur.value >= prev.value)) {
        return Zoom(std::move(prev), std::move(cur), out);
      }
      if (std::abs(cur.slope) <= -opt_.c2 * slope0_) {
        *out = std::move(cur);
        return true;
      }
      if (cur.slope >= 0.0) return Zoom(std::move(cur), std::move(prev), out);
      RememberIfBetter(cur);
      prev = std::move(cur);
      alpha *= 2.0;
    }
    return Fallback(out);
  }

 private:
  Point Evaluate(double alpha) {
    ++evaluations_;
    Point p;
    p.alpha = alpha;
    p.x.resize(x_.size());
    p.grad.assign(x_.size(), 0.0);
    for (std::size_t i = 0; i < x_.size(); ++i) p.x[i] = x_[i] + alpha * dir_[i];
    p.value = f_(p.x, p.grad);
    if (!std::isfinite(p.value)) throw TrainingError(iteration_, "non-finite loss in line search");
    p.slope = Dot(p.grad, dir_);
    return p;
  }

  void RememberIfBetter(const Point& p) {
    if (p.value <= f0_ + opt_.c1 * p.alpha * slope0_ && (!best_ || p.value < best_->value)) {
      best_ = p;
    }
  }

  bool Fallback(Point* out) {
    if (!best_ || !(best_->value < f0_)) return false;
    *out = std::move(*best_);
    return true;
  }

  // lo satisfies sufficient decrease with the lowest value seen so far;
  // the minimizer lies between lo and hi.
  bool Zoom(Point lo, Point hi, Point* out) {
    RememberIfBetter(lo);
    while (evaluations_ < opt_.max_line_search_evaluations) {
      const double alpha = Interpolate(lo, hi);
      Point cur = Evaluate(alpha);
      if (cur.value > f0_ + opt_.c1 * alpha * slope0_ || cur.value >= lo.value) {
        hi = std::move(cur);
      } else {
        if (std::abs(cur.slope) <= -opt_.c2 * slope0_) {
          *out = std::move(cur);
          return true;
        }
        if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) hi = std::move(lo);
        RememberIfBetter(cur);
        lo = std::move(cur);
      }
      if (std::abs(hi.alpha - lo.alpha) <= 1e-14 * std::max(1.0, std::abs(lo.alpha))) break;
    }
    return Fallback(out);
  }

  // Cubic interpolation through both endpoints, kept at least 10% of the
  // interval away from either end; bisection when the cubic is unusable.
  static double Interpolate(const Point& lo, const Point& hi) {
    const double a = lo.alpha;
    const double b = hi.alpha;
    const double mid = 0.5 * (a + b);
    double result = mid;
    const double d1 = lo.slope + hi.slope - 3.0 * (lo.value - hi.value) / (a - b);
    const double disc = d1 * d1 - lo.slope * hi.slope;
    if (disc >= 0.0) {
      const double d2 = std::copysign(std::sqrt(disc), b - a);
      const double denom = hi.slope - lo.slope + 2.0 * d2;
      if (denom != 0.0) {
        const double t = b - (b - a) * (hi.slope + d2 - d1) / denom;
        if (std::isfinite(t)) result = t;
      }
    }
    const double left = std::min(a, b);
    const double right = std::max(a, b);
    const double margin = 0.1 * (right - left);
    return std::clamp(result, left + margin, right - margin);
  }

  const Objective& f_;
  const std::vector<double>& x_;
  const std::vector<double>& dir_;
  double f0_;
  double slope0_;
  const LbfgsOptions& opt_;
  int iteration_;
  int evaluations_ = 0;
  std::optional<Point> best_;
};

}  // namespace

OptimizeResult MinimizeLbfgs(const Objective& f, std::vector<double> x0, const LbfgsOptions& options) {
  const std::size_t n = x0.size();
  OptimizeResult result;
  result.x = std::move(x0);
  std::vector<double> grad(n, 0.0);
  double value = f(result.x, grad);
  if (!std::isfinite(value)) throw TrainingError(0, "non-finite initial loss");
  result.history.push_back(value);

  std::deque<std::vector<double>> s_hist;
  std::deque<std::vector<double>> y_hist;
  std::deque<double> rho_hist;
  std::vector<double> dir(n);
  std::vector<double> alpha_buf;

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    if (n == 0 || InfNorm(grad) <= options.gradient_tolerance) break;

    // Two-loop recursion: dir = -H grad.
    std::vector<double> q = grad;
    const std::size_t m = s_hist.size();
    alpha_buf.assign(m, 0.0);
    for (std::size_t k = m; k-- > 0;) {
      alpha_buf[k] = rho_hist[k] * Dot(s_hist[k], q);
      for (std::size_t i = 0; i < n; ++i) q[i] -= alpha_buf[k] * y_hist[k][i];
    }
    double gamma = 1.0;
    if (m > 0) gamma = Dot(s_hist.back(), y_hist.back()) / Dot(y_hist.back(), y_hist.back());
    for (double& v : q) v *= gamma;
    for (std::size_t k = 0; k < m; ++k) {
      const double beta = rho_hist[k] * Dot(y_hist[k], q);
      for (std::size_t i = 0; i < n; ++i) q[i] += s_hist[k][i] * (alpha_buf[k] - beta);
    }
    for (std::size_t i = 0; i < n; ++i) dir[i] = -q[i];

    double slope = Dot(grad, dir);
    if (!(slope < 0.0)) {
      // Not a descent direction; restart from steepest descent.
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];
      slope = Dot(grad, dir);
    }
    const double alpha0 = m == 0 ? std::min(1.0, 1.0 / std::sqrt(-slope)) : 1.0;

    LineSearch search(f, result.x, dir, value, slope, options, iter);
    Point next;
    if (!search.Run(alpha0, &next)) break;

    std::vector<double> s(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = next.x[i] - result.x[i];
      y[i] = next.grad[i] - grad[i];
    }
    const double sy = Dot(s, y);
    if (sy > 1e-12 * std::sqrt(Dot(s, s) * Dot(y, y))) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > options.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    result.x = std::move(next.x);
    grad = std::move(next.grad);
    value = next.value;
    result.history.push_back(value);
    result.iterations = iter;
  }
  return result;
}

OptimizeResult MinimizeAdam(const Objective& f, std::vector<double> x0, const AdamOptions& options) {
  const std::size_t n = x0.size();
  OptimizeResult result;
  std::vector<double> x = std::move(x0);
  std::vector<double> grad(n, 0.0);
  std::vector<double> m(n, 0.0);
  std::vector<double> v(n, 0.0);
  std::vector<double> best_x = x;
  double best_value = 0.0;
  double beta1_pow = 1.0;
  double beta2_pow = 1.0;

  for (int t = 0;; ++t) {
    const double value = f(x, grad);
    if (!std::isfinite(value)) throw TrainingError(t, "non-finite loss");
    result.history.push_back(value);
    if (t == 0 || value < best_value) {
      best_value = value;
      best_x = x;
    }
    if (t == options.iterations) break;

    beta1_pow *= options.beta1;
    beta2_pow *= options.beta2;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = options.beta1 * m[i] + (1.0 - options.beta1) * grad[i];
      v[i] = options.beta2 * v[i] + (1.0 - options.beta2) * grad[i] * grad[i];
      const double m_hat = m[i] / (1.0 - beta1_pow);
      const double v_hat = v[i] / (1.0 - beta2_pow);
      x[i] -= options.learning_rate * m_hat / (std::sqrt(v_hat) + options.epsilon);
    }
    result.iterations = t + 1;
  }
  result.x = options.keep_best ? std::move(best_x) : std::move(x);
  return result;
}

}  // namespace sqnn
