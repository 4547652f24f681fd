// Copyright 2026 The randcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randcluster/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>

#include "randcluster/errors.h"

namespace randcluster {

namespace {

constexpr std::uint32_t kBootstrapLane = 0x80000000U;
constexpr double kMaxDropFraction = 0.2;

// Stable log(1 + exp(x)).
double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

// 1 / (1 + exp(-x))
double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double logistic_value(double a, double b, double c, double q) {
  const double z = (q - a) / b;
  return 100.0 * std::exp(-c * softplus(-z));
}

void validate_points(std::span<const CurvePoint> points, std::size_t min_points) {
  if (points.size() < min_points) {
    throw InvalidInput("curve needs at least " + std::to_string(min_points) + " points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!std::isfinite(p.q) || !std::isfinite(p.mean) || !std::isfinite(p.sem) || p.sem < 0) {
      throw InvalidInput("curve point has a non-finite or negative entry");
    }
    if (i > 0 && !(p.q > points[i - 1].q)) throw InvalidInput("curve q values must ascend");
  }
}

std::vector<double> normalized_weights(std::span<const CurvePoint> points) {
  double min_nonzero = std::numeric_limits<double>::infinity();
  for (const auto& p : points)
    if (p.sem > 0) min_nonzero = std::min(min_nonzero, 1.0 / (p.sem * p.sem));
  if (!std::isfinite(min_nonzero)) min_nonzero = 1.0;
  std::vector<double> w;
  w.reserve(points.size());
  for (const auto& p : points) w.push_back(p.sem > 0 ? 1.0 / (p.sem * p.sem) : min_nonzero);
  const double top = *std::max_element(w.begin(), w.end());
  for (auto& v : w) v /= top;
  return w;
}

struct LogisticResiduals : Eigen::DenseFunctor<double> {
  LogisticResiduals(std::span<const CurvePoint> pts, std::span<const double> w)
      : Eigen::DenseFunctor<double>(3, static_cast<int>(pts.size())), points(pts), weights(w) {}

  // x = (a, log b, log c)
  int operator()(const InputType& x, ValueType& fvec) const {
    const double a = x[0], b = std::exp(x[1]), c = std::exp(x[2]);
    for (std::size_t i = 0; i < points.size(); ++i) {
      fvec[static_cast<Eigen::Index>(i)] =
          std::sqrt(weights[i]) * (logistic_value(a, b, c, points[i].q) - points[i].mean);
    }
    return 0;
  }

  int df(const InputType& x, JacobianType& fjac) const {
    const double a = x[0], b = std::exp(x[1]), c = std::exp(x[2]);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double z = (points[i].q - a) / b;
      const double log_d = softplus(-z);
      const double f = 100.0 * std::exp(-c * log_d);
      const double s = sigmoid(-z);  // exp(-z) / (1 + exp(-z))
      const double sw = std::sqrt(weights[i]);
      const auto row = static_cast<Eigen::Index>(i);
      fjac(row, 0) = sw * (-c * f * s / b);
      fjac(row, 1) = sw * (-c * f * s * z);
      fjac(row, 2) = sw * (-c * f * log_d);
    }
    return 0;
  }

  std::span<const CurvePoint> points;
  std::span<const double> weights;
};

double weighted_sse(const FitModel& fit, std::span<const CurvePoint> points,
                    std::span<const double> w) {
  double sse = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double r = fit(points[i].q) - points[i].mean;
    sse += w[i] * r * r;
  }
  return sse;
}

FitModel fit_logistic(std::span<const CurvePoint> points, std::span<const double> w) {
  LogisticResiduals functor(points, w);
  double best_cost = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best(3);
  for (double a0 = 0.1; a0 < 0.95; a0 += 0.1) {
    for (double b0 : {0.03, 0.1, 0.3}) {
      for (double c0 : {0.3, 1.0, 3.0}) {
        Eigen::VectorXd x(3);
        x << a0, std::log(b0), std::log(c0);
        Eigen::LevenbergMarquardt<LogisticResiduals> lm(functor);
        lm.setXtol(1e-15);
        lm.setFtol(1e-15);
        lm.setMaxfev(4000);
        lm.minimize(x);
        if (!x.allFinite()) continue;
        Eigen::VectorXd r(functor.values());
        functor(x, r);
        const double cost = r.squaredNorm();
        if (std::isfinite(cost) && cost < best_cost) {
          best_cost = cost;
          best = x;
        }
      }
    }
  }
  if (!std::isfinite(best_cost)) throw FitDegenerate("logistic fit did not converge");
  FitModel fit = FitModel::logistic(best[0], std::exp(best[1]), std::exp(best[2]));
  fit.set_residual(best_cost);
  return fit;
}

// Pool-adjacent-violators for a non-decreasing weighted fit.
std::vector<double> isotonic(std::span<const CurvePoint> points, std::span<const double> w) {
  struct Block {
    double wy, w;
    std::size_t count;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < points.size(); ++i) {
    blocks.push_back({w[i] * points[i].mean, w[i], 1});
    while (blocks.size() > 1) {
      const Block& last = blocks.back();
      const Block& prev = blocks[blocks.size() - 2];
      if (prev.wy / prev.w <= last.wy / last.w) break;
      Block merged{prev.wy + last.wy, prev.w + last.w, prev.count + last.count};
      blocks.pop_back();
      blocks.back() = merged;
    }
  }
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& b : blocks) out.insert(out.end(), b.count, b.wy / b.w);
  return out;
}

FitModel fit_monotone(std::span<const CurvePoint> points, std::span<const double> w) {
  std::vector<double> qs;
  for (const auto& p : points) qs.push_back(p.q);
  FitModel fit = FitModel::monotone(std::move(qs), isotonic(points, w));
  fit.set_residual(weighted_sse(fit, points, w));
  return fit;
}

int pchip_sign(double v) { return (v > 0) - (v < 0); }

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0) continue;
    const double w1 = 2 * h[i] + h[i - 1];
    const double w2 = h[i] + 2 * h[i - 1];
    d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
  }
  auto edge = [](double h0, double h1, double m0, double m1) {
    double e = ((2 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (pchip_sign(e) != pchip_sign(m0)) {
      e = 0;
    } else if (pchip_sign(m0) != pchip_sign(m1) && std::abs(e) > 3 * std::abs(m0)) {
      e = 3 * m0;
    }
    return e;
  };
  d[0] = edge(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = edge(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

}  // namespace

std::string to_string(FitFamily family) {
  return family == FitFamily::kMonotone ? "monotone" : "logistic";
}

FitFamily fit_family_from_string(const std::string& text) {
  if (text == "monotone") return FitFamily::kMonotone;
  if (text == "logistic") return FitFamily::kGeneralizedLogistic;
  throw InvalidInput("unknown fit family '" + text + "' (expected monotone or logistic)");
}

FitModel FitModel::logistic(double a, double b, double c) {
  if (!(b > 0) || !(c > 0)) throw InvalidInput("logistic: b and c must be positive");
  FitModel m;
  m.family_ = FitFamily::kGeneralizedLogistic;
  m.params_ = {a, b, c};
  return m;
}

FitModel FitModel::monotone(std::vector<double> knots_q, std::vector<double> knots_y) {
  if (knots_q.size() != knots_y.size() || knots_q.size() < 2) {
    throw InvalidInput("monotone: need at least two matching knots");
  }
  for (std::size_t i = 1; i < knots_y.size(); ++i) {
    if (!(knots_q[i] > knots_q[i - 1])) throw InvalidInput("monotone: knots must ascend");
    if (knots_y[i] < knots_y[i - 1]) throw InvalidInput("monotone: knot values must not decrease");
  }
  FitModel m;
  m.family_ = FitFamily::kMonotone;
  m.slopes_ = pchip_slopes(knots_q, knots_y);
  m.knots_q_ = std::move(knots_q);
  m.params_ = std::move(knots_y);
  return m;
}

double FitModel::operator()(double q) const {
  if (family_ == FitFamily::kGeneralizedLogistic) {
    return logistic_value(params_[0], params_[1], params_[2], q);
  }
  const auto& x = knots_q_;
  const auto& y = params_;
  if (q <= x.front()) return std::clamp(y.front(), 0.0, 100.0);
  if (q >= x.back()) return std::clamp(y.back(), 0.0, 100.0);
  const auto it = std::upper_bound(x.begin(), x.end(), q);
  const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
  const double h = x[i + 1] - x[i];
  const double t = (q - x[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double v = (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + t) * h * slopes_[i] +
                   (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * h * slopes_[i + 1];
  return std::clamp(v, 0.0, 100.0);
}

FitModel fit_mixedness_curve(std::span<const CurvePoint> points, FitFamily family) {
  validate_points(points, 8);
  if (points.front().q > 0.1 + 1e-12 || points.back().q < 0.9 - 1e-12) {
    throw InvalidInput("fit_mixedness_curve: points must span [0, 1]");
  }
  double lo = points.front().mean, hi = points.front().mean;
  for (const auto& p : points) {
    if (p.mean < -1e-9 || p.mean > 100.0 + 1e-9) {
      throw InvalidInput("fit_mixedness_curve: means must lie in [0, 100]");
    }
    lo = std::min(lo, p.mean);
    hi = std::max(hi, p.mean);
  }
  if (hi - lo < 1e-12) throw FitDegenerate("fit_mixedness_curve: all means are equal");
  const auto w = normalized_weights(points);
  return family == FitFamily::kMonotone ? fit_monotone(points, w) : fit_logistic(points, w);
}

double solve_threshold(const FitModel& fit, double level) {
  if (!(level > 0.0 && level < 100.0)) throw InvalidInput("solve_threshold: level must lie in (0, 100)");
  if (fit(1.0) < level) throw NoCrossing("solve_threshold: fit never reaches the level on [0, 1]");
  if (fit(0.0) >= level) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (fit(mid) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (std::abs(fit(hi) - level) < 1e-9 && hi - lo < 1e-12) break;
  }
  return hi;
}

ThresholdEstimate bootstrap_threshold(std::span<const CurvePoint> points, double level,
                                      int n_boot, std::uint64_t seed, FitFamily family) {
  if (n_boot < 1) throw InvalidInput("bootstrap_threshold: n_boot must be positive");
  std::vector<double> found;
  ThresholdEstimate est;
  std::vector<CurvePoint> noisy(points.begin(), points.end());
  for (int r = 0; r < n_boot; ++r) {
    RandomStream rng = substream(SeedSpec{seed, static_cast<std::uint64_t>(r), kBootstrapLane});
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double jitter = points[i].sem > 0 ? points[i].sem * rng.next_normal() : 0.0;
      noisy[i].mean = std::clamp(points[i].mean + jitter, 0.0, 100.0);
    }
    try {
      found.push_back(solve_threshold(fit_mixedness_curve(noisy, family), level));
    } catch (const NoCrossing&) {
      ++est.dropped;
    } catch (const FitDegenerate&) {
      ++est.dropped;
    }
  }
  est.kept = static_cast<int>(found.size());
  if (est.dropped > kMaxDropFraction * n_boot || found.empty()) {
    throw BootstrapUnstable("bootstrap_threshold: " + std::to_string(est.dropped) + " of " +
                            std::to_string(n_boot) + " refits found no crossing");
  }
  const MeanStat s = summarize(found);
  est.mean = s.mean;
  est.stddev = s.stddev;
  return est;
}

namespace {

struct Vertex {
  double q, value;
  std::size_t index;
};

Vertex quadratic_vertex(std::span<const CurvePoint> points) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].mean > points[arg].mean) arg = i;
  if (arg == 0 || arg + 1 == points.size()) {
    throw NoInteriorMax("locate_max: the maximum sits on a grid endpoint");
  }
  const std::size_t lo = std::min(arg >= 2 ? arg - 2 : 0, points.size() - 5);
  const double q0 = points[arg].q;
  Eigen::Matrix<double, 5, 3> design;
  Eigen::Matrix<double, 5, 1> rhs;
  for (std::size_t k = 0; k < 5; ++k) {
    const double t = points[lo + k].q - q0;
    const auto row = static_cast<Eigen::Index>(k);
    design(row, 0) = 1.0;
    design(row, 1) = t;
    design(row, 2) = t * t;
    rhs(row) = points[lo + k].mean;
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
  double t_star = 0.0;
  if (coef[2] < 0) t_star = -coef[1] / (2.0 * coef[2]);
  t_star = std::clamp(t_star, points[lo].q - q0, points[lo + 4].q - q0);
  return {q0 + t_star, coef[0] + coef[1] * t_star + coef[2] * t_star * t_star, arg};
}

}  // namespace

MaxLocation locate_max(std::span<const CurvePoint> points, int n_boot, std::uint64_t seed) {
  validate_points(points, 5);
  const Vertex v = quadratic_vertex(points);
  MaxLocation out{v.q, 0.0, v.value, v.index};
  std::vector<double> found;
  std::vector<CurvePoint> noisy(points.begin(), points.end());
  for (int r = 0; r < n_boot; ++r) {
    RandomStream rng = substream(SeedSpec{seed, static_cast<std::uint64_t>(r), kBootstrapLane + 1});
    for (std::size_t i = 0; i < points.size(); ++i)
      noisy[i].mean = points[i].mean + (points[i].sem > 0 ? points[i].sem * rng.next_normal() : 0.0);
    try {
      found.push_back(quadratic_vertex(noisy).q);
    } catch (const NoInteriorMax&) {
    }
  }
  if (found.size() > 1) out.uncertainty = summarize(found).stddev;
  return out;
}

std::vector<CurvePoint> mixedness_curve(std::span<const QPointAggregate> aggregates, int m) {
  std::vector<CurvePoint> out;
  for (const auto& a : aggregates) {
    if (m < 1 || static_cast<std::size_t>(m) >= a.mixed_pct.size()) {
      throw InvalidInput("mixedness_curve: reduction size out of range or census missing");
    }
    const auto& s = a.mixed_pct[static_cast<std::size_t>(m)];
    out.push_back({a.q, s.mean, s.sem});
  }
  return out;
}

std::vector<CurvePoint> f2_curve(std::span<const QPointAggregate> aggregates) {
  std::vector<CurvePoint> out;
  for (const auto& a : aggregates) out.push_back({a.q, a.f2_pct.mean, a.f2_pct.sem});
  return out;
}

std::vector<CurvePoint> multipartite_curve(std::span<const QPointAggregate> aggregates,
                                           RootMode mode) {
  std::vector<CurvePoint> out;
  for (const auto& a : aggregates) {
    const auto& s = a.multipartite(mode);
    out.push_back({a.q, s.mean, s.sem});
  }
  return out;
}

std::vector<ThresholdResult> compute_thresholds(std::span<const QPointAggregate> aggregates,
                                                int n, double level, int n_boot,
                                                std::uint64_t seed, FitFamily family) {
  std::vector<ThresholdResult> out;
  for (int k = 1; k < n; ++k) {
    ThresholdResult r;
    r.k = k;
    const auto points = mixedness_curve(aggregates, k);
    try {
      solve_threshold(fit_mixedness_curve(points, family), level);
      const ThresholdEstimate est = bootstrap_threshold(points, level, n_boot, seed, family);
      r.q_star = est.mean;
      r.uncertainty = est.stddev;
      r.dropped = est.dropped;
    } catch (const NoCrossing&) {
      r.status = "no_crossing";
    } catch (const FitDegenerate&) {
      r.status = "degenerate";
    } catch (const BootstrapUnstable&) {
      r.status = "unstable";
    } catch (const InvalidInput&) {
      r.status = "insufficient_points";
    }
    if (r.status != "ok") r.q_star = std::numeric_limits<double>::quiet_NaN();
    out.push_back(r);
  }
  return out;
}

}  // namespace randcluster
