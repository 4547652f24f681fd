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

#ifndef RANDCLUSTER_ANALYSIS_H
#define RANDCLUSTER_ANALYSIS_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "randcluster/mc_engine.h"

namespace randcluster {

struct CurvePoint {
  double q = 0.0;
  double mean = 0.0;
  /// Standard error of `mean`; zero is allowed.
  double sem = 0.0;
};

enum class FitFamily {
  /// 100 / (1 + exp(-(q - a) / b))^c, b > 0, c > 0.
  kGeneralizedLogistic,
  /// Weighted isotonic regression through the points, joined by a
  /// Fritsch-Carlson monotone cubic.
  kMonotone,
};

std::string to_string(FitFamily family);
FitFamily fit_family_from_string(const std::string& text);

inline constexpr FitFamily kDefaultFitFamily = FitFamily::kMonotone;
inline constexpr double kDefaultLevel = 99.9;
inline constexpr int kDefaultBootstrapRefits = 100;

/// A fitted, non-decreasing map from [0, 1] into [0, 100].
class FitModel {
 public:
  static FitModel logistic(double a, double b, double c);
  static FitModel monotone(std::vector<double> knots_q, std::vector<double> knots_y);

  FitFamily family() const { return family_; }
  /// (a, b, c) for the logistic; the isotonic knot values for the monotone family.
  const std::vector<double>& parameters() const { return params_; }
  /// Weighted sum of squared errors (weights normalized to a maximum of one).
  double residual() const { return residual_; }
  void set_residual(double r) { residual_ = r; }

  double operator()(double q) const;

 private:
  FitModel() = default;

  FitFamily family_ = FitFamily::kGeneralizedLogistic;
  std::vector<double> params_;
  std::vector<double> knots_q_;
  std::vector<double> slopes_;
  double residual_ = 0.0;
};

/// Weighted least-squares fit with weights 1/sem^2; points with sem == 0 get
/// the smallest nonzero weight in the set. Needs >= 8 points spanning [0, 1]
/// with means in [0, 100]; throws FitDegenerate when all means are equal.
FitModel fit_mixedness_curve(std::span<const CurvePoint> points,
                             FitFamily family = kDefaultFitFamily);

/// Bisection for fit(q*) = level on [0, 1]; throws NoCrossing when the fit
/// never reaches `level`.
double solve_threshold(const FitModel& fit, double level = kDefaultLevel);

struct ThresholdEstimate {
  double mean = 0.0;
  double stddev = 0.0;
  int kept = 0;
  int dropped = 0;
};

/// Refits `n_boot` copies of the curve with every mean perturbed by
/// N(0, sem^2) (clamped to [0, 100]); refit r draws from substream
/// (seed, r, bootstrap lane). Throws BootstrapUnstable when more than 20% of
/// refits fail to cross `level`.
ThresholdEstimate bootstrap_threshold(std::span<const CurvePoint> points, double level,
                                      int n_boot, std::uint64_t seed,
                                      FitFamily family = kDefaultFitFamily);

struct MaxLocation {
  double q = 0.0;
  double uncertainty = 0.0;
  /// Quadratic evaluated at its vertex.
  double value = 0.0;
  /// Index of the empirical argmax.
  std::size_t grid_index = 0;
};

/// Vertex of the least-squares quadratic through the five grid points around
/// the empirical argmax. Throws NoInteriorMax when the argmax is an endpoint.
MaxLocation locate_max(std::span<const CurvePoint> points, int n_boot = kDefaultBootstrapRefits,
                       std::uint64_t seed = 0);

struct ThresholdResult {
  int k = 0;
  double q_star = 0.0;
  double uncertainty = 0.0;
  int dropped = 0;
  /// "ok", "no_crossing", "degenerate" or "unstable".
  std::string status = "ok";
};

std::vector<CurvePoint> mixedness_curve(std::span<const QPointAggregate> aggregates, int m);
std::vector<CurvePoint> f2_curve(std::span<const QPointAggregate> aggregates);
/// Mean multipartite negativity with its standard error.
std::vector<CurvePoint> multipartite_curve(std::span<const QPointAggregate> aggregates,
                                           RootMode mode);

/// T_k for every reduction size k in [1, n-1]. Failures are reported in
/// `status`, not thrown.
std::vector<ThresholdResult> compute_thresholds(std::span<const QPointAggregate> aggregates,
                                                int n, double level, int n_boot,
                                                std::uint64_t seed,
                                                FitFamily family = kDefaultFitFamily);

}  // namespace randcluster

#endif  // RANDCLUSTER_ANALYSIS_H
