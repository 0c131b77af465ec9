// Copyright 2026 The abslg authors.
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

#include "abslg/distribution.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "abslg/specfun.hpp"
#include "root_finding.hpp"

namespace abslg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Standardized |u| beyond which the cdf saturates; the remaining tail mass
// is below 1e-14 for every shape (the polynomial weight cancels against the
// normalizing constant as the shape grows).
constexpr double kCdfTailCut = 40.0;

double standardize(double z, const LocScale& loc) {
  return (z - loc.mu) / loc.sigma;
}

// cdf of the standard form via the proof decomposition
//   [2 I0 - 2a I1 + a^2 I2 - 2b I3 + 2ab I4 + b^2 I6] / C.
double standard_cdf(double u, const ShapeParams& shape) {
  if (u >= kCdfTailCut) return 1.0;
  if (u <= -kCdfTailCut) return 0.0;
  const auto I = specfun::partial_moment_all(u);
  const double a = shape.alpha, b = shape.beta;
  const double num = 2.0 * I[0] - 2.0 * a * I[1] + a * a * I[2] -
                     2.0 * b * I[3] + 2.0 * a * b * I[4] + b * b * I[6];
  const double v = num / norm_const(shape);
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

double standard_pdf(double u, const ShapeParams& shape) {
  const double k = specfun::logistic_kernel(u);
  if (k == 0.0) return 0.0;
  const double t = 1.0 - shape.alpha * u - shape.beta * u * u * u;
  const double bracket = t * t + 1.0;
  assert(bracket >= 1.0);
  return bracket * k / norm_const(shape);
}

}  // namespace

namespace detail {

void check_shape(const ShapeParams& shape) {
  if (!std::isfinite(shape.alpha) || !std::isfinite(shape.beta)) {
    throw std::domain_error("abslg: shape parameters must be finite");
  }
}

void check_loc(const LocScale& loc) {
  if (!std::isfinite(loc.mu) || !std::isfinite(loc.sigma) || loc.sigma <= 0.0) {
    throw std::domain_error("abslg: location must be finite and scale positive");
  }
}

}  // namespace detail

double norm_const(const ShapeParams& shape) {
  detail::check_shape(shape);
  const double a = shape.alpha, b = shape.beta;
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  return (210.0 + 35.0 * pi2 * a * a + 98.0 * pi4 * a * b +
          155.0 * pi6 * b * b) /
         105.0;
}

double pdf(double z, const ShapeParams& shape, const LocScale& loc) {
  detail::check_shape(shape);
  detail::check_loc(loc);
  if (!std::isfinite(z)) throw std::domain_error("abslg::pdf: z must be finite");
  return standard_pdf(standardize(z, loc), shape) / loc.sigma;
}

double log_pdf(double z, const ShapeParams& shape, const LocScale& loc) {
  detail::check_shape(shape);
  detail::check_loc(loc);
  if (!std::isfinite(z)) throw std::domain_error("abslg::log_pdf: z must be finite");
  const double u = standardize(z, loc);
  const double t = 1.0 - shape.alpha * u - shape.beta * u * u * u;
  const double at = std::fabs(t);
  // log((1-au-bu^3)^2 + 1) without squaring overflow.
  const double lb = (at < 1e150) ? std::log1p(t * t) : 2.0 * std::log(at);
  const double au = std::fabs(u);
  return lb - std::log(norm_const(shape)) - au -
         2.0 * std::log1p(std::exp(-au)) - std::log(loc.sigma);
}

double cdf(double z, const ShapeParams& shape, const LocScale& loc) {
  detail::check_shape(shape);
  detail::check_loc(loc);
  if (std::isnan(z)) throw std::domain_error("abslg::cdf: z must not be NaN");
  if (z == kInf) return 1.0;
  if (z == -kInf) return 0.0;
  return standard_cdf(standardize(z, loc), shape);
}

double quantile(double p, const ShapeParams& shape, const LocScale& loc) {
  detail::check_shape(shape);
  detail::check_loc(loc);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("abslg::quantile: p must lie strictly in (0, 1)");
  }
  const double u = detail::invert_monotone_cdf(
      [&](double x) { return standard_cdf(x, shape); },
      [&](double x) { return standard_pdf(x, shape); }, p);
  return loc.mu + loc.sigma * u;
}

double blg_pdf(BlgOrder order, double z) {
  if (!std::isfinite(z)) throw std::domain_error("abslg::blg_pdf: z must be finite");
  const double k = specfun::logistic_kernel(z);
  if (k == 0.0) return 0.0;
  const double z2 = z * z;
  switch (order) {
    case BlgOrder::two:
      return 3.0 * z2 * k / (kPi * kPi);
    case BlgOrder::six:
      return 21.0 * z2 * z2 * z2 * k / (31.0 * std::pow(kPi, 6));
  }
  throw std::domain_error("abslg::blg_pdf: order must be 2 or 6");
}

double blg_cdf(BlgOrder order, double z) {
  if (std::isnan(z)) throw std::domain_error("abslg::blg_cdf: z must not be NaN");
  int k = 0;
  switch (order) {
    case BlgOrder::two: k = 2; break;
    case BlgOrder::six: k = 6; break;
    default: throw std::domain_error("abslg::blg_cdf: order must be 2 or 6");
  }
  if (z >= kCdfTailCut) return 1.0;
  if (z <= -kCdfTailCut) return 0.0;
  const double v =
      specfun::partial_moment(k, z) / specfun::logistic_raw_moment(k);
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace abslg
