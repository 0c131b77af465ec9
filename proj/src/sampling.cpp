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

#include "abslg/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "abslg/moments.hpp"
#include "abslg/specfun.hpp"
#include "root_finding.hpp"

namespace abslg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTailCut = 40.0;

double sc_poly(double z, const ShapeParams& shape) {
  // 2 + a^2 z^2 + 2ab z^4 + b^2 z^6 written as 2 + z^2 (a + b z^2)^2.
  const double w = shape.alpha + shape.beta * z * z;
  return 2.0 + z * z * w * w;
}

double sc_cdf_standard(double z, const ShapeParams& shape) {
  if (z == 0.0) return 0.5;
  if (z >= kTailCut) return 1.0;
  if (z <= -kTailCut) return 0.0;
  const auto I = specfun::partial_moment_all(z);
  const double a = shape.alpha, b = shape.beta;
  const double num =
      2.0 * I[0] + a * a * I[2] + 2.0 * a * b * I[4] + b * b * I[6];
  const double v = num / norm_const(shape);
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace

double envelope_constant() { return (2.0 + std::sqrt(2.0)) / 2.0; }

double sc_pdf(double z, const ShapeParams& shape) {
  detail::check_shape(shape);
  if (!std::isfinite(z)) throw std::domain_error("abslg::sc_pdf: z must be finite");
  const double k = specfun::logistic_kernel(z);
  if (k == 0.0) return 0.0;
  return sc_poly(z, shape) * k / norm_const(shape);
}

double sc_cdf(double z, const ShapeParams& shape) {
  detail::check_shape(shape);
  if (std::isnan(z)) throw std::domain_error("abslg::sc_cdf: z must not be NaN");
  if (z == kInf) return 1.0;
  if (z == -kInf) return 0.0;
  return sc_cdf_standard(z, shape);
}

double sc_mgf(double t, const ShapeParams& shape) {
  detail::check_shape(shape);
  if (!std::isfinite(t) || std::fabs(t) >= 1.0) {
    throw std::domain_error("abslg::sc_mgf: t must lie strictly in (-1, 1)");
  }
  if (t == 0.0) return 1.0;
  const double a = shape.alpha, b = shape.beta;
  const double M0 = detail::exp_weighted_moment(0, t);
  const double M2 = detail::exp_weighted_moment(2, t);
  const double M4 = detail::exp_weighted_moment(4, t);
  const double M6 = detail::exp_weighted_moment(6, t);
  return (2.0 * M0 + a * a * M2 + 2.0 * a * b * M4 + b * b * M6) /
         norm_const(shape);
}

double sc_sample(RandomStream& stream, const ShapeParams& shape) {
  detail::check_shape(shape);
  const double p = stream.uniform();
  return detail::invert_monotone_cdf(
      [&](double x) { return sc_cdf_standard(x, shape); },
      [&](double x) {
        return sc_poly(x, shape) * specfun::logistic_kernel(x) /
               norm_const(shape);
      },
      p);
}

SampleBatch ar_sample(RandomStream& stream, const ShapeParams& shape,
                      std::size_t n) {
  detail::check_shape(shape);
  if (n == 0) throw std::domain_error("abslg::ar_sample: n must be >= 1");
  const double s = envelope_constant();
  SampleBatch out;
  out.values.reserve(n);
  std::size_t attempts = 0;
  while (out.values.size() < n) {
    const double y = sc_sample(stream, shape);
    const double u = stream.uniform();
    ++attempts;
    const double t = 1.0 - shape.alpha * y - shape.beta * y * y * y;
    const double ratio = (t * t + 1.0) / sc_poly(y, shape);
    if (u < ratio / s) out.values.push_back(y);
  }
  out.acceptance_rate = static_cast<double>(n) / static_cast<double>(attempts);
  return out;
}

}  // namespace abslg
