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

#include "abslg/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "abslg/specfun.hpp"

namespace abslg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Below this |t| the csc/cot (csch/coth) component forms lose too many
// digits to cancellation; the moment power series is exact there and
// converges geometrically with ratio t^2.
constexpr double kSeriesCut = 0.25;

using specfun::logistic_raw_moment;

// The seven component polynomials P_j(x, s, c) with
//   M_j(t) = pi^j P_j(pi t, csc(pi t), cot(pi t)).
// The same polynomials give the Fourier components with csch/coth because
// both pairs obey s' = -s c, c' = -s^2.
double component_poly(int j, double x, double s, double c) {
  const double s2 = s * s, c2 = c * c;
  switch (j) {
    case 0: return x * s;
    case 1: return s * (1.0 - c * x);
    case 2: return s * (s2 * x + c2 * x - 2.0 * c);
    case 3: return s * (s2 * (3.0 - 5.0 * c * x) + c2 * (3.0 - c * x));
    case 4:
      return s * (5.0 * s2 * s2 * x + s2 * (18.0 * c2 * x - 20.0 * c) +
                  c2 * c * (c * x - 4.0));
    case 5:
      return s * (s2 * s2 * (25.0 - 61.0 * c * x) +
                  s2 * c2 * (90.0 - 58.0 * c * x) +
                  c2 * c2 * (5.0 - c * x));
    case 6:
      return s * (61.0 * s2 * s2 * s2 * x +
                  s2 * s2 * c * (479.0 * c * x - 366.0) +
                  s2 * c2 * c * (179.0 * c * x - 348.0) +
                  c2 * c2 * c * (c * x - 6.0));
    default:
      throw std::domain_error("abslg: component order must be in 0..6");
  }
}

// Power series sum_{n = j mod 2, step 2} m_{j+n} t^n / n!, optionally with
// the Fourier sign flip (-t^2 ratio). All terms share one sign, so the sum
// is cancellation-free for the exponential case.
double component_series(int j, double t, bool fourier) {
  const double ratio0 = t * t * (fourier ? -1.0 : 1.0);
  int n = j % 2;
  double pw = (n == 0) ? 1.0 : t;  // t^n / n!
  double sum = 0.0;
  while (j + n <= 160) {
    const double term = logistic_raw_moment(j + n) * pw;
    sum += term;
    if (n >= 4 && std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
    pw *= ratio0 / ((n + 1.0) * (n + 2.0));
    n += 2;
  }
  return sum;
}

double csch(double x) {
  // x > 0 assumed; stable against sinh overflow.
  if (x < 1.0) return 1.0 / std::sinh(x);
  const double e = std::exp(-x);
  return 2.0 * e / (1.0 - e * e);
}

// i^j for the Fourier components: int z^j e^{itz} k dz = (-i)^j d^j/dx^j
// applied to x csch(x); even j are real with sign (-1)^{j/2}, odd j are
// imaginary.
std::complex<double> minus_i_pow(int j) {
  switch (j & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

void check_mgf_domain(double t) {
  if (!std::isfinite(t) || std::fabs(t) >= 1.0) {
    throw std::domain_error("abslg::mgf: t must lie strictly in (-1, 1)");
  }
}

std::complex<double> fourier_moment_positive(int j, double t) {
  // t > kSeriesCut
  const double x = kPi * t;
  const double s = csch(x);
  const double c = 1.0 / std::tanh(x);
  return minus_i_pow(j) * std::pow(kPi, j) * component_poly(j, x, s, c);
}

}  // namespace

namespace detail {

double exp_weighted_moment(int j, double t) {
  if (j < 0 || j > 6) throw std::domain_error("abslg: component order must be in 0..6");
  if (std::fabs(t) <= kSeriesCut) return component_series(j, t, false);
  const double x = kPi * t;
  const double s = 1.0 / std::sin(x);
  const double c = std::cos(x) * s;
  return std::pow(kPi, j) * component_poly(j, x, s, c);
}

std::complex<double> fourier_weighted_moment(int j, double t) {
  if (j < 0 || j > 6) throw std::domain_error("abslg: component order must be in 0..6");
  if (std::fabs(t) <= kSeriesCut) {
    // The alternating ratio -t^2 already carries the i^n factors: the sum is
    // real for even j and i times an odd function of t for odd j.
    const double body = component_series(j, std::fabs(t), true);
    if (j % 2 == 0) return {body, 0.0};
    return {0.0, t < 0.0 ? -body : body};
  }
  if (t < 0.0) return std::conj(fourier_moment_positive(j, -t));
  return fourier_moment_positive(j, t);
}

}  // namespace detail

double raw_moment(int n, const ShapeParams& shape) {
  detail::check_shape(shape);
  if (n < 1 || n > 10) {
    throw std::domain_error("abslg::raw_moment: order must be in 1..10");
  }
  const double a = shape.alpha, b = shape.beta;
  const double C = norm_const(shape);
  if (n % 2 == 0) {
    return (2.0 * logistic_raw_moment(n) + a * a * logistic_raw_moment(n + 2) +
            2.0 * a * b * logistic_raw_moment(n + 4) +
            b * b * logistic_raw_moment(n + 6)) /
           C;
  }
  return -2.0 *
         (a * logistic_raw_moment(n + 1) + b * logistic_raw_moment(n + 3)) / C;
}

MomentSummary summary_stats(const ShapeParams& shape) {
  const double m1 = raw_moment(1, shape);
  const double m2 = raw_moment(2, shape);
  const double m3 = raw_moment(3, shape);
  const double m4 = raw_moment(4, shape);
  const double var = m2 - m1 * m1;
  const double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
  const double mu4 =
      m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
  return {m1, var, mu3 * mu3 / (var * var * var), mu4 / (var * var)};
}

double signed_skewness(const ShapeParams& shape) {
  const double m1 = raw_moment(1, shape);
  const double m2 = raw_moment(2, shape);
  const double m3 = raw_moment(3, shape);
  const double var = m2 - m1 * m1;
  const double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
  return mu3 / std::pow(var, 1.5);
}

double mgf(double t, const ShapeParams& shape) {
  detail::check_shape(shape);
  check_mgf_domain(t);
  if (t == 0.0) return 1.0;
  const double a = shape.alpha, b = shape.beta;
  const double M0 = detail::exp_weighted_moment(0, t);
  const double M1 = detail::exp_weighted_moment(1, t);
  const double M2 = detail::exp_weighted_moment(2, t);
  const double M3 = detail::exp_weighted_moment(3, t);
  const double M4 = detail::exp_weighted_moment(4, t);
  const double M6 = detail::exp_weighted_moment(6, t);
  return (2.0 * M0 - 2.0 * a * M1 + a * a * M2 - 2.0 * b * M3 +
          2.0 * a * b * M4 + b * b * M6) /
         norm_const(shape);
}

std::complex<double> cf(double t, const ShapeParams& shape) {
  detail::check_shape(shape);
  if (!std::isfinite(t)) throw std::domain_error("abslg::cf: t must be finite");
  if (t == 0.0) return {1.0, 0.0};
  const double a = shape.alpha, b = shape.beta;
  const auto F0 = detail::fourier_weighted_moment(0, t);
  const auto F1 = detail::fourier_weighted_moment(1, t);
  const auto F2 = detail::fourier_weighted_moment(2, t);
  const auto F3 = detail::fourier_weighted_moment(3, t);
  const auto F4 = detail::fourier_weighted_moment(4, t);
  const auto F6 = detail::fourier_weighted_moment(6, t);
  return (2.0 * F0 - 2.0 * a * F1 + a * a * F2 - 2.0 * b * F3 +
          2.0 * a * b * F4 + b * b * F6) /
         norm_const(shape);
}

double blg_mgf(BlgOrder order, double t) {
  check_mgf_domain(t);
  if (t == 0.0) return 1.0;
  const int j = (order == BlgOrder::two) ? 2 : (order == BlgOrder::six) ? 6 : 0;
  if (j == 0) throw std::domain_error("abslg::blg_mgf: order must be 2 or 6");
  return detail::exp_weighted_moment(j, t) / logistic_raw_moment(j);
}

std::complex<double> blg_cf(BlgOrder order, double t) {
  if (!std::isfinite(t)) throw std::domain_error("abslg::blg_cf: t must be finite");
  if (t == 0.0) return {1.0, 0.0};
  const int j = (order == BlgOrder::two) ? 2 : (order == BlgOrder::six) ? 6 : 0;
  if (j == 0) throw std::domain_error("abslg::blg_cf: order must be 2 or 6");
  return detail::fourier_weighted_moment(j, t) / logistic_raw_moment(j);
}

}  // namespace abslg
