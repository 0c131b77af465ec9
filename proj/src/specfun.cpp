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

#include "abslg/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace abslg::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// zeta(2m) = pi^{2m} * rational, m = 1..8.
const std::array<double, 8> kEvenZeta = {
    kPi * kPi / 6.0,
    std::pow(kPi, 4) / 90.0,
    std::pow(kPi, 6) / 945.0,
    std::pow(kPi, 8) / 9450.0,
    std::pow(kPi, 10) / 93555.0,
    691.0 * std::pow(kPi, 12) / 638512875.0,
    2.0 * std::pow(kPi, 14) / 18243225.0,
    3617.0 * std::pow(kPi, 16) / 325641566250.0,
};

// zeta(k) for k > 16 by direct summation; converges to machine precision
// in a handful of terms at these orders.
double zeta_direct(int k) {
  double s = 1.0;
  for (int i = 2; i <= 13; ++i) s += std::pow(static_cast<double>(i), -k);
  return s;
}

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error("abslg::specfun: " + what);
}

// Li_n(-r) for r = e^z in (0, 1], summed over all n = 2..6 simultaneously.
// Plain alternating summation for r < 0.5; Cohen-Rodriguez Villegas-Zagier
// acceleration otherwise (terms r^{m}/m^n are totally monotone in m, so the
// (3+sqrt 8)^{-M} error bound applies).
struct PolylogSet {
  double li[7];  // li[2..6] valid
};

PolylogSet polylog_set_from_ratio(double r) {
  PolylogSet out{};
  if (r < 0.5) {
    double sums[7] = {0, 0, 0, 0, 0, 0, 0};
    double rp = r;
    for (int m = 1; m <= 400; ++m) {
      const double sign = (m & 1) ? -1.0 : 1.0;
      const double inv = 1.0 / m;
      double w = rp * inv * inv;  // r^m / m^2
      for (int n = 2; n <= 6; ++n) {
        sums[n] += sign * w;
        w *= inv;
      }
      rp *= r;
      if (rp < 1e-300 || rp <= 1e-18 * std::fabs(sums[2])) break;
    }
    for (int n = 2; n <= 6; ++n) out.li[n] = sums[n];
    return out;
  }
  constexpr int kM = 30;
  static const double kD = [] {
    double d = std::pow(3.0 + std::sqrt(8.0), kM);
    return (d + 1.0 / d) / 2.0;
  }();
  double b = -1.0, c = -kD;
  double sums[7] = {0, 0, 0, 0, 0, 0, 0};
  double rp = r;
  for (int k = 0; k < kM; ++k) {
    c = b - c;
    const double inv = 1.0 / (k + 1);
    double w = rp * inv * inv;
    for (int n = 2; n <= 6; ++n) {
      sums[n] += c * w;
      w *= inv;
    }
    b *= (k + kM) * (k - kM) / ((k + 0.5) * (k + 1.0));
    rp *= r;
  }
  for (int n = 2; n <= 6; ++n) out.li[n] = -sums[n] / kD;
  return out;
}

// Inversion polynomial P_n(z) with Li_{2r}(-1) = -(1-2^{1-2r}) zeta(2r).
double inversion_poly(int n, double z) {
  const double li2m1 = -kPi * kPi / 12.0;
  const double li4m1 = -7.0 * std::pow(kPi, 4) / 720.0;
  const double li6m1 = -31.0 * std::pow(kPi, 6) / 30240.0;
  switch (n) {
    case 2: return -0.5 * z * z + 2.0 * li2m1;
    case 3: return -z * z * z / 6.0 + 2.0 * z * li2m1;
    case 4: return (-z * z / 24.0 + li2m1) * z * z + 2.0 * li4m1;
    case 5: return ((-z * z / 120.0 + li2m1 / 3.0) * z * z + 2.0 * li4m1) * z;
    case 6:
      return ((-z * z / 720.0 + li2m1 / 12.0) * z * z + li4m1) * z * z +
             2.0 * li6m1;
    default: domain_fail("polylog order out of range");
  }
}

// Antiderivative assembly at z <= 0:
//   I_k(z) = z^k sigmoid(z) + sum_{j>=1} (-1)^{j-1} k!/(k-j)! z^{k-j} Li_j,
// with Li_1(-e^z) = -log(1+e^z). Coefficient tables, rows k = 0..6.
constexpr double kFall[7][7] = {
    {1, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0},
    {1, 2, 2, 0, 0, 0, 0},
    {1, 3, 6, 6, 0, 0, 0},
    {1, 4, 12, 24, 24, 0, 0},
    {1, 5, 20, 60, 120, 120, 0},
    {1, 6, 30, 120, 360, 720, 720},
};

std::array<double, 7> partial_moment_all_nonpos(double z) {
  const double ez = std::exp(z);  // <= 1
  const double sig = ez / (1.0 + ez);
  const double lg = std::log1p(ez);
  const PolylogSet ps = polylog_set_from_ratio(ez);

  double zp[7];  // z^0..z^6
  zp[0] = 1.0;
  for (int i = 1; i <= 6; ++i) zp[i] = zp[i - 1] * z;

  std::array<double, 7> out{};
  for (int k = 0; k <= 6; ++k) {
    double acc = zp[k] * sig;
    double sign = 1.0;  // (-1)^{j-1}
    for (int j = 1; j <= k; ++j) {
      const double lij = (j == 1) ? -lg : ps.li[j];
      acc += sign * kFall[k][j] * zp[k - j] * lij;
      sign = -sign;
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

double even_zeta(int k) {
  if (k < 2 || k > 16 || (k % 2) != 0) domain_fail("even_zeta argument must be even, in [2,16]");
  return kEvenZeta[k / 2 - 1];
}

double logistic_sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double log1p_exp(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

double logistic_kernel(double z) {
  if (!std::isfinite(z)) domain_fail("logistic_kernel requires finite z");
  const double a = std::exp(-std::fabs(z));
  const double d = 1.0 + a;
  return a / (d * d);
}

double polylog_neg_exp(int n, double z) {
  if (n < 2 || n > 6) domain_fail("polylog order must be in 2..6");
  if (!std::isfinite(z)) domain_fail("polylog requires finite z");
  if (z <= 0.0) {
    return polylog_set_from_ratio(std::exp(z)).li[n];
  }
  const double reflected = polylog_set_from_ratio(std::exp(-z)).li[n];
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  return sign * reflected + inversion_poly(n, z);
}

double logistic_raw_moment(int k) {
  if (k < 0 || k > 160) domain_fail("logistic_raw_moment order out of range");
  if (k == 0) return 1.0;
  if (k % 2 == 1) return 0.0;
  const double zk = (k <= 16) ? kEvenZeta[k / 2 - 1] : zeta_direct(k);
  return 2.0 * (1.0 - std::pow(2.0, 1 - k)) * std::tgamma(k + 1.0) * zk;
}

std::array<double, 7> partial_moment_all(double z) {
  if (std::isnan(z)) domain_fail("partial_moment requires non-NaN z");
  std::array<double, 7> out{};
  if (z == -std::numeric_limits<double>::infinity()) return out;
  if (z == std::numeric_limits<double>::infinity()) {
    for (int k = 0; k <= 6; ++k) out[k] = logistic_raw_moment(k);
    return out;
  }
  if (z <= 0.0) return partial_moment_all_nonpos(z);
  // Mass identity: I_k(z) = I_k(inf) - (-1)^k I_k(-z); the negative-argument
  // evaluation is cancellation-free.
  const std::array<double, 7> neg = partial_moment_all_nonpos(-z);
  for (int k = 0; k <= 6; ++k) {
    out[k] = (k % 2 == 0) ? logistic_raw_moment(k) - neg[k] : neg[k];
  }
  return out;
}

double partial_moment(int k, double z) {
  if (k < 0 || k > 6) domain_fail("partial_moment order must be in 0..6");
  return partial_moment_all(z)[k];
}

}  // namespace abslg::specfun
