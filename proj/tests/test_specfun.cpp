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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "abslg/specfun.hpp"
#include "oracles.hpp"

using namespace abslg::specfun;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

// Fermi-Dirac integral representation, valid for every real z:
//   Li_n(-e^z) = -(1/Gamma(n)) int_0^inf t^{n-1} / (e^{t-z} + 1) dt.
// Independent of both the series and the inversion paths.
double polylog_by_quadrature(int n, double z) {
  const auto f = [&](double t) {
    const double e = t - z;
    // 1/(e^e + 1) without overflow
    const double w = (e > 0.0) ? std::exp(-e) / (1.0 + std::exp(-e))
                               : 1.0 / (1.0 + std::exp(e));
    return std::pow(t, n - 1) * w;
  };
  const double hi = std::max(60.0, z + 60.0);
  return -oracles::integrate(f, 0.0, hi, 1e-13) / std::tgamma(n);
}
}  // namespace

TEST_CASE("even zeta closed forms") {
  CHECK(rel_err(even_zeta(2), kPi * kPi / 6.0) < 1e-15);
  CHECK(even_zeta(2) == doctest::Approx(1.6449340668482264).epsilon(1e-14));
  CHECK(even_zeta(4) == doctest::Approx(1.0823232337111382).epsilon(1e-14));
  CHECK(even_zeta(6) == doctest::Approx(1.0173430619844491).epsilon(1e-14));
  CHECK(even_zeta(8) == doctest::Approx(1.0040773561979443).epsilon(1e-14));
  CHECK(even_zeta(16) == doctest::Approx(1.0000152822594087).epsilon(1e-14));
  CHECK_THROWS_AS(even_zeta(3), std::domain_error);
  CHECK_THROWS_AS(even_zeta(0), std::domain_error);
  CHECK_THROWS_AS(even_zeta(18), std::domain_error);
}

TEST_CASE("polylog frozen values") {
  CHECK(rel_err(polylog_neg_exp(2, 0.0), -kPi * kPi / 12.0) < 1e-14);
  // mpmath: polylog(2, -e)
  CHECK(rel_err(polylog_neg_exp(2, 1.0), -1.8062860704447743) < 1e-13);
  CHECK(std::fabs(polylog_neg_exp(3, -745.0)) < 1e-300);
  CHECK_THROWS_AS(polylog_neg_exp(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(polylog_neg_exp(7, 0.0), std::domain_error);
  CHECK_THROWS_AS(polylog_neg_exp(2, kInf), std::domain_error);
  CHECK_THROWS_AS(polylog_neg_exp(2, std::nan("")), std::domain_error);
}

TEST_CASE("polylog vs Fermi-Dirac quadrature on [-30, 30]") {
  for (int n = 2; n <= 6; ++n) {
    for (double z = -30.0; z <= 30.0 + 1e-9; z += 2.5) {
      const double got = polylog_neg_exp(n, z);
      const double want = polylog_by_quadrature(n, z);
      CAPTURE(n);
      CAPTURE(z);
      CHECK(rel_err(got, want) < 1e-12);
    }
  }
}

TEST_CASE("polylog branch consistency at the crossover") {
  // Series path just below zero, inversion path just above: both must agree
  // through the removable seam.
  for (int n = 2; n <= 6; ++n) {
    const double below = polylog_neg_exp(n, -1e-9);
    const double above = polylog_neg_exp(n, 1e-9);
    CHECK(rel_err(above, below) < 1e-11);
  }
  // And the inversion identity itself holds across the grid.
  for (int n = 2; n <= 6; ++n) {
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    for (double z = 0.5; z <= 30.0; z += 3.0) {
      const double direct = polylog_neg_exp(n, z);
      const double reflected = sign * polylog_neg_exp(n, -z);
      CHECK(rel_err(direct - reflected, polylog_by_quadrature(n, z) -
                                            sign * polylog_by_quadrature(n, -z)) <
            1e-10);
    }
  }
}

TEST_CASE("polylog large-z growth is polynomial") {
  // Li_2(-e^z) ~ -z^2/2 for large z.
  const double v = polylog_neg_exp(2, 700.0);
  CHECK(std::isfinite(v));
  CHECK(rel_err(v, -0.5 * 700.0 * 700.0 - kPi * kPi / 6.0) < 1e-12);
}

TEST_CASE("logistic kernel") {
  CHECK(logistic_kernel(0.0) == 0.25);
  CHECK(rel_err(logistic_kernel(5.0), 0.0066480566707901549) < 1e-14);
  CHECK(logistic_kernel(-5.0) == logistic_kernel(5.0));
  for (double z : {0.3, 1.7, 19.0, 300.0, 1e8}) {
    CHECK(logistic_kernel(z) == logistic_kernel(-z));  // exact evenness
  }
  CHECK(logistic_kernel(1000.0) == 0.0);  // graceful underflow
  CHECK(logistic_kernel(0.0) <= 0.25);
  CHECK_THROWS_AS(logistic_kernel(kInf), std::domain_error);
  CHECK_THROWS_AS(logistic_kernel(std::nan("")), std::domain_error);
}

TEST_CASE("partial moment anchors") {
  CHECK(partial_moment(0, 0.0) == 0.5);
  CHECK(rel_err(partial_moment(1, 0.0), -std::log(2.0)) < 1e-14);
  CHECK(rel_err(partial_moment(2, kInf), kPi * kPi / 3.0) < 1e-15);
  CHECK(partial_moment(3, -kInf) == 0.0);
  CHECK_THROWS_AS(partial_moment(7, 0.0), std::domain_error);
  CHECK_THROWS_AS(partial_moment(-1, 0.0), std::domain_error);
}

TEST_CASE("partial moments vs quadrature on [-30, 30]") {
  for (int k = 0; k <= 6; ++k) {
    for (double z = -30.0; z <= 30.0 + 1e-9; z += 1.5) {
      const double got = partial_moment(k, z);
      const double want = oracles::integrate_left_tail(
          [&](double t) { return std::pow(t, k) * logistic_kernel(t); }, z);
      CAPTURE(k);
      CAPTURE(z);
      CHECK(std::fabs(got - want) < 1e-9);
    }
  }
}

TEST_CASE("partial moment derivative matches the integrand") {
  const double h = 1e-5;
  for (int k = 0; k <= 6; ++k) {
    for (double z : {-8.0, -2.5, -0.4, 0.7, 3.0, 11.0}) {
      const double deriv =
          (partial_moment(k, z + h) - partial_moment(k, z - h)) / (2.0 * h);
      const double want = std::pow(z, k) * logistic_kernel(z);
      if (std::fabs(want) > 1e-8) {
        CHECK(rel_err(deriv, want) < 1e-6);
      }
    }
  }
}

TEST_CASE("partial moment limits have the odd/even structure") {
  for (int k = 0; k <= 6; ++k) {
    const double limit = partial_moment(k, kInf);
    if (k % 2 == 1) {
      CHECK(limit == 0.0);
    } else {
      CHECK(rel_err(limit, logistic_raw_moment(k)) < 1e-15);
    }
  }
  // Eq.-(7)-style cross-check of the closed form against quadrature.
  for (int k : {2, 4, 6}) {
    const double q = oracles::integrate_line(
        [&](double t) { return std::pow(t, k) * logistic_kernel(t); });
    CHECK(rel_err(logistic_raw_moment(k), q) < 1e-12);
  }
}

TEST_CASE("partial moments are continuous and monotone where required") {
  // continuity across the 0 seam (negative formula vs reflected formula)
  for (int k = 0; k <= 6; ++k) {
    const double below = partial_moment(k, -1e-12);
    const double above = partial_moment(k, 1e-12);
    CHECK(std::fabs(above - below) < 1e-12);
  }
  for (int k : {0, 2, 4, 6}) {
    double prev = 0.0;
    for (double z = -35.0; z <= 35.0; z += 0.25) {
      const double v = partial_moment(k, z);
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}
