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

#ifndef ABSLG_MOMENTS_HPP
#define ABSLG_MOMENTS_HPP

#include <complex>

#include "abslg/distribution.hpp"

namespace abslg {

// Pearson convention: beta1 = mu3^2 / mu2^3 (squared skewness, >= 0) and
// beta2 = mu4 / mu2^2 (kurtosis, non-excess: 4.2 for the logistic member).
struct MomentSummary {
  double mean;
  double variance;
  double beta1;
  double beta2;
};

// Raw moment E(Z^n) of the standardized family, 1 <= n <= 10. Closed form
// built from logistic raw moments:
//   even n: (2 m_n + a^2 m_{n+2} + 2ab m_{n+4} + b^2 m_{n+6}) / C
//   odd n:  -2 (a m_{n+1} + b m_{n+3}) / C
double raw_moment(int n, const ShapeParams& shape);

// Mean, variance, beta1, beta2 through central-moment algebra on the first
// four raw moments.
MomentSummary summary_stats(const ShapeParams& shape);

// Signed skewness gamma1 = mu3 / mu2^{3/2} (beta1 without the square).
double signed_skewness(const ShapeParams& shape);

// Moment generating function, -1 < t < 1. Assembled from the component
// integrals M_j(t) = int z^j e^{tz} kernel(z) dz, which are csc/cot
// polynomials; near t = 0 those cancel catastrophically, so |t| <= 0.25 is
// served by the moment power series instead (see exp_weighted_moment).
double mgf(double t, const ShapeParams& shape);

// Characteristic function for any finite real t; Hermitian (cf(-t) is the
// conjugate) and |cf| <= 1.
std::complex<double> cf(double t, const ShapeParams& shape);

// Transforms of the bimodal-logistic limit laws.
double blg_mgf(BlgOrder order, double t);
std::complex<double> blg_cf(BlgOrder order, double t);

namespace detail {
// M_j(t) = int z^j e^{tz} kernel(z) dz for j in 0..6 (exposed for tests).
double exp_weighted_moment(int j, double t);
// int z^j e^{itz} kernel(z) dz, the hyperbolic twin of the above.
std::complex<double> fourier_weighted_moment(int j, double t);
}  // namespace detail

}  // namespace abslg

#endif  // ABSLG_MOMENTS_HPP
