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

#ifndef ABSLG_DISTRIBUTION_HPP
#define ABSLG_DISTRIBUTION_HPP

// The alpha-beta skew logistic family. The standard density is
//
//   f(z; a, b) = [(1 - a z - b z^3)^2 + 1] / C(a, b) * e^{-z}/(1+e^{-z})^2,
//
// with C(a, b) = (210 + 35 pi^2 a^2 + 98 pi^4 a b + 155 pi^6 b^2)/105, and
// y = mu + sigma z gives the location-scale extension. Special members:
// (0,0) is the standard logistic; (a,0) the alpha-skew-logistic; (0,b) the
// beta-skew-logistic; a -> +/-inf tends to the bimodal logistic of order 2
// and b -> +/-inf to order 6.

namespace abslg {

// Skewness pair (alpha, beta); any finite reals.
struct ShapeParams {
  double alpha = 0.0;
  double beta = 0.0;
};

// Location mu and scale sigma > 0.
struct LocScale {
  double mu = 0.0;
  double sigma = 1.0;
};

// The two bimodal-logistic limit laws the family reaches.
enum class BlgOrder { two = 2, six = 6 };

// Normalizing constant C(alpha, beta); strictly positive (>= 2).
double norm_const(const ShapeParams& shape);

// Density of the location-scale family at z. Standard form with loc = {0,1}.
double pdf(double z, const ShapeParams& shape, const LocScale& loc = {});

// log pdf, safe against intermediate overflow for standardized arguments
// up to |u| ~ 1e4 and beyond.
double log_pdf(double z, const ShapeParams& shape, const LocScale& loc = {});

// Distribution function; accepts +/-infinity. Monotone, in [0, 1].
double cdf(double z, const ShapeParams& shape, const LocScale& loc = {});

// Inverse cdf for p in (0, 1); |cdf(result) - p| <= 1e-10.
double quantile(double p, const ShapeParams& shape, const LocScale& loc = {});

// Bimodal logistic BLG(2)/BLG(6): density z^{2m} kernel(z) / moment and the
// matching cdf assembled from partial moments. pdf(0) = 0, cdf(0) = 1/2.
double blg_pdf(BlgOrder order, double z);
double blg_cdf(BlgOrder order, double z);

namespace detail {
// Throwing validators shared across modules.
void check_shape(const ShapeParams& shape);
void check_loc(const LocScale& loc);
}  // namespace detail

}  // namespace abslg

#endif  // ABSLG_DISTRIBUTION_HPP
