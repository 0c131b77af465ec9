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

#ifndef ABSLG_ESTIMATION_HPP
#define ABSLG_ESTIMATION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "abslg/distribution.hpp"

namespace abslg {

// Ordered observations with a provenance label. Fitting requires n >= 5.
struct Dataset {
  std::vector<double> values;
  std::string label;

  std::size_t n() const { return values.size(); }
};

// Fittable models. ASLG is the beta = 0 restriction of the full family and
// BSLG the alpha = 0 restriction.
enum class ModelId { normal, logistic, laplace, aslg, bslg, abslg };

const char* model_name(ModelId id);
ModelId model_from_name(const std::string& name);

// Parameter vector layouts (natural scale):
//   normal   (mu, sigma)        logistic (mu, s)        laplace (mu, b)
//   aslg     (mu, sigma, alpha) bslg (mu, sigma, beta)  abslg (mu, sigma, alpha, beta)
int model_param_count(ModelId id);

struct FitOptions {
  double tolerance = 1e-9;        // simplex log-likelihood spread
  double param_tolerance = 1e-7;  // simplex parameter spread
  int max_iterations = 20000;
  // Explicit starting points (natural scale, one vector per start). Empty
  // selects the built-in multi-start grid.
  std::vector<std::vector<double>> starts;
};

struct FitResult {
  ModelId model;
  std::vector<double> theta;
  double log_likelihood = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  int k = 0;            // free parameters
  std::size_t n = 0;    // observations
  bool converged = false;
  int n_starts_used = 0;
  std::string dataset_label;
};

struct InfoCriteria {
  double aic;
  double bic;
};

struct LrTestResult {
  double statistic;
  int df;
  double p_value;
  bool reject_at_99;
};

// Sum of log densities under the given model; theta on the natural scale.
// Throws on dimension mismatch or sigma <= 0.
double log_likelihood(const Dataset& data, std::span<const double> theta,
                      ModelId model);

// Maximum-likelihood fit. Derivative-free simplex search on
// (mu, log sigma, shape...) over a deterministic multi-start grid; the
// reported fit is the best local optimum with earliest-start tie-breaking,
// so repeated calls are bit-identical. Normal and Laplace start from their
// closed-form estimators.
FitResult fit_mle(const Dataset& data, ModelId model,
                  const FitOptions& options = {});

// aic = 2k - 2 logL, bic = k ln(n) - 2 logL.
InfoCriteria information_criteria(double log_l, int k, std::size_t n);

// Likelihood-ratio test of a nested pair fitted on the same dataset
// (logistic within aslg/bslg/abslg, or aslg/bslg within abslg).
// statistic = 2 (logL_alt - logL_null), df = k_alt - k_null, p-value from
// the chi-square upper tail. reject_at_99 uses the df-matched 99% critical
// value (9.210 for df = 2).
LrTestResult lr_test(const FitResult& null_fit, const FitResult& alt_fit);

// Chi-square upper-tail probability for df in {1, 2} (closed forms).
double chi_square_upper_tail(double x, int df);

}  // namespace abslg

#endif  // ABSLG_ESTIMATION_HPP
