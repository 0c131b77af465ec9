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

#include "abslg/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nelder_mead.hpp"

namespace abslg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// 99% chi-square critical values for df = 1, 2.
constexpr double kChi2Crit99[3] = {0.0, 6.634896601021214, 9.210340371976182};

double sample_mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd_mle(const std::vector<double>& v) {
  const double m = sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

double sample_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void check_theta(std::span<const double> theta, ModelId model) {
  if (static_cast<int>(theta.size()) != model_param_count(model)) {
    throw std::domain_error("abslg::log_likelihood: theta dimension mismatch");
  }
  for (double v : theta) {
    if (!std::isfinite(v)) {
      throw std::domain_error("abslg::log_likelihood: theta must be finite");
    }
  }
  if (theta[1] <= 0.0) {
    throw std::domain_error("abslg::log_likelihood: scale must be positive");
  }
}

double loglik_normal(const std::vector<double>& y, double mu, double sigma) {
  const double n = static_cast<double>(y.size());
  double ss = 0.0;
  for (double v : y) ss += (v - mu) * (v - mu);
  return -0.5 * n * std::log(2.0 * kPi * sigma * sigma) -
         ss / (2.0 * sigma * sigma);
}

double loglik_laplace(const std::vector<double>& y, double mu, double b) {
  double sa = 0.0;
  for (double v : y) sa += std::fabs(v - mu);
  return -static_cast<double>(y.size()) * std::log(2.0 * b) - sa / b;
}

// Eq.-style term sum for the skew-logistic family; alpha/beta zero for the
// nested members collapses this to the plain logistic log-likelihood.
double loglik_abslg(const std::vector<double>& y, double mu, double sigma,
                    double alpha, double beta) {
  const double n = static_cast<double>(y.size());
  const double logc = std::log(norm_const({alpha, beta}));
  double acc = 0.0;
  for (double v : y) {
    const double u = (v - mu) / sigma;
    const double t = 1.0 - alpha * u - beta * u * u * u;
    const double at = std::fabs(t);
    const double lb = (at < 1e150) ? std::log1p(t * t) : 2.0 * std::log(at);
    const double au = std::fabs(u);
    acc += lb - au - 2.0 * std::log1p(std::exp(-au));
  }
  return acc - n * (logc + std::log(sigma));
}

struct ModelSpec {
  bool has_alpha;
  bool has_beta;
};

ModelSpec shape_spec(ModelId model) {
  switch (model) {
    case ModelId::aslg: return {true, false};
    case ModelId::bslg: return {false, true};
    case ModelId::abslg: return {true, true};
    default: return {false, false};
  }
}

// Objective on the reparameterized vector (mu, log sigma, shapes...).
double neg_loglik_repar(const std::vector<double>& v,
                        const std::vector<double>& y, ModelId model) {
  const double mu = v[0];
  const double sigma = std::exp(v[1]);
  if (!std::isfinite(sigma) || sigma <= 0.0) return 1e300;
  double ll = 0.0;
  switch (model) {
    case ModelId::normal: ll = loglik_normal(y, mu, sigma); break;
    case ModelId::laplace: ll = loglik_laplace(y, mu, sigma); break;
    case ModelId::logistic: ll = loglik_abslg(y, mu, sigma, 0.0, 0.0); break;
    case ModelId::aslg: ll = loglik_abslg(y, mu, sigma, v[2], 0.0); break;
    case ModelId::bslg: ll = loglik_abslg(y, mu, sigma, 0.0, v[2]); break;
    case ModelId::abslg: ll = loglik_abslg(y, mu, sigma, v[2], v[3]); break;
  }
  return std::isfinite(ll) ? -ll : 1e300;
}

std::vector<std::vector<double>> default_starts(const Dataset& data,
                                                ModelId model) {
  const double mu0 = sample_median(data.values);
  const double sd = sample_sd_mle(data.values);
  const double s0 = sd * std::sqrt(3.0) / kPi;  // logistic moment matching
  std::vector<std::vector<double>> starts;
  switch (model) {
    case ModelId::normal:
      starts.push_back({sample_mean(data.values), sd});
      break;
    case ModelId::laplace: {
      double mad = 0.0;
      for (double v : data.values) mad += std::fabs(v - mu0);
      mad /= static_cast<double>(data.n());
      starts.push_back({mu0, mad});
      break;
    }
    case ModelId::logistic:
      starts.push_back({mu0, s0});
      break;
    default: {
      // The likelihood is multimodal in (alpha, beta); both signs occur in
      // practice, so sweep a small grid of shape starts.
      const ModelSpec spec = shape_spec(model);
      const double agrid[] = {-1.0, -0.1, 0.0, 0.1, 1.0};
      const double bgrid[] = {-0.1, -0.01, 0.0, 0.01, 0.1};
      for (double a0 : (spec.has_alpha ? std::span<const double>(agrid)
                                       : std::span<const double>(agrid, 1))) {
        for (double b0 : (spec.has_beta ? std::span<const double>(bgrid)
                                        : std::span<const double>(bgrid, 1))) {
          std::vector<double> st = {mu0, s0};
          if (spec.has_alpha) st.push_back(a0);
          if (spec.has_beta) st.push_back(b0);
          starts.push_back(std::move(st));
        }
      }
      break;
    }
  }
  return starts;
}

}  // namespace

const char* model_name(ModelId id) {
  switch (id) {
    case ModelId::normal: return "normal";
    case ModelId::logistic: return "logistic";
    case ModelId::laplace: return "laplace";
    case ModelId::aslg: return "aslg";
    case ModelId::bslg: return "bslg";
    case ModelId::abslg: return "abslg";
  }
  return "?";
}

ModelId model_from_name(const std::string& name) {
  if (name == "normal") return ModelId::normal;
  if (name == "logistic") return ModelId::logistic;
  if (name == "laplace") return ModelId::laplace;
  if (name == "aslg") return ModelId::aslg;
  if (name == "bslg") return ModelId::bslg;
  if (name == "abslg") return ModelId::abslg;
  throw std::domain_error("abslg: unknown model '" + name + "'");
}

int model_param_count(ModelId id) {
  switch (id) {
    case ModelId::normal:
    case ModelId::logistic:
    case ModelId::laplace: return 2;
    case ModelId::aslg:
    case ModelId::bslg: return 3;
    case ModelId::abslg: return 4;
  }
  return 0;
}

double log_likelihood(const Dataset& data, std::span<const double> theta,
                      ModelId model) {
  check_theta(theta, model);
  const auto& y = data.values;
  if (y.empty()) throw std::domain_error("abslg::log_likelihood: empty dataset");
  switch (model) {
    case ModelId::normal: return loglik_normal(y, theta[0], theta[1]);
    case ModelId::laplace: return loglik_laplace(y, theta[0], theta[1]);
    case ModelId::logistic: return loglik_abslg(y, theta[0], theta[1], 0.0, 0.0);
    case ModelId::aslg: return loglik_abslg(y, theta[0], theta[1], theta[2], 0.0);
    case ModelId::bslg: return loglik_abslg(y, theta[0], theta[1], 0.0, theta[2]);
    case ModelId::abslg:
      return loglik_abslg(y, theta[0], theta[1], theta[2], theta[3]);
  }
  throw std::domain_error("abslg::log_likelihood: unknown model");
}

FitResult fit_mle(const Dataset& data, ModelId model,
                  const FitOptions& options) {
  if (data.n() < 5) {
    throw std::domain_error("abslg::fit_mle: need at least 5 observations");
  }
  for (double v : data.values) {
    if (!std::isfinite(v)) {
      throw std::domain_error("abslg::fit_mle: observations must be finite");
    }
  }
  if (sample_sd_mle(data.values) == 0.0) {
    throw std::domain_error(
        "abslg::fit_mle: zero sample variance, the scale estimate degenerates");
  }

  const int k = model_param_count(model);
  auto starts = options.starts.empty() ? default_starts(data, model)
                                       : options.starts;
  for (const auto& st : starts) {
    if (static_cast<int>(st.size()) != k || st[1] <= 0.0) {
      throw std::domain_error("abslg::fit_mle: malformed start vector");
    }
  }

  const auto objective = [&](const std::vector<double>& v) {
    return neg_loglik_repar(v, data.values, model);
  };

  const double sd = sample_sd_mle(data.values);
  std::vector<double> step = {0.25 * sd, 0.3};
  if (k >= 3) step.push_back(0.5);
  if (k >= 4) step.push_back(0.05);

  detail::SimplexResult best;
  best.fmin = 1e300;
  bool have = false;
  for (const auto& st : starts) {
    std::vector<double> v0 = st;
    v0[1] = std::log(st[1]);
    auto r = detail::nelder_mead(objective, v0, step, options.tolerance,
                                 options.param_tolerance,
                                 options.max_iterations);
    // One restart with a tighter simplex around the found optimum guards
    // against premature collapse.
    std::vector<double> step2(step.size());
    for (std::size_t i = 0; i < step.size(); ++i) step2[i] = 0.1 * step[i];
    auto r2 = detail::nelder_mead(objective, r.x, step2, options.tolerance,
                                  options.param_tolerance,
                                  options.max_iterations);
    if (r2.fmin < r.fmin) r = r2;
    if (!have || r.fmin < best.fmin) {
      best = r;
      have = true;
    }
  }

  // First-order stationarity proxy: no probe point may improve by > 1e-8.
  bool stationary = true;
  for (std::size_t i = 0; i < best.x.size() && stationary; ++i) {
    for (double delta : {-1e-5, 1e-5}) {
      auto probe = best.x;
      probe[i] += delta;
      if (objective(probe) < best.fmin - 1e-8) {
        stationary = false;
        break;
      }
    }
  }

  FitResult out;
  out.model = model;
  out.theta = best.x;
  out.theta[1] = std::exp(best.x[1]);
  out.log_likelihood = -best.fmin;
  out.k = k;
  out.n = data.n();
  const auto ic = information_criteria(out.log_likelihood, k, data.n());
  out.aic = ic.aic;
  out.bic = ic.bic;
  out.converged = best.converged && stationary;
  out.n_starts_used = static_cast<int>(starts.size());
  out.dataset_label = data.label;
  return out;
}

InfoCriteria information_criteria(double log_l, int k, std::size_t n) {
  if (k < 0 || n < 1) {
    throw std::domain_error("abslg::information_criteria: need k >= 0, n >= 1");
  }
  return {2.0 * k - 2.0 * log_l,
          k * std::log(static_cast<double>(n)) - 2.0 * log_l};
}

double chi_square_upper_tail(double x, int df) {
  if (x < 0.0) x = 0.0;
  switch (df) {
    case 1: return std::erfc(std::sqrt(0.5 * x));
    case 2: return std::exp(-0.5 * x);
    default:
      throw std::domain_error("abslg::chi_square_upper_tail: df must be 1 or 2");
  }
}

LrTestResult lr_test(const FitResult& null_fit, const FitResult& alt_fit) {
  const bool nested =
      (null_fit.model == ModelId::logistic &&
       (alt_fit.model == ModelId::abslg || alt_fit.model == ModelId::aslg ||
        alt_fit.model == ModelId::bslg)) ||
      ((null_fit.model == ModelId::aslg || null_fit.model == ModelId::bslg) &&
       alt_fit.model == ModelId::abslg);
  if (!nested) {
    throw std::domain_error("abslg::lr_test: models are not a nested pair");
  }
  if (null_fit.n != alt_fit.n || null_fit.dataset_label != alt_fit.dataset_label) {
    throw std::domain_error("abslg::lr_test: fits come from different datasets");
  }
  const double stat = 2.0 * (alt_fit.log_likelihood - null_fit.log_likelihood);
  if (stat < -1e-6) {
    throw std::runtime_error(
        "abslg::lr_test: alternative fit is worse than the null beyond "
        "optimizer noise");
  }
  LrTestResult out;
  out.statistic = stat;
  out.df = alt_fit.k - null_fit.k;
  out.p_value = chi_square_upper_tail(std::max(stat, 0.0), out.df);
  out.reject_at_99 = stat > kChi2Crit99[out.df];
  return out;
}

}  // namespace abslg
