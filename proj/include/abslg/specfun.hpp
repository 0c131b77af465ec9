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

#ifndef ABSLG_SPECFUN_HPP
#define ABSLG_SPECFUN_HPP

#include <array>

// Analytic primitives for the logistic-kernel family: even-argument zeta
// values, polylogarithms of the form Li_n(-e^z), the logistic kernel, and
// the lower partial moments I_k(z) = int_{-inf}^z t^k kernel(t) dt.
//
// All functions are pure and thread-safe. Domain violations throw
// std::domain_error.

namespace abslg::specfun {

// Riemann zeta at even integer arguments 2..16; exact pi^{2m} closed forms.
double even_zeta(int k);

// Li_n(-e^z) for integer order n in 2..6 and any finite real z.
//
// For z <= 0 the defining series converges (alternating, ratio e^z) and is
// summed directly, with series acceleration near z = 0. For z > 0 the value
// follows from the integer-order inversion identity
//   Li_n(-e^z) = (-1)^{n+1} Li_n(-e^{-z}) + P_n(z),
// where P_n is a degree-n polynomial with rational-multiple-of-pi^2m
// coefficients. Growth for large z is polynomial, never exponential.
double polylog_neg_exp(int n, double z);

// Standard logistic density e^{-z}/(1+e^{-z})^2, evaluated through the
// symmetric |z| form so that kernel(z) == kernel(-z) exactly and no
// intermediate overflows for any finite z. Range [0, 1/4].
double logistic_kernel(double z);

// e^z/(1+e^z), saturating for large |z|.
double logistic_sigmoid(double z);

// log(1 + e^z) without overflow (z + log1p(e^{-z}) for z > 0).
double log1p_exp(double z);

// Raw moment of the standard logistic law: 0 for odd k, and
// 2 (1 - 2^{1-k}) Gamma(k+1) zeta(k) for even k >= 2 (1 for k = 0).
// Supported for 0 <= k <= 160; the zeta factor beyond the closed-form
// table is summed directly (it is 1 to machine precision long before that).
double logistic_raw_moment(int k);

// Lower partial moment I_k(z) for k in 0..6. Accepts +/-infinity and
// returns the exact limits: I_k(-inf) = 0, I_k(+inf) = logistic_raw_moment(k).
//
// For z <= 0 the closed antiderivative
//   I_k(z) = z^k sigmoid(z) + sum_{j=1..k} (-1)^{j-1} k!/(k-j)! z^{k-j} Li_j(-e^z)
// is evaluated term by term (all terms share sign as z -> -inf, so no
// cancellation). For z > 0 the mass identity I_k(z) = I_k(inf) - (-1)^k I_k(-z)
// reduces to the stable negative-argument evaluation.
double partial_moment(int k, double z);

// All of I_0(z)..I_6(z) at once, sharing the polylogarithm evaluations.
// This is the hot path behind every cdf in the toolkit.
std::array<double, 7> partial_moment_all(double z);

}  // namespace abslg::specfun

#endif  // ABSLG_SPECFUN_HPP
