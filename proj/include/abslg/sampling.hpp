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

#ifndef ABSLG_SAMPLING_HPP
#define ABSLG_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "abslg/distribution.hpp"

namespace abslg {

// Deterministic uniform stream: one seed, one sequence. Not for concurrent
// use; independent streams may run in parallel.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  // U(0,1), strictly inside the open interval.
  double uniform() {
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// sup_z pdf / sc_pdf = (2 + sqrt 2)/2, attained where alpha z + beta z^3
// equals -sqrt 2; the acceptance-rejection envelope constant.
double envelope_constant();

// Symmetric component density (2 + a^2 z^2 + 2ab z^4 + b^2 z^6) kernel / C;
// even in z and bounded below by 2 kernel / C.
double sc_pdf(double z, const ShapeParams& shape);

// Its cdf, [2 I0 + a^2 I2 + 2ab I4 + b^2 I6] / C; sc_cdf(0) = 1/2 exactly.
double sc_cdf(double z, const ShapeParams& shape);

// Its mgf on (-1, 1); even in t.
double sc_mgf(double t, const ShapeParams& shape);

// One symmetric-component variate by numeric inversion of sc_cdf.
double sc_sample(RandomStream& stream, const ShapeParams& shape);

struct SampleBatch {
  std::vector<double> values;
  double acceptance_rate = 0.0;
};

// n standard-form variates by acceptance-rejection against the symmetric
// component: draw Y ~ SC and U ~ U(0,1), accept when U < g(Y)/(S g1(Y)).
// Expected acceptance rate is 1/S = 2/(2+sqrt 2) for every shape, since
// target and envelope share the normalizing constant. Location-scale
// callers apply y = mu + sigma z themselves.
SampleBatch ar_sample(RandomStream& stream, const ShapeParams& shape,
                      std::size_t n);

}  // namespace abslg

#endif  // ABSLG_SAMPLING_HPP
