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

#ifndef ABSLG_SRC_ROOT_FINDING_HPP
#define ABSLG_SRC_ROOT_FINDING_HPP

#include <cmath>

namespace abslg::detail {

// Invert a monotone cdf on the standardized scale: bracket by doubling
// outward from 0, bisect to width 1e-12, then a few density (Newton)
// refinement steps kept inside the bracket. The cdf may be locally flat
// between modes, so Newton alone would not be safe.
template <class Cdf, class Pdf>
double invert_monotone_cdf(const Cdf& cdf, const Pdf& pdf, double p) {
  double lo = -1.0, hi = 1.0;
  while (cdf(lo) >= p && lo > -64.0) lo *= 2.0;
  while (cdf(hi) <= p && hi < 64.0) hi *= 2.0;

  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double f = pdf(x);
    if (!(f > 0.0)) break;
    const double step = (cdf(x) - p) / f;
    const double next = x - step;
    if (next <= lo || next >= hi) break;
    x = next;
  }
  return x;
}

}  // namespace abslg::detail

#endif  // ABSLG_SRC_ROOT_FINDING_HPP
