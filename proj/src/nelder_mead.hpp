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

#ifndef ABSLG_SRC_NELDER_MEAD_HPP
#define ABSLG_SRC_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace abslg::detail {

struct SimplexResult {
  std::vector<double> x;
  double fmin = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Plain Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2)
// with the usual best/worst bookkeeping. Deterministic. Converges when both
// the function spread and the vertex spread fall under the tolerances.
inline SimplexResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const std::vector<double>& step,
    double ftol, double xtol, int max_iterations) {
  const std::size_t d = x0.size();
  std::vector<std::vector<double>> pts(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step[i];
  std::vector<double> fv(d + 1);
  for (std::size_t i = 0; i <= d; ++i) fv[i] = f(pts[i]);

  SimplexResult res;
  int it = 0;
  auto order = [&] {
    for (std::size_t i = 1; i <= d; ++i) {
      auto p = pts[i];
      double fp = fv[i];
      std::size_t j = i;
      while (j > 0 && fv[j - 1] > fp) {
        pts[j] = pts[j - 1];
        fv[j] = fv[j - 1];
        --j;
      }
      pts[j] = p;
      fv[j] = fp;
    }
  };
  order();

  for (; it < max_iterations; ++it) {
    double fspread = fv[d] - fv[0];
    double xspread = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double lo = pts[0][i], hi = pts[0][i];
      for (std::size_t v = 1; v <= d; ++v) {
        lo = std::min(lo, pts[v][i]);
        hi = std::max(hi, pts[v][i]);
      }
      xspread = std::max(xspread, hi - lo);
    }
    if (fspread < ftol && xspread < xtol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(d, 0.0);
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t i = 0; i < d; ++i) centroid[i] += pts[v][i];
    }
    for (std::size_t i = 0; i < d; ++i) centroid[i] /= static_cast<double>(d);

    auto combine = [&](double coef) {
      std::vector<double> p(d);
      for (std::size_t i = 0; i < d; ++i) {
        p[i] = centroid[i] + coef * (pts[d][i] - centroid[i]);
      }
      return p;
    };

    auto refl = combine(-1.0);
    const double frefl = f(refl);
    if (frefl < fv[0]) {
      auto expa = combine(-2.0);
      const double fexpa = f(expa);
      if (fexpa < frefl) {
        pts[d] = std::move(expa);
        fv[d] = fexpa;
      } else {
        pts[d] = std::move(refl);
        fv[d] = frefl;
      }
    } else if (frefl < fv[d - 1]) {
      pts[d] = std::move(refl);
      fv[d] = frefl;
    } else {
      const bool outside = frefl < fv[d];
      auto contr = combine(outside ? -0.5 : 0.5);
      const double fcontr = f(contr);
      if (fcontr < std::min(frefl, fv[d])) {
        pts[d] = std::move(contr);
        fv[d] = fcontr;
      } else {
        // shrink toward the best vertex
        for (std::size_t v = 1; v <= d; ++v) {
          for (std::size_t i = 0; i < d; ++i) {
            pts[v][i] = pts[0][i] + 0.5 * (pts[v][i] - pts[0][i]);
          }
          fv[v] = f(pts[v]);
        }
      }
    }
    order();
  }

  res.x = pts[0];
  res.fmin = fv[0];
  res.iterations = it;
  return res;
}

}  // namespace abslg::detail

#endif  // ABSLG_SRC_NELDER_MEAD_HPP
