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

#include "abslg/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "abslg/distribution.hpp"

namespace abslg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_real(const std::string& field, double& out) {
  const std::string t = trim(field);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string select_column(const std::string& line, int column, char delim) {
  if (column <= 0) return line;
  int idx = 1;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delim, start);
    const std::string field = (pos == std::string::npos)
                                  ? line.substr(start)
                                  : line.substr(start, pos - start);
    if (idx == column) return field;
    if (pos == std::string::npos) return "";  // column missing
    start = pos + 1;
    ++idx;
  }
}

// Quantile by linear interpolation on the sorted sample.
double quantile_type7(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - std::floor(h)) * (sorted[hi] - sorted[lo]);
}

LocScale fit_loc(const FitResult& fit) { return {fit.theta[0], fit.theta[1]}; }

ShapeParams fit_shape(const FitResult& fit) {
  switch (fit.model) {
    case ModelId::aslg: return {fit.theta[2], 0.0};
    case ModelId::bslg: return {0.0, fit.theta[2]};
    case ModelId::abslg: return {fit.theta[2], fit.theta[3]};
    default: return {0.0, 0.0};
  }
}

double model_density(const FitResult& fit, double x) {
  const double mu = fit.theta[0];
  const double s = fit.theta[1];
  switch (fit.model) {
    case ModelId::normal: {
      const double u = (x - mu) / s;
      return std::exp(-0.5 * u * u) /
             (s * std::sqrt(2.0 * 3.141592653589793238462643383279502884));
    }
    case ModelId::laplace:
      return std::exp(-std::fabs(x - mu) / s) / (2.0 * s);
    default:
      return pdf(x, fit_shape(fit), fit_loc(fit));
  }
}

}  // namespace

Dataset ingest(const std::string& path, const IngestOptions& options,
               const std::string& label) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("abslg::ingest: cannot open '" + path + "'");
  Dataset out;
  out.label = label.empty() ? path : label;
  std::string line;
  int lineno = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string field = select_column(t, options.column, options.delimiter);
    double v = 0.0;
    if (!parse_real(field, v)) {
      if (!seen_data) {  // tolerate a single header line
        seen_data = true;
        continue;
      }
      throw std::runtime_error("abslg::ingest: unparseable value at line " +
                               std::to_string(lineno) + " of '" + path + "'");
    }
    if (!std::isfinite(v)) {
      throw std::runtime_error("abslg::ingest: non-finite value at line " +
                               std::to_string(lineno) + " of '" + path + "'");
    }
    seen_data = true;
    out.values.push_back(v);
  }
  if (out.values.empty()) {
    throw std::runtime_error("abslg::ingest: no data in '" + path + "'");
  }
  return out;
}

ReportDocument build_report(const Dataset& data,
                            const std::vector<ModelId>& models,
                            const FitOptions& options,
                            const ReportMetadata& metadata) {
  ReportDocument doc;
  doc.dataset_label = data.label;
  doc.metadata = metadata;
  for (ModelId m : models) doc.rows.push_back(fit_mle(data, m, options));
  std::stable_sort(doc.rows.begin(), doc.rows.end(),
                   [](const FitResult& a, const FitResult& b) {
                     return a.aic > b.aic;
                   });
  const auto find = [&](ModelId id) -> const FitResult* {
    for (const auto& r : doc.rows) {
      if (r.model == id) return &r;
    }
    return nullptr;
  };
  const FitResult* lg = find(ModelId::logistic);
  const FitResult* ab = find(ModelId::abslg);
  if (lg && ab) doc.lr = lr_test(*lg, *ab);
  return doc;
}

PlotData make_plot_data(const Dataset& data,
                        const std::vector<FitResult>& fits,
                        int bins_override, int grid_points) {
  if (data.values.empty()) throw std::domain_error("abslg: empty dataset");
  std::vector<double> sorted = data.values;
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front(), hi = sorted.back();
  const double n = static_cast<double>(sorted.size());

  int bins = bins_override;
  if (bins <= 0) {
    const double iqr =
        quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);
    const double fd_width = 2.0 * iqr / std::cbrt(n);
    bins = (fd_width > 0.0 && hi > lo)
               ? static_cast<int>(std::ceil((hi - lo) / fd_width))
               : static_cast<int>(std::ceil(std::sqrt(n)));
    bins = std::max(bins, 1);
  }

  PlotData out;
  out.dataset_label = data.label;
  const double width = (hi > lo) ? (hi - lo) / bins : 1.0;
  std::vector<std::size_t> counts(bins, 0);
  for (double v : sorted) {
    int b = static_cast<int>((v - lo) / width);
    if (b >= bins) b = bins - 1;  // right edge closed
    counts[b]++;
  }
  for (int b = 0; b < bins; ++b) {
    out.histogram.push_back(
        {lo + b * width, width, static_cast<double>(counts[b]) / (n * width)});
  }

  const double margin = 0.05 * (hi - lo);
  const double glo = lo - margin, ghi = hi + margin;
  std::vector<double> grid(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    grid[i] = glo + (ghi - glo) * i / (grid_points - 1.0);
  }
  for (const auto& fit : fits) {
    DensityCurve curve;
    curve.model = model_name(fit.model);
    curve.z = grid;
    curve.density.reserve(grid.size());
    for (double z : grid) curve.density.push_back(model_density(fit, z));
    out.curves.push_back(std::move(curve));
  }
  return out;
}

nlohmann::json to_json(const FitResult& fit) {
  nlohmann::json theta = nlohmann::json::object();
  theta["mu"] = fit.theta[0];
  theta["sigma"] = fit.theta[1];
  switch (fit.model) {
    case ModelId::aslg: theta["alpha"] = fit.theta[2]; break;
    case ModelId::bslg: theta["beta"] = fit.theta[2]; break;
    case ModelId::abslg:
      theta["alpha"] = fit.theta[2];
      theta["beta"] = fit.theta[3];
      break;
    default: break;
  }
  return {{"model", model_name(fit.model)},
          {"theta", theta},
          {"log_likelihood", fit.log_likelihood},
          {"aic", fit.aic},
          {"bic", fit.bic},
          {"k", fit.k},
          {"n", fit.n},
          {"converged", fit.converged},
          {"n_starts_used", fit.n_starts_used},
          {"dataset_label", fit.dataset_label}};
}

nlohmann::json to_json(const LrTestResult& lr) {
  return {{"statistic", lr.statistic},
          {"df", lr.df},
          {"p_value", lr.p_value},
          {"reject_at_99", lr.reject_at_99}};
}

nlohmann::json to_json(const ReportDocument& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) rows.push_back(to_json(r));
  nlohmann::json doc = {{"dataset_label", report.dataset_label},
                        {"rows", rows},
                        {"metadata",
                         {{"seed", report.metadata.seed},
                          {"tolerance", report.metadata.tolerance},
                          {"tool_version", report.metadata.tool_version}}}};
  if (report.lr) doc["lr_test"] = to_json(*report.lr);
  return doc;
}

nlohmann::json to_json(const PlotData& plot) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& b : plot.histogram) {
    hist.push_back({{"left", b.left}, {"width", b.width}, {"height", b.height}});
  }
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : plot.curves) {
    curves.push_back({{"model", c.model}, {"z", c.z}, {"density", c.density}});
  }
  return {{"dataset_label", plot.dataset_label},
          {"histogram", hist},
          {"curves", curves}};
}

std::string render_fit_line(const FitResult& fit) {
  char buf[256];
  const ShapeParams sh = fit_shape(fit);
  const bool has_a = fit.model == ModelId::aslg || fit.model == ModelId::abslg;
  const bool has_b = fit.model == ModelId::bslg || fit.model == ModelId::abslg;
  char alpha[16] = "      --";
  char beta[16] = "      --";
  if (has_a) std::snprintf(alpha, sizeof alpha, "%8.3f", sh.alpha);
  if (has_b) std::snprintf(beta, sizeof beta, "%8.3f", sh.beta);
  std::snprintf(buf, sizeof buf,
                "%-9s %9.3f %8.3f %s %s %10.3f %9.3f %9.3f%s",
                model_name(fit.model), fit.theta[0], fit.theta[1], alpha, beta,
                fit.log_likelihood, fit.aic, fit.bic,
                fit.converged ? "" : "  [not converged]");
  return buf;
}

std::string render_table(const ReportDocument& report) {
  std::ostringstream os;
  os << "dataset: " << report.dataset_label << "\n";
  os << "model            mu    sigma    alpha     beta       logL       AIC"
        "       BIC\n";
  for (const auto& r : report.rows) os << render_fit_line(r) << "\n";
  if (report.lr) {
    const auto& lr = *report.lr;
    os << "LR (logistic vs abslg): statistic " << lr.statistic << ", df "
       << lr.df << ", p " << lr.p_value
       << (lr.reject_at_99 ? " -> reject logistic at 99%"
                           : " -> no rejection at 99%")
       << "\n";
  }
  return os.str();
}

}  // namespace abslg
