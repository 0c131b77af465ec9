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

#ifndef ABSLG_REPORT_HPP
#define ABSLG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abslg/estimation.hpp"

namespace abslg {

inline constexpr const char* kToolVersion = "0.1.0";

struct IngestOptions {
  // 1-based column in delimited files; 0 reads each line as one number.
  int column = 0;
  char delimiter = ',';
};

// Read one finite real per retained line. '#' lines and blank lines are
// skipped; a non-numeric first data line is treated as a header and skipped
// once. Any later unparseable or non-finite value raises std::runtime_error
// naming the 1-based line number.
Dataset ingest(const std::string& path, const IngestOptions& options = {},
               const std::string& label = "");

struct ReportMetadata {
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::string tool_version = kToolVersion;
};

// Model-comparison report in the style of a fit table: one row per model,
// sorted by descending AIC (best fit last), plus the logistic-vs-abslg LR
// test when both members are present.
struct ReportDocument {
  std::string dataset_label;
  std::vector<FitResult> rows;
  std::optional<LrTestResult> lr;
  ReportMetadata metadata;
};

ReportDocument build_report(const Dataset& data,
                            const std::vector<ModelId>& models,
                            const FitOptions& options,
                            const ReportMetadata& metadata);

struct HistogramBin {
  double left;
  double width;
  double height;  // normalized: heights integrate to one
};

struct DensityCurve {
  std::string model;
  std::vector<double> z;
  std::vector<double> density;
};

// Histogram (Freedman-Diaconis width unless bins is given) plus fitted
// density curves evaluated on a shared grid. Emission only; no rendering.
struct PlotData {
  std::string dataset_label;
  std::vector<HistogramBin> histogram;
  std::vector<DensityCurve> curves;
};

PlotData make_plot_data(const Dataset& data,
                        const std::vector<FitResult>& fits,
                        int bins_override = 0, int grid_points = 257);

// JSON serialization; field names match the struct fields.
nlohmann::json to_json(const FitResult& fit);
nlohmann::json to_json(const LrTestResult& lr);
nlohmann::json to_json(const ReportDocument& report);
nlohmann::json to_json(const PlotData& plot);

// Fixed-width table rendering mirroring the mu/sigma/alpha/beta/logL/AIC/BIC
// column order.
std::string render_table(const ReportDocument& report);
std::string render_fit_line(const FitResult& fit);

}  // namespace abslg

#endif  // ABSLG_REPORT_HPP
