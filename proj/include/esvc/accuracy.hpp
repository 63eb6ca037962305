/*
 * Copyright 2026 The ESVC Foot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <string>
#include <vector>

#include "esvc/ellipse.hpp"

namespace esvc {

/// One grid point. Errors are (estimate - exact) / exact in percent.
struct SweepRow {
  double theta = 0.0;
  double lambda = 0.0;
  double exact = 0.0;
  double chord = 0.0;
  double approx = 0.0;
  double comp = 0.0;
  double err_chord_pct = 0.0;
  double err_approx_pct = 0.0;
  double err_comp_pct = 0.0;
};

struct ErrorSweep {
  std::string arc_id;
  EllipseArc arc;
  CompensationParams comp;
  std::vector<SweepRow> rows;
};

/// Uniform open roll grid on (0, pi/2), n >= 128.
ErrorSweep sweep(const std::string& arc_id, const EllipseArc& arc,
                 const CompensationParams& comp, int n);

/// Signed extremum (by magnitude, first on ties) and signed mean.
struct ColumnSummary {
  double max_signed = 0.0;
  double mean_signed = 0.0;
};

ColumnSummary summarize_column(const std::vector<double>& values);

struct SweepSummary {
  ColumnSummary chord;
  ColumnSummary approx;
  ColumnSummary comp;
};

SweepSummary summarize(const ErrorSweep& s);

/// Column order of the per-row CSV.
extern const char* const kSweepCsvHeader;

/// Per-row CSV text, preceded by `header` comment lines.
std::string sweep_csv(const std::vector<ErrorSweep>& sweeps,
                      const std::string& header);

/// Summary CSV: one column per (arc, estimator), rows lambda_star, max_pct,
/// mean_pct, followed by comment lines on the lambda_star assignment.
std::string summary_csv(const std::vector<ErrorSweep>& sweeps,
                        const std::string& header);

/// Writes both files. Throws Io on unwritable paths.
void report(const std::vector<ErrorSweep>& sweeps, const std::string& csv_path,
            const std::string& summary_path, const std::string& header);

/// Reads back the rows of a sweep CSV (arc constants are not stored).
std::vector<ErrorSweep> read_sweep_csv(const std::string& text);

}  // namespace esvc
