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

#include <vector>

namespace esvc {

/// One elliptical rollover segment. The minor axis is the segment's own
/// "vertical"; parameter angles are measured from the minor-axis vertex.
struct EllipseArc {
  double r_a = 0.0;          ///< semi-major axis [m]
  double r_b = 0.0;          ///< semi-minor axis [m]
  double e = 0.0;            ///< eccentricity
  double k = 0.0;            ///< modulus angle asin(e) [rad]
  double E_param = 0.0;      ///< perimeter-shape parameter of the approximation
  double lambda_star = 0.0;  ///< switching parameter angle [rad]

  bool is_circle() const { return e == 0.0; }
};

/// Builds an arc and its derived constants. Throws InvalidArgument unless
/// r_a >= r_b > 0.
EllipseArc make_arc(double r_a, double r_b);

/// Roll angle theta (angle of the contact normal from the minor axis),
/// rollover angle phi (polar angle of the contact point from the minor axis),
/// its complement and the elliptic parameter angle lambda.
struct RollAngles {
  double theta = 0.0;
  double phi = 0.0;
  double phi_c = 0.0;
  double lambda = 0.0;
};

/// theta in [0, pi). Angles beyond pi/2 address the far side of the major
/// vertex and are resolved by quadrant, never by tan() at pi/2.
RollAngles rollover_from_roll(const EllipseArc& arc, double theta);
/// Inverse of the rollover relation: roll angle for a given phi.
double roll_from_rollover(const EllipseArc& arc, double phi);

/// Distance from the ellipse center to the boundary point at rollover angle
/// phi. Always within [r_b, r_a].
double radius_at(const EllipseArc& arc, double phi);

/// Chord from the minor vertex to the point at rollover angle phi.
double chord_length(const EllipseArc& arc, double phi);

/// Ground-truth arc length r_a * integral_0^lambda sqrt(1 - e^2 sin^2 u) du,
/// by adaptive Gauss-Kronrod bisection to 1e-12 * r_a absolute.
double arc_length_exact(const EllipseArc& arc, double lambda);

/// Elementary-function arc length with the lambda_star switching term.
/// lambda in [0, pi/2].
double arc_length_approx(const EllipseArc& arc, double lambda);

enum class CompensationMode {
  None,       ///< approximation already exact on the grid (circles)
  AsPrinted,  ///< sin((x - 2c + pi/2) / (pi - 2c))
  HalfSine,   ///< pi-normalised half sine centred on the error peak
  Ramp,       ///< delta * sin(min(pi*lambda / (2*lambda_peak), pi/2))
};

const char* to_string(CompensationMode mode);

/// Calibrated correction of the approximation error. Chosen once per arc by
/// an oracle sweep; the first candidate mode that strictly lowers the
/// maximum relative error wins.
struct CompensationParams {
  double delta_max = 0.0;    ///< signed extremal error approx - exact [m]
  double lambda_peak = 0.0;  ///< parameter angle of the extremum [rad]
  double theta_peak = 0.0;   ///< roll angle of the extremum [rad]
  double K_e = 1.0;
  CompensationMode mode = CompensationMode::None;
  double max_rel_err_approx = 0.0;       ///< over the calibration grid
  double max_rel_err_compensated = 0.0;  ///< over the calibration grid
};

/// Uniform open roll-angle grid theta_i = i * (pi/2) / (n + 1), i = 1..n.
std::vector<double> roll_grid(int n);

CompensationParams calibrate_compensation(const EllipseArc& arc, int grid_n,
                                          double K_e = 1.0);

/// Correction subtracted from the approximation for the given mode.
double compensation_term(const EllipseArc& arc, const CompensationParams& comp,
                         CompensationMode mode, const RollAngles& angles);

double arc_length_compensated(const EllipseArc& arc,
                              const CompensationParams& comp,
                              const RollAngles& angles);

}  // namespace esvc
