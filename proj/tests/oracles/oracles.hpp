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

#include "esvc/design.hpp"
#include "esvc/foot.hpp"
#include "esvc/transform.hpp"

// Brute-force reference implementations used only by the tests. None of
// these call into the analytic chains they are meant to check.
namespace oracle {

using esvc::Vec2;

/// r_a * int_0^lambda sqrt(1 - e^2 sin^2 u) du by fixed 5-point
/// Gauss-Legendre on `panels` equal panels.
double composite_arc_length(double r_a, double r_b, double lambda,
                            int panels = 10000);

/// Sole outline in foot-frame (y, z), ordered hind toe (+y) to fore toe (-y),
/// with cumulative arc length.
struct Polyline {
  std::vector<Vec2> pts;
  std::vector<double> s;
  std::size_t bottom = 0;  ///< index of the zero-roll contact vertex
};

/// Rebuilds the sole from primitive inputs only: mid axes, h_foot,
/// theta_m_star, w_foot and the fore axes. The fore ellipse is placed with
/// its minor axis along S2S3 and centre on the perpendicular bisector.
Polyline sole_polyline(const esvc::FootGeometry& foot, int n_per_arc);

/// Single circle of radius r with the foot frame h above its bottom.
Polyline circle_polyline(double r, double h, int n);

struct RollPose {
  Vec2 oi_in_c;       ///< foot-frame origin seen from the contact point
  double arc = 0.0;   ///< signed sole length rolled over
  std::size_t index = 0;
};

/// Rotates the polyline by theta about the sagittal axis and takes the
/// lowest vertex as contact.
RollPose roll(const Polyline& poly, double theta);

/// Foot pose in the contact frame from the triangle chain through the
/// segment centers (law of sines / cosines), roll in (0, pi/2). Agrees with
/// the library's vector form away from the degenerate small-triangle limits.
esvc::HomTransform angle_chain_pose(const esvc::FootGeometry& foot,
                                    double theta);

struct SegmentByVectors {
  Vec2 s2, s3;
  double d0 = 0.0, alpha6 = 0.0, alpha7 = 0.0, b_s = 0.0, alpha8 = 0.0;
  double b_m = 0.0;
};

SegmentByVectors segment_by_vectors(double r_a, double r_b, double h,
                                    double theta_m_star, double w);

struct ForeByVectors {
  double r_fa = 0.0, r_fb = 0.0, theta_f = 0.0, phi_f = 0.0, d_f = 0.0;
  double slope_mid = 0.0, slope_fore = 0.0;  ///< geometric dz/du at S2
  bool ok = false;
};

/// Feasible-manifold point for width w and ratio q, with slopes measured on
/// the explicitly placed curves.
ForeByVectors fore_by_vectors(const esvc::DesignSpec& spec, double w, double q);

struct CheckResult {
  double max_equality = 0.0;
  double max_inequality = 0.0;  ///< largest g in g <= 0 form
};

CheckResult check_design(const esvc::DesignSpec& spec,
                         const esvc::DesignSolution& sol);

double objective(const esvc::DesignSpec& spec, double r_fa, double r_fb,
                 double w, double slope_mismatch);

struct GridBest {
  double objective = 0.0;
  double w = 0.0;
  double q = 0.0;
  long evaluated = 0;
};

GridBest grid_search(const esvc::DesignSpec& spec, int n_w, int n_q);

/// LIP p'' = lam^2 p integrated by classic RK4.
std::pair<double, double> lip_rk4(double p0, double v0, double lam, double T,
                                  double dt);

/// Reference foot used by several tests: EA1 mid axes, h 0.06, theta 0.15,
/// nominal width 0.12, default weights.
esvc::DesignSpec reference_spec();

}  // namespace oracle
