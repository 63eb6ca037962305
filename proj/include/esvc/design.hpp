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
#include <utility>
#include <vector>

#include "esvc/ellipse.hpp"
#include "esvc/foot.hpp"

namespace esvc {

struct DesignWeights {
  double w1 = 10.0;  ///< slope mismatch at the segment point
  double w2 = 1.0;   ///< fore semi-major axis
  double w3 = 1.0;   ///< fore semi-minor axis
  double w4 = 100.0; ///< deviation from the nominal width
};

struct DesignSpec {
  EllipseArc mid;
  double h_foot = 0.06;
  double theta_m_star = 0.15;
  double w_foot_nominal = 0.12;
  DesignWeights weights;
  double d_f_max = 0.5;     ///< open upper bound on d_f_star [m]
  double w_foot_max = 0.2;  ///< open upper bound on the width [m]
  int calib_grid = 1024;    ///< compensation calibration grid
  double K_e = 1.0;
};

void validate(const DesignSpec& spec);

/// Triangle chain O_i - O_C' - S2 and the width-dependent part O_i - S2 - S3.
struct SegmentGeometry {
  double h_foot = 0.0;
  double theta_m_star = 0.0;
  double phi_m_star = 0.0;
  double d_m_star = 0.0;
  double b_m_star = 0.0;
  double alpha0_star = 0.0;
  double d0 = 0.0;
  double alpha6 = 0.0;
  double alpha7 = 0.0;
  double l_m_star = 0.0;  ///< compensated mid length at S2
  Vec2 s2_uz = Vec2::Zero();

  struct Corner {
    double b_s = 0.0;
    double alpha8 = 0.0;
  };
  /// Chord S2S3 and the angle at S3 for a given foot width.
  Corner corner(double w_foot) const;
  /// Smallest width keeping S3 outboard of S2.
  double min_width() const { return 2.0 * d0 * std::sin(alpha6); }
};

SegmentGeometry segment_geometry(const EllipseArc& mid,
                                 const CompensationParams& comp_mid,
                                 double h_foot, double theta_m_star);

/// Tangent slopes at S2. `fore_rotation` is the angle between the fore minor
/// axis and the foot vertical; with zero rotation the fore slope is
/// (r_fb/r_fa)^2 tan(phi_f_star).
std::pair<double, double> slope_at_segment(const EllipseArc& mid,
                                           double phi_m_star,
                                           const EllipseArc& fore,
                                           double phi_f_star,
                                           double fore_rotation);

struct DesignSolution {
  double r_fa = 0.0;
  double r_fb = 0.0;
  double phi_f_star = 0.0;
  double d_f_star = 0.0;
  double w_foot = 0.0;
  double theta_f_star = 0.0;
  double slope_mismatch = 0.0;
  double kkt_residual = 0.0;
  double objective = 0.0;
  int starts = 0;
  int feasible_starts = 0;
};

/// Named constraint residuals. Equalities should vanish; inequalities are in
/// g <= 0 form.
struct ConstraintReport {
  std::vector<std::pair<std::string, double>> equalities;
  std::vector<std::pair<std::string, double>> inequalities;
  double max_violation() const;
  std::string worst() const;
};

ConstraintReport check_constraints(const DesignSpec& spec,
                                   const SegmentGeometry& seg,
                                   const DesignSolution& sol);

double design_objective(const DesignSpec& spec, const SegmentGeometry& seg,
                        const DesignSolution& sol);

/// Closed-form point of the feasible manifold for width w and fore axis
/// ratio q = r_fb / r_fa. Only the fore-arc quantities are filled in.
DesignSolution fore_from_width_ratio(const SegmentGeometry& seg, double w,
                                     double q);

/// Multi-start augmented-Lagrangian solve. Throws Infeasible or
/// NonConvergence when no start yields a feasible point.
DesignSolution solve_fore_ellipse(const DesignSpec& spec);

FootGeometry assemble_foot(const DesignSpec& spec, const DesignSolution& sol,
                           double l_foot);

struct ProfilePoint {
  double y = 0.0;  ///< lateral, foot frame [m]
  double z = 0.0;  ///< vertical, foot frame [m]
  Segment segment = Segment::Mid;
};

/// Sole outline from the hind toe edge (+y) to the fore toe edge (-y), n
/// samples per arc, boundary points repeated with each arc's tag.
std::vector<ProfilePoint> export_profile(const FootGeometry& foot, int n);

/// True if consecutive edges of the polyline never turn the other way.
bool is_convex(const std::vector<ProfilePoint>& pts);

}  // namespace esvc
