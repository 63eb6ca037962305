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

#include <utility>
#include <vector>

#include "esvc/foot.hpp"
#include "esvc/transform.hpp"

namespace esvc {

/// Key-frame transforms for one roll angle. T_Oi_C maps foot-frame
/// coordinates into the rolling contact frame C; T_OC_C maps coordinates of
/// the fixed frame O_C (contact at zero roll) into C.
struct ContactSolution {
  HomTransform T_OC_C;
  HomTransform T_Oi_C;
  double rollover_length = 0.0;  ///< signed, sign follows theta
  Segment segment = Segment::Mid;
};

/// Mid-segment solution, |theta| < theta_m_star.
ContactSolution mid_contact(const FootGeometry& foot, double theta);

/// Fore (theta > 0) or hind (theta < 0) solution,
/// theta_m_star <= |theta| < pi/2. Past the segment corner S3 the sole pivots
/// on the corner without further rolling.
ContactSolution fore_contact(const FootGeometry& foot, double theta);

/// Dispatches on |theta|; handles the line foot. |theta| < pi/2.
ContactSolution roll_contact(const FootGeometry& foot, double theta);

/// Compensated rollover length, unsigned, continuous and increasing in |theta|.
double total_rollover_length(const FootGeometry& foot, double theta);

/// Signed rollover length from exact quadrature, no approximation. Used as
/// the no-slip reference.
double exact_rollover_length(const FootGeometry& foot, double theta);

struct FullTransform {
  HomTransform T_Oi_C;
  HomTransform T_OC_C;
};

/// Roll/pitch/yaw stack T_Oi_C = T_yaw * T_pitch * T_roll. Pitch is a rigid
/// rotation about the sole edge at x = sgn(pitch) * l_foot / 2. The fixed
/// frame transform is conjugated by the yaw so that O_C stays world-aligned.
FullTransform full_transform(const FootGeometry& foot, double roll,
                             double pitch, double yaw);

std::pair<Vec3, Vec3> com_and_swing_in_contact(const HomTransform& T,
                                               const Vec3& p_com_body,
                                               const Vec3& p_sw_body);

/// Body point expressed in the fixed frame O_C.
Vec3 absolute_positions(const FootGeometry& foot, double roll, double pitch,
                        double yaw, const Vec3& p_body);

/// Uniformly sampled poses, sample i at t0 + i*h.
struct PoseTrajectory {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<HomTransform> poses;
};

/// Second-order finite-difference derivative of the transform entries at
/// the sample nearest to t (central inside, one-sided at the ends).
Mat4 transform_time_derivative(const PoseTrajectory& traj, double t);

/// Compensated fore length from the fore minor vertex to fore-frame roll
/// angle fore_roll in [0, pi). Past the major vertex the arc is continued by
/// symmetry.
double fore_arc_length(const FootGeometry& foot, double fore_roll);

/// Curve point of the active half-profile at roll |theta| in (u, z).
Vec2 contact_point_uz(const FootGeometry& foot, double abs_theta);

/// Maps half-profile (u, z) on the side selected by sign into foot-frame
/// (y, z).
Vec3 profile_to_foot(const FootGeometry& foot, const Vec2& uz, double side);

}  // namespace esvc
