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

#include "esvc/ellipse.hpp"
#include "esvc/transform.hpp"

namespace esvc {

enum class FootKind { Esvc, Line };

enum class Segment { Mid, Fore, Hind, ToeRegion };

const char* to_string(Segment s);

/// Complete three-segment foot.
///
/// Frontal-plane conventions: the foot frame O_i sits at the centre of the
/// upper surface, x sagittal, y lateral, z up. A positive roll angle is a
/// right-handed rotation about x; it rolls the sole onto the fore segment,
/// which therefore lies on the -y side of the foot frame. The hind segment
/// is its mirror image on +y.
///
/// Profile quantities (suffix _uz) use half-profile coordinates with origin
/// at the sole bottom point, u pointing towards the active segment and z up.
struct FootGeometry {
  FootKind kind = FootKind::Esvc;

  EllipseArc mid;
  EllipseArc fore;
  EllipseArc hind;

  double h_foot = 0.0;
  double w_foot = 0.0;
  double l_foot = 0.0;

  // Segment point S2 (mid/fore boundary).
  double theta_m_star = 0.0;
  double phi_m_star = 0.0;
  double phi_f_star = 0.0;
  double d_f_star = 0.0;
  double theta_f_star = 0.0;  ///< fore-frame roll angle at S2

  // Triangle chain O_i - S2 - S3.
  double d0 = 0.0;
  double alpha6 = 0.0;
  double alpha7 = 0.0;
  double alpha8 = 0.0;
  double b_s = 0.0;
  double alpha10 = 0.0;        ///< roll angle at which phi_f = pi/2
  double fore_rotation = 0.0;  ///< fore minor axis vs foot vertical, pi/2 - alpha8
  double theta_corner = 0.0;   ///< roll angle at which contact reaches S3

  CompensationParams comp_mid;
  CompensationParams comp_fore;
  double l_m_star = 0.0;     ///< compensated mid length at S2
  double l_f_star = 0.0;     ///< compensated fore length, minor vertex to S2
  double l_f_quarter = 0.0;  ///< compensated fore length, S2 to phi_f = pi/2

  Vec2 s2_uz = Vec2::Zero();
  Vec2 s3_uz = Vec2::Zero();
  Vec2 fore_center_uz = Vec2::Zero();
  Vec2 fore_major_uz = Vec2::Zero();  ///< unit, outward
  Vec2 fore_minor_uz = Vec2::Zero();  ///< unit, from S3 towards S2

  /// Degenerate line foot: a frontal-plane point contact h_foot below O_i.
  static FootGeometry line(double h_foot, double w_foot, double l_foot);
};

}  // namespace esvc
