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
#include "esvc/contact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "esvc/error.hpp"

namespace esvc {
namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Mid contact point in (u, z). The height r_b - d cos(phi) is rewritten
// without cancellation so that small rolls keep full precision.
Vec2 mid_point_uz(const FootGeometry& f, double phi) {
  const double d = radius_at(f.mid, phi);
  const double sp = std::sin(phi), cp = std::cos(phi);
  const double ba = f.mid.r_b / f.mid.r_a;
  return Vec2(d * sp, d * d * sp * sp * ba * ba / (f.mid.r_b + d * cp));
}

// Fore-frame roll angle reached at the upper corner S3.
double corner_fore_roll(const FootGeometry& f) { return kPi - f.theta_f_star; }

}  // namespace

double fore_arc_length(const FootGeometry& f, double thf) {
  if (thf <= kPi / 2) {
    return arc_length_compensated(f.fore, f.comp_fore,
                                  rollover_from_roll(f.fore, thf));
  }
  const double quarter = arc_length_compensated(
      f.fore, f.comp_fore, rollover_from_roll(f.fore, kPi / 2));
  const double mirror = arc_length_compensated(
      f.fore, f.comp_fore, rollover_from_roll(f.fore, kPi - thf));
  return 2.0 * quarter - mirror;
}

namespace {

void check_roll(double theta) {
  if (!std::isfinite(theta) || std::abs(theta) >= kPi / 2) {
    fail(ErrorCode::Fall,
         "roll angle " + std::to_string(theta) + " reaches the toe edge");
  }
}

Segment classify(const FootGeometry& f, double theta) {
  const double t = std::abs(theta);
  if (f.kind == FootKind::Line || t < f.theta_m_star) return Segment::Mid;
  if (t >= f.alpha10) return Segment::ToeRegion;
  return theta > 0.0 ? Segment::Fore : Segment::Hind;
}

ContactSolution line_contact(const FootGeometry& f, double theta) {
  ContactSolution out;
  out.T_Oi_C = HomTransform::rot_x(theta) *
               HomTransform::translation(Vec3(0.0, 0.0, f.h_foot));
  out.segment = Segment::Mid;
  return out;
}

}  // namespace

ContactSolution mid_contact(const FootGeometry& f, double theta) {
  check_roll(theta);
  if (f.kind == FootKind::Line) return line_contact(f, theta);
  const double t = std::abs(theta);
  require(t <= f.theta_m_star + 1e-12,
          "mid_contact: roll beyond the mid segment");
  const double s = sgn(theta);
  ContactSolution out;
  out.segment = Segment::Mid;
  if (t == 0.0) {
    out.T_Oi_C = HomTransform::translation(Vec3(0.0, 0.0, f.h_foot));
    return out;
  }
  const RollAngles ang = rollover_from_roll(f.mid, t);
  // Sole bottom minus contact point, rotated into C.
  const Vec2 p = mid_point_uz(f, ang.phi);
  const Vec3 rel(0.0, s * p.x(), -p.y());
  const Vec3 bottom = HomTransform::rot_x(theta).apply(rel);
  out.T_Oi_C = HomTransform::translation(bottom) * HomTransform::rot_x(theta) *
               HomTransform::translation(Vec3(0.0, 0.0, f.h_foot));
  out.rollover_length = s * arc_length_compensated(f.mid, f.comp_mid, ang);
  out.T_OC_C = HomTransform::translation(Vec3(0.0, out.rollover_length, 0.0));
  return out;
}

ContactSolution fore_contact(const FootGeometry& f, double theta) {
  check_roll(theta);
  if (f.kind == FootKind::Line) return line_contact(f, theta);
  const double t = std::abs(theta);
  require(t >= f.theta_m_star - 1e-12,
          "fore_contact: roll inside the mid segment");
  const double s = sgn(theta);

  const double thf = std::min(t + f.fore_rotation, corner_fore_roll(f));
  ContactSolution out;
  out.segment = classify(f, theta);
  // Foot frame seen from the contact: rotate about the contact point.
  const Vec3 contact = profile_to_foot(f, contact_point_uz(f, t), s);
  out.T_Oi_C = HomTransform::rot_x(theta) * HomTransform::translation(-contact);
  out.rollover_length =
      s * (f.l_m_star + fore_arc_length(f, thf) - f.l_f_star);
  out.T_OC_C = HomTransform::translation(Vec3(0.0, out.rollover_length, 0.0));
  return out;
}

ContactSolution roll_contact(const FootGeometry& f, double theta) {
  check_roll(theta);
  if (f.kind == FootKind::Line) return line_contact(f, theta);
  if (std::abs(theta) < f.theta_m_star) return mid_contact(f, theta);
  return fore_contact(f, theta);
}

double total_rollover_length(const FootGeometry& f, double theta) {
  return std::abs(roll_contact(f, theta).rollover_length);
}

double exact_rollover_length(const FootGeometry& f, double theta) {
  check_roll(theta);
  if (f.kind == FootKind::Line) return 0.0;
  const double t = std::abs(theta);
  const auto mid_len = [&](double th) {
    return arc_length_exact(f.mid, rollover_from_roll(f.mid, th).lambda);
  };
  if (t < f.theta_m_star) return sgn(theta) * mid_len(t);
  const auto fore_len = [&](double thf) {
    if (thf <= kPi / 2) {
      return arc_length_exact(f.fore, rollover_from_roll(f.fore, thf).lambda);
    }
    const double quarter = arc_length_exact(f.fore, kPi / 2);
    return 2.0 * quarter -
           arc_length_exact(f.fore,
                            rollover_from_roll(f.fore, kPi - thf).lambda);
  };
  const double thf = std::min(t + f.fore_rotation, corner_fore_roll(f));
  return sgn(theta) * (mid_len(f.theta_m_star) + fore_len(thf) -
                       fore_len(f.theta_f_star));
}

FullTransform full_transform(const FootGeometry& f, double roll, double pitch,
                             double yaw) {
  if (!std::isfinite(pitch) || std::abs(pitch) >= kPi / 2) {
    fail(ErrorCode::InvalidArgument,
         "pitch angle out of range: " + std::to_string(pitch));
  }
  require(std::isfinite(yaw), "yaw angle must be finite");
  const ContactSolution rc = roll_contact(f, roll);
  const Vec3 edge(sgn(pitch) * f.l_foot / 2, 0.0, 0.0);
  const HomTransform T_pitch =
      HomTransform::rot_y(pitch) * HomTransform::translation(-edge);
  const HomTransform T_pitch_fixed = HomTransform::translation(-edge);
  const HomTransform T_yaw = HomTransform::rot_z(yaw);
  FullTransform out;
  out.T_Oi_C = T_yaw * T_pitch * rc.T_Oi_C;
  out.T_OC_C = T_yaw * T_pitch_fixed * rc.T_OC_C * T_yaw.inverse();
  return out;
}

std::pair<Vec3, Vec3> com_and_swing_in_contact(const HomTransform& T,
                                               const Vec3& p_com_body,
                                               const Vec3& p_sw_body) {
  return {T.apply(p_com_body), T.apply(p_sw_body)};
}

Vec3 absolute_positions(const FootGeometry& f, double roll, double pitch,
                        double yaw, const Vec3& p_body) {
  const FullTransform ft = full_transform(f, roll, pitch, yaw);
  return (ft.T_OC_C.inverse() * ft.T_Oi_C).apply(p_body);
}

Mat4 transform_time_derivative(const PoseTrajectory& traj, double t) {
  const auto n = static_cast<long>(traj.poses.size());
  if (n < 3) {
    fail(ErrorCode::InvalidArgument,
         "transform derivative needs at least 3 samples");
  }
  require(traj.h > 0.0, "transform derivative needs a positive step");
  const double pos = (t - traj.t0) / traj.h;
  require(pos >= -0.5 && pos <= static_cast<double>(n - 1) + 0.5,
          "transform derivative: time outside the sampled window");
  const long i = std::clamp(std::lround(pos), 0L, n - 1);
  const auto& P = traj.poses;
  const double inv = 1.0 / (2.0 * traj.h);
  if (i == 0) {
    return (-3.0 * P[0].matrix() + 4.0 * P[1].matrix() - P[2].matrix()) * inv;
  }
  if (i == n - 1) {
    return (3.0 * P[i].matrix() - 4.0 * P[i - 1].matrix() +
            P[i - 2].matrix()) *
           inv;
  }
  return (P[i + 1].matrix() - P[i - 1].matrix()) * inv;
}

Vec2 contact_point_uz(const FootGeometry& f, double abs_theta) {
  if (f.kind == FootKind::Line) return Vec2::Zero();
  if (abs_theta < f.theta_m_star) {
    const RollAngles a = rollover_from_roll(f.mid, abs_theta);
    return mid_point_uz(f, a.phi);
  }
  const double thf =
      std::min(abs_theta + f.fore_rotation, corner_fore_roll(f));
  double lam;
  if (thf <= kPi / 2) {
    lam = rollover_from_roll(f.fore, thf).lambda;
  } else {
    lam = kPi - rollover_from_roll(f.fore, kPi - thf).lambda;
  }
  return f.fore_center_uz + f.fore.r_a * std::sin(lam) * f.fore_major_uz +
         f.fore.r_b * std::cos(lam) * f.fore_minor_uz;
}

Vec3 profile_to_foot(const FootGeometry& f, const Vec2& uz, double side) {
  return Vec3(0.0, -sgn(side) * uz.x(), uz.y() - f.h_foot);
}

}  // namespace esvc
