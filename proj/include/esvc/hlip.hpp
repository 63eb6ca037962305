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

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "esvc/contact.hpp"
#include "esvc/foot.hpp"

namespace esvc {

/// Lateral linear inverted pendulum with a fixed single-support period.
struct HlipParams {
  double z0 = 0.70;     ///< COM height [m]
  double T_ssp = 0.38;  ///< step period [s]
  double g = 9.81;
  double lambda() const;
  void validate() const;
};

/// Pre-impact to pre-impact map X+ = A X + B u, deadbeat gain K.
struct S2SModel {
  Eigen::Matrix2d A;
  Eigen::Vector2d B;
  Eigen::RowVector2d K;
};

S2SModel build_s2s(const HlipParams& p);

struct HlipState {
  double p = 0.0;  ///< COM relative to the contact point [m]
  double v = 0.0;  ///< [m/s]
};

/// Closed-form pendulum flow over duration t.
HlipState lip_flow(const HlipState& x, double lambda, double t);

/// Period-one orbit with step length v_des * T. |v_des| <= v_max.
struct Orbit {
  HlipState X;
  double u = 0.0;
};

Orbit desired_orbit(const HlipParams& p, double v_des, double v_max = 0.5);

struct StepTarget {
  double u = 0.0;
  bool saturated = false;
};

StepTarget step_target(const S2SModel& m, const HlipState& measured,
                       const Orbit& orbit, double u_max);

/// Body-frame COM position and velocity.
struct BodyState {
  Vec3 p_com;
  Vec3 v_com;
};

/// Lateral COM state in the contact frame at time t from sampled support
/// poses T_Oi_C: p = T p_body, v = dT/dt p_body + R v_body.
HlipState measure_pre_impact(const PoseTrajectory& support, double t,
                             const BodyState& body);

/// Two cubic Hermite segments meeting at T/2. Horizontal motion passes the
/// midpoint at 1.5 times the mean speed; height peaks at the apex
/// max(z_start, z_end) + clearance. Ends at rest.
class SwingTrajectory {
 public:
  SwingTrajectory(const Vec3& start, const Vec3& start_vel, const Vec3& end,
                  double duration, double clearance);
  Vec3 position(double t) const;
  Vec3 velocity(double t) const;
  double duration() const { return T_; }

 private:
  Vec3 p0_, v0_, pm_, vm_, p1_;
  double T_;
};

/// x_d = x_star + K_swa (x_fd - x_star), K_swa in [0, 1].
Vec3 swing_feedback(const Vec3& x_star, const Vec3& x_fd, double K_swa);

struct WalkOptions {
  HlipParams hlip;
  double v_des = 0.0;
  double v_max = 0.5;
  int n_steps = 78;
  int samples_per_step = 38;
  double K_swa = 0.3;
  double u_max = 0.25;
  double leg_max = 0.9;
  double z_clear = 0.05;
  double p0 = 0.0;  ///< initial COM offset from the first contact [m]
  double v0 = 0.0;  ///< initial COM velocity [m/s]
  double noise_v = 0.0;  ///< bounded velocity disturbance per sample [m/s]
  std::uint64_t seed = 0;
  double deriv_step = 2e-5;  ///< pose sampling for the pre-impact derivative
  void validate() const;
};

struct WalkSample {
  int step = 0;
  double t = 0.0;
  double theta = 0.0;
  double p = 0.0;
  double v = 0.0;
  double leg = 0.0;
  Vec3 com_c = Vec3::Zero();     ///< COM in the contact frame
  double rollover = 0.0;         ///< signed compensated rollover length
  double contact_world = 0.0;    ///< lateral world position of the contact
  Segment segment = Segment::Mid;
  Vec3 swing_plan = Vec3::Zero();  ///< x_star
  Vec3 swing_cmd = Vec3::Zero();   ///< x_d after feedback
};

struct StepRecord {
  int step = 0;
  double t_start = 0.0;
  HlipState pre_impact;   ///< measured from the support poses
  HlipState lip_state;    ///< pendulum state at the same instant
  double orbit_error = 0.0;  ///< |pre_impact - X_h|
  double u = 0.0;
  bool saturated = false;
  double swing_tracking = 0.0;  ///< |x_d(T) - u| lateral
  double slip = 0.0;  ///< max |compensated - exact| rollover travel in the step
  double theta_max = 0.0;
};

struct WalkLog {
  Orbit orbit;
  std::vector<WalkSample> samples;
  std::vector<StepRecord> steps;
  bool fell = false;
  std::string fall_reason;
  /// First step from which every pre-impact error is below 1e-6, or -1.
  int convergence_step = -1;
  double max_slip = 0.0;
};

/// Roll angle placing the COM at lateral offset p above the contact while
/// keeping its height at z0. Throws Fall when no angle within the toe limit
/// or leg range works.
double roll_for_com(const FootGeometry& foot, double z0, double p,
                    double leg_max, double* leg = nullptr);

/// Kinematic walker: the pendulum drives the COM, the support foot rolls to
/// carry it, the step controller places the next contact. A fall ends the
/// run and is reported in the log.
WalkLog simulate_walk(const FootGeometry& foot, const WalkOptions& opt);

std::string walk_samples_csv(const WalkLog& log, const std::string& header);
std::string walk_steps_csv(const WalkLog& log, const std::string& header);

}  // namespace esvc
