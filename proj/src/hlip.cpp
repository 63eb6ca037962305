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
#include "esvc/hlip.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/LU>

#include "esvc/error.hpp"
#include "esvc/io.hpp"

namespace esvc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRollLimit = kPi / 2 - 1e-6;

// Uniform in [-1, 1) from the raw engine output so runs are identical
// across standard libraries.
double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
}

// COM in the contact frame for roll theta; also returns the leg length.
Vec3 com_at(const FootGeometry& foot, double z0, double theta, double* leg) {
  const HomTransform T = roll_contact(foot, theta).T_Oi_C;
  const double l = (z0 - T.translation().z()) / std::cos(theta);
  if (leg) *leg = l;
  return T.apply(Vec3(0.0, 0.0, l));
}

}  // namespace

double HlipParams::lambda() const { return std::sqrt(g / z0); }

void HlipParams::validate() const {
  require(z0 > 0.0 && std::isfinite(z0), "z0 must be positive");
  require(T_ssp > 0.0 && std::isfinite(T_ssp), "T_ssp must be positive");
  require(g > 0.0 && std::isfinite(g), "g must be positive");
}

S2SModel build_s2s(const HlipParams& p) {
  p.validate();
  const double lam = p.lambda();
  const double c = std::cosh(lam * p.T_ssp), s = std::sinh(lam * p.T_ssp);
  S2SModel m;
  m.A << c, s / lam, lam * s, c;
  m.B = -m.A.col(0);
  m.K << 1.0, c / (s * lam);
  return m;
}

HlipState lip_flow(const HlipState& x, double lambda, double t) {
  const double c = std::cosh(lambda * t), s = std::sinh(lambda * t);
  return {x.p * c + x.v * s / lambda, x.p * lambda * s + x.v * c};
}

Orbit desired_orbit(const HlipParams& p, double v_des, double v_max) {
  require(std::isfinite(v_des) && std::abs(v_des) <= v_max,
          "desired speed exceeds v_max");
  const S2SModel m = build_s2s(p);
  Orbit o;
  o.u = v_des * p.T_ssp;
  const Eigen::Vector2d X =
      (Eigen::Matrix2d::Identity() - m.A).partialPivLu().solve(m.B * o.u);
  o.X = {X(0), X(1)};
  return o;
}

StepTarget step_target(const S2SModel& m, const HlipState& x,
                       const Orbit& orbit, double u_max) {
  require(u_max > 0.0, "step limit must be positive");
  const double raw = orbit.u + m.K(0) * (x.p - orbit.X.p) +
                     m.K(1) * (x.v - orbit.X.v);
  StepTarget st;
  st.u = std::clamp(raw, -u_max, u_max);
  st.saturated = st.u != raw;
  return st;
}

HlipState measure_pre_impact(const PoseTrajectory& support, double t,
                             const BodyState& body) {
  require(support.poses.size() >= 3 && support.h > 0.0,
          "pre-impact measurement needs at least three poses");
  const auto idx = static_cast<std::size_t>(std::clamp(
      std::lround((t - support.t0) / support.h), 0L,
      static_cast<long>(support.poses.size()) - 1));
  const HomTransform& T = support.poses[idx];
  const Mat4 dT = transform_time_derivative(support, t);
  const Vec3 p = T.apply(body.p_com);
  const Vec3 v = dT.topLeftCorner<3, 3>() * body.p_com +
                 dT.topRightCorner<3, 1>() + T.rotation() * body.v_com;
  return {p.y(), v.y()};
}

SwingTrajectory::SwingTrajectory(const Vec3& start, const Vec3& start_vel,
                                 const Vec3& end, double duration,
                                 double clearance)
    : p0_(start), v0_(start_vel), p1_(end), T_(duration) {
  require(duration > 0.0, "swing duration must be positive");
  require(clearance >= 0.0, "swing clearance must be non-negative");
  pm_ = 0.5 * (start + end);
  vm_ = 1.5 * (end - start) / duration;
  pm_.z() = std::max(start.z(), end.z()) + clearance;
  vm_.z() = 0.0;
}

namespace {
struct Hermite {
  Vec3 p, v;
};
Hermite hermite(const Vec3& pa, const Vec3& va, const Vec3& pb, const Vec3& vb,
                double d, double s) {
  const double s2 = s * s, s3 = s2 * s;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  const double g00 = 6 * s2 - 6 * s, g10 = 3 * s2 - 4 * s + 1;
  const double g01 = -6 * s2 + 6 * s, g11 = 3 * s2 - 2 * s;
  // Increment form keeps a zero displacement exactly constant.
  return {pa + h01 * (pb - pa) + h10 * d * va + h11 * d * vb,
          (g00 * pa + g01 * pb) / d + g10 * va + g11 * vb};
}
}  // namespace

Vec3 SwingTrajectory::position(double t) const {
  if (t <= 0.0) return p0_;
  if (t >= T_) return p1_;
  const double d = 0.5 * T_;
  if (t < d) return hermite(p0_, v0_, pm_, vm_, d, t / d).p;
  return hermite(pm_, vm_, p1_, Vec3::Zero(), d, (t - d) / d).p;
}

Vec3 SwingTrajectory::velocity(double t) const {
  if (t <= 0.0) return v0_;
  if (t >= T_) return Vec3::Zero();
  const double d = 0.5 * T_;
  if (t < d) return hermite(p0_, v0_, pm_, vm_, d, t / d).v;
  return hermite(pm_, vm_, p1_, Vec3::Zero(), d, (t - d) / d).v;
}

Vec3 swing_feedback(const Vec3& x_star, const Vec3& x_fd, double K_swa) {
  require(K_swa >= 0.0 && K_swa <= 1.0, "swing feedback gain must be in [0, 1]");
  return x_star + K_swa * (x_fd - x_star);
}

void WalkOptions::validate() const {
  hlip.validate();
  require(n_steps >= 1, "walk needs at least one step");
  require(samples_per_step >= 4, "walk needs at least 4 samples per step");
  require(K_swa >= 0.0 && K_swa <= 1.0, "K_swa must be in [0, 1]");
  require(u_max > 0.0, "u_max must be positive");
  require(leg_max > 0.0, "leg_max must be positive");
  require(z_clear >= 0.0, "z_clear must be non-negative");
  require(noise_v >= 0.0, "noise amplitude must be non-negative");
  require(deriv_step > 0.0 && deriv_step < hlip.T_ssp / 4,
          "derivative step out of range");
  require(std::isfinite(p0) && std::isfinite(v0), "initial state must be finite");
}

double roll_for_com(const FootGeometry& foot, double z0, double p,
                    double leg_max, double* leg) {
  // The lateral COM offset decreases monotonically with roll.
  const auto offset = [&](double th) { return com_at(foot, z0, th, nullptr).y() - p; };
  double lo = -kRollLimit, hi = kRollLimit;
  if (offset(lo) < 0.0 || offset(hi) > 0.0) {
    fail(ErrorCode::Fall, "COM offset " + fmt(p) + " m beyond the toe limit");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (offset(mid) > 0.0 ? lo : hi) = mid;
  }
  const double th = 0.5 * (lo + hi);
  double l = 0.0;
  com_at(foot, z0, th, &l);
  if (!(l > 0.0) || l > leg_max) {
    fail(ErrorCode::Fall, "leg length " + fmt(l) + " m out of range at roll " +
                              fmt(th) + " rad");
  }
  if (leg) *leg = l;
  return th;
}

WalkLog simulate_walk(const FootGeometry& foot, const WalkOptions& opt) {
  opt.validate();
  const HlipParams& hp = opt.hlip;
  const double lam = hp.lambda(), T = hp.T_ssp;
  const S2SModel model = build_s2s(hp);
  WalkLog log;
  log.orbit = desired_orbit(hp, opt.v_des, opt.v_max);
  std::mt19937_64 rng(opt.seed);

  HlipState x{opt.p0, opt.v0};
  double contact_world = 0.0;  // lateral world position of the support contact
  double swing_start = 0.0;    // previous contact relative to the current one
  const int N = opt.samples_per_step;
  const double dt = T / N;

  const auto predicted_target = [&](const HlipState& now, double t_now) {
    return step_target(model, lip_flow(now, lam, T - t_now), log.orbit,
                       opt.u_max);
  };

  for (int k = 0; k < opt.n_steps; ++k) {
    StepRecord rec;
    rec.step = k;
    rec.t_start = k * T;
    const Vec3 start(0.0, swing_start, 0.0);
    const SwingTrajectory plan(start, Vec3::Zero(),
                               Vec3(0.0, predicted_target(x, 0.0).u, 0.0), T,
                               opt.z_clear);
    double l_c0 = 0.0, l_e0 = 0.0;
    Vec3 swing_end = Vec3::Zero();
    try {
      for (int i = 0; i < N; ++i) {
        const double t = i * dt;
        WalkSample s;
        s.step = k;
        s.t = rec.t_start + t;
        s.p = x.p;
        s.v = x.v;
        s.theta = roll_for_com(foot, hp.z0, x.p, opt.leg_max, &s.leg);
        const ContactSolution cs = roll_contact(foot, s.theta);
        s.com_c = cs.T_Oi_C.apply(Vec3(0.0, 0.0, s.leg));
        s.rollover = cs.rollover_length;
        s.segment = cs.segment;
        const double exact = exact_rollover_length(foot, s.theta);
        if (i == 0) {
          l_c0 = s.rollover;
          l_e0 = exact;
        }
        // The contact point travels with the rolled length; O_C stays put.
        s.contact_world = contact_world - (s.rollover - l_c0);
        rec.slip = std::max(rec.slip,
                            std::abs((s.rollover - l_c0) - (exact - l_e0)));
        rec.theta_max = std::max(rec.theta_max, std::abs(s.theta));
        s.swing_plan = plan.position(t);
        const SwingTrajectory updated(
            start, Vec3::Zero(), Vec3(0.0, predicted_target(x, t).u, 0.0), T,
            opt.z_clear);
        s.swing_cmd = swing_feedback(s.swing_plan, updated.position(t), opt.K_swa);
        log.samples.push_back(s);

        x = lip_flow(x, lam, dt);
        if (opt.noise_v > 0.0) x.v += opt.noise_v * uniform_pm1(rng);
      }

      // Pre-impact: sample the support pose around T and differentiate.
      rec.lip_state = x;
      const double h = opt.deriv_step;
      PoseTrajectory traj;
      traj.t0 = T - h;
      traj.h = h;
      double legs[3];
      for (int j = -1; j <= 1; ++j) {
        const HlipState xs = lip_flow(x, lam, j * h);
        const double th = roll_for_com(foot, hp.z0, xs.p, opt.leg_max, &legs[j + 1]);
        traj.poses.push_back(roll_contact(foot, th).T_Oi_C);
      }
      const BodyState body{Vec3(0.0, 0.0, legs[1]),
                           Vec3(0.0, 0.0, (legs[2] - legs[0]) / (2 * h))};
      rec.pre_impact = measure_pre_impact(traj, T, body);
      const double ep = rec.pre_impact.p - log.orbit.X.p;
      const double ev = rec.pre_impact.v - log.orbit.X.v;
      rec.orbit_error = std::hypot(ep, ev);
      const StepTarget st = step_target(model, rec.pre_impact, log.orbit, opt.u_max);
      rec.u = st.u;
      rec.saturated = st.saturated;
      const SwingTrajectory final_fd(start, Vec3::Zero(), Vec3(0.0, st.u, 0.0),
                                     T, opt.z_clear);
      swing_end = swing_feedback(plan.position(T), final_fd.position(T), opt.K_swa);
      rec.swing_tracking = std::abs(swing_end.y() - st.u);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Fall) throw;
      log.fell = true;
      log.fall_reason = "step " + std::to_string(k) + ": " + e.what();
      log.steps.push_back(rec);
      break;
    }
    log.max_slip = std::max(log.max_slip, rec.slip);
    log.steps.push_back(rec);

    // Impact: the swing foot becomes the support u ahead of the old contact.
    const double rolled = log.samples.back().contact_world - contact_world;
    contact_world += rolled + rec.u;
    x.p -= rec.u;
    swing_start = -rec.u;
  }

  if (!log.fell) {
    for (int k = static_cast<int>(log.steps.size()) - 1; k >= 0; --k) {
      if (log.steps[k].orbit_error > 1e-6) break;
      log.convergence_step = k;
    }
  }
  return log;
}

std::string walk_samples_csv(const WalkLog& log, const std::string& header) {
  std::string out = header;
  out +=
      "step,t,theta,p,v,leg,com_y,com_z,rollover,contact_world,segment,"
      "swing_plan_y,swing_plan_z,swing_cmd_y,swing_cmd_z\n";
  for (const auto& s : log.samples) {
    out += csv_row({std::to_string(s.step), fmt(s.t), fmt(s.theta), fmt(s.p),
                    fmt(s.v), fmt(s.leg), fmt(s.com_c.y()), fmt(s.com_c.z()),
                    fmt(s.rollover), fmt(s.contact_world), to_string(s.segment),
                    fmt(s.swing_plan.y()), fmt(s.swing_plan.z()),
                    fmt(s.swing_cmd.y()), fmt(s.swing_cmd.z())});
  }
  return out;
}

std::string walk_steps_csv(const WalkLog& log, const std::string& header) {
  std::string out = header;
  out +=
      "step,t_start,pre_p,pre_v,lip_p,lip_v,orbit_error,u,saturated,"
      "swing_tracking,slip,theta_max\n";
  for (const auto& r : log.steps) {
    out += csv_row({std::to_string(r.step), fmt(r.t_start), fmt(r.pre_impact.p),
                    fmt(r.pre_impact.v), fmt(r.lip_state.p), fmt(r.lip_state.v),
                    fmt(r.orbit_error), fmt(r.u), r.saturated ? "1" : "0",
                    fmt(r.swing_tracking), fmt(r.slip), fmt(r.theta_max)});
  }
  return out;
}

}  // namespace esvc
