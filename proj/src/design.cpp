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
#include "esvc/design.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "esvc/contact.hpp"
#include "esvc/error.hpp"
#include "esvc/nlp.hpp"

namespace esvc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIneqTol = 1e-12;

double asin_clamped(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double axis_ratio_sq(const EllipseArc& a) {
  const double q = a.r_b / a.r_a;
  return q * q;
}

}  // namespace

void validate(const DesignSpec& s) {
  require(s.mid.r_a >= s.mid.r_b && s.mid.r_b > 0.0, "design: invalid mid arc");
  require(s.h_foot > 0.0, "design: h_foot must be positive");
  require(s.theta_m_star > 0.0 && s.theta_m_star < kPi / 2,
          "design: theta_m_star must lie in (0, pi/2)");
  require(s.w_foot_nominal > 0.0, "design: w_foot_nominal must be positive");
  const auto& w = s.weights;
  require(w.w1 > 0.0 && w.w2 >= 0.0 && w.w3 >= 0.0 && w.w4 >= 0.0,
          "design: weights must be non-negative with w1 > 0");
  require(s.d_f_max > 0.0 && s.w_foot_max > 0.0, "design: bounds must be positive");
  require(s.calib_grid >= 256, "design: calibration grid must be >= 256");
  require(s.K_e > 0.0, "design: K_e must be positive");
}

SegmentGeometry::Corner SegmentGeometry::corner(double w) const {
  Corner c;
  c.b_s = std::sqrt(std::max(
      0.0, w * w / 4 + d0 * d0 - w * d0 * std::cos(alpha7)));
  c.alpha8 = c.b_s > 0.0 ? asin_clamped(d0 * std::sin(alpha7) / c.b_s) : 0.0;
  return c;
}

SegmentGeometry segment_geometry(const EllipseArc& mid,
                                 const CompensationParams& comp_mid,
                                 double h_foot, double theta_m_star) {
  require(theta_m_star > 0.0 && theta_m_star < kPi / 2,
          "segment geometry: theta_m_star must lie in (0, pi/2)");
  require(h_foot > 0.0, "segment geometry: h_foot must be positive");
  SegmentGeometry g;
  g.h_foot = h_foot;
  g.theta_m_star = theta_m_star;
  const RollAngles ang = rollover_from_roll(mid, theta_m_star);
  g.phi_m_star = ang.phi;
  g.d_m_star = radius_at(mid, ang.phi);
  g.b_m_star = chord_length(mid, ang.phi);
  if (!(g.b_m_star > 0.0)) {
    fail(ErrorCode::InvalidArgument, "segment geometry: degenerate triangle");
  }
  g.s2_uz = Vec2(g.d_m_star * std::sin(ang.phi),
                 mid.r_b - g.d_m_star * std::cos(ang.phi));
  if (g.s2_uz.y() >= h_foot) {
    fail(ErrorCode::InvalidArgument,
         "segment geometry: segment point above the foot frame");
  }
  g.alpha0_star = asin_clamped(g.d_m_star * std::sin(ang.phi) / g.b_m_star);
  g.d0 = std::sqrt(h_foot * h_foot + g.b_m_star * g.b_m_star -
                   2.0 * h_foot * g.b_m_star * std::cos(g.alpha0_star));
  g.alpha6 = asin_clamped(g.b_m_star * std::sin(g.alpha0_star) / g.d0);
  g.alpha7 = kPi / 2 - g.alpha6;
  g.l_m_star = arc_length_compensated(mid, comp_mid, ang);
  return g;
}

std::pair<double, double> slope_at_segment(const EllipseArc& mid,
                                           double phi_m_star,
                                           const EllipseArc& fore,
                                           double phi_f_star,
                                           double fore_rotation) {
  // Tangent directions as angles so that phi = pi/2 stays finite until the
  // final tan().
  const double psi_m = std::atan2(axis_ratio_sq(mid) * std::sin(phi_m_star),
                                  std::cos(phi_m_star));
  const double psi_f = std::atan2(axis_ratio_sq(fore) * std::sin(phi_f_star),
                                  std::cos(phi_f_star)) -
                       fore_rotation;
  return {std::tan(psi_m), std::tan(psi_f)};
}

double ConstraintReport::max_violation() const {
  double v = 0.0;
  for (const auto& [name, r] : equalities) v = std::max(v, std::abs(r));
  for (const auto& [name, r] : inequalities) v = std::max(v, r);
  return v;
}

std::string ConstraintReport::worst() const {
  std::string name = "none";
  double v = 0.0;
  for (const auto& [n, r] : equalities) {
    if (std::abs(r) > v) { v = std::abs(r); name = n; }
  }
  for (const auto& [n, r] : inequalities) {
    if (r > v) { v = r; name = n; }
  }
  return name + "=" + fmt_num(v);
}

ConstraintReport check_constraints(const DesignSpec& spec,
                                   const SegmentGeometry& seg,
                                   const DesignSolution& s) {
  ConstraintReport rep;
  const auto corner = seg.corner(s.w_foot);
  const double q = s.r_fa > 0.0 ? s.r_fb / s.r_fa : 0.0;
  const double denom = s.r_fa * s.r_fa * std::cos(s.phi_f_star) *
                           std::cos(s.phi_f_star) +
                       s.r_fb * s.r_fb * std::sin(s.phi_f_star) *
                           std::sin(s.phi_f_star);
  const double radius =
      denom > 0.0 ? std::sqrt(s.r_fa * s.r_fa * s.r_fb * s.r_fb / denom) : 0.0;
  rep.equalities = {
      {"chord_half", corner.b_s / 2 - std::cos(s.phi_f_star) * s.d_f_star},
      {"segment_rotation",
       s.theta_f_star - seg.theta_m_star - (kPi / 2 - corner.alpha8)},
      {"rollover_cot", std::sin(s.theta_f_star) * std::cos(s.phi_f_star) -
                           q * q * std::cos(s.theta_f_star) *
                               std::sin(s.phi_f_star)},
      {"fore_radius", s.d_f_star - radius},
  };
  double eta_m = 0.0;
  double eta_f = 0.0;
  const double e_m = spec.mid.e;
  const double e_f = std::sqrt(std::max(0.0, 1.0 - q * q));
  if (s.r_fa >= s.r_fb && s.r_fb > 0.0) {
    std::tie(eta_m, eta_f) =
        slope_at_segment(spec.mid, seg.phi_m_star, make_arc(s.r_fa, s.r_fb),
                         s.phi_f_star, kPi / 2 - corner.alpha8);
  }
  rep.inequalities = {
      {"half_width", seg.d0 * std::sin(seg.alpha6) - s.w_foot / 2},
      {"slope_order", eta_m * eta_m - eta_f * eta_f},
      {"eccentricity_order", e_f - e_m},
      {"axis_order", s.r_fb - s.r_fa},
      {"r_fa_positive", -s.r_fa},
      {"r_fb_positive", -s.r_fb},
      {"phi_f_lower", -s.phi_f_star},
      {"phi_f_upper", s.phi_f_star - kPi / 2},
      {"d_f_lower", -s.d_f_star},
      {"d_f_upper", s.d_f_star - spec.d_f_max},
      {"w_foot_lower", -s.w_foot},
      {"w_foot_upper", s.w_foot - spec.w_foot_max},
  };
  return rep;
}

double design_objective(const DesignSpec& spec, const SegmentGeometry&,
                        const DesignSolution& s) {
  const auto& w = spec.weights;
  const double dw = s.w_foot - spec.w_foot_nominal;
  return w.w1 * s.slope_mismatch * s.slope_mismatch +
         w.w2 * s.r_fa * s.r_fa + w.w3 * s.r_fb * s.r_fb + w.w4 * dw * dw;
}

DesignSolution fore_from_width_ratio(const SegmentGeometry& seg, double w,
                                     double q) {
  require(q > 0.0 && q <= 1.0, "fore axis ratio must lie in (0, 1]");
  DesignSolution s;
  const auto corner = seg.corner(w);
  s.w_foot = w;
  s.theta_f_star = seg.theta_m_star + kPi / 2 - corner.alpha8;
  s.phi_f_star =
      std::atan2(std::sin(s.theta_f_star), q * q * std::cos(s.theta_f_star));
  s.d_f_star = corner.b_s / (2.0 * std::cos(s.phi_f_star));
  const double c = std::cos(s.phi_f_star);
  const double sn = std::sin(s.phi_f_star);
  s.r_fa = s.d_f_star * std::sqrt(c * c + q * q * sn * sn) / q;
  s.r_fb = q * s.r_fa;
  return s;
}

namespace {

// Fills the derived slope mismatch and objective of a candidate.
void finish(const DesignSpec& spec, const SegmentGeometry& seg,
            DesignSolution& s) {
  s.slope_mismatch = 0.0;
  if (s.r_fa >= s.r_fb && s.r_fb > 0.0) {
    const auto corner = seg.corner(s.w_foot);
    const auto [eta_m, eta_f] =
        slope_at_segment(spec.mid, seg.phi_m_star, make_arc(s.r_fa, s.r_fb),
                         s.phi_f_star, kPi / 2 - corner.alpha8);
    s.slope_mismatch = std::abs(eta_m - eta_f);
  }
  s.objective = design_objective(spec, seg, s);
}

// Projected gradient of the objective on the (w, q) chart of the feasible
// manifold, in scaled units; zero at a bound-constrained stationary point.
double manifold_stationarity(const DesignSpec& spec, const SegmentGeometry& seg,
                             double w, double q, double q_min) {
  const double scale = spec.mid.r_a;
  auto f = [&](double ww, double qq) {
    DesignSolution s = fore_from_width_ratio(seg, ww, qq);
    finish(spec, seg, s);
    return s.objective / (scale * scale);
  };
  const double hw = 1e-6 * scale;
  const double hq = 1e-6;
  const double w_lo = seg.min_width();
  double gw = 0.0;
  if (w - hw > w_lo && w + hw < spec.w_foot_max) {
    gw = (f(w + hw, q) - f(w - hw, q)) / (2.0 * hw / scale);
  } else if (w + hw < spec.w_foot_max) {
    gw = std::min(0.0, (f(w + hw, q) - f(w, q)) / (hw / scale));
  } else {
    gw = std::max(0.0, (f(w, q) - f(w - hw, q)) / (hw / scale));
  }
  double gq = 0.0;
  if (q - hq >= q_min && q + hq <= 1.0) {
    gq = (f(w, q + hq) - f(w, q - hq)) / (2.0 * hq);
  } else if (q + hq <= 1.0) {
    gq = std::min(0.0, (f(w, q + hq) - f(w, q)) / hq);
  } else if (q - hq >= q_min) {
    gq = std::max(0.0, (f(w, q) - f(w, q - hq)) / hq);
  }
  return std::max(std::abs(gw), std::abs(gq));
}

bool lex_less(const DesignSolution& a, const DesignSolution& b) {
  return a.r_fa < b.r_fa || (a.r_fa == b.r_fa && a.r_fb < b.r_fb);
}

}  // namespace

DesignSolution solve_fore_ellipse(const DesignSpec& spec) {
  validate(spec);
  const SegmentGeometry seg =
      segment_geometry(spec.mid, CompensationParams{}, spec.h_foot,
                       spec.theta_m_star);
  const double scale = spec.mid.r_a;
  const double q_min = spec.mid.r_b / spec.mid.r_a;

  // Variables: r_fa/scale, r_fb/scale, theta_f_star, w_foot/scale. The cot
  // and radius relations are substituted in closed form.
  auto unpack = [&](const VecX& x) {
    DesignSolution s;
    s.r_fa = x[0] * scale;
    s.r_fb = x[1] * scale;
    s.theta_f_star = x[2];
    s.w_foot = x[3] * scale;
    const double ra = std::max(std::abs(s.r_fa), 1e-12 * scale);
    const double rb = std::max(std::abs(s.r_fb), 1e-12 * scale);
    const double q = rb / ra;
    s.phi_f_star = std::atan2(std::sin(s.theta_f_star),
                              q * q * std::cos(s.theta_f_star));
    const double c = std::cos(s.phi_f_star);
    const double sn = std::sin(s.phi_f_star);
    s.d_f_star = std::sqrt(ra * ra * rb * rb / (ra * ra * c * c + rb * rb * sn * sn));
    return s;
  };
  auto slope_terms = [&](const DesignSolution& s) {
    const double ra = std::max(std::abs(s.r_fa), 1e-12 * scale);
    const double rb = std::max(std::abs(s.r_fb), 1e-12 * scale);
    const double qf2 = (rb / ra) * (rb / ra);
    const double rot = kPi / 2 - seg.corner(s.w_foot).alpha8;
    const double psi_m =
        std::atan2(axis_ratio_sq(spec.mid) * std::sin(seg.phi_m_star),
                   std::cos(seg.phi_m_star));
    const double psi_f = std::atan2(qf2 * std::sin(s.phi_f_star),
                                    std::cos(s.phi_f_star)) - rot;
    return std::pair{std::tan(psi_m), std::tan(psi_f)};
  };

  NlpProblem prob;
  prob.n = 4;
  prob.objective = [&](const VecX& x) {
    const DesignSolution s = unpack(x);
    const auto [em, ef] = slope_terms(s);
    const auto& w = spec.weights;
    const double dw = (s.w_foot - spec.w_foot_nominal) / scale;
    return w.w1 * (em - ef) * (em - ef) / (scale * scale) +
           w.w2 * x[0] * x[0] + w.w3 * x[1] * x[1] + w.w4 * dw * dw;
  };
  prob.equalities = [&](const VecX& x) {
    const DesignSolution s = unpack(x);
    const auto corner = seg.corner(s.w_foot);
    VecX c(2);
    c[0] = (corner.b_s / 2 - std::cos(s.phi_f_star) * s.d_f_star) / scale;
    c[1] = s.theta_f_star - seg.theta_m_star - (kPi / 2 - corner.alpha8);
    return c;
  };
  prob.inequalities = [&](const VecX& x) {
    const DesignSolution s = unpack(x);
    const auto [em, ef] = slope_terms(s);
    VecX g(10);
    g[0] = (seg.d0 * std::sin(seg.alpha6) - s.w_foot / 2) / scale;
    g[1] = em * em - ef * ef;
    g[2] = q_min * x[0] - x[1];  // eccentricity order
    g[3] = x[1] - x[0];
    g[4] = -x[1];
    g[5] = -x[2];
    g[6] = s.phi_f_star - kPi / 2;
    g[7] = (s.d_f_star - spec.d_f_max) / scale;
    g[8] = -x[3];
    g[9] = x[3] - spec.w_foot_max / scale;
    return g;
  };

  const double w_lo_feasible = seg.min_width();
  const double w_lo = std::max(w_lo_feasible, 0.0) +
                      0.05 * std::max(spec.w_foot_max - w_lo_feasible, 0.0);
  const double w_hi = 0.95 * spec.w_foot_max;
  std::array<double, 5> phis{}, ratios{}, widths{};
  for (int i = 0; i < 5; ++i) {
    phis[i] = 0.15 + 0.3 * i;
    ratios[i] = q_min + (1.0 - q_min) * i / 4.0;
    widths[i] = w_lo + (std::max(w_hi, w_lo) - w_lo) * i / 4.0;
  }

  bool have_best = false;
  DesignSolution best;
  double best_violation = std::numeric_limits<double>::infinity();
  std::string best_violation_name;
  int hit_iteration_cap = 0;
  int starts = 0;
  int feasible = 0;
  for (double phi : phis) {
    for (double q : ratios) {
      for (double w : widths) {
        ++starts;
        const double theta = std::atan2(q * q * std::sin(phi), std::cos(phi));
        const double d = seg.corner(w).b_s / (2.0 * std::cos(phi));
        const double ra = d *
                          std::sqrt(std::cos(phi) * std::cos(phi) +
                                    q * q * std::sin(phi) * std::sin(phi)) /
                          q;
        VecX x0(4);
        x0 << ra / scale, q * ra / scale, theta, w / scale;
        const AlResult r = solve_augmented_lagrangian(prob, x0);
        if (r.status == AlStatus::IterationCap) ++hit_iteration_cap;

        // Restore exact feasibility on the closed-form manifold.
        const DesignSolution raw = unpack(r.x);
        const double wp =
            std::clamp(raw.w_foot, w_lo_feasible, spec.w_foot_max);
        const double qp = std::clamp(
            std::abs(raw.r_fb) / std::max(std::abs(raw.r_fa), 1e-300), q_min,
            1.0);
        if (!(std::isfinite(wp) && std::isfinite(qp) && qp > 0.0)) continue;
        DesignSolution s = fore_from_width_ratio(seg, wp, qp);
        finish(spec, seg, s);
        s.kkt_residual = manifold_stationarity(spec, seg, wp, qp, q_min);
        const ConstraintReport rep = check_constraints(spec, seg, s);
        const double viol = rep.max_violation();
        bool ok = std::isfinite(s.objective);
        for (const auto& [n, v] : rep.equalities) ok = ok && std::abs(v) <= 1e-9;
        for (const auto& [n, v] : rep.inequalities) ok = ok && v <= kIneqTol;
        if (!ok) {
          if (viol < best_violation) {
            best_violation = viol;
            best_violation_name = rep.worst();
          }
          continue;
        }
        ++feasible;
        const double tie = 1e-14 * std::max(1.0, std::abs(s.objective));
        if (!have_best || s.objective < best.objective - tie ||
            (std::abs(s.objective - best.objective) <= tie &&
             lex_less(s, best))) {
          best = s;
          have_best = true;
        }
      }
    }
  }
  if (!have_best) {
    if (hit_iteration_cap == starts) {
      fail(ErrorCode::NonConvergence,
           "fore ellipse design: no start converged within the iteration cap");
    }
    fail(ErrorCode::Infeasible,
         "fore ellipse design infeasible: max violation " + best_violation_name);
  }
  best.starts = starts;
  best.feasible_starts = feasible;
  return best;
}

FootGeometry assemble_foot(const DesignSpec& spec, const DesignSolution& sol,
                           double l_foot) {
  validate(spec);
  require(l_foot > 0.0, "assemble: l_foot must be positive");
  auto invariant = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::Infeasible, "foot invariant violated: " + what);
  };

  FootGeometry f;
  f.kind = FootKind::Esvc;
  f.mid = spec.mid;
  f.comp_mid = calibrate_compensation(f.mid, spec.calib_grid, spec.K_e);
  const SegmentGeometry seg =
      segment_geometry(f.mid, f.comp_mid, spec.h_foot, spec.theta_m_star);

  invariant(sol.r_fa >= sol.r_fb && sol.r_fb > 0.0, "fore axes ordered");
  f.fore = make_arc(sol.r_fa, sol.r_fb);
  f.hind = f.fore;
  invariant(f.mid.e >= f.fore.e - 1e-12, "e_mid >= e_fore");
  f.comp_fore = calibrate_compensation(f.fore, spec.calib_grid, spec.K_e);

  const ConstraintReport rep = check_constraints(spec, seg, sol);
  for (const auto& [name, v] : rep.equalities) {
    invariant(std::abs(v) <= 1e-6, name);
  }

  f.h_foot = spec.h_foot;
  f.w_foot = sol.w_foot;
  f.l_foot = l_foot;
  f.theta_m_star = spec.theta_m_star;
  f.phi_m_star = seg.phi_m_star;
  f.phi_f_star = sol.phi_f_star;
  f.d_f_star = sol.d_f_star;
  f.theta_f_star = sol.theta_f_star;
  f.d0 = seg.d0;
  f.alpha6 = seg.alpha6;
  f.alpha7 = seg.alpha7;
  const auto corner = seg.corner(sol.w_foot);
  f.alpha8 = corner.alpha8;
  f.b_s = corner.b_s;
  f.fore_rotation = kPi / 2 - corner.alpha8;
  f.theta_corner = kPi - f.theta_f_star - f.fore_rotation;
  invariant(f.theta_f_star < kPi / 2, "theta_f_star < pi/2");

  // Roll angle at which the fore rollover angle reaches pi/2.
  auto excess = [&](double t) {
    return rollover_from_roll(f.fore, t + f.fore_rotation).phi - kPi / 2;
  };
  if (f.fore_rotation <= 0.0 || excess(kPi / 2 - 1e-15) <= 0.0) {
    f.alpha10 = kPi / 2;
  } else {
    double lo = f.theta_m_star;
    double hi = kPi / 2;
    while (hi - lo > 1e-12) {
      const double m = 0.5 * (lo + hi);
      (excess(m) < 0.0 ? lo : hi) = m;
    }
    f.alpha10 = 0.5 * (lo + hi);
  }

  f.l_m_star = seg.l_m_star;
  f.l_f_star = fore_arc_length(f, f.theta_f_star);
  f.l_f_quarter = fore_arc_length(f, kPi / 2) - f.l_f_star;

  f.s2_uz = seg.s2_uz;
  f.s3_uz = Vec2(sol.w_foot / 2, spec.h_foot);
  const Vec2 chord_dir = (f.s3_uz - f.s2_uz) / f.b_s;
  f.fore_minor_uz = -chord_dir;
  f.fore_major_uz = Vec2(chord_dir.y(), -chord_dir.x());
  f.fore_center_uz = 0.5 * (f.s2_uz + f.s3_uz) -
                     sol.d_f_star * std::sin(sol.phi_f_star) * f.fore_major_uz;

  const double tol_len = 1e-9 * std::max(1.0, f.h_foot);
  invariant((contact_point_uz(f, f.theta_m_star) - f.s2_uz).norm() <= tol_len,
            "fore arc passes through S2");
  const double lam_corner =
      kPi - rollover_from_roll(f.fore, f.theta_f_star).lambda;
  const Vec2 corner_pt = f.fore_center_uz +
                         f.fore.r_a * std::sin(lam_corner) * f.fore_major_uz +
                         f.fore.r_b * std::cos(lam_corner) * f.fore_minor_uz;
  invariant((corner_pt - f.s3_uz).norm() <= tol_len, "fore arc passes through S3");

  const ContactSolution a = mid_contact(f, f.theta_m_star);
  const ContactSolution b = fore_contact(f, f.theta_m_star);
  const double jump = (a.T_Oi_C.matrix() - b.T_Oi_C.matrix()).cwiseAbs().maxCoeff();
  invariant(jump <= 1e-8, "mid/fore continuity at S2 (jump " + fmt_num(jump) + ")");
  invariant(std::abs(a.rollover_length - b.rollover_length) <= 1e-8,
            "rollover length continuity at S2");
  invariant(is_convex(export_profile(f, 256)), "convex profile");
  return f;
}

std::vector<ProfilePoint> export_profile(const FootGeometry& f, int n) {
  require(n >= 16, "export_profile: n must be >= 16");
  std::vector<ProfilePoint> out;
  if (f.kind == FootKind::Line) {
    out.push_back({0.0, -f.h_foot, Segment::Mid});
    return out;
  }
  auto fore_uz = [&](double lam) {
    return Vec2(f.fore_center_uz + f.fore.r_a * std::sin(lam) * f.fore_major_uz +
                f.fore.r_b * std::cos(lam) * f.fore_minor_uz);
  };
  // side +1 puts the point on the fore (-y) side.
  auto push = [&](const Vec2& uz, double side, Segment s) {
    out.push_back({-side * uz.x(), uz.y() - f.h_foot, s});
  };
  const double lam_f = rollover_from_roll(f.fore, f.theta_f_star).lambda;
  const double lam_m = rollover_from_roll(f.mid, f.theta_m_star).lambda;
  out.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double lam = (kPi - lam_f) + (2.0 * lam_f - kPi) * i / (n - 1);
    push(fore_uz(lam), -1.0, Segment::Hind);
  }
  for (int i = 0; i < n; ++i) {
    const double lam = -lam_m + 2.0 * lam_m * i / (n - 1);
    push(Vec2(f.mid.r_a * std::sin(lam), f.mid.r_b * (1.0 - std::cos(lam))),
         1.0, Segment::Mid);
  }
  for (int i = 0; i < n; ++i) {
    const double lam = lam_f + (kPi - 2.0 * lam_f) * i / (n - 1);
    push(fore_uz(lam), 1.0, Segment::Fore);
  }
  return out;
}

bool is_convex(const std::vector<ProfilePoint>& pts) {
  double lo = 0.0;
  double hi = 0.0;
  Vec2 prev = Vec2::Zero();
  bool have_prev = false;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Vec2 e(pts[i].y - pts[i - 1].y, pts[i].z - pts[i - 1].z);
    const double len = e.norm();
    if (len <= 1e-15) continue;  // repeated boundary point
    const Vec2 u = e / len;
    if (have_prev) {
      const double cross = prev.x() * u.y() - prev.y() * u.x();
      lo = std::min(lo, cross);
      hi = std::max(hi, cross);
    }
    prev = u;
    have_prev = true;
  }
  return lo >= -1e-9 || hi <= 1e-9;
}

}  // namespace esvc
