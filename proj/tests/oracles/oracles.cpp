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
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace oracle {
namespace {

constexpr double kPi = std::numbers::pi;

double angle_between(const Vec2& a, const Vec2& b) {
  return std::atan2(std::abs(a.x() * b.y() - a.y() * b.x()), a.dot(b));
}

Polyline finish(std::vector<Vec2> pts, std::size_t bottom) {
  Polyline p;
  p.pts = std::move(pts);
  p.s.resize(p.pts.size());
  p.s[0] = 0.0;
  for (std::size_t i = 1; i < p.pts.size(); ++i) {
    p.s[i] = p.s[i - 1] + (p.pts[i] - p.pts[i - 1]).norm();
  }
  p.bottom = bottom;
  return p;
}

}  // namespace

double composite_arc_length(double r_a, double r_b, double lambda, int panels) {
  static const double x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                              0.5384693101056831, 0.9061798459386640};
  static const double w[5] = {0.2369268850561891, 0.4786286704993665,
                              0.5688888888888889, 0.4786286704993665,
                              0.2369268850561891};
  const double e2 = 1.0 - (r_b / r_a) * (r_b / r_a);
  const double h = lambda / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double c = (p + 0.5) * h;
    double part = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double s = std::sin(c + 0.5 * h * x[i]);
      part += w[i] * std::sqrt(1.0 - e2 * s * s);
    }
    sum += 0.5 * h * part;
  }
  return r_a * sum;
}

SegmentByVectors segment_by_vectors(double a, double b, double h,
                                    double theta_m, double w) {
  SegmentByVectors g;
  // Outward normal at parameter lam is (sin/a, -cos/b); its angle from the
  // downward vertical is the roll angle.
  const double lam = std::atan(a / b * std::tan(theta_m));
  g.s2 = Vec2(a * std::sin(lam), b - b * std::cos(lam));
  g.s3 = Vec2(w / 2, h);
  const Vec2 oi(0.0, h);
  g.b_m = g.s2.norm();
  g.d0 = (g.s2 - oi).norm();
  g.alpha6 = angle_between(Vec2(0.0, -1.0), g.s2 - oi);
  g.alpha7 = kPi / 2 - g.alpha6;
  g.b_s = (g.s3 - g.s2).norm();
  g.alpha8 = angle_between(oi - g.s3, g.s2 - g.s3);
  return g;
}

ForeByVectors fore_by_vectors(const esvc::DesignSpec& spec, double w,
                              double q) {
  ForeByVectors f;
  const auto g = segment_by_vectors(spec.mid.r_a, spec.mid.r_b, spec.h_foot,
                                    spec.theta_m_star, w);
  f.theta_f = spec.theta_m_star + kPi / 2 - g.alpha8;
  if (!(f.theta_f > 0.0 && f.theta_f < kPi / 2)) return f;
  f.phi_f = std::atan(std::tan(f.theta_f) / (q * q));
  f.d_f = g.b_s / (2.0 * std::cos(f.phi_f));
  const double c = std::cos(f.phi_f), s = std::sin(f.phi_f);
  f.r_fa = f.d_f * std::sqrt(c * c + q * q * s * s) / q;
  f.r_fb = q * f.r_fa;

  // Place the fore ellipse explicitly and measure both tangents at S2.
  const Vec2 chord = (g.s3 - g.s2) / g.b_s;
  const Vec2 minor = -chord;
  const Vec2 major(chord.y(), -chord.x());
  const double half = g.b_s / 2;
  if (half > f.r_fb) return f;
  const double t = f.r_fa * std::sqrt(1.0 - (half / f.r_fb) * (half / f.r_fb));
  const double mu = std::atan2(t / f.r_fa, half / f.r_fb);
  const Vec2 tan_fore = -f.r_fb * std::sin(mu) * minor + f.r_fa * std::cos(mu) * major;
  const double lam = std::atan(spec.mid.r_a / spec.mid.r_b * std::tan(spec.theta_m_star));
  const Vec2 tan_mid(spec.mid.r_a * std::cos(lam), spec.mid.r_b * std::sin(lam));
  f.slope_mid = tan_mid.y() / tan_mid.x();
  f.slope_fore = tan_fore.y() / tan_fore.x();
  f.ok = true;
  return f;
}

Polyline sole_polyline(const esvc::FootGeometry& foot, int n) {
  const double a = foot.mid.r_a, b = foot.mid.r_b, h = foot.h_foot;
  const auto g = segment_by_vectors(a, b, h, foot.theta_m_star, foot.w_foot);
  const double rfa = foot.fore.r_a, rfb = foot.fore.r_b;
  const Vec2 chord = (g.s3 - g.s2) / g.b_s;
  const Vec2 minor = -chord;
  const Vec2 major(chord.y(), -chord.x());
  const double half = g.b_s / 2;
  const double t = rfa * std::sqrt(std::max(0.0, 1.0 - (half / rfb) * (half / rfb)));
  const Vec2 centre = 0.5 * (g.s2 + g.s3) - t * major;
  const double mu0 = std::atan2(t / rfa, half / rfb);
  const double lam_m = std::atan(a / b * std::tan(foot.theta_m_star));

  auto fore = [&](double mu) {
    return Vec2(centre + rfb * std::cos(mu) * minor + rfa * std::sin(mu) * major);
  };
  // (u, z) with u towards the fore side -> foot frame (y, z) = (-u, z - h).
  auto body = [&](const Vec2& uz, double side) {
    return Vec2(-side * uz.x(), uz.y() - h);
  };
  std::vector<Vec2> pts;
  pts.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double mu = (kPi - mu0) - (kPi - 2 * mu0) * i / (n - 1.0);
    pts.push_back(body(fore(mu), -1.0));
  }
  const int n_mid = 2 * (n / 2) + 1;  // odd, so lam = 0 is a vertex
  std::size_t bottom = 0;
  for (int i = 1; i < n_mid; ++i) {
    const double lam = -lam_m + 2 * lam_m * i / (n_mid - 1.0);
    if (2 * i == n_mid - 1) bottom = pts.size();
    pts.push_back(body(Vec2(a * std::sin(lam), b - b * std::cos(lam)), 1.0));
  }
  for (int i = 1; i < n; ++i) {
    const double mu = mu0 + (kPi - 2 * mu0) * i / (n - 1.0);
    pts.push_back(body(fore(mu), 1.0));
  }
  return finish(std::move(pts), bottom);
}

Polyline circle_polyline(double r, double h, int n) {
  std::vector<Vec2> pts;
  const int m = 2 * (n / 2) + 1;
  for (int i = 0; i < m; ++i) {
    const double ang = -kPi / 2 + kPi * i / (m - 1.0);
    // Hind (+y) first.
    pts.emplace_back(-r * std::sin(ang), r - r * std::cos(ang) - h);
  }
  return finish(std::move(pts), static_cast<std::size_t>(m / 2));
}

RollPose roll(const Polyline& p, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  double best = std::numeric_limits<double>::infinity();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.pts.size(); ++i) {
    const double z = s * p.pts[i].x() + c * p.pts[i].y();
    if (z < best) {
      best = z;
      idx = i;
    }
  }
  const Vec2& q = p.pts[idx];
  RollPose r;
  r.oi_in_c = -Vec2(c * q.x() - s * q.y(), s * q.x() + c * q.y());
  r.arc = p.s[idx] - p.s[p.bottom];
  r.index = idx;
  return r;
}

CheckResult check_design(const esvc::DesignSpec& spec,
                         const esvc::DesignSolution& x) {
  CheckResult r;
  const auto g = segment_by_vectors(spec.mid.r_a, spec.mid.r_b, spec.h_foot,
                                    spec.theta_m_star, x.w_foot);
  const double q = x.r_fb / x.r_fa;
  auto eq = [&](double v) { r.max_equality = std::max(r.max_equality, std::abs(v)); };
  auto ineq = [&](double v) { r.max_inequality = std::max(r.max_inequality, v); };
  eq(g.b_s / 2 - std::sin(kPi / 2 - x.phi_f_star) * x.d_f_star);
  eq(x.theta_f_star - spec.theta_m_star - (kPi / 2 - g.alpha8));
  eq(1.0 / std::tan(x.phi_f_star) - q * q / std::tan(x.theta_f_star));
  const double c = std::cos(x.phi_f_star), s = std::sin(x.phi_f_star);
  eq(x.d_f_star - x.r_fa * x.r_fb /
                      std::sqrt(x.r_fa * x.r_fa * c * c + x.r_fb * x.r_fb * s * s));
  ineq(g.d0 * std::sin(g.alpha6) - x.w_foot / 2);
  const auto f = fore_by_vectors(spec, x.w_foot, q);
  ineq(f.slope_mid * f.slope_mid - f.slope_fore * f.slope_fore);
  ineq(std::sqrt(1 - q * q) - spec.mid.e);
  ineq(x.r_fb - x.r_fa);
  for (double v : {x.r_fa, x.r_fb, x.phi_f_star, x.d_f_star, x.w_foot}) ineq(-v);
  ineq(x.phi_f_star - kPi / 2);
  ineq(x.d_f_star - spec.d_f_max);
  ineq(x.w_foot - spec.w_foot_max);
  return r;
}

double objective(const esvc::DesignSpec& spec, double r_fa, double r_fb,
                 double w, double mismatch) {
  const auto& k = spec.weights;
  const double dw = w - spec.w_foot_nominal;
  return k.w1 * mismatch * mismatch + k.w2 * r_fa * r_fa + k.w3 * r_fb * r_fb +
         k.w4 * dw * dw;
}

GridBest grid_search(const esvc::DesignSpec& spec, int n_w, int n_q) {
  GridBest best;
  best.objective = std::numeric_limits<double>::infinity();
  const auto g0 = segment_by_vectors(spec.mid.r_a, spec.mid.r_b, spec.h_foot,
                                     spec.theta_m_star, 0.1);
  const double w_lo = 2.0 * g0.d0 * std::sin(g0.alpha6);
  const double q_lo = spec.mid.r_b / spec.mid.r_a;
  for (int i = 0; i < n_w; ++i) {
    const double w = w_lo + (spec.w_foot_max - w_lo) * i / (n_w - 1.0);
    for (int j = 0; j < n_q; ++j) {
      const double q = q_lo + (1.0 - q_lo) * j / (n_q - 1.0);
      const auto f = fore_by_vectors(spec, w, q);
      if (!f.ok || f.d_f >= spec.d_f_max) continue;
      ++best.evaluated;
      const double obj = objective(spec, f.r_fa, f.r_fb, w,
                                   std::abs(f.slope_mid - f.slope_fore));
      if (obj < best.objective) {
        best.objective = obj;
        best.w = w;
        best.q = q;
      }
    }
  }
  return best;
}

std::pair<double, double> lip_rk4(double p, double v, double lam, double T,
                                  double dt) {
  const long n = std::lround(T / dt);
  const double h = T / n;
  const double l2 = lam * lam;
  for (long i = 0; i < n; ++i) {
    const double k1p = v, k1v = l2 * p;
    const double k2p = v + 0.5 * h * k1v, k2v = l2 * (p + 0.5 * h * k1p);
    const double k3p = v + 0.5 * h * k2v, k3v = l2 * (p + 0.5 * h * k2p);
    const double k4p = v + h * k3v, k4v = l2 * (p + h * k3p);
    p += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
  }
  return {p, v};
}

esvc::DesignSpec reference_spec() {
  esvc::DesignSpec s;
  s.mid = esvc::make_arc(0.04575, 0.03750);
  s.h_foot = 0.06;
  s.theta_m_star = 0.15;
  s.w_foot_nominal = 0.12;
  return s;
}

namespace {
double asin_clamped(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }
double triangle_angle(double opp, double x, double y) {
  return std::acos(std::clamp((x * x + y * y - opp * opp) / (2 * x * y), -1.0, 1.0));
}
}  // namespace

esvc::HomTransform angle_chain_pose(const esvc::FootGeometry& f, double theta) {
  using esvc::HomTransform;
  using esvc::Vec3;
  constexpr double pi = std::numbers::pi;
  const double t = std::abs(theta), s = theta > 0 ? 1.0 : -1.0;
  if (t < f.theta_m_star) {
    const esvc::RollAngles ang = esvc::rollover_from_roll(f.mid, t);
    const double chord = esvc::chord_length(f.mid, ang.phi);
    const double a1 = asin_clamped(f.mid.r_b * std::sin(ang.phi) / chord);
    const double a4 = pi - (pi - ang.phi_c - t) - a1;
    return HomTransform::translation(
               Vec3(0, s * chord * std::cos(a4), chord * std::sin(a4))) *
           HomTransform::rot_x(theta) *
           HomTransform::translation(Vec3(0, 0, f.h_foot));
  }
  const double thf = std::min(t + f.fore_rotation, pi - f.theta_f_star);
  const esvc::RollAngles ang = esvc::rollover_from_roll(f.fore, thf);
  const double df = esvc::radius_at(f.fore, ang.phi);
  const double bf = std::sqrt(std::max(
      0.0, f.d_f_star * f.d_f_star + df * df -
               2 * f.d_f_star * df * std::cos(ang.phi - f.phi_f_star)));
  double l = f.d0, a15 = 0.0;
  if (bf > 1e-14 * f.fore.r_a) {
    const double a11 = triangle_angle(df, f.d_f_star, bf);
    const double a14 = (pi - f.alpha8 - f.alpha7) - f.phi_f_star + a11;
    l = std::sqrt(bf * bf + f.d0 * f.d0 - 2 * bf * f.d0 * std::cos(a14));
    a15 = asin_clamped(bf * std::sin(a14) / l);
  }
  const double a18 = pi / 2 - f.alpha6 + t - a15;
  return HomTransform::translation(Vec3(0, s * l * std::cos(a18), l * std::sin(a18))) *
         HomTransform::rot_x(theta);
}

}  // namespace oracle
