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
#include "esvc/ellipse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "esvc/error.hpp"

namespace esvc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod(const F& f, double a, double b, double& kronrod,
                   double& gauss) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  kronrod = kKronrodWeights[7] * fc;
  gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double sum = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  kronrod *= h;
  gauss *= h;
}

template <class F>
double adaptive(const F& f, double a, double b, double tol, int depth) {
  double k = 0.0, g = 0.0;
  gauss_kronrod(f, a, b, k, g);
  if (std::abs(k - g) <= tol || depth >= 40) return k;
  const double m = 0.5 * (a + b);
  return adaptive(f, a, m, 0.5 * tol, depth + 1) +
         adaptive(f, m, b, 0.5 * tol, depth + 1);
}

double sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

EllipseArc make_arc(double r_a, double r_b) {
  if (!(r_b > 0.0) || !(r_a >= r_b) || !std::isfinite(r_a)) {
    fail(ErrorCode::InvalidArgument,
         "ellipse arc requires r_a >= r_b > 0 (got r_a=" + std::to_string(r_a) +
             ", r_b=" + std::to_string(r_b) + ")");
  }
  EllipseArc arc;
  arc.r_a = r_a;
  arc.r_b = r_b;
  const double ratio = r_b / r_a;
  arc.e = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  arc.k = std::asin(arc.e);
  arc.E_param = (kPi * r_b + 4.0 * (r_a - r_b)) / (4.0 * r_a) *
                (1.0 + std::pow(ratio, 1.5));
  arc.lambda_star = (36.0 * arc.k + 13.0 * kPi) / 52.0;
  return arc;
}

RollAngles rollover_from_roll(const EllipseArc& arc, double theta) {
  require(theta >= 0.0 && theta < kPi, "roll angle must lie in [0, pi)");
  RollAngles out;
  out.theta = theta;
  // tan(phi) = (r_a/r_b)^2 tan(theta), resolved by quadrant so that theta = 0
  // and theta = pi/2 are regular points.
  const double q2 = (arc.r_b * arc.r_b) / (arc.r_a * arc.r_a);
  out.phi = std::atan2(std::sin(theta), q2 * std::cos(theta));
  out.phi_c = kHalfPi - out.phi;
  const double d = radius_at(arc, out.phi);
  out.lambda = std::atan2(d * std::sin(out.phi) / arc.r_a,
                          d * std::cos(out.phi) / arc.r_b);
  return out;
}

double roll_from_rollover(const EllipseArc& arc, double phi) {
  const double q2 = (arc.r_b * arc.r_b) / (arc.r_a * arc.r_a);
  return std::atan2(q2 * std::sin(phi), std::cos(phi));
}

double radius_at(const EllipseArc& arc, double phi) {
  const double a2 = arc.r_a * arc.r_a, b2 = arc.r_b * arc.r_b;
  const double c = std::cos(phi), s = std::sin(phi);
  return std::sqrt(a2 * b2 / (a2 * c * c + b2 * s * s));
}

double chord_length(const EllipseArc& arc, double phi) {
  const double d = radius_at(arc, phi);
  const double sq =
      d * d + arc.r_b * arc.r_b - 2.0 * d * arc.r_b * std::cos(phi);
  return std::sqrt(std::max(0.0, sq));
}

double arc_length_exact(const EllipseArc& arc, double lambda) {
  require(lambda >= 0.0 && lambda <= kPi, "parameter angle must lie in [0, pi]");
  if (lambda == 0.0) return 0.0;
  const double e2 = arc.e * arc.e;
  auto integrand = [e2](double u) {
    const double s = std::sin(u);
    return std::sqrt(1.0 - e2 * s * s);
  };
  return arc.r_a * adaptive(integrand, 0.0, lambda, 1e-12, 0);
}

double arc_length_approx(const EllipseArc& arc, double lambda) {
  if (arc.is_circle()) return arc.r_a * lambda;
  const double two_k_pi = 2.0 * arc.k / kPi;
  double inner = lambda - (lambda - std::sin(lambda)) * two_k_pi;
  if (lambda >= arc.lambda_star) {
    inner -= (kPi - (kPi - 2.0) * two_k_pi - 2.0 * arc.E_param) *
             (lambda - arc.lambda_star) / (kPi - 2.0 * arc.lambda_star);
  }
  return arc.r_a * inner;
}

const char* to_string(CompensationMode mode) {
  switch (mode) {
    case CompensationMode::None: return "none";
    case CompensationMode::AsPrinted: return "as_printed";
    case CompensationMode::HalfSine: return "half_sine";
    case CompensationMode::Ramp: return "ramp";
  }
  return "unknown";
}

std::vector<double> roll_grid(int n) {
  std::vector<double> grid(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) grid[i] = (i + 1) * kHalfPi / (n + 1);
  return grid;
}

double compensation_term(const EllipseArc& arc, const CompensationParams& comp,
                         CompensationMode mode, const RollAngles& angles) {
  const double delta = comp.K_e * comp.delta_max;
  // Below the switching angle the sine is placed on lambda and lambda_star;
  // otherwise on the roll angle and the roll angle of the error peak.
  const bool on_lambda = arc.lambda_star < kHalfPi;
  const double x = on_lambda ? angles.lambda : angles.theta;
  const double c = on_lambda ? arc.lambda_star : comp.theta_peak;
  const double width = kPi - 2.0 * c;
  switch (mode) {
    case CompensationMode::None:
      return 0.0;
    case CompensationMode::AsPrinted:
      if (std::abs(width) < 1e-12) return 0.0;
      return sign(comp.delta_max) * delta *
             std::sin((x - 2.0 * c + kHalfPi) / width);
    case CompensationMode::HalfSine: {
      if (std::abs(width) < 1e-12) return 0.0;
      const double arg = std::clamp(kPi * (x - 2.0 * c + kHalfPi) / width,
                                    0.0, kPi);
      return delta * std::sin(arg);
    }
    case CompensationMode::Ramp: {
      if (comp.lambda_peak <= 0.0) return 0.0;
      const double arg =
          std::clamp(kPi * angles.lambda / (2.0 * comp.lambda_peak), 0.0,
                     kHalfPi);
      return delta * std::sin(arg);
    }
  }
  return 0.0;
}

double arc_length_compensated(const EllipseArc& arc,
                              const CompensationParams& comp,
                              const RollAngles& angles) {
  return arc_length_approx(arc, angles.lambda) -
         compensation_term(arc, comp, comp.mode, angles);
}

CompensationParams calibrate_compensation(const EllipseArc& arc, int grid_n,
                                          double K_e) {
  require(grid_n >= 256, "calibration grid needs at least 256 points");
  require(K_e > 0.0, "compensation gain must be positive");
  struct Row {
    RollAngles angles;
    double exact;
    double approx;
  };
  std::vector<Row> rows;
  rows.reserve(grid_n);
  for (double theta : roll_grid(grid_n)) {
    const RollAngles a = rollover_from_roll(arc, theta);
    rows.push_back({a, arc_length_exact(arc, a.lambda),
                    arc_length_approx(arc, a.lambda)});
  }

  CompensationParams comp;
  comp.K_e = K_e;
  double worst = -1.0;
  for (const Row& r : rows) {
    const double err = r.approx - r.exact;
    if (std::abs(err) > worst) {
      worst = std::abs(err);
      comp.delta_max = err;
      comp.lambda_peak = r.angles.lambda;
      comp.theta_peak = r.angles.theta;
    }
    if (r.exact > 0.0) {
      comp.max_rel_err_approx =
          std::max(comp.max_rel_err_approx, std::abs(err) / r.exact);
    }
  }
  comp.max_rel_err_compensated = comp.max_rel_err_approx;
  // Rounding-level residue is not an error shape worth correcting.
  if (std::abs(comp.delta_max) <= 1e-14 * arc.r_a) {
    comp.delta_max = 0.0;
    return comp;
  }

  for (CompensationMode mode :
       {CompensationMode::AsPrinted, CompensationMode::HalfSine,
        CompensationMode::Ramp}) {
    double max_rel = 0.0;
    for (const Row& r : rows) {
      if (r.exact <= 0.0) continue;
      const double corrected =
          r.approx - compensation_term(arc, comp, mode, r.angles);
      max_rel = std::max(max_rel, std::abs(corrected - r.exact) / r.exact);
    }
    if (max_rel < comp.max_rel_err_approx) {
      comp.mode = mode;
      comp.max_rel_err_compensated = max_rel;
      break;
    }
  }
  return comp;
}

}  // namespace esvc
