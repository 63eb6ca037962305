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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "esvc/accuracy.hpp"
#include "esvc/contact.hpp"
#include "esvc/design.hpp"
#include "esvc/error.hpp"
#include "esvc/hlip.hpp"
#include "oracles/oracles.hpp"

using namespace esvc;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string num(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

struct ArcStats {
  SweepSummary s;
  double mean_abs_chord = 0.0, mean_abs_comp = 0.0;
  double max_abs_comp = 0.0, max_abs_approx = 0.0;
  double seconds = 0.0;
};

ArcStats run_arc(const char* id, double ra, double rb) {
  const auto t0 = Clock::now();
  const EllipseArc arc = make_arc(ra, rb);
  const ErrorSweep sw = sweep(id, arc, calibrate_compensation(arc, 1024), 1024);
  ArcStats st;
  st.s = summarize(sw);
  st.seconds = seconds_since(t0);
  for (const auto& r : sw.rows) {
    st.mean_abs_chord += std::abs(r.err_chord_pct);
    st.mean_abs_comp += std::abs(r.err_comp_pct);
    st.max_abs_comp = std::max(st.max_abs_comp, std::abs(r.err_comp_pct));
    st.max_abs_approx = std::max(st.max_abs_approx, std::abs(r.err_approx_pct));
  }
  st.mean_abs_chord /= sw.rows.size();
  st.mean_abs_comp /= sw.rows.size();
  return st;
}

// Published column values: chord max, approx max, approx mean, comp max.
struct Published {
  double chord_max, approx_max, approx_mean, comp_max;
};

void compare(Outcome& o, const std::string& tag, const ArcStats& a, const Published& p) {
  const auto band = [&](const char* what, double got, double want, double tol) {
    o.expect(std::abs(got - want) <= tol,
             tag + " " + what + " " + num(got) + " vs " + num(want) + "+-" + num(tol));
  };
  band("chord_max", a.s.chord.max_signed, p.chord_max, 0.5);
  band("approx_max", a.s.approx.max_signed, p.approx_max, 0.3);
  band("approx_mean", a.s.approx.mean_signed, p.approx_mean, 0.15);
  band("comp_max", a.s.comp.max_signed, p.comp_max, 0.3);
  o.expect(a.seconds < 5.0, tag + " " + num(a.seconds, 3) + " s");
}

Outcome criterion_table() {
  Outcome o;
  const ArcStats ea2 = run_arc("EA2", 0.05205, 0.0315);
  compare(o, "EA2", ea2, {-8.68, -1.57, -0.28, -0.68});
  o.expect(ea2.max_abs_comp <= 0.98, "EA2 |comp| max " + num(ea2.max_abs_comp));
  // The other two axis pairs carry each other's published boundary angles.
  compare(o, "EA1(axes)", run_arc("EA1", 0.04575, 0.0375), {-9.73, -2.61, -0.81, 0.97});
  compare(o, "EA3(axes)", run_arc("EA3", 0.06901, 0.02595), {-6.04, 1.77, 1.14, 0.49});
  return o;
}

Outcome criterion_dominance() {
  Outcome o;
  const std::pair<const char*, std::pair<double, double>> arcs[] = {
      {"EA1", {0.04575, 0.0375}}, {"EA2", {0.05205, 0.0315}}, {"EA3", {0.06901, 0.02595}}};
  for (const auto& [id, ax] : arcs) {
    const ArcStats a = run_arc(id, ax.first, ax.second);
    const double ratio = a.mean_abs_comp / a.mean_abs_chord;
    o.expect(ratio <= 0.15, std::string(id) + " mean ratio " + num(ratio));
    o.expect(a.max_abs_comp < a.max_abs_approx,
             std::string(id) + " max " + num(a.max_abs_comp) + "<" + num(a.max_abs_approx));
  }
  return o;
}

Outcome criterion_lambda_star() {
  Outcome o;
  const double ls = make_arc(0.05205, 0.0315).lambda_star;
  o.expect(std::abs(ls - 1.4229) <= 1e-3, "lambda_star " + num(ls, 8));
  return o;
}

FootGeometry reference_foot(double ra, double rb) {
  DesignSpec spec = oracle::reference_spec();
  spec.mid = make_arc(ra, rb);
  return assemble_foot(spec, solve_fore_ellipse(spec), 0.2);
}

double roll_of(const HomTransform& t) { return std::atan2(t(2, 1), t(1, 1)); }

Outcome criterion_contact() {
  Outcome o;
  const auto t0 = Clock::now();
  const FootGeometry f = reference_foot(0.04575, 0.0375);
  const oracle::Polyline poly = oracle::sole_polyline(f, 100000);
  double worst_t = 0.0, worst_r = 0.0;
  int mid = 0, fore = 0, hind = 0;
  for (int i = 0; i < 1000; ++i) {
    const double th = -1.55 + 3.1 * i / 999.0;
    const ContactSolution c = roll_contact(f, th);
    const oracle::RollPose p = oracle::roll(poly, th);
    worst_t = std::max({worst_t, std::abs(c.T_Oi_C(1, 3) - p.oi_in_c.x()),
                        std::abs(c.T_Oi_C(2, 3) - p.oi_in_c.y())});
    worst_r = std::max(worst_r, std::abs(roll_of(c.T_Oi_C) - th));
    mid += c.segment == Segment::Mid;
    fore += th > 0 && c.segment != Segment::Mid;
    hind += th < 0 && c.segment != Segment::Mid;
  }
  o.expect(worst_t <= 1e-4, "translation gap " + num(worst_t));
  o.expect(worst_r <= 1e-6, "rotation gap " + num(worst_r));
  o.expect(mid > 0 && fore > 0 && hind > 0,
           "samples mid/fore/hind " + std::to_string(mid) + "/" +
               std::to_string(fore) + "/" + std::to_string(hind));
  double jump = 0.0;
  for (double b : {f.theta_m_star, f.theta_corner}) {
    for (double s : {1.0, -1.0}) {
      const Mat4 lo = roll_contact(f, s * (b - 1e-12)).T_Oi_C.matrix();
      const Mat4 hi = roll_contact(f, s * b).T_Oi_C.matrix();
      jump = std::max(jump, (lo - hi).cwiseAbs().maxCoeff());
    }
  }
  jump = std::max(jump, (mid_contact(f, f.theta_m_star).T_Oi_C.matrix() -
                         fore_contact(f, f.theta_m_star).T_Oi_C.matrix())
                            .cwiseAbs()
                            .maxCoeff());
  o.expect(jump <= 1e-8, "boundary jump " + num(jump));
  const double secs = seconds_since(t0);
  o.expect(secs < 30.0, num(secs, 3) + " s");
  return o;
}

Outcome criterion_circle() {
  Outcome o;
  const double r = 0.05;
  const EllipseArc c = make_arc(r, r);
  double rel = 0.0;
  for (double th : roll_grid(1024)) {
    const RollAngles a = rollover_from_roll(c, th);
    rel = std::max(rel, std::abs(arc_length_approx(c, a.lambda) - r * a.lambda) / (r * a.lambda));
  }
  o.expect(rel <= 1e-12, "approx vs r*lambda " + num(rel));

  DesignSpec spec;
  spec.mid = c;
  spec.h_foot = r;
  spec.theta_m_star = 0.3;
  const SegmentGeometry seg = segment_geometry(spec.mid, {}, r, 0.3);
  const FootGeometry foot = assemble_foot(spec, fore_from_width_ratio(seg, 2 * r, 1.0), 0.2);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double th = -1.55 + 3.1 * i / 999.0;
    const ContactSolution cs = roll_contact(foot, th);
    worst = std::max(worst, std::abs(cs.T_OC_C(1, 3) - r * th));
    // Centre of the circle (the foot origin here) travels by r*theta.
    const Vec3 centre = absolute_positions(foot, th, 0.0, 0.0, Vec3::Zero());
    worst = std::max({worst, std::abs(centre.y() + r * th), std::abs(centre.z() - r)});
  }
  o.expect(worst <= 1e-10, "rolling-circle gap " + num(worst));
  return o;
}

Outcome criterion_design() {
  Outcome o;
  const auto t0 = Clock::now();
  const DesignSpec spec = oracle::reference_spec();
  const DesignSolution sol = solve_fore_ellipse(spec);
  const oracle::CheckResult chk = oracle::check_design(spec, sol);
  o.expect(chk.max_equality <= 1e-6, "eq residual " + num(chk.max_equality));
  o.expect(chk.max_inequality <= 1e-6, "ineq residual " + num(chk.max_inequality));
  // The feasible set is two-dimensional (width, axis ratio); the grid spends
  // the same 8e6-point budget as a 200^3 grid on those two coordinates.
  const oracle::GridBest g = oracle::grid_search(spec, 2828, 2828);
  const double obj = oracle::objective(spec, sol.r_fa, sol.r_fb, sol.w_foot, sol.slope_mismatch);
  o.expect(obj - g.objective <= 1e-4,
           "objective " + num(obj, 10) + " grid " + num(g.objective, 10) + " (" +
               std::to_string(g.evaluated) + " pts)");
  const double secs = seconds_since(t0);
  o.expect(secs < 120.0, num(secs, 3) + " s");
  return o;
}

Outcome criterion_hlip() {
  Outcome o;
  HlipParams hp;
  const S2SModel m = build_s2s(hp);
  const Eigen::Matrix2d Acl = m.A + m.B * m.K;
  const auto eig = Acl.eigenvalues();
  const double emax = std::max(std::abs(eig(0)), std::abs(eig(1)));
  o.expect(emax < 1e-9 || (Acl * Acl).norm() < 1e-12,
           "|eig| " + num(emax) + " |Acl^2| " + num((Acl * Acl).norm()));

  const Orbit orbit = desired_orbit(hp, 0.2);
  const Eigen::Vector2d Xh(orbit.X.p, orbit.X.v);
  const double fp = (m.A * Xh + m.B * orbit.u - Xh).norm();
  o.expect(fp < 1e-10, "orbit residual " + num(fp));

  std::mt19937_64 rng(2024);
  const auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector2d X = Xh + Eigen::Vector2d(0.1 * unit(), 0.5 * unit());
    for (int k = 0; k < 2; ++k) {
      const double u = orbit.u + m.K * (X - Xh);
      X = m.A * X + m.B * u;
    }
    worst = std::max(worst, (X - Xh).norm());
  }
  o.expect(worst < 1e-8, "S2S error after 2 steps " + num(worst));

  WalkOptions w;
  w.hlip = hp;
  w.n_steps = static_cast<int>(std::floor(30.0 / hp.T_ssp));
  w.p0 = 0.02;
  w.v0 = 0.1;
  std::vector<std::pair<std::string, FootGeometry>> feet = {
      {"line", FootGeometry::line(0.06, 0.12, 0.2)},
      {"EA1", reference_foot(0.04575, 0.0375)},
      {"EA2", reference_foot(0.05205, 0.0315)},
      {"EA3", reference_foot(0.06901, 0.02595)}};
  for (const auto& [name, foot] : feet) {
    const WalkLog log = simulate_walk(foot, w);
    o.expect(!log.fell && log.steps.size() == 78 && log.max_slip < 1e-4,
             name + " steps " + std::to_string(log.steps.size()) +
                 (log.fell ? " fell" : "") + " slip " + num(log.max_slip));
  }
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome criterion_determinism() {
  Outcome o;
  const fs::path work = fs::path(ESVC_TEST_WORK_DIR) / "acceptance_determinism";
  const std::pair<const char*, const char*> runs[] = {
      {"design", "design_reference.ini"}, {"sweep", "sweep_reference.ini"},
      {"walk", "walk_marking_time.ini"}, {"profile", "profile_reference.ini"}};
  for (const auto& [cmd, cfg] : runs) {
    std::vector<fs::path> dirs;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path d = work / (std::string(cmd) + std::to_string(rep));
      fs::remove_all(d);
      const std::string line = std::string(ESVC_CLI_PATH) + " " + cmd + " --config " +
                               (fs::path(ESVC_CONFIG_DIR) / cfg).string() + " --out " +
                               d.string() + " --seed 5 >/dev/null 2>&1";
      const int raw = std::system(line.c_str());
      if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) {
        o.expect(false, std::string(cmd) + " run failed");
      }
      dirs.push_back(d);
    }
    int files = 0;
    bool same = true;
    if (fs::exists(dirs[0])) {
      for (const auto& e : fs::directory_iterator(dirs[0])) {
        ++files;
        same = same && slurp(e.path()) == slurp(dirs[1] / e.path().filename());
      }
    }
    o.expect(same && files > 0, std::string(cmd) + " " + std::to_string(files) + " files identical");
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Table 1 arc-length accuracy", criterion_table},
      {"compensation dominance", criterion_dominance},
      {"lambda_star closed form", criterion_lambda_star},
      {"contact model vs polyline oracle", criterion_contact},
      {"circle exactness", criterion_circle},
      {"design NLP soundness", criterion_design},
      {"HLIP deadbeat and walking", criterion_hlip},
      {"CLI determinism", criterion_determinism},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& [name, run] : criteria) {
    ++idx;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", idx, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
