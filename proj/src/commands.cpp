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
#include "esvc/commands.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "esvc/accuracy.hpp"
#include "esvc/contact.hpp"
#include "esvc/error.hpp"
#include "esvc/io.hpp"

namespace esvc {
namespace {

namespace fs = std::filesystem;

std::string header(const RunConfig& cfg, const std::string& command,
                   std::uint64_t seed) {
  return "# esvc " + command + " config_sha256=" + cfg.sha256 +
         " seed=" + std::to_string(seed) + "\n";
}

template <class T>
const T& need(const std::optional<T>& section, const char* name) {
  if (!section) fail(ErrorCode::Config, std::string(name) + ": section is required");
  return *section;
}

std::string out_path(const RunOptions& opt, const std::string& file) {
  return (fs::path(opt.out_dir) / file).string();
}

void prepare_out_dir(const RunOptions& opt) {
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec || !fs::is_directory(opt.out_dir)) {
    fail(ErrorCode::Io, "cannot create output directory " + opt.out_dir);
  }
}

std::string profile_csv(const FootGeometry& foot, int n, const std::string& hdr) {
  std::string out = hdr + "y,z,segment\n";
  for (const auto& p : export_profile(foot, n)) {
    out += csv_row({fmt(p.y), fmt(p.z), to_string(p.segment)});
  }
  return out;
}

void kv(std::ostringstream& o, const std::string& key, double v) {
  o << key << " = " << fmt(v) << "\n";
}

void run_design(const RunConfig& cfg, const RunOptions& opt, const std::string& hdr) {
  const DesignSection& d = need(cfg.design, "design");
  const DesignSpec& s = d.spec;
  std::ostringstream o;
  o << hdr;
  o << "[spec]\n";
  kv(o, "mid_r_a", s.mid.r_a);
  kv(o, "mid_r_b", s.mid.r_b);
  kv(o, "h_foot", s.h_foot);
  kv(o, "theta_m_star", s.theta_m_star);
  kv(o, "w_foot_nominal", s.w_foot_nominal);
  kv(o, "w1", s.weights.w1);
  kv(o, "w2", s.weights.w2);
  kv(o, "w3", s.weights.w3);
  kv(o, "w4", s.weights.w4);

  DesignSolution sol;
  try {
    sol = solve_fore_ellipse(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Infeasible && e.code() != ErrorCode::NonConvergence) throw;
    o << "\n[result]\nstatus = "
      << (e.code() == ErrorCode::Infeasible ? "infeasible" : "nonconvergence")
      << "\ndiagnostic = " << e.what() << "\n";
    write_text_file(out_path(opt, "design_report.txt"), o.str());
    throw;
  }
  const FootGeometry foot = assemble_foot(s, sol, d.l_foot);
  const SegmentGeometry seg = segment_geometry(s.mid, foot.comp_mid, s.h_foot,
                                               s.theta_m_star);
  const ConstraintReport rep = check_constraints(s, seg, sol);

  o << "\n[result]\nstatus = feasible\n";
  kv(o, "r_fa", sol.r_fa);
  kv(o, "r_fb", sol.r_fb);
  kv(o, "phi_f_star", sol.phi_f_star);
  kv(o, "d_f_star", sol.d_f_star);
  kv(o, "theta_f_star", sol.theta_f_star);
  kv(o, "w_foot", sol.w_foot);
  kv(o, "slope_mismatch", sol.slope_mismatch);
  kv(o, "objective", sol.objective);
  kv(o, "kkt_residual", sol.kkt_residual);
  o << "starts = " << sol.starts << "\nfeasible_starts = " << sol.feasible_starts
    << "\n";
  o << "\n[constraints]\n";
  for (const auto& [name, v] : rep.equalities) kv(o, "eq." + name, v);
  for (const auto& [name, v] : rep.inequalities) kv(o, "ineq." + name, v);
  kv(o, "max_violation", rep.max_violation());
  o << "\n[foot]\n";
  kv(o, "d0", foot.d0);
  kv(o, "b_s", foot.b_s);
  kv(o, "alpha6", foot.alpha6);
  kv(o, "alpha7", foot.alpha7);
  kv(o, "alpha8", foot.alpha8);
  kv(o, "alpha10", foot.alpha10);
  kv(o, "fore_rotation", foot.fore_rotation);
  kv(o, "theta_corner", foot.theta_corner);
  kv(o, "l_m_star", foot.l_m_star);
  kv(o, "l_f_star", foot.l_f_star);
  kv(o, "l_f_quarter", foot.l_f_quarter);
  o << "comp_mid_mode = " << to_string(foot.comp_mid.mode) << "\n";
  kv(o, "comp_mid_delta_max", foot.comp_mid.delta_max);
  o << "comp_fore_mode = " << to_string(foot.comp_fore.mode) << "\n";
  kv(o, "comp_fore_delta_max", foot.comp_fore.delta_max);

  const std::string profile = profile_csv(foot, d.profile_points, hdr);
  write_text_file(out_path(opt, "design_report.txt"), o.str());
  write_text_file(out_path(opt, "profile.csv"), profile);
}

void run_sweep(const RunConfig& cfg, const RunOptions& opt, const std::string& hdr) {
  const SweepSection& s = need(cfg.sweep, "sweep");
  std::vector<ErrorSweep> sweeps;
  for (const ArcEntry& a : s.arcs) {
    const EllipseArc arc = make_arc(a.r_a, a.r_b);
    sweeps.push_back(sweep(a.id, arc, calibrate_compensation(arc, s.calib_grid, s.K_e), s.n));
  }
  report(sweeps, out_path(opt, "sweep.csv"), out_path(opt, "sweep_summary.csv"), hdr);
}

void run_walk(const RunConfig& cfg, const RunOptions& opt, const std::string& hdr,
              std::uint64_t seed) {
  const WalkSection& w = need(cfg.walk, "walk");
  const FootGeometry foot =
      w.foot == "line" ? FootGeometry::line(w.line_h_foot, w.line_w_foot, w.line_l_foot)
                       : design_foot(*cfg.design);
  WalkOptions o = w.options;
  o.seed = seed;
  const WalkLog log = simulate_walk(foot, o);

  std::ostringstream sum;
  sum << hdr;
  sum << "foot = " << w.foot << "\n";
  sum << "steps_planned = " << o.n_steps << "\n";
  sum << "steps_logged = " << log.steps.size() << "\n";
  sum << "samples_logged = " << log.samples.size() << "\n";
  sum << "fell = " << (log.fell ? 1 : 0) << "\n";
  if (log.fell) sum << "fall_reason = " << log.fall_reason << "\n";
  sum << "convergence_step = " << log.convergence_step << "\n";
  kv(sum, "max_slip", log.max_slip);
  kv(sum, "orbit_p", log.orbit.X.p);
  kv(sum, "orbit_v", log.orbit.X.v);
  kv(sum, "orbit_u", log.orbit.u);
  int saturated = 0;
  for (const auto& r : log.steps) saturated += r.saturated ? 1 : 0;
  sum << "saturated_steps = " << saturated << "\n";

  write_text_file(out_path(opt, "walk_samples.csv"), walk_samples_csv(log, hdr));
  write_text_file(out_path(opt, "walk_steps.csv"), walk_steps_csv(log, hdr));
  write_text_file(out_path(opt, "walk_summary.txt"), sum.str());
  if (log.fell) fail(ErrorCode::Fall, log.fall_reason);
}

void run_profile(const RunConfig& cfg, const RunOptions& opt, const std::string& hdr) {
  const DesignSection& d = need(cfg.design, "design");
  const ProfileSection p = cfg.profile.value_or(ProfileSection{});
  const FootGeometry foot = design_foot(d);
  std::string tr = hdr;
  tr += "theta";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) tr += ",T" + std::to_string(r) + std::to_string(c);
  }
  tr += ",rollover_length,segment\n";
  for (int i = 0; i < p.roll_samples; ++i) {
    const double th = -p.roll_max + 2.0 * p.roll_max * i / (p.roll_samples - 1);
    const ContactSolution cs = roll_contact(foot, th);
    std::vector<std::string> row{fmt(th)};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 4; ++c) row.push_back(fmt(cs.T_Oi_C(r, c)));
    }
    row.push_back(fmt(cs.rollover_length));
    row.push_back(to_string(cs.segment));
    tr += csv_row(row);
  }
  const std::string profile = profile_csv(foot, p.points, hdr);
  write_text_file(out_path(opt, "profile.csv"), profile);
  write_text_file(out_path(opt, "transforms.csv"), tr);
}

}  // namespace

std::vector<std::string> command_outputs(const std::string& command) {
  if (command == "design") return {"design_report.txt", "profile.csv"};
  if (command == "sweep") return {"sweep.csv", "sweep_summary.csv"};
  if (command == "walk") return {"walk_samples.csv", "walk_steps.csv", "walk_summary.txt"};
  if (command == "profile") return {"profile.csv", "transforms.csv"};
  fail(ErrorCode::Config, "unknown command '" + command + "'");
}

FootGeometry design_foot(const DesignSection& d) {
  return assemble_foot(d.spec, solve_fore_ellipse(d.spec), d.l_foot);
}

void run_command(const RunConfig& cfg, const std::string& command,
                 const RunOptions& opt) {
  command_outputs(command);
  // Check the sections before touching the file system.
  if (command == "design" || command == "profile") need(cfg.design, "design");
  if (command == "sweep") need(cfg.sweep, "sweep");
  if (command == "walk") need(cfg.walk, "walk");
  std::uint64_t seed = opt.seed.value_or(cfg.walk ? cfg.walk->options.seed : 0);
  const std::string hdr = header(cfg, command, seed);
  prepare_out_dir(opt);
  if (command == "design") run_design(cfg, opt, hdr);
  else if (command == "sweep") run_sweep(cfg, opt, hdr);
  else if (command == "walk") run_walk(cfg, opt, hdr, seed);
  else run_profile(cfg, opt, hdr);
}

}  // namespace esvc
