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
#include "esvc/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <openssl/evp.h>

#include "esvc/error.hpp"

namespace esvc {
namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void config_error(const std::string& path, const std::string& msg) {
  fail(ErrorCode::Config, path + ": " + msg);
}

// Reads keys of one section, remembering which were consumed so that
// leftovers can be reported as unknown.
class SectionReader {
 public:
  SectionReader(const pt::ptree& node, std::string name)
      : node_(node), name_(std::move(name)) {
    for (const auto& kv : node_) {
      if (!kv.second.empty()) config_error(path(kv.first), "nested keys are not allowed");
      if (!seen_.insert(kv.first).second) config_error(path(kv.first), "duplicate key");
    }
  }

  std::optional<std::string> raw(const std::string& key) {
    used_.insert(key);
    const auto it = node_.find(key);
    if (it == node_.not_found()) return std::nullopt;
    return trim(it->second.data());
  }

  std::string text(const std::string& key, const std::string& def) {
    const auto v = raw(key);
    return v ? *v : def;
  }

  std::string required_text(const std::string& key) {
    const auto v = raw(key);
    if (!v) config_error(path(key), "required key is missing");
    return *v;
  }

  double number(const std::string& key, double def) {
    const auto v = raw(key);
    return v ? to_number(key, *v) : def;
  }

  double required_number(const std::string& key) {
    return to_number(key, required_text(key));
  }

  int integer(const std::string& key, int def) {
    const auto v = raw(key);
    if (!v) return def;
    int out = 0;
    const auto res = std::from_chars(v->data(), v->data() + v->size(), out);
    if (res.ec != std::errc() || res.ptr != v->data() + v->size()) {
      config_error(path(key), "expected an integer, got '" + *v + "'");
    }
    return out;
  }

  std::uint64_t unsigned64(const std::string& key, std::uint64_t def) {
    const auto v = raw(key);
    if (!v) return def;
    std::uint64_t out = 0;
    const auto res = std::from_chars(v->data(), v->data() + v->size(), out);
    if (res.ec != std::errc() || res.ptr != v->data() + v->size()) {
      config_error(path(key), "expected an unsigned integer, got '" + *v + "'");
    }
    return out;
  }

  void check(const std::string& key, bool ok, const std::string& what) {
    if (!ok) config_error(path(key), what);
  }

  void finish() const {
    for (const auto& kv : node_) {
      if (!used_.count(kv.first)) config_error(path(kv.first), "unknown key");
    }
  }

  std::string path(const std::string& key) const { return name_ + "." + key; }

 private:
  double to_number(const std::string& key, const std::string& v) const {
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() ||
        !std::isfinite(out)) {
      config_error(path(key), "expected a number, got '" + v + "'");
    }
    return out;
  }

  const pt::ptree& node_;
  std::string name_;
  std::set<std::string> seen_;
  std::set<std::string> used_;
};

DesignSection read_design(SectionReader& r) {
  DesignSection d;
  DesignSpec& s = d.spec;
  const double ra = r.required_number("mid_r_a");
  const double rb = r.required_number("mid_r_b");
  r.check("mid_r_b", rb > 0.0, "must be positive");
  r.check("mid_r_a", ra >= rb, "must be >= mid_r_b");
  s.mid = make_arc(ra, rb);
  s.h_foot = r.number("h_foot", s.h_foot);
  r.check("h_foot", s.h_foot > 0.0, "must be positive");
  s.theta_m_star = r.number("theta_m_star", s.theta_m_star);
  r.check("theta_m_star", s.theta_m_star > 0.0 && s.theta_m_star < std::acos(0.0),
          "must lie in (0, pi/2)");
  s.w_foot_nominal = r.number("w_foot_nominal", s.w_foot_nominal);
  r.check("w_foot_nominal", s.w_foot_nominal > 0.0, "must be positive");
  s.w_foot_max = r.number("w_foot_max", s.w_foot_max);
  r.check("w_foot_max", s.w_foot_max > 0.0, "must be positive");
  s.d_f_max = r.number("d_f_max", s.d_f_max);
  r.check("d_f_max", s.d_f_max > 0.0, "must be positive");
  const std::pair<const char*, double*> weights[] = {
      {"w1", &s.weights.w1}, {"w2", &s.weights.w2},
      {"w3", &s.weights.w3}, {"w4", &s.weights.w4}};
  for (const auto& [key, w] : weights) {
    *w = r.number(key, *w);
    r.check(key, *w >= 0.0, "must be non-negative");
  }
  s.calib_grid = r.integer("calib_grid", s.calib_grid);
  r.check("calib_grid", s.calib_grid >= 256, "must be >= 256");
  s.K_e = r.number("K_e", s.K_e);
  r.check("K_e", s.K_e > 0.0, "must be positive");
  d.l_foot = r.number("l_foot", d.l_foot);
  r.check("l_foot", d.l_foot > 0.0, "must be positive");
  d.profile_points = r.integer("profile_points", d.profile_points);
  r.check("profile_points", d.profile_points >= 16, "must be >= 16");
  r.finish();
  try {
    validate(s);
  } catch (const Error& e) {
    config_error("design", e.what());
  }
  return d;
}

SweepSection read_sweep(SectionReader& r,
                        const std::map<std::string, ArcEntry>& arcs) {
  SweepSection s;
  const std::string list = r.required_text("arcs");
  std::stringstream ss(list);
  std::string id;
  std::set<std::string> ids;
  while (std::getline(ss, id, ',')) {
    id = trim(id);
    r.check("arcs", !id.empty(), "empty arc id in list");
    r.check("arcs", ids.insert(id).second, "arc '" + id + "' listed twice");
    const auto it = arcs.find(id);
    r.check("arcs", it != arcs.end(), "no [arc." + id + "] section");
    s.arcs.push_back(it->second);
  }
  r.check("arcs", !s.arcs.empty(), "at least one arc is required");
  s.n = r.integer("n", s.n);
  r.check("n", s.n >= 128, "must be >= 128");
  s.calib_grid = r.integer("calib_grid", s.calib_grid);
  r.check("calib_grid", s.calib_grid >= 256, "must be >= 256");
  s.K_e = r.number("K_e", s.K_e);
  r.check("K_e", s.K_e > 0.0, "must be positive");
  r.finish();
  return s;
}

ArcEntry read_arc(SectionReader& r, const std::string& id) {
  ArcEntry a;
  a.id = id;
  a.r_a = r.required_number("r_a");
  a.r_b = r.required_number("r_b");
  r.check("r_b", a.r_b > 0.0, "must be positive");
  r.check("r_a", a.r_a >= a.r_b, "must be >= r_b");
  r.finish();
  return a;
}

WalkSection read_walk(SectionReader& r) {
  WalkSection w;
  WalkOptions& o = w.options;
  w.foot = r.text("foot", w.foot);
  r.check("foot", w.foot == "design" || w.foot == "line",
          "must be 'design' or 'line'");
  w.line_h_foot = r.number("line_h_foot", w.line_h_foot);
  r.check("line_h_foot", w.line_h_foot > 0.0, "must be positive");
  w.line_w_foot = r.number("line_w_foot", w.line_w_foot);
  r.check("line_w_foot", w.line_w_foot > 0.0, "must be positive");
  w.line_l_foot = r.number("line_l_foot", w.line_l_foot);
  r.check("line_l_foot", w.line_l_foot > 0.0, "must be positive");
  o.hlip.z0 = r.number("z0", o.hlip.z0);
  r.check("z0", o.hlip.z0 > 0.0, "must be positive");
  o.hlip.T_ssp = r.number("T_ssp", o.hlip.T_ssp);
  r.check("T_ssp", o.hlip.T_ssp > 0.0, "must be positive");
  o.hlip.g = r.number("g", o.hlip.g);
  r.check("g", o.hlip.g > 0.0, "must be positive");
  w.horizon = r.number("horizon", w.horizon);
  r.check("horizon", w.horizon >= o.hlip.T_ssp, "must cover at least one step");
  r.check("horizon", w.horizon / o.hlip.T_ssp <= 1e6, "too many steps");
  o.n_steps = static_cast<int>(std::floor(w.horizon / o.hlip.T_ssp));
  o.v_max = r.number("v_max", o.v_max);
  r.check("v_max", o.v_max > 0.0, "must be positive");
  o.v_des = r.number("v_des", o.v_des);
  r.check("v_des", std::abs(o.v_des) <= o.v_max, "must satisfy |v_des| <= v_max");
  o.samples_per_step = r.integer("samples_per_step", o.samples_per_step);
  r.check("samples_per_step", o.samples_per_step >= 4, "must be >= 4");
  o.K_swa = r.number("K_swa", o.K_swa);
  r.check("K_swa", o.K_swa >= 0.0 && o.K_swa <= 1.0, "must lie in [0, 1]");
  o.u_max = r.number("u_max", o.u_max);
  r.check("u_max", o.u_max > 0.0, "must be positive");
  o.leg_max = r.number("leg_max", o.leg_max);
  r.check("leg_max", o.leg_max > 0.0, "must be positive");
  o.z_clear = r.number("z_clear", o.z_clear);
  r.check("z_clear", o.z_clear >= 0.0, "must be non-negative");
  o.p0 = r.number("p0", o.p0);
  o.v0 = r.number("v0", o.v0);
  o.noise_v = r.number("noise_v", o.noise_v);
  r.check("noise_v", o.noise_v >= 0.0, "must be non-negative");
  o.seed = r.unsigned64("seed", o.seed);
  r.finish();
  return w;
}

ProfileSection read_profile(SectionReader& r) {
  ProfileSection p;
  p.points = r.integer("points", p.points);
  r.check("points", p.points >= 16, "must be >= 16");
  p.roll_samples = r.integer("roll_samples", p.roll_samples);
  r.check("roll_samples", p.roll_samples >= 2, "must be >= 2");
  p.roll_max = r.number("roll_max", p.roll_max);
  r.check("roll_max", p.roll_max > 0.0 && p.roll_max < std::acos(0.0),
          "must lie in (0, pi/2)");
  r.finish();
  return p;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(ErrorCode::Config, origin + ":" + std::to_string(e.line()) + ": " +
                                e.message());
  }
  RunConfig cfg;
  cfg.origin = origin;
  cfg.sha256 = sha256_hex(text);

  // The INI reader drops sections without keys; recover them from the
  // headers so that "[walk]" alone selects all walk defaults.
  std::vector<std::pair<std::string, pt::ptree>> sections;
  for (const auto& [name, node] : tree) {
    if (!node.data().empty()) config_error(name, "key outside any section");
    sections.emplace_back(name, node);
  }
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.size() < 2 || line.front() != '[' || line.back() != ']') continue;
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (tree.find(name) == tree.not_found()) sections.emplace_back(name, pt::ptree());
    }
  }

  // Arc sections first: the sweep list refers to them.
  std::map<std::string, ArcEntry> arcs;
  for (const auto& [name, node] : sections) {
    if (name.rfind("arc.", 0) == 0) {
      const std::string id = name.substr(4);
      if (id.empty() || id.find(',') != std::string::npos) {
        config_error(name, "invalid arc id");
      }
      SectionReader r(node, name);
      arcs.emplace(id, read_arc(r, id));
    }
  }
  for (const auto& [name, node] : sections) {
    if (name.rfind("arc.", 0) == 0) continue;
    SectionReader r(node, name);
    if (name == "design") {
      cfg.design = read_design(r);
    } else if (name == "sweep") {
      cfg.sweep = read_sweep(r, arcs);
    } else if (name == "walk") {
      cfg.walk = read_walk(r);
    } else if (name == "profile") {
      cfg.profile = read_profile(r);
    } else {
      config_error(name, "unknown section");
    }
  }
  if (cfg.walk && cfg.walk->foot == "design" && !cfg.design) {
    config_error("walk.foot", "'design' requires a [design] section");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::Config, path + ": cannot read config file");
  const std::string text((std::istreambuf_iterator<char>(f)),
                         std::istreambuf_iterator<char>());
  return parse_config(text, path);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::Internal, "SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace esvc
