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

#include <optional>
#include <string>
#include <vector>

#include "esvc/design.hpp"
#include "esvc/hlip.hpp"

namespace esvc {

struct DesignSection {
  DesignSpec spec;
  double l_foot = 0.2;
  int profile_points = 64;
};

struct ArcEntry {
  std::string id;
  double r_a = 0.0;
  double r_b = 0.0;
};

struct SweepSection {
  std::vector<ArcEntry> arcs;
  int n = 1024;
  int calib_grid = 1024;
  double K_e = 1.0;
};

struct WalkSection {
  std::string foot = "design";  ///< "design" (uses [design]) or "line"
  double line_h_foot = 0.06;
  double line_w_foot = 0.12;
  double line_l_foot = 0.2;
  double horizon = 30.0;  ///< [s]; steps = floor(horizon / T_ssp)
  WalkOptions options;
};

struct ProfileSection {
  int points = 64;
  int roll_samples = 301;
  double roll_max = 1.5;
};

/// Parsed and validated run configuration. Sections are optional; each
/// command checks for the ones it needs.
struct RunConfig {
  std::string origin;
  std::string sha256;  ///< of the raw file bytes
  std::optional<DesignSection> design;
  std::optional<SweepSection> sweep;
  std::optional<WalkSection> walk;
  std::optional<ProfileSection> profile;
};

/// Parses INI text. Throws Config naming the offending key path
/// (section.key) on syntax errors, unknown keys, bad values or ranges.
RunConfig parse_config(const std::string& text, const std::string& origin);

/// Reads and parses a file; a missing file is a Config error.
RunConfig load_config(const std::string& path);

std::string sha256_hex(const std::string& bytes);

}  // namespace esvc
