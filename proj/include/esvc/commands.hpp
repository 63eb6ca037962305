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
#include <optional>
#include <string>
#include <vector>

#include "esvc/config.hpp"

namespace esvc {

struct RunOptions {
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;  ///< overrides walk.seed when set
};

/// Files written by a command, relative to the output directory.
std::vector<std::string> command_outputs(const std::string& command);

/// Runs one of design, sweep, walk, profile. Throws Error; a walk that falls
/// flushes its logs before throwing Fall, an infeasible design writes its
/// report before throwing.
void run_command(const RunConfig& cfg, const std::string& command,
                 const RunOptions& opt);

/// Builds the foot described by [design] (solves the fore ellipse).
FootGeometry design_foot(const DesignSection& d);

}  // namespace esvc
