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
#include "esvc/foot.hpp"

#include <numbers>

#include "esvc/error.hpp"

namespace esvc {

const char* to_string(Segment s) {
  switch (s) {
    case Segment::Mid: return "mid";
    case Segment::Fore: return "fore";
    case Segment::Hind: return "hind";
    case Segment::ToeRegion: return "toe";
  }
  return "?";
}

FootGeometry FootGeometry::line(double h_foot, double w_foot, double l_foot) {
  require(h_foot > 0.0 && w_foot > 0.0 && l_foot > 0.0,
          "line foot dimensions must be positive");
  FootGeometry f;
  f.kind = FootKind::Line;
  f.h_foot = h_foot;
  f.w_foot = w_foot;
  f.l_foot = l_foot;
  // The point pivot never leaves the "mid" segment.
  f.theta_m_star = std::numbers::pi / 2;
  f.alpha10 = std::numbers::pi / 2;
  f.theta_corner = std::numbers::pi / 2;
  f.d0 = h_foot;
  return f;
}

}  // namespace esvc
