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

#include <Eigen/Core>

namespace esvc {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat4 = Eigen::Matrix4d;

/// Rigid homogeneous transform. `apply` maps coordinates expressed in the
/// source frame to coordinates in the target frame.
class HomTransform {
 public:
  HomTransform() : m_(Mat4::Identity()) {}
  explicit HomTransform(const Mat4& m) : m_(m) {}

  static HomTransform identity() { return HomTransform(); }
  static HomTransform translation(const Vec3& t);
  /// Right-handed rotations about the x (sagittal), y (lateral) and
  /// z (vertical) axes.
  static HomTransform rot_x(double angle);
  static HomTransform rot_y(double angle);
  static HomTransform rot_z(double angle);

  const Mat4& matrix() const { return m_; }
  Eigen::Matrix3d rotation() const { return m_.topLeftCorner<3, 3>(); }
  Vec3 translation() const { return m_.topRightCorner<3, 1>(); }
  double operator()(int r, int c) const { return m_(r, c); }

  HomTransform operator*(const HomTransform& rhs) const {
    return HomTransform(m_ * rhs.m_);
  }
  Vec3 apply(const Vec3& p) const { return rotation() * p + translation(); }
  HomTransform inverse() const;

  /// Largest deviation from a proper rigid transform: orthonormality and
  /// determinant of the rotation block plus the bottom row.
  double rigidity_defect() const;

 private:
  Mat4 m_;
};

}  // namespace esvc
