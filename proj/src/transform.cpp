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
#include "esvc/transform.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

namespace esvc {

HomTransform HomTransform::translation(const Vec3& t) {
  Mat4 m = Mat4::Identity();
  m.topRightCorner<3, 1>() = t;
  return HomTransform(m);
}

HomTransform HomTransform::rot_x(double a) {
  Mat4 m = Mat4::Identity();
  const double c = std::cos(a), s = std::sin(a);
  m(1, 1) = c;
  m(1, 2) = -s;
  m(2, 1) = s;
  m(2, 2) = c;
  return HomTransform(m);
}

HomTransform HomTransform::rot_y(double a) {
  Mat4 m = Mat4::Identity();
  const double c = std::cos(a), s = std::sin(a);
  m(0, 0) = c;
  m(0, 2) = s;
  m(2, 0) = -s;
  m(2, 2) = c;
  return HomTransform(m);
}

HomTransform HomTransform::rot_z(double a) {
  Mat4 m = Mat4::Identity();
  const double c = std::cos(a), s = std::sin(a);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return HomTransform(m);
}

HomTransform HomTransform::inverse() const {
  const Eigen::Matrix3d rt = rotation().transpose();
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rt;
  m.topRightCorner<3, 1>() = -rt * translation();
  return HomTransform(m);
}

double HomTransform::rigidity_defect() const {
  const Eigen::Matrix3d r = rotation();
  double defect = (r.transpose() * r - Eigen::Matrix3d::Identity())
                      .cwiseAbs()
                      .maxCoeff();
  defect = std::max(defect, std::abs(r.determinant() - 1.0));
  defect = std::max(defect, std::abs(m_(3, 0)));
  defect = std::max(defect, std::abs(m_(3, 1)));
  defect = std::max(defect, std::abs(m_(3, 2)));
  defect = std::max(defect, std::abs(m_(3, 3) - 1.0));
  return defect;
}

}  // namespace esvc
