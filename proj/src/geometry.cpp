// SPDX-License-Identifier: Apache-2.0
//
// risorient — orientation-aware link simulator for RIS-assisted MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace risorient {

double wrap_deg(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0)
    w += 360.0;
  return w + 0.0; // -0 -> +0
}

RotationAngles::RotationAngles(double az_deg, double el_deg) {
  if (!std::isfinite(az_deg) || !std::isfinite(el_deg))
    throw std::invalid_argument("rotation angles must be finite");
  azimuth_deg = wrap_deg(az_deg);
  elevation_deg = wrap_deg(el_deg);
}

Mat3 rot_z(double phi_deg) {
  if (!std::isfinite(phi_deg))
    throw std::invalid_argument("rot_z: angle must be finite");
  const double c = std::cos(deg2rad(phi_deg));
  const double s = std::sin(deg2rad(phi_deg));
  Mat3 r;
  r << c, -s, 0.0, //
      s, c, 0.0,   //
      0.0, 0.0, 1.0;
  return r;
}

Mat3 rot_x(double theta_deg) {
  if (!std::isfinite(theta_deg))
    throw std::invalid_argument("rot_x: angle must be finite");
  const double c = std::cos(deg2rad(theta_deg));
  const double s = std::sin(deg2rad(theta_deg));
  Mat3 r;
  r << 1.0, 0.0, 0.0, //
      0.0, c, -s,     //
      0.0, s, c;
  return r;
}

Mat3 compose_rotation(const RotationAngles &angles) {
  return rot_x(angles.elevation_deg) * rot_z(angles.azimuth_deg);
}

Mat3 facing_frame(const Vec3 &boresight) {
  const double norm = boresight.norm();
  if (!(norm > 0.0) || !boresight.allFinite())
    throw std::invalid_argument("facing_frame: boresight must be nonzero");
  const Vec3 x = boresight / norm;
  Vec3 y;
  if (std::abs(x.z()) < 0.999) {
    y = Vec3::UnitZ().cross(x).normalized();
  } else {
    // Near-vertical boresight: anchor the in-plane axes to global +x.
    y = x.cross(Vec3::UnitX()).normalized();
  }
  const Vec3 z = x.cross(y);
  Mat3 f;
  f.col(0) = x;
  f.col(1) = y;
  f.col(2) = z;
  return f;
}

LocalDirection local_direction(const Vec3 &global_unit_dir,
                               const Mat3 &frame) {
  const Vec3 u = frame.transpose() * global_unit_dir;
  LocalDirection out;
  const double horiz = std::hypot(u.x(), u.y());
  out.azimuth_rad = horiz < 1e-12 ? 0.0 : std::atan2(u.y(), u.x());
  out.elevation_rad = std::asin(std::clamp(u.z(), -1.0, 1.0));
  out.distance_m = 1.0;
  return out;
}

LocalDirection local_direction(const Vec3 &from, const Vec3 &to,
                               const Mat3 &frame) {
  const Vec3 d = to - from;
  const double dist = d.norm();
  if (!(dist > 0.0))
    throw std::invalid_argument(
        "local_direction: endpoints coincide (degenerate geometry)");
  LocalDirection out = local_direction(Vec3(d / dist), frame);
  out.distance_m = dist;
  return out;
}

} // namespace risorient
