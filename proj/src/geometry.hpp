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

#pragma once

#include <Eigen/Dense>

namespace risorient {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kDegPerRad = 57.29577951308232;

inline double deg2rad(double d) { return d / kDegPerRad; }
inline double rad2deg(double r) { return r * kDegPerRad; }

// Wrap an angle into [0, 360).
double wrap_deg(double deg);

// Panel rotation command: azimuth about the global z-axis, then elevation
// about the global x-axis. Angles are stored canonicalized to [0, 360).
struct RotationAngles {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;

  RotationAngles() = default;
  RotationAngles(double az_deg, double el_deg);

  bool operator==(const RotationAngles &) const = default;
};

// Rotation about the z-axis:
//   [ cos -sin 0 ]
//   [ sin  cos 0 ]
//   [ 0    0   1 ]
Mat3 rot_z(double phi_deg);

// Rotation about the x-axis:
//   [ 1 0    0   ]
//   [ 0 cos -sin ]
//   [ 0 sin  cos ]
Mat3 rot_x(double theta_deg);

// Combined panel rotation. Azimuth is applied first, elevation second; both
// are global-axis rotations, so R = R_x(theta) * R_z(phi). This order is a
// fixed convention of the tool, not a configuration knob.
Mat3 compose_rotation(const RotationAngles &angles);

// Right-handed orthonormal frame whose local +x axis is the given boresight
// direction. Local +y is horizontal (z_global x boresight) when the boresight
// is not near-vertical; otherwise the frame is anchored to global +x.
Mat3 facing_frame(const Vec3 &boresight);

// A global direction expressed in some node's local frame.
struct LocalDirection {
  double azimuth_rad = 0.0;
  double elevation_rad = 0.0;
  double distance_m = 0.0;
};

// Express the direction from `from` to `to` in the local frame. `frame` maps
// local to global coordinates, so the global unit direction is pulled back
// with the transpose. At the poles (|elevation| = pi/2) the azimuth is
// canonicalized to 0.
LocalDirection local_direction(const Vec3 &from, const Vec3 &to,
                               const Mat3 &frame);

// Same pullback for an already-unit global direction (no distance).
LocalDirection local_direction(const Vec3 &global_unit_dir, const Mat3 &frame);

} // namespace risorient
