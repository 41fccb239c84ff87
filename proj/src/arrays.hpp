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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "geometry.hpp"

namespace risorient {

enum class ArrayKind { ULA, UPA };

// Deployment orientation of a panel/array. Auto aims at the obvious
// counterpart (RIS: bisector of the Tx and Rx directions; BS and user: the
// RIS); Global keeps the local frame aligned with the global axes, i.e.
// boresight = global +x; Explicit uses the given boresight vector.
struct FacingSpec {
  enum class Mode { Auto, Global, Explicit };
  Mode mode = Mode::Auto;
  Vec3 boresight{1.0, 0.0, 0.0};

  bool operator==(const FacingSpec &o) const {
    return mode == o.mode && boresight == o.boresight;
  }
};

// Antenna/element layout of one node. Boresight is local +x and the elements
// lie in the local y-z plane; a ULA runs along local y (ny = 1). The phase
// center is element (0,0): no centering offset is applied, so emitted
// channels are stable references.
struct ArraySpec {
  ArrayKind kind = ArrayKind::ULA;
  int nx = 1;
  int ny = 1;
  double spacing_wavelengths = 0.5;
  double pattern_exponent_q = 0.0;
  bool hemisphere_cutoff = true; // no response behind the panel
  FacingSpec facing;

  int count() const { return nx * ny; }
};

using SteeringVector = Eigen::VectorXcd;

// Element positions in the local frame, in wavelength units, indexed
// row-major over (z-row, y-column): n = iz * nx + iy.
std::vector<Vec3> element_positions(const ArraySpec &spec);

// Plane-wave array response: entry n = exp(j 2 pi p_n . u) with p_n in
// wavelengths and u = (cos el cos az, cos el sin az, sin el). Every entry has
// unit modulus; the Euclidean norm is sqrt(N).
SteeringVector steering_vector(const ArraySpec &spec, double azimuth_rad,
                               double elevation_rad);

// Per-element amplitude pattern: cos(angle)^q in the front hemisphere, zero
// at and behind 90 degrees from boresight. With the cutoff disabled the
// pattern is |cos(angle)|^q over the full sphere (1 everywhere for q = 0).
double element_gain(double angle_from_boresight_rad, double q,
                    bool hemisphere_cutoff = true);

// Angle between a local-frame unit direction and the local +x boresight.
double angle_from_boresight(const LocalDirection &dir);

} // namespace risorient
