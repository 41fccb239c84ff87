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

#include <doctest.h>

#include <numbers>
#include <random>

#include "geometry.hpp"
#include "oracles.hpp"

using namespace risorient;

namespace {
constexpr double kTight = 1e-12;
}

TEST_SUITE("geometry") {

TEST_CASE("rot_z at 0 degrees is the identity") {
  CHECK((rot_z(0.0) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rot_z 90 degrees maps x-hat to y-hat") {
  const Vec3 mapped = rot_z(90.0) * Vec3::UnitX();
  CHECK((mapped - Vec3::UnitY()).cwiseAbs().maxCoeff() < kTight);
}

TEST_CASE("rot_z 30 degrees matches the scalar-trig reference entrywise") {
  // cos 30 = sqrt(3)/2, sin 30 = 1/2, frozen from the reference evaluation.
  const Mat3 r = rot_z(30.0);
  CHECK(r(0, 0) == doctest::Approx(0.8660254037844387).epsilon(1e-15));
  CHECK(r(0, 1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(r(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK((r - oracles::rot_z_reference(30.0)).cwiseAbs().maxCoeff() < kTight);
}

TEST_CASE("rot_x at 0 degrees is the identity") {
  CHECK((rot_x(0.0) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rot_x 90 degrees maps y-hat to z-hat") {
  const Vec3 mapped = rot_x(90.0) * Vec3::UnitY();
  CHECK((mapped - Vec3::UnitZ()).cwiseAbs().maxCoeff() < kTight);
}

TEST_CASE("rot_x 45 degrees matches the scalar-trig reference entrywise") {
  CHECK((rot_x(45.0) - oracles::rot_x_reference(45.0)).cwiseAbs().maxCoeff() <
        kTight);
}

TEST_CASE("rotations reject non-finite angles") {
  CHECK_THROWS_AS(rot_z(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(rot_x(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(RotationAngles(0.0, std::nan("")), std::invalid_argument);
}

TEST_CASE("compose_rotation reduces to the single-axis cases") {
  CHECK((compose_rotation({0.0, 0.0}) - Mat3::Identity())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((compose_rotation({90.0, 0.0}) - rot_z(90.0)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK((compose_rotation({0.0, 55.0}) - rot_x(55.0)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("compose_rotation(30, 45) equals the naive matrix product") {
  const Mat3 expected = oracles::mat3_product(oracles::rot_x_reference(45.0),
                                              oracles::rot_z_reference(30.0));
  CHECK((compose_rotation({30.0, 45.0}) - expected).cwiseAbs().maxCoeff() <
        kTight);
}

TEST_CASE("rotation matrices are orthonormal with det +1 and preserve "
          "lengths") {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> angle(-720.0, 720.0);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const RotationAngles a(angle(eng), angle(eng));
    const Mat3 r = compose_rotation(a);
    CHECK((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() <
          kTight);
    CHECK(std::abs(r.determinant() - 1.0) < kTight);

    const Vec3 v(coord(eng), coord(eng), coord(eng));
    CHECK(std::abs((r * v).norm() - v.norm()) < kTight);
    CHECK(((r.transpose() * (r * v)) - v).cwiseAbs().maxCoeff() < kTight);
  }
}

TEST_CASE("angles canonicalize into [0, 360)") {
  CHECK(RotationAngles(-10.0, 370.0) == RotationAngles(350.0, 10.0));
  CHECK(RotationAngles(360.0, 720.0) == RotationAngles(0.0, 0.0));
  CHECK(RotationAngles(360.0, 360.0).azimuth_deg == 0.0);
}

TEST_CASE("local_direction along the boresight of the identity frame") {
  const auto d = local_direction(Vec3(0, 0, 0), Vec3(1, 0, 0),
                                 Mat3::Identity());
  CHECK(d.azimuth_rad == 0.0);
  CHECK(d.elevation_rad == 0.0);
  CHECK(d.distance_m == doctest::Approx(1.0));
}

TEST_CASE("local_direction pole convention fixes azimuth at 0") {
  const auto d = local_direction(Vec3(0, 0, 0), Vec3(0, 0, 5),
                                 Mat3::Identity());
  CHECK(d.azimuth_rad == 0.0);
  CHECK(d.elevation_rad == doctest::Approx(std::numbers::pi / 2));
  CHECK(d.distance_m == doctest::Approx(5.0));
}

TEST_CASE("local_direction pulls a global +y target into a rotated frame") {
  // Frame rotated 90 degrees about z: its local x axis points along global
  // +y, so a +y target sits at local azimuth 0. Hand-checked with the
  // transpose-rotation oracle: R(90)^T (0,1,0) = (1,0,0).
  const auto d =
      local_direction(Vec3(0, 0, 0), Vec3(0, 3, 0), rot_z(90.0));
  CHECK(std::abs(d.azimuth_rad) < kTight);
  CHECK(std::abs(d.elevation_rad) < kTight);
  CHECK(d.distance_m == doctest::Approx(3.0));
}

TEST_CASE("local_direction rejects coincident endpoints") {
  CHECK_THROWS_AS(
      local_direction(Vec3(1, 2, 3), Vec3(1, 2, 3), Mat3::Identity()),
      std::invalid_argument);
}

TEST_CASE("local_direction distance is symmetric in its endpoints") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> coord(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3 a(coord(eng), coord(eng), coord(eng));
    const Vec3 b(coord(eng), coord(eng), coord(eng));
    if ((a - b).norm() == 0.0)
      continue;
    const auto ab = local_direction(a, b, Mat3::Identity());
    const auto ba = local_direction(b, a, Mat3::Identity());
    CHECK(ab.distance_m == ba.distance_m);
  }
}

TEST_CASE("facing_frame produces a right-handed orthonormal frame") {
  std::mt19937_64 eng(13);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec3 dir(coord(eng), coord(eng), coord(eng));
    if (dir.norm() < 1e-3)
      continue;
    const Mat3 f = facing_frame(dir);
    CHECK((f.transpose() * f - Mat3::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(f.determinant() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((f.col(0) - dir.normalized()).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(facing_frame(Vec3(0, 0, 0)), std::invalid_argument);
}

} // TEST_SUITE
