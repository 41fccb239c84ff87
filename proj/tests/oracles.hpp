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
//
// Test-only reference implementations. Each oracle recomputes a quantity
// along a different route than the library (naive loops, determinant forms,
// scalar trig) so agreement is meaningful.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "channel.hpp"
#include "geometry.hpp"

namespace oracles {

using risorient::Mat3;
using risorient::MatrixC;
using risorient::Vec3;

// Entrywise scalar-trig construction of the z-rotation, kept independent of
// geometry.cpp (no shared helpers).
inline Mat3 rot_z_reference(double deg) {
  const double r = deg * std::numbers::pi / 180.0;
  Mat3 m;
  m(0, 0) = std::cos(r);
  m(0, 1) = -std::sin(r);
  m(0, 2) = 0.0;
  m(1, 0) = std::sin(r);
  m(1, 1) = std::cos(r);
  m(1, 2) = 0.0;
  m(2, 0) = 0.0;
  m(2, 1) = 0.0;
  m(2, 2) = 1.0;
  return m;
}

inline Mat3 rot_x_reference(double deg) {
  const double r = deg * std::numbers::pi / 180.0;
  Mat3 m;
  m(0, 0) = 1.0;
  m(0, 1) = 0.0;
  m(0, 2) = 0.0;
  m(1, 0) = 0.0;
  m(1, 1) = std::cos(r);
  m(1, 2) = -std::sin(r);
  m(2, 0) = 0.0;
  m(2, 1) = std::sin(r);
  m(2, 2) = std::cos(r);
  return m;
}

// Triple-loop 3x3 product.
inline Mat3 mat3_product(const Mat3 &a, const Mat3 &b) {
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out(i, j) += a(i, k) * b(k, j);
  return out;
}

// Per-element dot-product-and-exponential steering evaluation.
inline Eigen::VectorXcd steering_reference(const std::vector<Vec3> &positions,
                                           double az_rad, double el_rad) {
  Eigen::VectorXcd a(static_cast<Eigen::Index>(positions.size()));
  const double ux = std::cos(el_rad) * std::cos(az_rad);
  const double uy = std::cos(el_rad) * std::sin(az_rad);
  const double uz = std::sin(el_rad);
  for (std::size_t n = 0; n < positions.size(); ++n) {
    const double dot =
        positions[n].x() * ux + positions[n].y() * uy + positions[n].z() * uz;
    const double ph = 2.0 * std::numbers::pi * dot;
    a(static_cast<Eigen::Index>(n)) = {std::cos(ph), std::sin(ph)};
  }
  return a;
}

// Elementwise triple sum for C = G diag(e^{j phi}) H + D.
inline MatrixC cascade_reference(const MatrixC &H, const MatrixC &G,
                                 const MatrixC &D,
                                 const std::vector<double> &phases) {
  const Eigen::Index nr = G.rows();
  const Eigen::Index nt = H.cols();
  const Eigen::Index n = H.rows();
  MatrixC c = MatrixC::Zero(nr, nt);
  for (Eigen::Index i = 0; i < nr; ++i)
    for (Eigen::Index j = 0; j < nt; ++j) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index k = 0; k < n; ++k)
        acc += G(i, k) *
               std::complex<double>(std::cos(phases[std::size_t(k)]),
                                    std::sin(phases[std::size_t(k)])) *
               H(k, j);
      c(i, j) = acc + (D.size() ? D(i, j) : std::complex<double>(0.0));
    }
  return c;
}

// Determinant-form rate log2 det(I + rho C C^H), the algebraic route the
// library deliberately avoids at high SNR.
inline double det_rate_reference(const MatrixC &c, double rho) {
  const Eigen::Index nr = c.rows();
  const MatrixC m =
      MatrixC::Identity(nr, nr) + rho * (c * c.adjoint());
  const std::complex<double> det = m.determinant();
  return std::log2(std::abs(det));
}

// Brute-force per-path outer-product accumulation of a link matrix.
struct ReferencePath {
  std::complex<double> weight; // gain, element gains included
  Eigen::VectorXcd a_tx;
  Eigen::VectorXcd a_rx;
};

inline MatrixC link_reference(const std::vector<ReferencePath> &paths,
                              double amplitude, Eigen::Index nr,
                              Eigen::Index nt) {
  MatrixC m = MatrixC::Zero(nr, nt);
  for (const auto &p : paths)
    for (Eigen::Index i = 0; i < nr; ++i)
      for (Eigen::Index j = 0; j < nt; ++j)
        m(i, j) += amplitude * p.weight * p.a_rx(i) * std::conj(p.a_tx(j));
  return m;
}

// Deterministic random complex matrices/vectors for tests.
inline MatrixC random_matrix(Eigen::Index rows, Eigen::Index cols,
                             std::mt19937_64 &eng) {
  std::normal_distribution<double> n(0.0, 1.0);
  MatrixC m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = std::complex<double>(n(eng), n(eng)) / std::numbers::sqrt2;
  return m;
}

inline MatrixC random_unitary(Eigen::Index n, std::mt19937_64 &eng) {
  const MatrixC a = random_matrix(n, n, eng);
  const Eigen::HouseholderQR<MatrixC> qr(a);
  MatrixC q = qr.householderQ();
  return q;
}

} // namespace oracles
