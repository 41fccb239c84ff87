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

#include "ris_control.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "rate.hpp"

namespace risorient {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0)
    w += kTwoPi;
  return w + 0.0;
}

void check_cascade_dims(const MatrixC &H, const MatrixC &G, const MatrixC &D,
                        Eigen::Index n_phases) {
  if (G.cols() != H.rows())
    throw std::invalid_argument("cascade dimension mismatch: G cols != H rows");
  if (n_phases != H.rows())
    throw std::invalid_argument(
        "cascade dimension mismatch: phase count != RIS element count");
  if (D.size() != 0 && (D.rows() != G.rows() || D.cols() != H.cols()))
    throw std::invalid_argument("cascade dimension mismatch: D shape");
}

} // namespace

MatrixC assemble_end_to_end(const MatrixC &H, const MatrixC &G,
                            const MatrixC &D, const PhaseConfig &phases) {
  check_cascade_dims(H, G, D,
                     static_cast<Eigen::Index>(phases.phases.size()));
  Eigen::VectorXcd shifts(static_cast<Eigen::Index>(phases.phases.size()));
  for (Eigen::Index n = 0; n < shifts.size(); ++n)
    shifts(n) = std::polar(1.0, phases.phases[static_cast<std::size_t>(n)]);
  MatrixC c = G * shifts.asDiagonal() * H;
  if (D.size() != 0)
    c += D;
  return c;
}

PhaseConfig align_phases(const MatrixC &H, const MatrixC &G,
                         PhaseStrategy strategy, std::uint64_t random_seed) {
  if (G.cols() != H.rows())
    throw std::invalid_argument("align_phases: G cols != H rows");
  const Eigen::Index n = H.rows();
  PhaseConfig out;
  out.phases.assign(static_cast<std::size_t>(n), 0.0);

  switch (strategy) {
  case PhaseStrategy::Zero:
    return out;
  case PhaseStrategy::Random: {
    RngStream rng(random_seed);
    for (auto &p : out.phases)
      p = rng.uniform(0.0, kTwoPi);
    return out;
  }
  case PhaseStrategy::DominantPair:
    break;
  }

  if (H.norm() == 0.0 || G.norm() == 0.0) {
    out.degraded_fallback = true;
    return out;
  }

  const Eigen::JacobiSVD<MatrixC> svd_h(H, Eigen::ComputeThinV);
  const Eigen::JacobiSVD<MatrixC> svd_g(G, Eigen::ComputeThinU);
  const Eigen::VectorXcd v = svd_h.matrixV().col(0);
  const Eigen::VectorXcd u = svd_g.matrixU().col(0);

  const Eigen::VectorXcd h_eff = H * v;           // N
  const Eigen::VectorXcd g_eff = G.adjoint() * u; // N, conj of u^H G

  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> term = std::conj(g_eff(i)) * h_eff(i);
    if (term == std::complex<double>(0.0, 0.0))
      continue;
    out.phases[static_cast<std::size_t>(i)] = wrap_phase(-std::arg(term));
  }
  return out;
}

PhaseConfig brute_force_phases(const MatrixC &H, const MatrixC &G,
                               const MatrixC &D, int bits, double pt_dbm,
                               double noise_dbm, int threads) {
  const Eigen::Index n = H.rows();
  check_cascade_dims(H, G, D, n);
  if (bits < 1)
    throw std::invalid_argument("brute_force_phases: bits must be >= 1");
  const long long total_bits = static_cast<long long>(n) * bits;
  if (total_bits > 20)
    throw std::invalid_argument(
        "brute_force_phases: search space exceeds 2^20 configurations");

  const std::uint64_t levels = 1ull << bits;
  const std::uint64_t total = 1ull << total_bits;
  const double step = kTwoPi / static_cast<double>(levels);

  // Element 0 occupies the most significant digit so ascending indices
  // enumerate phase tuples in lexicographic order.
  const auto phases_of = [&](std::uint64_t idx) {
    PhaseConfig pc;
    pc.phases.resize(static_cast<std::size_t>(n));
    for (Eigen::Index e = 0; e < n; ++e) {
      const int shift = static_cast<int>((n - 1 - e)) * bits;
      const std::uint64_t digit = (idx >> shift) & (levels - 1);
      pc.phases[static_cast<std::size_t>(e)] =
          static_cast<double>(digit) * step;
    }
    return pc;
  };

  struct Best {
    double rate = -1.0;
    std::uint64_t idx = 0;
  };

  const std::size_t n_chunks =
      std::min<std::uint64_t>(64, std::max<std::uint64_t>(1, total / 1024));
  const std::uint64_t chunk = (total + n_chunks - 1) / n_chunks;
  std::vector<Best> best(n_chunks);

  parallel_for(n_chunks, threads, [&](std::size_t ci) {
    const std::uint64_t lo = ci * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
    Best b;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const PhaseConfig pc = phases_of(idx);
      const double r =
          achievable_rate(assemble_end_to_end(H, G, D, pc), pt_dbm, noise_dbm);
      if (r > b.rate) {
        b.rate = r;
        b.idx = idx;
      }
    }
    best[ci] = b;
  });

  Best overall;
  for (const Best &b : best) {
    if (b.rate > overall.rate ||
        (b.rate == overall.rate && b.idx < overall.idx))
      overall = b;
  }
  return phases_of(overall.idx);
}

PhaseConfig quantize_phases(const PhaseConfig &phases, int bits) {
  if (bits < 1)
    throw std::invalid_argument("quantize_phases: bits must be >= 1");
  const std::uint64_t levels = 1ull << bits;
  const double step = kTwoPi / static_cast<double>(levels);
  PhaseConfig out;
  out.phases.reserve(phases.phases.size());
  for (double p : phases.phases) {
    const auto k = static_cast<std::uint64_t>(
                       std::llround(wrap_phase(p) / step)) %
                   levels;
    out.phases.push_back(static_cast<double>(k) * step);
  }
  return out;
}

} // namespace risorient
