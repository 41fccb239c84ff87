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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "arrays.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace risorient {

using MatrixC = Eigen::MatrixXcd;

enum class Environment { Indoor, Outdoor };

enum class PhaseStrategy { DominantPair, Random, Zero };

struct PhaseSettings {
  PhaseStrategy strategy = PhaseStrategy::DominantPair;
  // When false, phases are computed once per realization at zero rotation and
  // reused at every swept orientation.
  bool reoptimize_per_rotation = true;
  int oracle_bits = 2;
};

struct NodeLayout {
  Vec3 tx_pos{0.0, 25.0, 2.0};
  Vec3 rx_pos{45.0, 45.0, 1.0};
  Vec3 ris_pos{40.0, 50.0, 2.0};
  bool direct_link_blocked = true;
};

inline ArraySpec default_array(ArrayKind kind, int nx, int ny, double q) {
  ArraySpec a;
  a.kind = kind;
  a.nx = nx;
  a.ny = ny;
  a.pattern_exponent_q = q;
  return a;
}

// Multipath statistics. Cluster centers are drawn uniformly within
// +/- center_range_deg (azimuth and elevation) of the geometric link
// direction; subrays add Laplacian offsets clipped at
// subray_clip_sigmas * angular_spread_deg. The bounded support means a panel
// turned far enough away from a link sees exactly zero energy from it.
struct ClusterParams {
  double mean_cluster_count = 1.8;
  int subrays_per_cluster = 10;
  double angular_spread_deg = 5.0;
  double center_range_deg = 15.0;
  double subray_clip_sigmas = 3.0;
  double ricean_k_db = 8.0; // may be +inf: pure LOS when the LOS state is on
  // When set, overrides the per-LOS-state shadow sigma of the path loss block.
  std::optional<double> shadow_sigma_db;
};

struct PathLossParams {
  double a_los = 32.4;
  double n_los = 1.73;
  double sigma_los_db = 3.0;
  double a_nlos = 32.4;
  double n_nlos = 3.19;
  double sigma_nlos_db = 8.0;
  bool shadowing_enabled = true;

  static PathLossParams defaults_for(Environment env);
};

struct LosParams {
  enum class Override { None, ForceLos, ForceNlos };
  double d1_m = 1.2;
  double d2_m = 4.7;
  Override force = Override::None;

  static LosParams defaults_for(Environment env);
};

struct ScenarioConfig {
  Environment environment = Environment::Indoor;
  double frequency_ghz = 28.0;
  NodeLayout layout;
  ArraySpec bs_array = default_array(ArrayKind::ULA, 8, 1, 0.0);
  ArraySpec user_array = default_array(ArrayKind::ULA, 4, 1, 0.0);
  ArraySpec ris_array = default_array(ArrayKind::UPA, 8, 8, 1.0);
  double noise_dbm = -100.0;
  double tx_power_dbm = 10.0;
  int realizations = 100;
  std::uint64_t master_seed = 1;
  ClusterParams clusters;
  PathLossParams path_loss = PathLossParams::defaults_for(Environment::Indoor);
  LosParams los = LosParams::defaults_for(Environment::Indoor);
  PhaseSettings phases;
  int threads = 0; // 0 = hardware concurrency
};

struct Violation {
  std::string field;
  std::string message;
};

// Checks the scenario against the environment rules (indoor: tx height <= 3 m,
// rx height < 2 m, RIS-rx distance <= 10 m; outdoor: tx height <= 20 m), the
// supported carrier frequencies, and the structural invariants of every
// block. Returns an empty list when the scenario is runnable.
std::vector<Violation> validate_scenario(const ScenarioConfig &config);

// Distance-decay LOS probability p = min(d1/d, 1) (1 - e^(-d/d2)) + e^(-d/d2).
// tx_height_m is accepted for interface stability but unused by this model.
double los_probability(double distance_m, Environment env, double tx_height_m);
double los_probability(double distance_m, const LosParams &params);

// Mean path loss A + 10 n log10(d) + 20 log10(f_GHz), no shadowing term.
double path_loss_mean_db(double distance_m, double frequency_ghz,
                         const PathLossParams &params, bool is_los);

// Full path loss including one lognormal shadowing draw from the stream
// (skipped when shadowing is disabled).
double path_loss_db(double distance_m, double frequency_ghz,
                    const PathLossParams &params, bool is_los, RngStream &rng,
                    std::optional<double> sigma_override_db = {});
double path_loss_db(double distance_m, double frequency_ghz, Environment env,
                    bool is_los, RngStream &rng);

// One propagation path: complex gain plus global-frame unit directions at
// both ends (departure as seen from the transmitter, arrival as the direction
// the receiver looks back along).
struct PathDraw {
  std::complex<double> gain;
  Vec3 departure_dir{1.0, 0.0, 0.0};
  Vec3 arrival_dir{-1.0, 0.0, 0.0};
  bool is_los = false;

  bool operator==(const PathDraw &o) const {
    return gain == o.gain && departure_dir.x() == o.departure_dir.x() &&
           departure_dir.y() == o.departure_dir.y() &&
           departure_dir.z() == o.departure_dir.z() &&
           arrival_dir.x() == o.arrival_dir.x() &&
           arrival_dir.y() == o.arrival_dir.y() &&
           arrival_dir.z() == o.arrival_dir.z() && is_los == o.is_los;
  }
};

struct ClusterSet {
  int cluster_count = 0;
  bool has_los_path = false;
  std::vector<PathDraw> paths;

  bool operator==(const ClusterSet &) const = default;
};

struct LinkGeometry {
  Vec3 from;
  Vec3 to;
  double frequency_ghz = 28.0;
};

// Draws cluster count, angles, and gains for one link. Total mean path power
// is 1 before path loss: the NLOS ensemble carries 1/(K+1) and the LOS path
// K/(K+1) when the LOS state is on (K from ricean_k_db), otherwise the NLOS
// ensemble carries everything. Angle draws live in the global frame so the
// same ClusterSet can be re-assembled under any panel orientation.
ClusterSet generate_clusters(RngStream &rng, const LinkGeometry &link,
                             const ClusterParams &params, bool los_state);

// Everything random about one link in one realization.
struct LinkState {
  bool los = false;
  double shadow_db = 0.0;
  ClusterSet clusters;

  bool operator==(const LinkState &) const = default;
};

// Everything random about one realization. Derived purely from
// (master_seed, realization_index); rotation never enters, which is what
// makes orientation sweeps isolate the geometry effect.
struct RealizationDraw {
  std::uint64_t seed = 0;
  LinkState bs_ris;
  LinkState ris_user;
  LinkState bs_user;

  bool operator==(const RealizationDraw &) const = default;
};

RealizationDraw draw_realization_state(const ScenarioConfig &config,
                                       int realization_index);

// Deployment frames of the three nodes (local-to-global maps).
struct NodeFrames {
  Mat3 bs = Mat3::Identity();
  Mat3 user = Mat3::Identity();
  Mat3 ris_base = Mat3::Identity();
};

NodeFrames resolve_node_frames(const ScenarioConfig &config);

// Sum of per-path rank-1 terms: 10^(-PL/20) sum_p gain_p g_rx g_tx a_rx a_tx^H
// with steering vectors and element gains evaluated in each node's local
// frame. Paths with zero element gain at either end are skipped, so a link
// whose every path is behind a panel comes out exactly zero.
MatrixC assemble_link(const ClusterSet &clusters, const ArraySpec &tx_spec,
                      const ArraySpec &rx_spec, const Mat3 &tx_frame,
                      const Mat3 &rx_frame, double path_loss_db);

struct ChannelRealization {
  MatrixC H; // BS -> RIS, N x Nt
  MatrixC G; // RIS -> user, Nr x N
  MatrixC D; // BS -> user, Nr x Nt (zero when the direct link is blocked)
  std::uint64_t seed_used = 0;
};

// Assembles H/G/D from an existing draw at the given panel rotation. The RIS
// frame is compose_rotation(rotation) * ris_base; BS and user keep their
// deployment frames.
ChannelRealization assemble_realization(const ScenarioConfig &config,
                                        const RealizationDraw &draw,
                                        const RotationAngles &rotation);

ChannelRealization generate_realization(const ScenarioConfig &config,
                                        const RotationAngles &rotation,
                                        int realization_index);

} // namespace risorient
