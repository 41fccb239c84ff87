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

#include "channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace risorient {

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr double kPi = std::numbers::pi;

Vec3 dir_from_azel(double az_rad, double el_rad) {
  const double ce = std::cos(el_rad);
  return {ce * std::cos(az_rad), ce * std::sin(az_rad), std::sin(el_rad)};
}

void azel_of(const Vec3 &unit, double &az_rad, double &el_rad) {
  az_rad = std::atan2(unit.y(), unit.x());
  el_rad = std::asin(std::clamp(unit.z(), -1.0, 1.0));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void check_array(const ArraySpec &a, const char *name,
                 std::vector<Violation> &out) {
  if (a.nx < 1 || a.ny < 1)
    out.push_back({name, std::string(name) + ": element counts must be >= 1"});
  if (a.kind == ArrayKind::ULA && a.ny != 1)
    out.push_back({name, std::string(name) + ": a ULA requires ny = 1"});
  if (!(a.spacing_wavelengths > 0.0) ||
      !std::isfinite(a.spacing_wavelengths))
    out.push_back(
        {name, std::string(name) + ": spacing must be positive and finite"});
  if (!(a.pattern_exponent_q >= 0.0) || !std::isfinite(a.pattern_exponent_q))
    out.push_back(
        {name, std::string(name) + ": pattern exponent must be >= 0"});
  if (a.facing.mode == FacingSpec::Mode::Explicit &&
      (!a.facing.boresight.allFinite() || a.facing.boresight.norm() == 0.0))
    out.push_back({name, std::string(name) +
                             ": explicit facing needs a nonzero finite vector"});
}

} // namespace

PathLossParams PathLossParams::defaults_for(Environment env) {
  PathLossParams p;
  if (env == Environment::Outdoor) {
    p.n_los = 2.1;
    p.sigma_los_db = 4.0;
    p.n_nlos = 3.19;
    p.sigma_nlos_db = 8.2;
  } else {
    p.n_los = 1.73;
    p.sigma_los_db = 3.0;
    p.n_nlos = 3.19;
    p.sigma_nlos_db = 8.0;
  }
  return p;
}

LosParams LosParams::defaults_for(Environment env) {
  LosParams p;
  if (env == Environment::Outdoor) {
    p.d1_m = 18.0;
    p.d2_m = 36.0;
  } else {
    p.d1_m = 1.2;
    p.d2_m = 4.7;
  }
  return p;
}

std::vector<Violation> validate_scenario(const ScenarioConfig &c) {
  std::vector<Violation> v;

  if (!(c.frequency_ghz == 28.0 || c.frequency_ghz == 73.0))
    v.push_back({"frequency_ghz", "carrier frequency must be 28 or 73 GHz "
                                  "(got " +
                                      fmt(c.frequency_ghz) + ")"});

  const Vec3 &tx = c.layout.tx_pos;
  const Vec3 &rx = c.layout.rx_pos;
  const Vec3 &ris = c.layout.ris_pos;
  if (!tx.allFinite() || !rx.allFinite() || !ris.allFinite()) {
    v.push_back({"layout", "node positions must be finite"});
    return v;
  }
  if (tx.z() < 0.0 || rx.z() < 0.0 || ris.z() < 0.0)
    v.push_back({"layout", "node heights must be >= 0"});
  if ((tx - rx).norm() == 0.0 || (tx - ris).norm() == 0.0 ||
      (rx - ris).norm() == 0.0)
    v.push_back({"layout", "node positions must be pairwise distinct"});

  if (c.environment == Environment::Indoor) {
    if (tx.z() > 3.0)
      v.push_back({"layout.tx", "indoor tx height " + fmt(tx.z()) +
                                    " m exceeds the 3 m limit"});
    if (!(rx.z() < 2.0))
      v.push_back({"layout.rx", "indoor rx height " + fmt(rx.z()) +
                                    " m must be below 2 m"});
    const double dr = (ris - rx).norm();
    if (dr > 10.0)
      v.push_back({"layout.ris", "indoor RIS-rx distance " + fmt(dr) +
                                     " m exceeds the 10 m limit"});
  } else {
    if (tx.z() > 20.0)
      v.push_back({"layout.tx", "outdoor tx height " + fmt(tx.z()) +
                                    " m exceeds the 20 m limit"});
  }

  check_array(c.bs_array, "bs_array", v);
  check_array(c.user_array, "user_array", v);
  check_array(c.ris_array, "ris_array", v);

  if (c.realizations < 1)
    v.push_back({"realizations", "realizations must be >= 1"});
  if (!std::isfinite(c.noise_dbm))
    v.push_back({"noise_dbm", "noise power must be finite"});
  if (!std::isfinite(c.tx_power_dbm))
    v.push_back({"tx_power_dbm", "transmit power must be finite"});

  const ClusterParams &cl = c.clusters;
  if (!(cl.mean_cluster_count > 0.0) || !std::isfinite(cl.mean_cluster_count))
    v.push_back({"clusters.mean_count", "mean cluster count must be > 0"});
  if (cl.subrays_per_cluster < 1)
    v.push_back({"clusters.subrays", "subrays per cluster must be >= 1"});
  if (!(cl.angular_spread_deg > 0.0) || !std::isfinite(cl.angular_spread_deg))
    v.push_back({"clusters.angular_spread_deg", "angular spread must be > 0"});
  if (!(cl.center_range_deg >= 0.0) || !std::isfinite(cl.center_range_deg))
    v.push_back({"clusters.center_range_deg", "center range must be >= 0"});
  if (!(cl.subray_clip_sigmas >= 0.0) || !std::isfinite(cl.subray_clip_sigmas))
    v.push_back({"clusters.subray_clip_sigmas", "subray clip must be >= 0"});
  if (std::isnan(cl.ricean_k_db))
    v.push_back({"clusters.ricean_k_db", "Ricean K must not be NaN"});
  if (cl.shadow_sigma_db && !(*cl.shadow_sigma_db >= 0.0))
    v.push_back({"clusters.shadow_sigma_db", "shadow sigma must be >= 0"});

  const PathLossParams &pl = c.path_loss;
  for (double x : {pl.a_los, pl.n_los, pl.a_nlos, pl.n_nlos})
    if (!std::isfinite(x)) {
      v.push_back({"path_loss", "path loss coefficients must be finite"});
      break;
    }
  if (!(pl.sigma_los_db >= 0.0) || !(pl.sigma_nlos_db >= 0.0))
    v.push_back({"path_loss", "shadowing sigmas must be >= 0"});

  if (!(c.los.d1_m > 0.0) || !(c.los.d2_m > 0.0))
    v.push_back({"los", "LOS model distances d1, d2 must be > 0"});

  if (c.phases.oracle_bits < 1)
    v.push_back({"phases.oracle_bits", "oracle bit depth must be >= 1"});

  return v;
}

double los_probability(double distance_m, const LosParams &params) {
  if (!(distance_m > 0.0))
    throw std::invalid_argument("los_probability: distance must be > 0");
  const double decay = std::exp(-distance_m / params.d2_m);
  const double near = std::min(params.d1_m / distance_m, 1.0);
  return near * (1.0 - decay) + decay;
}

double los_probability(double distance_m, Environment env,
                       double /*tx_height_m*/) {
  return los_probability(distance_m, LosParams::defaults_for(env));
}

double path_loss_mean_db(double distance_m, double frequency_ghz,
                         const PathLossParams &params, bool is_los) {
  if (!(distance_m > 0.0))
    throw std::invalid_argument("path_loss: distance must be > 0");
  if (!(frequency_ghz > 0.0))
    throw std::invalid_argument("path_loss: frequency must be > 0");
  const double a = is_los ? params.a_los : params.a_nlos;
  const double n = is_los ? params.n_los : params.n_nlos;
  return a + 10.0 * n * std::log10(distance_m) +
         20.0 * std::log10(frequency_ghz);
}

double path_loss_db(double distance_m, double frequency_ghz,
                    const PathLossParams &params, bool is_los, RngStream &rng,
                    std::optional<double> sigma_override_db) {
  double pl = path_loss_mean_db(distance_m, frequency_ghz, params, is_los);
  if (params.shadowing_enabled) {
    const double sigma = sigma_override_db
                             ? *sigma_override_db
                             : (is_los ? params.sigma_los_db
                                       : params.sigma_nlos_db);
    pl += rng.gaussian() * sigma;
  }
  return pl;
}

double path_loss_db(double distance_m, double frequency_ghz, Environment env,
                    bool is_los, RngStream &rng) {
  return path_loss_db(distance_m, frequency_ghz,
                      PathLossParams::defaults_for(env), is_los, rng);
}

ClusterSet generate_clusters(RngStream &rng, const LinkGeometry &link,
                             const ClusterParams &params, bool los_state) {
  ClusterSet cs;
  const Vec3 span = link.to - link.from;
  const double dist = span.norm();
  if (!(dist > 0.0))
    throw std::invalid_argument("generate_clusters: degenerate link");
  const Vec3 dep0 = span / dist;
  const Vec3 arr0 = -dep0;

  cs.cluster_count = std::max(1, rng.poisson(params.mean_cluster_count));
  cs.has_los_path = los_state;

  const double k_lin =
      std::isinf(params.ricean_k_db)
          ? std::numeric_limits<double>::infinity()
          : std::pow(10.0, params.ricean_k_db / 10.0);
  double nlos_power = 1.0;
  double los_amp = 0.0;
  if (los_state) {
    if (std::isinf(k_lin)) {
      nlos_power = 0.0;
      los_amp = 1.0;
    } else {
      nlos_power = 1.0 / (k_lin + 1.0);
      los_amp = std::sqrt(k_lin / (k_lin + 1.0));
    }
  }

  const int s_per = params.subrays_per_cluster;
  cs.paths.reserve(static_cast<std::size_t>(cs.cluster_count) * s_per + 1);

  if (los_state) {
    // Deterministic LOS term: geometry-locked phase, no stream consumption.
    const double lambda_m = kSpeedOfLight / (link.frequency_ghz * 1e9);
    const double turns = dist / lambda_m;
    const double phase = -2.0 * kPi * (turns - std::floor(turns));
    PathDraw los;
    los.gain = std::polar(los_amp, phase);
    los.departure_dir = dep0;
    los.arrival_dir = arr0;
    los.is_los = true;
    cs.paths.push_back(los);
  }

  double dep0_az, dep0_el, arr0_az, arr0_el;
  azel_of(dep0, dep0_az, dep0_el);
  azel_of(arr0, arr0_az, arr0_el);

  const double range = deg2rad(params.center_range_deg);
  const double spread = deg2rad(params.angular_spread_deg);
  const double scale = spread / std::numbers::sqrt2; // Laplace std = spread
  const double clip = params.subray_clip_sigmas * spread;
  const double subray_amp =
      std::sqrt(nlos_power / (static_cast<double>(cs.cluster_count) * s_per));

  for (int c = 0; c < cs.cluster_count; ++c) {
    const double cda = rng.uniform(-range, range);
    const double cde = rng.uniform(-range, range);
    const double caa = rng.uniform(-range, range);
    const double cae = rng.uniform(-range, range);
    for (int s = 0; s < s_per; ++s) {
      const double oda = std::clamp(rng.laplace(scale), -clip, clip);
      const double ode = std::clamp(rng.laplace(scale), -clip, clip);
      const double oaa = std::clamp(rng.laplace(scale), -clip, clip);
      const double oae = std::clamp(rng.laplace(scale), -clip, clip);
      const std::complex<double> g = rng.cgaussian() * subray_amp;
      PathDraw p;
      p.gain = g;
      p.departure_dir = dir_from_azel(
          dep0_az + cda + oda,
          std::clamp(dep0_el + cde + ode, -kPi / 2.0, kPi / 2.0));
      p.arrival_dir = dir_from_azel(
          arr0_az + caa + oaa,
          std::clamp(arr0_el + cae + oae, -kPi / 2.0, kPi / 2.0));
      p.is_los = false;
      cs.paths.push_back(p);
    }
  }
  return cs;
}

RealizationDraw draw_realization_state(const ScenarioConfig &config,
                                       int realization_index) {
  if (realization_index < 0)
    throw std::invalid_argument("realization index must be >= 0");
  RealizationDraw d;
  d.seed = mix64(config.master_seed,
                 static_cast<std::uint64_t>(realization_index));

  const auto draw_link = [&](std::uint64_t stream, const Vec3 &from,
                             const Vec3 &to) {
    RngStream rng(mix64(d.seed, stream));
    LinkState st;
    const double dist = (to - from).norm();
    switch (config.los.force) {
    case LosParams::Override::ForceLos:
      st.los = true;
      break;
    case LosParams::Override::ForceNlos:
      st.los = false;
      break;
    case LosParams::Override::None:
      st.los = rng.bernoulli(los_probability(dist, config.los));
      break;
    }
    if (config.path_loss.shadowing_enabled) {
      const double sigma = config.clusters.shadow_sigma_db
                               ? *config.clusters.shadow_sigma_db
                               : (st.los ? config.path_loss.sigma_los_db
                                         : config.path_loss.sigma_nlos_db);
      st.shadow_db = rng.gaussian() * sigma;
    }
    st.clusters = generate_clusters(
        rng, LinkGeometry{from, to, config.frequency_ghz}, config.clusters,
        st.los);
    return st;
  };

  d.bs_ris =
      draw_link(kStreamLinkBsRis, config.layout.tx_pos, config.layout.ris_pos);
  d.ris_user = draw_link(kStreamLinkRisUser, config.layout.ris_pos,
                         config.layout.rx_pos);
  if (!config.layout.direct_link_blocked)
    d.bs_user = draw_link(kStreamLinkBsUser, config.layout.tx_pos,
                          config.layout.rx_pos);
  return d;
}

NodeFrames resolve_node_frames(const ScenarioConfig &config) {
  const Vec3 &tx = config.layout.tx_pos;
  const Vec3 &rx = config.layout.rx_pos;
  const Vec3 &ris = config.layout.ris_pos;

  const auto frame_for = [](const FacingSpec &f, const Vec3 &auto_dir) {
    switch (f.mode) {
    case FacingSpec::Mode::Global:
      return Mat3(Mat3::Identity());
    case FacingSpec::Mode::Explicit:
      return facing_frame(f.boresight);
    case FacingSpec::Mode::Auto:
    default:
      return facing_frame(auto_dir);
    }
  };

  Vec3 bisector =
      (tx - ris).normalized() + (rx - ris).normalized();
  if (bisector.norm() < 1e-9)
    bisector = (tx - ris).normalized();

  NodeFrames frames;
  frames.bs = frame_for(config.bs_array.facing, ris - tx);
  frames.user = frame_for(config.user_array.facing, ris - rx);
  frames.ris_base = frame_for(config.ris_array.facing, bisector);
  return frames;
}

MatrixC assemble_link(const ClusterSet &clusters, const ArraySpec &tx_spec,
                      const ArraySpec &rx_spec, const Mat3 &tx_frame,
                      const Mat3 &rx_frame, double path_loss_db) {
  const int nt = tx_spec.count();
  const int nr = rx_spec.count();
  const auto tx_pos = element_positions(tx_spec);
  const auto rx_pos = element_positions(rx_spec);

  const std::size_t n_paths = clusters.paths.size();
  Eigen::MatrixXcd a_tx(nt, static_cast<Eigen::Index>(n_paths));
  Eigen::MatrixXcd a_rx(nr, static_cast<Eigen::Index>(n_paths));
  Eigen::VectorXcd w(static_cast<Eigen::Index>(n_paths));

  const auto fill_column = [](const std::vector<Vec3> &pos,
                              const LocalDirection &dir, auto col) {
    const double ce = std::cos(dir.elevation_rad);
    const Vec3 u(ce * std::cos(dir.azimuth_rad),
                 ce * std::sin(dir.azimuth_rad), std::sin(dir.elevation_rad));
    for (std::size_t n = 0; n < pos.size(); ++n) {
      const double phase = 2.0 * kPi * pos[n].dot(u);
      col(static_cast<Eigen::Index>(n)) =
          std::complex<double>(std::cos(phase), std::sin(phase));
    }
  };

  Eigen::Index active = 0;
  for (const PathDraw &p : clusters.paths) {
    if (p.gain == std::complex<double>(0.0, 0.0))
      continue;
    const LocalDirection dep = local_direction(p.departure_dir, tx_frame);
    const double g_tx =
        element_gain(angle_from_boresight(dep), tx_spec.pattern_exponent_q,
                     tx_spec.hemisphere_cutoff);
    if (g_tx == 0.0)
      continue;
    const LocalDirection arr = local_direction(p.arrival_dir, rx_frame);
    const double g_rx =
        element_gain(angle_from_boresight(arr), rx_spec.pattern_exponent_q,
                     rx_spec.hemisphere_cutoff);
    if (g_rx == 0.0)
      continue;
    fill_column(tx_pos, dep, a_tx.col(active));
    fill_column(rx_pos, arr, a_rx.col(active));
    w(active) = p.gain * (g_tx * g_rx);
    ++active;
  }

  MatrixC m = MatrixC::Zero(nr, nt);
  if (active > 0) {
    const double amp = std::pow(10.0, -path_loss_db / 20.0);
    m = a_rx.leftCols(active) *
        (amp * w.head(active)).asDiagonal() *
        a_tx.leftCols(active).adjoint();
  }
  return m;
}

ChannelRealization assemble_realization(const ScenarioConfig &config,
                                        const RealizationDraw &draw,
                                        const RotationAngles &rotation) {
  const NodeFrames frames = resolve_node_frames(config);
  const Mat3 ris_frame = compose_rotation(rotation) * frames.ris_base;

  const double d_h = (config.layout.ris_pos - config.layout.tx_pos).norm();
  const double d_g = (config.layout.rx_pos - config.layout.ris_pos).norm();

  ChannelRealization out;
  out.seed_used = draw.seed;

  const double pl_h = path_loss_mean_db(d_h, config.frequency_ghz,
                                        config.path_loss, draw.bs_ris.los) +
                      draw.bs_ris.shadow_db;
  out.H = assemble_link(draw.bs_ris.clusters, config.bs_array,
                        config.ris_array, frames.bs, ris_frame, pl_h);

  const double pl_g = path_loss_mean_db(d_g, config.frequency_ghz,
                                        config.path_loss, draw.ris_user.los) +
                      draw.ris_user.shadow_db;
  out.G = assemble_link(draw.ris_user.clusters, config.ris_array,
                        config.user_array, ris_frame, frames.user, pl_g);

  if (config.layout.direct_link_blocked) {
    out.D = MatrixC::Zero(config.user_array.count(), config.bs_array.count());
  } else {
    const double d_d = (config.layout.rx_pos - config.layout.tx_pos).norm();
    const double pl_d = path_loss_mean_db(d_d, config.frequency_ghz,
                                          config.path_loss,
                                          draw.bs_user.los) +
                        draw.bs_user.shadow_db;
    out.D = assemble_link(draw.bs_user.clusters, config.bs_array,
                          config.user_array, frames.bs, frames.user, pl_d);
  }

  if (!out.H.allFinite() || !out.G.allFinite() || !out.D.allFinite())
    throw std::runtime_error("channel realization has non-finite entries");
  return out;
}

ChannelRealization generate_realization(const ScenarioConfig &config,
                                        const RotationAngles &rotation,
                                        int realization_index) {
  return assemble_realization(
      config, draw_realization_state(config, realization_index), rotation);
}

} // namespace risorient
