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

#include "emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "version.hpp"

namespace risorient {

namespace {

using nlohmann::json;

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out)
    throw IoError("write failed: " + path);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string grid_csv(const RateHeatmap &hm, bool std_errors) {
  std::ostringstream os;
  os << hm.axis2_name << "\\" << hm.axis1_name;
  for (double v : hm.axis1)
    os << "," << format_rate(v);
  os << "\n";
  for (std::size_t row = 0; row < hm.rows(); ++row) {
    os << format_rate(hm.axis2[row]);
    for (std::size_t col = 0; col < hm.cols(); ++col) {
      const RateResult &c = hm.at(row, col);
      os << "," << format_rate(std_errors ? c.std_error : c.mean_rate);
    }
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string &s, const std::string &path) {
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw IoError(path + ": malformed number '" + s + "'");
  return v;
}

json rotation_json(const RotationAngles &rot) {
  return json{{"phi_deg", rot.azimuth_deg}, {"theta_deg", rot.elevation_deg}};
}

// Five-anchor linear colormap from deep blue-violet to yellow.
std::string colormap(double t) {
  struct Rgb {
    double r, g, b;
  };
  static constexpr Rgb anchors[5] = {{68, 1, 84},
                                     {59, 82, 139},
                                     {33, 145, 140},
                                     {94, 201, 98},
                                     {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0);
  const double x = t * 4.0;
  const int lo = std::min(3, static_cast<int>(x));
  const double f = x - lo;
  const auto mix = [&](double a, double b) { return a + (b - a) * f; };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(mix(anchors[lo].r,
                                                 anchors[lo + 1].r))),
                static_cast<int>(std::lround(mix(anchors[lo].g,
                                                 anchors[lo + 1].g))),
                static_cast<int>(std::lround(mix(anchors[lo].b,
                                                 anchors[lo + 1].b))));
  return buf;
}

std::string format_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

} // namespace

std::string format_rate(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_heatmap_csv(const RateHeatmap &hm, const std::string &path) {
  if (hm.cells.size() != hm.rows() * hm.cols())
    throw IoError("heatmap grid does not match its axes");
  write_file(path, grid_csv(hm, false));
  write_file(path + ".stderr.csv", grid_csv(hm, true));
}

RateHeatmap read_heatmap_csv(const std::string &path) {
  const std::string text = read_file(path);
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line))
    throw IoError(path + ": empty CSV");
  const auto header = split_csv_line(line);
  if (header.empty())
    throw IoError(path + ": missing header row");
  const std::size_t slash = header[0].find('\\');
  if (slash == std::string::npos)
    throw IoError(path + ": header corner must be <axis2>\\<axis1>");

  RateHeatmap hm;
  hm.axis2_name = header[0].substr(0, slash);
  hm.axis1_name = header[0].substr(slash + 1);
  for (std::size_t i = 1; i < header.size(); ++i)
    hm.axis1.push_back(parse_double(header[i], path));

  while (std::getline(is, line)) {
    if (line.empty())
      continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != hm.axis1.size() + 1)
      throw IoError(path + ": row has " + std::to_string(fields.size()) +
                    " fields, expected " + std::to_string(hm.axis1.size() + 1));
    hm.axis2.push_back(parse_double(fields[0], path));
    for (std::size_t i = 1; i < fields.size(); ++i) {
      RateResult r;
      r.mean_rate = parse_double(fields[i], path);
      hm.cells.push_back(r);
    }
  }
  if (hm.cells.empty())
    throw IoError(path + ": no data rows");

  // Companion standard errors, when present.
  std::ifstream probe(path + ".stderr.csv");
  if (probe) {
    probe.close();
    const std::string se_text = read_file(path + ".stderr.csv");
    std::istringstream se(se_text);
    std::getline(se, line); // header
    std::size_t row = 0;
    while (std::getline(se, line)) {
      if (line.empty())
        continue;
      const auto fields = split_csv_line(line);
      if (fields.size() == hm.axis1.size() + 1 && row < hm.rows()) {
        for (std::size_t i = 1; i < fields.size(); ++i)
          hm.at(row, i - 1).std_error =
              parse_double(fields[i], path + ".stderr.csv");
      }
      ++row;
    }
  }
  return hm;
}

void write_heatmap_svg(const RateHeatmap &hm, const std::string &path) {
  const std::size_t n_rows = hm.rows();
  const std::size_t n_cols = hm.cols();
  if (n_rows == 0 || n_cols == 0)
    throw IoError("cannot render an empty heatmap");

  const int cell = n_cols > 48 || n_rows > 48 ? 12 : 18;
  const int left = 70;
  const int top = 40;
  const int bottom = 50;
  const int right = 30;
  const int width = left + static_cast<int>(n_cols) * cell + right;
  const int height = top + static_cast<int>(n_rows) * cell + bottom;

  double vmin = hm.cells.front().mean_rate;
  double vmax = vmin;
  std::size_t best = 0;
  for (std::size_t i = 0; i < hm.cells.size(); ++i) {
    const double v = hm.cells[i].mean_rate;
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
    if (v > hm.cells[best].mean_rate)
      best = i;
  }
  const double span = vmax > vmin ? vmax - vmin : 1.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";
  os << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" "
        "font-size=\"14\">achievable rate (bits/s/Hz), "
     << hm.axis1_name << " vs " << hm.axis2_name << "</text>\n";

  for (std::size_t row = 0; row < n_rows; ++row) {
    for (std::size_t col = 0; col < n_cols; ++col) {
      const double v = hm.at(row, col).mean_rate;
      const double t = (v - vmin) / span;
      os << "<rect x=\"" << left + static_cast<int>(col) * cell << "\" y=\""
         << top + static_cast<int>(row) * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << colormap(t) << "\"/>\n";
    }
  }

  // Outline the argmax cell.
  {
    const std::size_t row = best / n_cols;
    const std::size_t col = best % n_cols;
    os << "<rect x=\"" << left + static_cast<int>(col) * cell << "\" y=\""
       << top + static_cast<int>(row) * cell << "\" width=\"" << cell
       << "\" height=\"" << cell
       << "\" fill=\"none\" stroke=\"#ff0000\" stroke-width=\"2\"/>\n";
  }

  // Tick labels, at most ~9 per axis.
  const std::size_t col_every = std::max<std::size_t>(1, (n_cols + 8) / 9);
  for (std::size_t col = 0; col < n_cols; col += col_every)
    os << "<text x=\"" << left + static_cast<int>(col) * cell + cell / 2
       << "\" y=\"" << top + static_cast<int>(n_rows) * cell + 16
       << "\" font-family=\"sans-serif\" font-size=\"10\" "
          "text-anchor=\"middle\">"
       << format_tick(hm.axis1[col]) << "</text>\n";
  const std::size_t row_every = std::max<std::size_t>(1, (n_rows + 8) / 9);
  for (std::size_t row = 0; row < n_rows; row += row_every)
    os << "<text x=\"" << left - 6 << "\" y=\""
       << top + static_cast<int>(row) * cell + cell / 2 + 4
       << "\" font-family=\"sans-serif\" font-size=\"10\" "
          "text-anchor=\"end\">"
       << format_tick(hm.axis2[row]) << "</text>\n";

  os << "<text x=\"" << left + static_cast<int>(n_cols) * cell / 2
     << "\" y=\"" << top + static_cast<int>(n_rows) * cell + 34
     << "\" font-family=\"sans-serif\" font-size=\"12\" "
        "text-anchor=\"middle\">"
     << hm.axis1_name << "</text>\n";
  os << "<text x=\"14\" y=\"" << top + static_cast<int>(n_rows) * cell / 2
     << "\" font-family=\"sans-serif\" font-size=\"12\" "
        "text-anchor=\"middle\" transform=\"rotate(-90 14 "
     << top + static_cast<int>(n_rows) * cell / 2 << ")\">" << hm.axis2_name
     << "</text>\n";
  os << "<text x=\"" << left << "\" y=\"" << height - 8
     << "\" font-family=\"sans-serif\" font-size=\"10\">min "
     << format_rate(vmin) << ", max " << format_rate(vmax)
     << " bits/s/Hz</text>\n";
  os << "</svg>\n";
  write_file(path, os.str());
}

void write_heatmap_json(const RateHeatmap &hm, const std::string &path) {
  json j;
  j["axis1"] = {{"name", hm.axis1_name}, {"values", hm.axis1}};
  j["axis2"] = {{"name", hm.axis2_name}, {"values", hm.axis2}};
  std::vector<std::vector<double>> mean(hm.rows()), se(hm.rows());
  for (std::size_t row = 0; row < hm.rows(); ++row) {
    mean[row].reserve(hm.cols());
    se[row].reserve(hm.cols());
    for (std::size_t col = 0; col < hm.cols(); ++col) {
      mean[row].push_back(hm.at(row, col).mean_rate);
      se[row].push_back(hm.at(row, col).std_error);
    }
  }
  j["mean_rate"] = mean;
  j["std_error"] = se;
  j["meta"] = {{"config_digest", hm.meta.config_digest},
               {"tool_version", hm.meta.tool_version},
               {"command", hm.meta.command},
               {"seed", hm.meta.seed}};
  write_file(path, j.dump(2) + "\n");
}

void write_heatmap_summary(const RateHeatmap &hm, const std::string &path) {
  json j;
  j["config_digest"] = hm.meta.config_digest;
  j["rotation"] = nullptr;
  if (hm.is_rotation_map()) {
    const auto [rot, cell] = find_optimal_orientation(hm);
    j["argmax"] = {{"phi_deg", rot.azimuth_deg},
                   {"theta_deg", rot.elevation_deg},
                   {"mean_rate", cell.mean_rate},
                   {"std_error", cell.std_error}};
    j["mean_rate"] = cell.mean_rate;
    j["std_error"] = cell.std_error;
  } else {
    // Power curve: report the top power level.
    std::size_t best = 0;
    for (std::size_t i = 0; i < hm.cells.size(); ++i)
      if (hm.cells[i].mean_rate > hm.cells[best].mean_rate)
        best = i;
    j["argmax"] = {{"power_dbm", hm.axis1[best % hm.cols()]},
                   {"mean_rate", hm.cells[best].mean_rate},
                   {"std_error", hm.cells[best].std_error}};
    j["mean_rate"] = hm.cells[best].mean_rate;
    j["std_error"] = hm.cells[best].std_error;
  }
  write_file(path, j.dump(2) + "\n");
}

void write_rate_summary(const std::string &config_digest,
                        const RotationAngles &rotation, const RateResult &rate,
                        const std::string &path) {
  json j;
  j["config_digest"] = config_digest;
  j["rotation"] = rotation_json(rotation);
  j["mean_rate"] = rate.mean_rate;
  j["std_error"] = rate.std_error;
  j["argmax"] = nullptr;
  write_file(path, j.dump(2) + "\n");
}

void write_manifest(const std::string &config_digest, std::uint64_t seed,
                    const std::string &command,
                    const std::string &started_at_iso,
                    const std::vector<std::string> &outputs,
                    const std::string &path) {
  json j;
  j["config_digest"] = config_digest;
  j["tool_version"] = std::string(kVersion);
  j["seed"] = seed;
  j["command"] = command;
  j["started_at"] = started_at_iso;
  j["finished_at"] = timestamp_iso8601();
  j["outputs"] = outputs;
  write_file(path, j.dump(2) + "\n");
}

std::string timestamp_iso8601() {
  std::time_t t;
  if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace risorient
