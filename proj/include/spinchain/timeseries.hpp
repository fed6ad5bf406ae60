// Named trajectory channels on a shared time grid, peak finding, and the
// CSV / JSON / SVG emitters.
//
// Channel naming used by the scenario layer: P_<n> for spin polarizations,
// C_<m>_<n> for pair concurrences.
#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinchain/evolution.hpp"
#include "spinchain/types.hpp"

namespace spinchain::series {

struct TimeSeries {
  evolution::TimeGrid grid;
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;  // per channel, length grid.count

  std::size_t add_channel(std::string name) {
    names.push_back(std::move(name));
    values.emplace_back();
    values.back().reserve(grid.count);
    return names.size() - 1;
  }

  const std::vector<double>& channel(const std::string& name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return values[k];
    throw std::out_of_range("spinchain: no channel named " + name);
  }

  bool has_channel(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
  }
};

// ---- peaks ----

struct Peak {
  std::size_t index = 0;  // grid index of the discrete maximum
  double t = 0.0;         // quadratically refined position
  double value = 0.0;     // quadratically refined height
};

// Interior local maxima (s[i-1] < s[i] && s[i] >= s[i+1]) above min_height,
// refined by fitting a parabola through the three samples around the maximum.
inline std::vector<Peak> find_peaks(const TimeSeries& series, const std::string& name,
                                    double min_height = 0.0) {
  const auto& s = series.channel(name);
  std::vector<Peak> peaks;
  if (s.size() < 3) return peaks;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (!(s[i - 1] < s[i] && s[i] >= s[i + 1])) continue;
    if (!(s[i] > min_height)) continue;
    const double denom = s[i - 1] - 2.0 * s[i] + s[i + 1];
    const double delta = denom < 0.0 ? 0.5 * (s[i - 1] - s[i + 1]) / denom : 0.0;
    peaks.push_back({i, series.grid.time(i) + delta * series.grid.dt,
                     s[i] - 0.25 * (s[i - 1] - s[i + 1]) * delta});
  }
  return peaks;
}

// ---- formatting helpers ----

namespace detail {

// 12 significant digits, shortest form ("%.12g").
inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string fmt_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("spinchain: cannot open " + tmp.string());
    out << content;
    if (!out.flush())
      throw std::runtime_error("spinchain: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

// ---- CSV ----

// Header `t,<name>,...`, one row per grid point, 12 significant digits,
// '\n' line endings.
inline void emit_csv(const TimeSeries& series, const std::filesystem::path& path) {
  std::string out = "t";
  for (const auto& name : series.names) out += "," + name;
  out += '\n';
  for (std::size_t i = 0; i < series.grid.count; ++i) {
    out += detail::fmt(series.grid.time(i));
    for (const auto& channel : series.values) out += "," + detail::fmt(channel.at(i));
    out += '\n';
  }
  detail::write_file_atomic(path, out);
}

// Inverse of emit_csv; assumes a uniform time column.
inline TimeSeries read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("spinchain: cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("spinchain: empty CSV " + path.string());
  if (!line.empty() && line.back() == '\r') line.pop_back();

  TimeSeries series;
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  if (header.empty() || header.front() != "t")
    throw std::invalid_argument("spinchain: CSV must start with a 't' column");
  series.names.assign(header.begin() + 1, header.end());
  series.values.assign(series.names.size(), {});

  std::vector<double> times;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(ss, cell, ',')) {
      std::size_t pos = 0;
      const double v = std::stod(cell, &pos);
      if (col == 0)
        times.push_back(v);
      else if (col - 1 < series.values.size())
        series.values[col - 1].push_back(v);
      else
        throw std::invalid_argument("spinchain: CSV row wider than header");
      ++col;
    }
    if (col != header.size())
      throw std::invalid_argument("spinchain: CSV row narrower than header");
  }
  if (times.empty()) throw std::invalid_argument("spinchain: CSV has no data rows");

  series.grid.t_start = times.front();
  series.grid.t_end = times.back();
  series.grid.dt = times.size() > 1
                       ? (times.back() - times.front()) / static_cast<double>(times.size() - 1)
                       : 1.0;
  series.grid.count = times.size();
  return series;
}

// ---- JSON ----

// {"grid": {"t_start", "t_end", "dt"}, "channels": {name: [...]}}.
inline void emit_json(const TimeSeries& series, const std::filesystem::path& path) {
  nlohmann::ordered_json doc;
  doc["grid"] = {{"t_start", series.grid.t_start},
                 {"t_end", series.grid.t_end},
                 {"dt", series.grid.dt}};
  doc["channels"] = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < series.names.size(); ++k)
    doc["channels"][series.names[k]] = series.values[k];
  detail::write_file_atomic(path, doc.dump(2) + "\n");
}

// ---- SVG ----

// Deterministic standalone plot: one polyline per channel, x axis in units of
// Jt, fixed palette, legend on the right.
inline void emit_svg(const TimeSeries& series, const std::filesystem::path& path) {
  static const char* kPalette[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
  constexpr int kWidth = 880, kHeight = 560;
  constexpr double kLeft = 70, kRight = 700, kTop = 40, kBottom = 500;

  const double t_lo = series.grid.t_start;
  const double t_hi = series.grid.count > 1 ? series.grid.time(series.grid.count - 1)
                                            : series.grid.t_start + 1.0;
  double v_lo = 0.0, v_hi = 1.0;
  bool first = true;
  for (const auto& channel : series.values)
    for (double v : channel) {
      if (first) {
        v_lo = v_hi = v;
        first = false;
      } else {
        v_lo = std::min(v_lo, v);
        v_hi = std::max(v_hi, v);
      }
    }
  if (v_hi - v_lo < 1e-12) {
    v_lo -= 0.5;
    v_hi += 0.5;
  } else {
    const double pad = 0.05 * (v_hi - v_lo);
    v_lo -= pad;
    v_hi += pad;
  }

  const auto x_of = [&](double t) {
    return kLeft + (t - t_lo) / (t_hi - t_lo) * (kRight - kLeft);
  };
  const auto y_of = [&](double v) {
    return kBottom - (v - v_lo) / (v_hi - v_lo) * (kBottom - kTop);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " + std::to_string(kHeight) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // axes box + ticks
  out += "<rect x=\"" + detail::fmt_fixed(kLeft, 1) + "\" y=\"" +
         detail::fmt_fixed(kTop, 1) + "\" width=\"" + detail::fmt_fixed(kRight - kLeft, 1) +
         "\" height=\"" + detail::fmt_fixed(kBottom - kTop, 1) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k) {
    const double frac = static_cast<double>(k) / kTicks;
    const double t = t_lo + frac * (t_hi - t_lo);
    const double v = v_lo + frac * (v_hi - v_lo);
    const double x = x_of(t), y = y_of(v);
    out += "<line x1=\"" + detail::fmt_fixed(x, 2) + "\" y1=\"" +
           detail::fmt_fixed(kBottom, 1) + "\" x2=\"" + detail::fmt_fixed(x, 2) +
           "\" y2=\"" + detail::fmt_fixed(kBottom + 6, 1) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + detail::fmt_fixed(x, 2) + "\" y=\"" +
           detail::fmt_fixed(kBottom + 22, 1) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           detail::fmt(t) + "</text>\n";
    out += "<line x1=\"" + detail::fmt_fixed(kLeft - 6, 1) + "\" y1=\"" +
           detail::fmt_fixed(y, 2) + "\" x2=\"" + detail::fmt_fixed(kLeft, 1) +
           "\" y2=\"" + detail::fmt_fixed(y, 2) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + detail::fmt_fixed(kLeft - 10, 1) + "\" y=\"" +
           detail::fmt_fixed(y + 4, 2) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"end\">" +
           detail::fmt(v) + "</text>\n";
  }
  out += "<text x=\"" + detail::fmt_fixed((kLeft + kRight) / 2, 1) + "\" y=\"" +
         detail::fmt_fixed(kBottom + 45, 1) +
         "\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">Jt"
         "</text>\n";

  // channels
  for (std::size_t k = 0; k < series.values.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series.grid.count; ++i) {
      out += detail::fmt_fixed(x_of(series.grid.time(i)), 2);
      out += ',';
      out += detail::fmt_fixed(y_of(series.values[k].at(i)), 2);
      if (i + 1 < series.grid.count) out += ' ';
    }
    out += "\"/>\n";
  }

  // legend
  for (std::size_t k = 0; k < series.names.size(); ++k) {
    const double y = kTop + 18.0 * static_cast<double>(k) + 10.0;
    out += "<line x1=\"" + detail::fmt_fixed(kRight + 20, 1) + "\" y1=\"" +
           detail::fmt_fixed(y, 1) + "\" x2=\"" + detail::fmt_fixed(kRight + 48, 1) +
           "\" y2=\"" + detail::fmt_fixed(y, 1) + "\" stroke=\"";
    out += kPalette[k % std::size(kPalette)];
    out += "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + detail::fmt_fixed(kRight + 54, 1) + "\" y=\"" +
           detail::fmt_fixed(y + 4, 1) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + series.names[k] +
           "</text>\n";
  }
  out += "</svg>\n";
  detail::write_file_atomic(path, out);
}

}  // namespace spinchain::series
