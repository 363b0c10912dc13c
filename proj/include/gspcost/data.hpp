/*
 * Copyright (c) 2026 The gspcost Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once
#pragma once

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "gspcost/error.hpp"
#include "gspcost/hamiltonian_io.hpp"

namespace gspcost {

/// Header plus rows of a comma-separated table; no quoting, '.' decimals.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ','))
    out.push_back(field);
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

inline double parse_number(const std::string &text, const std::string &where) {
  const char *begin = text.c_str();
  char *end = nullptr;
  const double v = std::strtod(begin, &end);
  require(end != begin && *end == '\0' && std::isfinite(v), "not a number in " + where + ": '" + text + "'");
  return v;
}

} // namespace detail

/// Parses `text`, requiring exactly the columns in `expected`.
inline CsvTable parse_csv(const std::string &text, const std::vector<std::string> &expected,
                          const std::string &name) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    auto fields = detail::split_csv_line(line);
    if (!have_header) {
      detail::require(fields == expected, name + ": unexpected header '" + line + "'");
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    detail::require(fields.size() == expected.size(), name + ": row has " + std::to_string(fields.size()) +
                                                          " fields, expected " + std::to_string(expected.size()));
    t.rows.push_back(std::move(fields));
  }
  detail::require(have_header, name + ": missing header");
  return t;
}

/// Squared overlaps per system: HF, best SPA variant, booster.
struct OverlapRow {
  std::string system;
  double gamma0_sq, gamma_spa_sq, gamma_booster_sq;
};

struct GseeRow {
  std::string system;
  std::size_t n;
  double t_gsee;
};

struct BoosterDataRow {
  std::string system;
  std::size_t n;
  double p_succ, t_k1, t_b, gap, max_sim_time;
};

struct RotationRow {
  std::string system;
  std::size_t n;
  double r_spa, delta_spa, r_spa_gs, delta_spa_gs, t_spa, t_spa_gs;
};

namespace detail {

inline std::size_t parse_count(const std::string &text, const std::string &where) {
  const double v = parse_number(text, where);
  require(v >= 0.0 && v == std::floor(v), "expected a non-negative integer in " + where + ": '" + text + "'");
  return static_cast<std::size_t>(v);
}

} // namespace detail

inline std::vector<OverlapRow> parse_overlap_data(const std::string &text) {
  const auto t = parse_csv(text, {"system_label", "gamma0_sq", "gamma_spa_sq", "gamma_booster_sq"}, "overlap data");
  std::vector<OverlapRow> out;
  for (const auto &r : t.rows) {
    OverlapRow o{r[0], detail::parse_number(r[1], "gamma0_sq"), detail::parse_number(r[2], "gamma_spa_sq"),
                 detail::parse_number(r[3], "gamma_booster_sq")};
    for (double g : {o.gamma0_sq, o.gamma_spa_sq, o.gamma_booster_sq})
      detail::require(g > 0.0 && g <= 1.0, "overlap data: squared overlap outside (0, 1] for " + o.system);
    out.push_back(o);
  }
  return out;
}

inline std::vector<GseeRow> parse_gsee_data(const std::string &text) {
  const auto t = parse_csv(text, {"system_label", "n", "t_gsee"}, "T_GSEE data");
  std::vector<GseeRow> out;
  for (const auto &r : t.rows)
    out.push_back({r[0], detail::parse_count(r[1], "n"), detail::parse_number(r[2], "t_gsee")});
  return out;
}

inline std::vector<BoosterDataRow> parse_booster_data(const std::string &text) {
  const auto t =
      parse_csv(text, {"system_label", "n", "p_succ", "t_k1", "t_b", "gap", "max_sim_time"}, "booster data");
  std::vector<BoosterDataRow> out;
  for (const auto &r : t.rows)
    out.push_back({r[0], detail::parse_count(r[1], "n"), detail::parse_number(r[2], "p_succ"),
                   detail::parse_number(r[3], "t_k1"), detail::parse_number(r[4], "t_b"),
                   detail::parse_number(r[5], "gap"), detail::parse_number(r[6], "max_sim_time")});
  return out;
}

inline std::vector<RotationRow> parse_rotation_data(const std::string &text) {
  const auto t = parse_csv(
      text, {"system_label", "n", "r_spa", "delta_spa", "r_spa_gs", "delta_spa_gs", "t_spa", "t_spa_gs"},
      "rotation data");
  std::vector<RotationRow> out;
  for (const auto &r : t.rows)
    out.push_back({r[0], detail::parse_count(r[1], "n"), detail::parse_number(r[2], "r_spa"),
                   detail::parse_number(r[3], "delta_spa"), detail::parse_number(r[4], "r_spa_gs"),
                   detail::parse_number(r[5], "delta_spa_gs"), detail::parse_number(r[6], "t_spa"),
                   detail::parse_number(r[7], "t_spa_gs")});
  return out;
}

/// Fixed-column CSV writer; numbers use "%.12g".
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header) : columns_(header.size()) { append(header); }

  CsvWriter &row(const std::vector<std::string> &fields) {
    detail::require(fields.size() == columns_, "CSV row width does not match the header");
    append(fields);
    return *this;
  }

  const std::string &str() const { return text_; }

  static std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }
  static std::string num(std::size_t x) { return std::to_string(x); }
  static std::string num(long long x) { return std::to_string(x); }
  static std::string flag(bool b) { return b ? "true" : "false"; }

private:
  void append(const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i)
        text_ += ',';
      text_ += fields[i];
    }
    text_ += '\n';
  }

  std::size_t columns_;
  std::string text_;
};

} // namespace gspcost
