// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The ffprime Authors
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

#include "ffprime/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ffprime {

std::string format_real(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string csv_quote(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string opt_real(const std::optional<double>& v, int digits = 17) { return v ? format_real(*v, digits) : ""; }

}  // namespace

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.problem << ',' << r.q << ',' << r.n << ',' << '"' << r.input << '"' << ',';
    if (!r.error.empty()) {
      os << csv_quote("error: " + r.error) << ",,,,,,,\n";
      continue;
    }
    os << (r.count ? std::to_string(*r.count) : "") << ',' << opt_real(r.main_term) << ','
       << opt_real(r.series_value, 15) << ',' << opt_real(r.series_err, 15) << ',' << opt_real(r.ratio) << ','
       << opt_real(r.err_t1) << ',' << opt_real(r.err_t2) << ',' << opt_real(r.elapsed_ms) << '\n';
  }
}

namespace {

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> json_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::json row_to_json(const TableRow& r) {
  nlohmann::json j;
  j["problem"] = r.problem;
  j["q"] = r.q;
  j["n"] = r.n;
  j["input"] = r.input;
  j["count"] = opt_json(r.count);
  j["main_term"] = opt_json(r.main_term);
  j["series_value"] = opt_json(r.series_value);
  j["series_err"] = opt_json(r.series_err);
  j["ratio"] = opt_json(r.ratio);
  j["err_t1"] = opt_json(r.err_t1);
  j["err_t2"] = opt_json(r.err_t2);
  j["elapsed_ms"] = opt_json(r.elapsed_ms);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

TableRow row_from_json(const nlohmann::json& j) {
  TableRow r;
  r.problem = j.at("problem").get<std::string>();
  r.q = j.at("q").get<std::uint64_t>();
  r.n = j.at("n").get<std::size_t>();
  r.input = j.at("input").get<std::string>();
  r.count = json_opt<std::uint64_t>(j, "count");
  r.main_term = json_opt<double>(j, "main_term");
  r.series_value = json_opt<double>(j, "series_value");
  r.series_err = json_opt<double>(j, "series_err");
  r.ratio = json_opt<double>(j, "ratio");
  r.err_t1 = json_opt<double>(j, "err_t1");
  r.err_t2 = json_opt<double>(j, "err_t2");
  r.elapsed_ms = json_opt<double>(j, "elapsed_ms");
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json cols = nlohmann::json::array();
  std::string_view h = kSweepCsvHeader;
  for (std::size_t pos = 0;;) {
    const auto comma = h.find(',', pos);
    cols.push_back(std::string(h.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  return {{"columns", cols}, {"rows", arr}};
}

std::vector<TableRow> table_from_json(const nlohmann::json& j) {
  std::vector<TableRow> rows;
  for (const auto& r : j.at("rows")) rows.push_back(row_from_json(r));
  return rows;
}

}  // namespace ffprime
