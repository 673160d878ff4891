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

// CSV and JSON emission for sweep tables.
//
// CSV follows RFC 4180 quoting (the comma-list polynomial form is always
// quoted). Empty cells mean "not available". A failed cell keeps problem,
// q, n and input, and carries "error: <message>" in the count column.
// Series values and their error bounds use 15 significant digits; every
// other real uses 17 (round-trip precision).

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ffprime/sweep.hpp"

namespace ffprime {

inline constexpr std::string_view kSweepCsvHeader =
    "problem,q,n,input,count,main_term,series_value,series_err,ratio,err_t1,err_t2,elapsed_ms";

std::string format_real(double v, int digits = 17);
std::string csv_quote(std::string_view s);

void write_csv(std::ostream& os, const std::vector<TableRow>& rows);

nlohmann::json row_to_json(const TableRow& row);
TableRow row_from_json(const nlohmann::json& j);

/// {"columns": [...], "rows": [...]}
nlohmann::json table_to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_json(const nlohmann::json& j);

}  // namespace ffprime
