/*
 * Copyright 2026 The sector-kit Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sector_kit/families.hpp"
#include "sector_kit/kato_core.hpp"
#include "sector_kit/matrix_core.hpp"

namespace sector_kit {

using Json = nlohmann::ordered_json;

// Parses JSON text; syntax errors become ParseError with a 1-based line.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

// Strict matrix schema {"n": int, "re": n x n numbers, "im": n x n numbers}.
// `where` prefixes the field names in error messages (e.g. "B").
ComplexMatrix matrix_from_json(const Json& j, const std::string& where = "");
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

// Serializer with 17 significant digits per double; non-finite doubles are
// written as the strings "inf", "-inf", "nan". Keys keep insertion order.
std::string dump_json(const Json& j, int indent = 2);

// Reads a number written by dump_json (accepts the non-finite strings).
double json_number(const Json& j, const std::string& field);

Json diagnostics_to_json(const KatoDiagnostics& d);
KatoDiagnostics diagnostics_from_json(const Json& j);

Json report_to_json(const TruncationReport& r);

// Columns: kind, dim, norm_z, gap_one_minus_norm_z, ratio_g, ratio_h, alpha_min,
// residual_max, error.
std::string report_to_csv(const TruncationReport& r);
std::string diagnostics_to_csv(const KatoDiagnostics& d, std::string_view kind = "matrix");

enum class ReportFormat { kCsv, kJson };

// Throws Error(kIo) when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);
void emit_report(const TruncationReport& r, const std::filesystem::path& path, ReportFormat fmt);
void emit_report(const KatoDiagnostics& d, const std::filesystem::path& path, ReportFormat fmt);

}  // namespace sector_kit
