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

#include "sector_kit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sector_kit {

namespace {

std::string join(const std::string& where, const std::string& field) {
  return where.empty() ? field : where + "." + field;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump_into(const Json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Numeric rows stay on one line so matrices remain readable.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_into(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        dump_into(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

std::string csv_number(double v) {
  std::string s = format_double(v);
  if (!s.empty() && s.front() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

constexpr const char* kCsvHeader =
    "kind,dim,norm_z,gap_one_minus_norm_z,ratio_g,ratio_h,alpha_min,residual_max,error\n";

std::string csv_row(std::string_view kind, Index dim, const KatoDiagnostics* d,
                    const std::string& error) {
  std::string line = std::string(kind) + "," + std::to_string(dim) + ",";
  if (d) {
    line += csv_number(d->normZ) + "," + csv_number(1.0 - d->normZ) + "," + csv_number(d->ratioG) +
            "," + csv_number(d->ratioH) + ",";
    line += d->alphaMin ? csv_number(*d->alphaMin) : std::string("NotSectorial");
    line += "," + csv_number(d->residual_max()) + ",";
  } else {
    line += ",,,,,,";
  }
  return line + csv_field(error) + "\n";
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ": " + e.what(), "", line);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

double json_number(const Json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ParseError("field '" + field + "' is not a number", field);
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError("matrix '" + where + "' must be an object", where);
  for (const char* key : {"n", "re", "im"}) {
    if (!j.contains(key)) {
      const std::string f = join(where, key);
      throw ParseError("missing field '" + f + "'", f);
    }
  }
  const Json& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<long long>() < 0) {
    const std::string f = join(where, "n");
    throw ParseError("field '" + f + "' must be a nonnegative integer", f);
  }
  const Index n = static_cast<Index>(jn.get<long long>());
  ComplexMatrix m(n, n);
  for (const char* key : {"re", "im"}) {
    const std::string f = join(where, key);
    const Json& a = j.at(key);
    if (!a.is_array() || static_cast<Index>(a.size()) != n) {
      throw ParseError("field '" + f + "' must have " + std::to_string(n) + " rows", f);
    }
    for (Index r = 0; r < n; ++r) {
      const std::string fr = f + "[" + std::to_string(r) + "]";
      const Json& row = a[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != n) {
        throw ParseError("field '" + fr + "' must have " + std::to_string(n) + " entries", fr);
      }
      for (Index c = 0; c < n; ++c) {
        const Json& v = row[static_cast<std::size_t>(c)];
        const std::string fc = fr + "[" + std::to_string(c) + "]";
        if (!v.is_number()) throw ParseError("field '" + fc + "' must be a number", fc);
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ParseError("field '" + fc + "' is not finite", fc);
        if (key[0] == 'r') {
          m(r, c).real(x);
        } else {
          m(r, c).imag(x);
        }
      }
    }
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["n"] = m.rows();
  Json re = Json::array(), im = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  return matrix_from_json(read_json_file(path));
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  if (indent >= 0) out += '\n';
  return out;
}

Json diagnostics_to_json(const KatoDiagnostics& d) {
  Json j;
  j["dim"] = d.dim;
  j["normZ"] = d.normZ;
  j["ratioG"] = d.ratioG;
  j["ratioH"] = d.ratioH;
  j["ratioGClosed"] = d.ratioGClosed;
  j["ratioHClosed"] = d.ratioHClosed;
  j["alphaMin"] = d.alphaMin ? Json(*d.alphaMin) : Json(nullptr);
  j["notSectorial"] = d.notSectorial;
  Json res = Json::object();
  for (const auto& [k, v] : d.identityResiduals) res[k] = v;
  j["identityResiduals"] = std::move(res);
  j["residualMax"] = d.residual_max();
  return j;
}

KatoDiagnostics diagnostics_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("diagnostics must be an object", "");
  auto need = [&](const char* key) -> const Json& {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", key);
    return j.at(key);
  };
  KatoDiagnostics d;
  const Json& dim = need("dim");
  if (!dim.is_number_integer()) throw ParseError("field 'dim' must be an integer", "dim");
  d.dim = dim.get<Index>();
  d.normZ = json_number(need("normZ"), "normZ");
  d.ratioG = json_number(need("ratioG"), "ratioG");
  d.ratioH = json_number(need("ratioH"), "ratioH");
  d.ratioGClosed = json_number(need("ratioGClosed"), "ratioGClosed");
  d.ratioHClosed = json_number(need("ratioHClosed"), "ratioHClosed");
  const Json& a = need("alphaMin");
  if (!a.is_null()) d.alphaMin = json_number(a, "alphaMin");
  const Json& ns = need("notSectorial");
  if (!ns.is_boolean()) throw ParseError("field 'notSectorial' must be a boolean", "notSectorial");
  d.notSectorial = ns.get<bool>();
  const Json& res = need("identityResiduals");
  if (!res.is_object()) {
    throw ParseError("field 'identityResiduals' must be an object", "identityResiduals");
  }
  for (auto it = res.begin(); it != res.end(); ++it) {
    d.identityResiduals[it.key()] = json_number(it.value(), "identityResiduals." + it.key());
  }
  return d;
}

Json report_to_json(const TruncationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["kind"] = std::string(to_string(row.kind));
    j["dim"] = row.dim;
    j["diagnostics"] = row.diagnostics ? diagnostics_to_json(*row.diagnostics) : Json(nullptr);
    j["z0NormSq"] = row.z0NormSq;
    j["contrastBound"] = row.contrastBound ? Json(*row.contrastBound) : Json(nullptr);
    j["error"] = row.error;
    rows.push_back(std::move(j));
  }
  Json sums = Json::array();
  for (const auto& s : r.summaries) {
    Json j;
    j["kind"] = std::string(to_string(s.kind));
    j["normZNondecreasing"] = s.normZNondecreasing;
    j["ratioGStrictlyIncreasing"] = s.ratioGStrictlyIncreasing;
    j["contrastBoundHolds"] = s.contrastBoundHolds ? Json(*s.contrastBoundHolds) : Json(nullptr);
    sums.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["summaries"] = std::move(sums);
  return out;
}

std::string report_to_csv(const TruncationReport& r) {
  std::string out = kCsvHeader;
  for (const auto& row : r.rows) {
    out += csv_row(to_string(row.kind), row.dim, row.diagnostics ? &*row.diagnostics : nullptr,
                   row.error);
  }
  return out;
}

std::string diagnostics_to_csv(const KatoDiagnostics& d, std::string_view kind) {
  return std::string(kCsvHeader) + csv_row(kind, d.dim, &d, "");
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

void emit_report(const TruncationReport& r, const std::filesystem::path& path, ReportFormat fmt) {
  write_text_file(path, fmt == ReportFormat::kCsv ? report_to_csv(r) : dump_json(report_to_json(r)));
}

void emit_report(const KatoDiagnostics& d, const std::filesystem::path& path, ReportFormat fmt) {
  write_text_file(path,
                  fmt == ReportFormat::kCsv ? diagnostics_to_csv(d) : dump_json(diagnostics_to_json(d)));
}

}  // namespace sector_kit
