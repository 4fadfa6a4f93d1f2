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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "sector_kit/io.hpp"
#include "support.hpp"

namespace sk = sector_kit;
using sk::ComplexMatrix;
using sk::Json;

namespace {

std::string field_of(const std::string& text) {
  try {
    sk::matrix_from_json(sk::parse_json(text), "B");
  } catch (const sk::ParseError& e) {
    return e.field();
  }
  return "<accepted>";
}

}  // namespace

TEST(MatrixJson, RoundTripIsExact) {
  sk_test::Rng rng(91);
  const ComplexMatrix m = rng.gaussian(4);
  const ComplexMatrix back = sk::matrix_from_json(sk::parse_json(sk::dump_json(sk::matrix_to_json(m))));
  EXPECT_EQ(back, m);
}

TEST(MatrixJson, StrictSchema) {
  EXPECT_EQ(field_of(R"({"n": 2, "re": [[1,0],[0,1]], "im": [[0,0],[0,0]]})"), "<accepted>");
  EXPECT_EQ(field_of(R"({"re": [[1]], "im": [[0]]})"), "B.n");
  EXPECT_EQ(field_of(R"({"n": 2, "re": [[1,0]], "im": [[0,0],[0,0]]})"), "B.re");
  EXPECT_EQ(field_of(R"({"n": 2, "re": [[1,0],[0]], "im": [[0,0],[0,0]]})"), "B.re[1]");
  EXPECT_EQ(field_of(R"({"n": 1, "re": [["x"]], "im": [[0]]})"), "B.re[0][0]");
  EXPECT_EQ(field_of(R"({"n": 1, "re": [[1]]})"), "B.im");
  EXPECT_EQ(field_of(R"({"n": -1, "re": [], "im": []})"), "B.n");
}

TEST(MatrixJson, SyntaxErrorsCarryLine) {
  try {
    sk::parse_json("{\n  \"n\": 1,\n  \"re\": [[1]\n}");
    FAIL();
  } catch (const sk::ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(MatrixJson, MissingFileIsIo) {
  try {
    sk::read_matrix_file("/nonexistent/dir/m.json");
    FAIL();
  } catch (const sk::Error& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kIo);
  }
}

TEST(DumpJson, NonFiniteAndPrecision) {
  Json j;
  j["a"] = std::numeric_limits<double>::infinity();
  j["b"] = -std::numeric_limits<double>::infinity();
  j["c"] = 0.1;
  j["d"] = std::vector<double>{1.5, 2.5};
  EXPECT_EQ(sk::dump_json(j), "{\n  \"a\": \"inf\",\n  \"b\": \"-inf\",\n  \"c\": 0.10000000000000001,\n  \"d\": [1.5, 2.5]\n}\n");
  const Json back = sk::parse_json(sk::dump_json(j));
  EXPECT_TRUE(std::isinf(sk::json_number(back.at("a"), "a")));
  EXPECT_LT(sk::json_number(back.at("b"), "b"), 0.0);
  EXPECT_EQ(sk::json_number(back.at("c"), "c"), 0.1);
}

TEST(Diagnostics, JsonRoundTripIsBitIdentical) {
  sk::KatoDiagnostics d;
  d.dim = 8;
  d.normZ = 0.1 + 0.2;
  d.ratioG = std::numeric_limits<double>::infinity();
  d.ratioH = 1.0 / 3.0;
  d.ratioGClosed = 2.0 / 7.0;
  d.ratioHClosed = std::nextafter(1.0, 2.0);
  d.alphaMin = 0.7853981633974483;
  d.identityResiduals = {{"B_factor", 1.2345e-16}, {"gomilko", 3e-15}};
  const std::string text = sk::dump_json(sk::diagnostics_to_json(d));
  const auto e = sk::diagnostics_from_json(sk::parse_json(text));
  EXPECT_EQ(e.dim, d.dim);
  EXPECT_EQ(e.normZ, d.normZ);
  EXPECT_EQ(e.ratioG, d.ratioG);
  EXPECT_EQ(e.ratioH, d.ratioH);
  EXPECT_EQ(e.ratioGClosed, d.ratioGClosed);
  EXPECT_EQ(e.ratioHClosed, d.ratioHClosed);
  EXPECT_EQ(e.alphaMin, d.alphaMin);
  EXPECT_EQ(e.identityResiduals, d.identityResiduals);
  EXPECT_EQ(sk::dump_json(sk::diagnostics_to_json(e)), text);

  d.alphaMin.reset();
  d.notSectorial = true;
  const auto f = sk::diagnostics_from_json(sk::diagnostics_to_json(d));
  EXPECT_FALSE(f.alphaMin.has_value());
  EXPECT_TRUE(f.notSectorial);
}

TEST(ReportCsv, EmptyIsHeaderOnly) {
  EXPECT_EQ(sk::report_to_csv({}),
            "kind,dim,norm_z,gap_one_minus_norm_z,ratio_g,ratio_h,alpha_min,residual_max,error\n");
}

TEST(ReportCsv, RowsAndFailures) {
  sk::TruncationReport r;
  sk::TruncationRow ok;
  ok.kind = sk::FamilyKind::kOddPowers;
  ok.dim = 8;
  sk::KatoDiagnostics d;
  d.dim = 8;
  d.normZ = 0.5;
  d.ratioG = 4.0 / 3.0;
  d.notSectorial = true;
  ok.diagnostics = d;
  r.rows.push_back(ok);
  sk::TruncationRow bad;
  bad.kind = sk::FamilyKind::kFlow;
  bad.dim = 16;
  bad.error = "SpecInvalid: flow needs t, really";
  r.rows.push_back(bad);
  const std::string csv = sk::report_to_csv(r);
  EXPECT_NE(csv.find("\nodd-powers,8,0.5,0.5,1.3333333333333333,"), std::string::npos) << csv;
  EXPECT_NE(csv.find(",NotSectorial,"), std::string::npos);
  EXPECT_NE(csv.find("\nflow,16,,,,,,,\"SpecInvalid: flow needs t, really\"\n"), std::string::npos) << csv;
}

TEST(ReportJson, KeepsRowOrder) {
  sk::FamilySpec base;
  base.n = 1;
  const auto rep = sk::divergence_sweep({sk::FamilyKind::kOddPowers}, {4, 8}, base);
  const Json j = sk::report_to_json(rep);
  const std::string text = sk::dump_json(j);
  EXPECT_LT(text.find("\"dim\": 4"), text.find("\"dim\": 8"));
}

TEST(EmitReport, WritesFilesAndFailsOnBadPath) {
  const auto dir = std::filesystem::temp_directory_path() / "sector_kit_io_test";
  std::filesystem::create_directories(dir);
  sk::KatoDiagnostics d;
  sk::emit_report(d, dir / "d.json", sk::ReportFormat::kJson);
  EXPECT_NO_THROW(sk::read_json_file(dir / "d.json"));
  try {
    sk::write_text_file("/nonexistent/dir/out.csv", "x");
    FAIL();
  } catch (const sk::Error& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kIo);
  }
  std::filesystem::remove_all(dir);
}
