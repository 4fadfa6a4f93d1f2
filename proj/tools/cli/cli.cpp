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

#include "cli.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sector_kit/sector_kit.hpp"

namespace sector_kit::cli {

namespace {

// Raised by the subcommands for bad input; mapped to exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double tol(const RunConfig& c, const std::string& key) { return c.tolerances.at(key); }

// Collects failed checks; the report is still written when any fail.
struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

void write_report(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.outputPath) {
    write_text_file(*c.outputPath, text);
  } else {
    out << text;
  }
}

int finish(const Checks& checks, std::ostream& err) {
  for (const auto& f : checks.failures) err << "check failed: " << f << "\n";
  return checks.failures.empty() ? kExitOk : kExitAssertion;
}

const std::filesystem::path& need_input(const RunConfig& c) {
  if (!c.inputPath) throw InputError("--in is required");
  return *c.inputPath;
}

double rel_dev(const ComplexMatrix& a, const ComplexMatrix& b) {
  return op_norm(a - b) / std::max(op_norm(b), 1e-300);
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

int run_classify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ComplexMatrix a = read_matrix_file(need_input(c));
  require_square(a, "A");
  Json rep;
  rep["dim"] = a.rows();
  Checks checks;
  try {
    const AccretiveOperator op = classify_accretive(a, tol(c, "accretive"));
    rep["accretive"] = true;
    rep["coerciveMargin"] = op.coercive_margin();
    Json residuals = Json::object();
    const Complex i(0.0, 1.0);
    residuals["split"] =
        op_norm(op.re_part() + i * op.im_part() - a) / std::max(op.norm(), 1.0);
    try {
      const SectorEstimate est = min_semiangle(op);
      rep["alphaMin"] = est.alphaMin;
      rep["tanAlpha"] = est.tanAlpha;
      rep["method"] = est.method == SectorMethod::kPencil ? "pencil" : "boundary-sampling";
      rep["notSectorial"] = false;
    } catch (const NotSectorialError& e) {
      rep["alphaMin"] = nullptr;
      rep["tanAlpha"] = nullptr;
      rep["method"] = "boundary-sampling";
      rep["notSectorial"] = true;
      rep["sampledRatio"] = e.sampled_ratio();
    }
    if (op.coercive_margin() > 0.0) {
      const FormRepresentation f = form_representation(op);
      residuals["form"] = f.residual;
      checks.expect(f.residual <= tol(c, "form"), "form representation residual " + fmt(f.residual));
    }
    checks.expect(residuals["split"].get<double>() <= tol(c, "identity"), "Re/Im split residual");
    rep["residuals"] = std::move(residuals);
  } catch (const NotAccretiveError& e) {
    rep["accretive"] = false;
    rep["coerciveMargin"] = e.eigenvalue();
    rep["alphaMin"] = nullptr;
    rep["notSectorial"] = nullptr;
    rep["witnessEigenvalue"] = e.eigenvalue();
  }
  write_report(c, dump_json(rep), out);
  return finish(checks, err);
}

int run_power(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ComplexMatrix b = read_matrix_file(need_input(c));
  require_square(b, "B");
  if (!(c.gamma > 0.0 && c.gamma < 1.0)) throw InputError("--gamma must lie in (0, 1)");
  static const std::vector<std::string> kAll{"eig", "balakrishnan", "nagy-foias"};
  std::vector<std::string> methods;
  if (c.method == "all") {
    methods = kAll;
  } else if (std::find(kAll.begin(), kAll.end(), c.method) != kAll.end()) {
    methods = {c.method};
  } else {
    throw InputError("unknown --method '" + c.method + "'");
  }
  const AccretiveOperator op = classify_accretive(b, tol(c, "accretive"));

  Checks checks;
  std::map<std::string, ComplexMatrix> results;
  Json jm = Json::object();
  for (const auto& m : methods) {
    Json entry;
    try {
      ComplexMatrix r = m == "eig"            ? power_eig_oracle(op, c.gamma)
                        : m == "balakrishnan" ? power_balakrishnan(op, c.gamma)
                                              : power_nagy_foias(op, c.gamma);
      entry["norm"] = op_norm(r);
      if (!c.compare) entry["matrix"] = matrix_to_json(r);
      results.emplace(m, std::move(r));
    } catch (const Error& e) {
      entry["error"] = e.what();
      checks.expect(false, m + ": " + e.what());
    }
    jm[m] = std::move(entry);
  }

  Json rep;
  rep["dim"] = b.rows();
  rep["gamma"] = c.gamma;
  rep["methods"] = std::move(jm);
  Json dev = Json::object();
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      const auto a = results.find(methods[j]);
      const auto r = results.find(methods[i]);
      if (a == results.end() || r == results.end()) continue;
      const double d = rel_dev(a->second, r->second);
      dev[methods[j] + "_vs_" + methods[i]] = d;
      if (methods[i] == "eig") {
        const double limit = tol(c, methods[j] == "balakrishnan" ? "balakrishnan" : "nagy_foias");
        checks.expect(d <= limit, methods[j] + " deviates from eig by " + fmt(d));
      }
    }
  }
  if (methods.size() > 1) rep["deviations"] = std::move(dev);
  write_report(c, dump_json(rep), out);
  return finish(checks, err);
}

void check_diagnostics(const RunConfig& c, const KatoDiagnostics& d, const std::string& label,
                       Checks& checks) {
  checks.expect(d.residual_max() <= tol(c, "identity"),
                label + " identity residual " + fmt(d.residual_max()));
  checks.expect(ratios_agree(d.ratioG, d.ratioGClosed, tol(c, "indicator")),
                label + " ratioG pencil vs closed form");
  checks.expect(ratios_agree(d.ratioH, d.ratioHClosed, tol(c, "indicator")),
                label + " ratioH pencil vs closed form");
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Json in = read_json_file(need_input(c));
  if (!in.is_object()) throw ParseError("input must be a JSON object", "");
  ComplexMatrix b;
  if (in.contains("B")) {
    b = matrix_from_json(in.at("B"), "B");
  } else if (in.contains("Q") || in.contains("Z")) {
    if (!in.contains("Q")) throw ParseError("missing field 'Q'", "Q");
    if (!in.contains("Z")) throw ParseError("missing field 'Z'", "Z");
    const AntiCommutingPair p =
        make_anti_pair(matrix_from_json(in.at("Q"), "Q"), matrix_from_json(in.at("Z"), "Z"));
    const ComplexMatrix t = pair_to_T(p);
    b = inverse(t * t);
  } else {
    b = matrix_from_json(in);
  }
  const KatoDiagnostics d = kato_indicators(classify_accretive(b, tol(c, "accretive")));
  Checks checks;
  check_diagnostics(c, d, "operator", checks);
  write_report(c, dump_json(diagnostics_to_json(d)), out);
  return finish(checks, err);
}

ReportFormat report_format(const RunConfig& c) {
  if (c.format) {
    if (*c.format == "csv") return ReportFormat::kCsv;
    if (*c.format == "json") return ReportFormat::kJson;
    throw InputError("unknown --format '" + *c.format + "'");
  }
  if (c.outputPath && c.outputPath->extension() == ".json") return ReportFormat::kJson;
  return ReportFormat::kCsv;
}

int run_family(const RunConfig& c, std::ostream& out, std::ostream& err) {
  FamilySpec base;
  base.kind = parse_family_kind(c.kind);
  base.profile = parse_weight_profile(c.profile);
  base.gamma = c.familyGamma;
  base.t = c.t;
  base.n = c.n;
  base.alpha = c.alpha;
  base.xi = c.xi;
  if (c.dims.empty()) throw InputError("--dims is empty");
  // Reject bad specs up front (exit 1) instead of as failed rows.
  for (Index d : c.dims) {
    FamilySpec s = base;
    s.dim = d;
    s.validate();
  }
  const ReportFormat format = report_format(c);
  const TruncationReport rep = divergence_sweep({base.kind}, c.dims, base);

  Checks checks;
  for (const auto& row : rep.rows) {
    const std::string label = std::string(to_string(row.kind)) + " dim " + std::to_string(row.dim);
    if (!row.diagnostics) {
      checks.expect(false, label + ": " + row.error);
      continue;
    }
    const KatoDiagnostics& d = *row.diagnostics;
    check_diagnostics(c, d, label, checks);
    if (row.kind == FamilyKind::kSectorialized) {
      checks.expect(d.alphaMin && *d.alphaMin <= std::numbers::pi * *base.gamma / 2 + tol(c, "sector"),
                    label + " sector angle above pi*gamma/2");
    }
    if (row.kind == FamilyKind::kXAlpha) {
      checks.expect(d.alphaMin && *d.alphaMin <= *base.alpha + tol(c, "sector"),
                    label + " sector angle above alpha");
      checks.expect(d.ratioG <= *row.contrastBound * (1.0 + 1e-8), label + " contrast bound");
    }
  }
  const std::string text = format == ReportFormat::kCsv ? report_to_csv(rep) : dump_json(report_to_json(rep));
  write_report(c, text, out);
  return finish(checks, err);
}

// Seeded contraction corpus for the class-equivalence sweep: general, Hermitian and
// i * Hermitian contractions with norms spread over (0.05, 0.98).
std::vector<ComplexMatrix> sweep_corpus(const RunConfig& c) {
  std::mt19937_64 rng(c.seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> scale(0.05, 0.98);
  const Index n = c.sweepDim;
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < c.count; ++k) {
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const double re = normal(rng);
        const double im = normal(rng);
        m(i, j) = Complex(re, im);
      }
    }
    if (k % 5 == 3) m = real_part(m);
    if (k % 7 == 5) m = Complex(0.0, 1.0) * real_part(m);
    const double s = scale(rng);
    out.push_back(s * m / op_norm(m));
  }
  return out;
}

int run_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.count <= 0 || c.alphaCount <= 0 || c.sweepDim <= 0) {
    throw InputError("--count, --alphas and --dim must be positive");
  }
  const std::vector<ComplexMatrix> corpus = sweep_corpus(c);
  std::vector<double> alphas;
  for (int j = 1; j <= c.alphaCount; ++j) {
    alphas.push_back(std::numbers::pi / 2 * j / (c.alphaCount + 1));
  }
  const std::size_t cases = corpus.size() * alphas.size();
  std::vector<ClassEquivalence> res(cases);
  parallel_for(corpus.size(), [&](std::size_t k) {
    const Contraction z = Contraction::make(corpus[k]);
    for (std::size_t j = 0; j < alphas.size(); ++j) res[k * alphas.size() + j] = class_equivalence(z, alphas[j]);
  });
  std::size_t agree = 0, band = 0, disagree = 0, members = 0;
  for (const auto& e : res) {
    if (e.agree()) {
      ++agree;
      if (e.byNorm) ++members;
    } else if (e.in_band()) {
      ++band;
    } else {
      ++disagree;
    }
  }
  Json rep;
  rep["seed"] = c.seed;
  rep["dim"] = c.sweepDim;
  rep["contractions"] = corpus.size();
  rep["alphas"] = alphas;
  rep["cases"] = cases;
  rep["agreements"] = agree;
  rep["members"] = members;
  rep["bandCases"] = band;
  rep["disagreements"] = disagree;
  Checks checks;
  checks.expect(static_cast<double>(disagree) <= tol(c, "disagreements"),
                std::to_string(disagree) + " class-equivalence disagreements");
  write_report(c, dump_json(rep), out);
  return finish(checks, err);
}

}  // namespace

std::map<std::string, double> default_tolerances() {
  return {
      {"accretive", 1e-10},     {"balakrishnan", 1e-6}, {"disagreements", 0.0},
      {"form", 1e-9},           {"identity", 1e-8},     {"indicator", 1e-8},
      {"nagy_foias", 1e-8},     {"sector", 1e-6},
  };
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::kClassify: return run_classify(config, out, err);
      case Subcommand::kPower: return run_power(config, out, err);
      case Subcommand::kVerify: return run_verify(config, out, err);
      case Subcommand::kFamily: return run_family(config, out, err);
      case Subcommand::kSweep: return run_sweep(config, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (!e.field().empty()) err << " (field " << e.field() << ")";
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    // Contract violations of the input (not square, not accretive, bad spec, I/O)
    // and numeric failures outside any report both end here.
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

namespace {

std::vector<Index> parse_dims(const std::string& s) {
  std::vector<Index> dims;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      dims.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad --dims entry '" + item + "'");
    }
  }
  return dims;
}

Complex parse_xi(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("bad --xi '" + s + "', expected re,im");
  }
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sector-kit: accretive and sectorial matrix toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string inPath, outPath, dims, xi;
  std::vector<std::string> tolOverrides;
  app.add_option("--in", inPath, "input JSON file");
  app.add_option("--out", outPath, "output file (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for random suites")->capture_default_str();
  app.add_option("--tol", tolOverrides, "tolerance override key=value (repeatable)");

  auto* classify = app.add_subcommand("classify", "accretivity and sector angle of a matrix");
  auto* power = app.add_subcommand("power", "fractional power by eig, Balakrishnan, Nagy-Foias");
  power->add_option("--gamma", cfg.gamma, "exponent in (0,1)")->capture_default_str();
  power->add_option("--method", cfg.method, "eig|balakrishnan|nagy-foias|all")->capture_default_str();
  power->add_flag("--compare", cfg.compare, "norms and pairwise deviations only");
  auto* verify = app.add_subcommand("verify", "Kato diagnostics for {B}, {Q,Z} or a bare matrix");
  auto* family = app.add_subcommand("family", "truncated counterexample family sweep");
  family->add_option("--kind", cfg.kind, "ghbvths|odd-powers|flow|sectorialized|x-alpha")
      ->capture_default_str();
  family->add_option("--dims", dims, "comma separated even dims, ascending");
  family->add_option("--profile", cfg.profile, "harmonic|geometric")->capture_default_str();
  family->add_option("--gamma", cfg.familyGamma, "sectorialized exponent");
  family->add_option("--t", cfg.t, "flow time");
  family->add_option("--n", cfg.n, "power index");
  family->add_option("--alpha", cfg.alpha, "x-alpha angle (radians)");
  family->add_option("--xi", xi, "x-alpha parameter re,im");
  family->add_option("--format", cfg.format, "csv|json");
  auto* sweep = app.add_subcommand("sweep", "class-equivalence sweep over random contractions");
  sweep->add_option("--count", cfg.count, "number of contractions")->capture_default_str();
  sweep->add_option("--alphas", cfg.alphaCount, "number of angles")->capture_default_str();
  sweep->add_option("--dim", cfg.sweepDim, "matrix dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*classify) cfg.subcommand = Subcommand::kClassify;
    if (*power) cfg.subcommand = Subcommand::kPower;
    if (*verify) cfg.subcommand = Subcommand::kVerify;
    if (*family) cfg.subcommand = Subcommand::kFamily;
    if (*sweep) cfg.subcommand = Subcommand::kSweep;
    if (!inPath.empty()) cfg.inputPath = inPath;
    if (!outPath.empty()) cfg.outputPath = outPath;
    if (!dims.empty()) cfg.dims = parse_dims(dims);
    if (!xi.empty()) cfg.xi = parse_xi(xi);
    for (const auto& kv : tolOverrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--tol expects key=value, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      if (!cfg.tolerances.count(key)) throw InputError("unknown tolerance '" + key + "'");
      try {
        cfg.tolerances[key] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw InputError("bad tolerance value in '" + kv + "'");
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return run(cfg, out, err);
}

}  // namespace sector_kit::cli
