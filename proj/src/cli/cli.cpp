#include "ecga/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecga/bitstring.hpp"
#include "ecga/cli/file_io.hpp"
#include "ecga/cli/manifest.hpp"
#include "ecga/curves.hpp"
#include "ecga/error.hpp"
#include "ecga/idprng.hpp"
#include "ecga/image.hpp"
#include "ecga/material.hpp"
#include "ecga/moga.hpp"
#include "ecga/nist.hpp"
#include "ecga/sequence.hpp"
#include "ecga/stats.hpp"

#ifndef ECGA_VERSION
#define ECGA_VERSION "unknown"
#endif

namespace ecga::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string now_utc() { return utc_timestamp(std::chrono::system_clock::now()); }

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string image, curve, bz_seed_hex, out, manifest, trace, replay;
  std::uint64_t phi = 0, psi = 0, varphi = 0;
  std::size_t length = 0;
  bool optimize = false;
  std::uint64_t rng_seed = 0;
  std::uint64_t max_generations = moga::OptimizerConfig{}.max_generations;
};

GenerateOutcome execute(GenerateRequest& req) {
  const ImageBuffer image = read_pgm(req.image_path);
  if (!req.curve) req.curve = ec::resolve_curve(req.curve_spec);

  GenerationConfig cfg{image, *req.curve, req.triplet, req.bz_seed, 8, req.length};
  const DeltaResult delta = assemble_delta(cfg);
  Sequence seq = affine_combine(delta.delta, req.triplet);

  GenerateOutcome out;
  out.image_sha256 = to_hex(hash_image(image).bytes());
  out.image_width = image.width;
  out.image_height = image.height;
  out.n_points = delta.n_points;
  out.initial = moga::evaluate(seq);
  out.final = out.initial;

  if (req.optimize) {
    auto res = moga::optimize(seq, req.optimizer);
    seq = std::move(res.sequence);
    out.final = moga::evaluate(seq);
    out.trace = std::move(res.trace);
  }

  const auto bytes = seq.to_bytes();
  out.output_sha256 = sha256_hex(bytes);
  out.output_bytes = bytes.size();
  write_file_atomic(req.out_path, bytes);
  if (out.trace && !req.trace_path.empty()) {
    std::ostringstream csv;
    moga::write_trace_csv(csv, *out.trace);
    write_file_atomic(req.trace_path, csv.str());
  }
  return out;
}

void report_generate(std::ostream& os, const GenerateRequest& req, const GenerateOutcome& out) {
  os << "wrote " << out.output_bytes << " bytes to " << req.out_path << "\n";
  os << "sha256 " << out.output_sha256 << "\n";
  os << "points " << out.n_points << "\n";
  os << "entropy " << out.final.H << " (h_max " << moga::h_max(req.length, 8) << ")\n";
  os << "period " << out.final.T << "\n";
  if (out.trace) {
    os << "status " << moga::to_string(out.trace->status) << " after " << out.trace->generations()
       << " generations\n";
  }
}

int cmd_generate(const GenerateArgs& a, const CLI::App& sub, std::ostream& out) {
  const auto given = [&](const char* name) { return sub.count(name) > 0; };
  const std::string started = now_utc();

  if (!a.replay.empty()) {
    for (const char* flag : {"--image", "--curve", "--phi", "--psi", "--varphi", "--bz-seed", "--length",
                             "--optimize", "--rng-seed", "--max-generations"}) {
      if (given(flag)) throw UsageError(std::string(flag) + " cannot be combined with --replay");
    }
    const auto text = read_file(a.replay);
    json manifest;
    try {
      manifest = json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidConfig, std::string("manifest is not valid JSON: ") + e.what());
    }
    ReplayPlan plan = replay_plan(manifest);
    GenerateRequest& req = plan.request;
    if (given("--out")) req.out_path = a.out;
    if (given("--trace")) req.trace_path = a.trace;
    if (!given("--trace") && given("--out")) req.trace_path.clear();
    req.manifest_path = a.manifest;

    GenerateOutcome res = execute(req);
    if (res.image_sha256 != plan.image_sha256) {
      throw Error(ErrorCode::CorruptImage, "image digest differs from the manifest: " + req.image_path);
    }
    if (res.output_sha256 != plan.output_sha256) {
      throw Error(ErrorCode::IoError, "replay produced sha256 " + res.output_sha256 + ", manifest records " +
                                          plan.output_sha256);
    }
    if (!req.manifest_path.empty()) {
      write_file_atomic(req.manifest_path, build_manifest(req, res, started, now_utc()).dump(2) + "\n");
    }
    report_generate(out, req, res);
    out << "replay matches manifest\n";
    return 0;
  }

  for (const char* flag : {"--image", "--curve", "--phi", "--psi", "--varphi", "--bz-seed", "--length", "--out"}) {
    if (!given(flag)) throw UsageError(std::string(flag) + " is required (or use --replay)");
  }
  if (!a.optimize) {
    for (const char* flag : {"--trace", "--rng-seed", "--max-generations"}) {
      if (given(flag)) throw UsageError(std::string(flag) + " requires --optimize");
    }
  }
  if (a.bz_seed_hex.size() < 64) throw UsageError("--bz-seed needs at least 64 hex digits (32 bytes)");
  std::vector<std::uint8_t> seed;
  try {
    seed = from_hex(a.bz_seed_hex);
  } catch (const Error& e) {
    throw UsageError(std::string("--bz-seed: ") + e.what());
  }

  GenerateRequest req;
  req.image_path = a.image;
  req.curve_spec = a.curve;
  req.triplet = {a.phi, a.psi, a.varphi};
  req.bz_seed = std::move(seed);
  req.length = a.length;
  req.optimize = a.optimize;
  req.optimizer.rng_seed = a.rng_seed;
  req.optimizer.max_generations = a.max_generations;
  req.out_path = a.out;
  req.manifest_path = a.manifest;
  req.trace_path = a.trace;

  GenerateOutcome res = execute(req);
  if (!req.manifest_path.empty()) {
    write_file_atomic(req.manifest_path, build_manifest(req, res, started, now_utc()).dump(2) + "\n");
  }
  report_generate(out, req, res);
  return 0;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string in, report;
  std::string tests = "entropy,period,hurst,nist";
  double lambda = 0.01;
};

std::vector<std::string> split_tests(const std::string& list) {
  static const std::vector<std::string> known = {"entropy", "period", "hurst", "nist"};
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(known.begin(), known.end(), item) == known.end()) {
      throw UsageError("unknown test '" + item + "' (expected entropy, period, hurst, nist)");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("--tests selects nothing");
  return out;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto tests = split_tests(a.tests);
  if (!(a.lambda > 0.0 && a.lambda < 1.0)) throw UsageError("--lambda must lie in (0, 1)");
  const auto wants = [&](const char* t) { return std::find(tests.begin(), tests.end(), t) != tests.end(); };

  const auto bytes = read_file(a.in);
  const Sequence seq = Sequence::from_bytes(bytes);

  json report = {{"schema_version", kReportSchemaVersion},
                 {"input", a.in},
                 {"input_digest", sha256_hex(bytes)},
                 {"length", seq.size()},
                 {"lambda", a.lambda}};
  json errors = json::object();

  if (wants("entropy")) {
    const double h = stats::entropy(seq);
    report["entropy"] = h;
    errors["entropy"] = nullptr;
    out << "entropy " << h << "\n";
  }
  if (wants("period")) {
    const std::size_t t = stats::period(seq);
    report["period"] = t;
    errors["period"] = nullptr;
    out << "period " << t << "\n";
  }
  if (wants("hurst")) {
    try {
      const auto est = stats::hurst_rs_detail(stats::as_doubles(seq));
      json points = json::array();
      for (const auto& p : est.points) points.push_back({{"window", p.window}, {"mean_rs", p.mean_rs}});
      report["hurst"] = est.exponent;
      report["hurst_points"] = points;
      errors["hurst"] = nullptr;
      out << "hurst " << est.exponent << "\n";
    } catch (const Error& e) {
      report["hurst"] = nullptr;
      errors["hurst"] = e.what();
      out << "hurst n/a (" << e.what() << ")\n";
    }
  }
  if (wants("nist")) {
    nist::NistConfig cfg;
    cfg.lambda = a.lambda;
    json rows = json::array();
    for (const auto& r : nist::nist_subset(seq.to_bits(), cfg)) {
      json row = {{"name", r.name}, {"parameter", r.parameter}};
      if (r.skipped()) {
        row["p_value"] = nullptr;
        row["pass"] = nullptr;
        row["skip_reason"] = r.skip_reason;
        out << "nist " << r.name << " skipped: " << r.skip_reason << "\n";
      } else {
        row["p_value"] = *r.p_value;
        row["pass"] = r.passed(a.lambda);
        out << "nist " << r.name << " p=" << *r.p_value << (r.passed(a.lambda) ? " pass" : " FAIL") << "\n";
      }
      rows.push_back(row);
    }
    report["nist"] = rows;
    errors["nist"] = nullptr;
  }
  report["errors"] = errors;
  write_file_atomic(a.report, report.dump(2) + "\n");
  return 0;
}

// --- compare ----------------------------------------------------------------

struct CompareArgs {
  std::string a, b, report;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const auto bytes_a = read_file(a.a);
  const auto bytes_b = read_file(a.b);
  if (bytes_a.size() != bytes_b.size()) {
    throw Error(ErrorCode::LengthMismatch, "inputs differ in length (" + std::to_string(bytes_a.size()) + " vs " +
                                               std::to_string(bytes_b.size()) + " bytes)");
  }
  const Sequence sa = Sequence::from_bytes(bytes_a);
  const Sequence sb = Sequence::from_bytes(bytes_b);

  json report = {{"schema_version", kReportSchemaVersion},
                 {"a", {{"path", a.a}, {"sha256", sha256_hex(bytes_a)}}},
                 {"b", {{"path", a.b}, {"sha256", sha256_hex(bytes_b)}}},
                 {"length", sa.size()}};
  json errors = json::object();
  try {
    const double r = stats::pearson(sa, sb);
    report["pearson"] = r;
    errors["pearson"] = nullptr;
    out << "pearson " << r << "\n";
  } catch (const Error& e) {
    report["pearson"] = nullptr;
    errors["pearson"] = e.what();
    out << "pearson n/a (" << e.what() << ")\n";
  }
  const double rate = stats::nbcr(sa, sb);
  report["nbcr"] = rate;
  errors["nbcr"] = nullptr;
  out << "nbcr " << rate << "\n";
  report["errors"] = errors;
  write_file_atomic(a.report, report.dump(2) + "\n");
  return 0;
}

// --- export-bits ------------------------------------------------------------

struct ExportArgs {
  std::string in, out;
  std::string format = "ascii01";
  std::string input_format = "bytes";
};

int cmd_export_bits(const ExportArgs& a, std::ostream& out) {
  const auto data = read_file(a.in);
  BitString bits;
  if (a.input_format == "bytes") {
    bits = BitString::from_bytes(data);
  } else {
    std::string text;
    text.reserve(data.size());
    for (auto c : data) {
      if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
      text.push_back(static_cast<char>(c));
    }
    bits = BitString::from_string(text);
  }

  if (a.format == "ascii01") {
    write_file_atomic(a.out, bits.to_string());
  } else {
    if (bits.size() % 8 != 0) {
      throw Error(ErrorCode::LengthMismatch, "raw output needs a multiple of 8 bits, got " +
                                                 std::to_string(bits.size()));
    }
    write_file_atomic(a.out, bits.to_bytes());
  }
  out << "exported " << bits.size() << " bits to " << a.out << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Image-dependent pseudo-random sequences from elliptic curve points", "ecga"};
  app.set_version_flag("--version", ECGA_VERSION);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a byte sequence from an image and curve");
  g->add_option("--image", gen.image, "PGM image (P2 or P5, maxval 255)");
  g->add_option("--curve", gen.curve, "p256, p521, or a curve JSON file");
  g->add_option("--phi", gen.phi, "Affine coefficient of d_i")->check(CLI::PositiveNumber);
  g->add_option("--psi", gen.psi, "Affine coefficient of d_{i+1}")->check(CLI::PositiveNumber);
  g->add_option("--varphi", gen.varphi, "Affine offset")->check(CLI::PositiveNumber);
  g->add_option("--bz-seed", gen.bz_seed_hex, "Mask seed, hex, at least 32 bytes");
  g->add_option("--length", gen.length, "Sequence length in bytes")->check(CLI::Range(std::size_t{256}, SIZE_MAX));
  g->add_flag("--optimize", gen.optimize, "Run the genetic optimizer");
  g->add_option("--rng-seed", gen.rng_seed, "Optimizer RNG seed");
  g->add_option("--max-generations", gen.max_generations, "Optimizer generation cap")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  g->add_option("--out", gen.out, "Output sequence file (raw bytes)");
  g->add_option("--manifest", gen.manifest, "Write a run manifest (JSON)");
  g->add_option("--trace", gen.trace, "Write the optimizer trace (CSV)");
  g->add_option("--replay", gen.replay, "Rerun a saved manifest and verify its output digest");

  AnalyzeArgs ana;
  auto* an = app.add_subcommand("analyze", "Entropy, period, Hurst exponent and NIST subset of a byte file");
  an->add_option("--in", ana.in, "Input sequence (raw bytes)")->required();
  an->add_option("--tests", ana.tests, "Comma-separated: entropy,period,hurst,nist");
  an->add_option("--lambda", ana.lambda, "NIST significance level");
  an->add_option("--report", ana.report, "JSON report path")->required();

  CompareArgs cmp;
  auto* c = app.add_subcommand("compare", "Pearson correlation and bit change rate of two byte files");
  c->add_option("--a", cmp.a, "First sequence")->required();
  c->add_option("--b", cmp.b, "Second sequence")->required();
  c->add_option("--report", cmp.report, "JSON report path")->required();

  ExportArgs exp;
  auto* e = app.add_subcommand("export-bits", "Write a byte file as ASCII bits for the NIST STS");
  e->add_option("--in", exp.in, "Input file")->required();
  e->add_option("--out", exp.out, "Output file")->required();
  e->add_option("--format", exp.format, "ascii01 or raw")->check(CLI::IsMember({"ascii01", "raw"}));
  e->add_option("--input-format", exp.input_format, "bytes or ascii01")->check(CLI::IsMember({"bytes", "ascii01"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g->parsed()) return cmd_generate(gen, *g, out);
    if (an->parsed()) return cmd_analyze(ana, out);
    if (c->parsed()) return cmd_compare(cmp, out);
    if (e->parsed()) return cmd_export_bits(exp, out);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ecga::cli
