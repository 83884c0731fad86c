#include "ecga/cli/manifest.hpp"

#include <ctime>

#include "ecga/cli/file_io.hpp"
#include "ecga/curves.hpp"
#include "ecga/error.hpp"

#ifndef ECGA_VERSION
#define ECGA_VERSION "unknown"
#endif

namespace ecga::cli {

using nlohmann::json;

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json fitness_json(const moga::FitnessValue& fv) {
  return {{"entropy", fv.H}, {"period", fv.T}, {"fitness", fv.f}};
}

json curve_json(const GenerateRequest& req) {
  const ec::CurveParams& c = *req.curve;
  const auto& g = c.generator();
  return {{"argument", req.curve_spec},
          {"name", c.name()},
          {"p", c.p().str()},
          {"a", c.a().value().str()},
          {"b", c.b().value().str()},
          {"gx", g.x().value().str()},
          {"gy", g.y().value().str()}};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidConfig, std::string("manifest: missing key '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("manifest: bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

json build_manifest(const GenerateRequest& req, const GenerateOutcome& out, const std::string& started_at,
                    const std::string& finished_at) {
  json cfg = {
      {"image", {{"path", req.image_path}, {"width", out.image_width}, {"height", out.image_height},
                 {"sha256", out.image_sha256}}},
      {"curve", curve_json(req)},
      {"triplet", {{"phi", req.triplet.phi}, {"psi", req.triplet.psi}, {"varphi", req.triplet.varphi}}},
      {"bz_seed", to_hex(req.bz_seed)},
      {"m", 8},
      {"length", req.length},
      {"optimize", req.optimize},
  };
  if (req.optimize) {
    cfg["optimizer"] = {{"rng_seed", req.optimizer.rng_seed},
                        {"max_generations", req.optimizer.max_generations},
                        {"epsilon", req.optimizer.epsilon}};
  } else {
    cfg["optimizer"] = nullptr;
  }

  json result = {
      {"n_points", out.n_points},
      {"initial", fitness_json(out.initial)},
      {"final", fitness_json(out.final)},
      {"h_max", moga::h_max(req.length, 8)},
      {"output", {{"path", req.out_path}, {"bytes", out.output_bytes}, {"sha256", out.output_sha256}}},
  };
  if (out.trace) {
    result["status"] = std::string(moga::to_string(out.trace->status));
    result["generations"] = out.trace->generations();
    result["trace_path"] = req.trace_path.empty() ? json(nullptr) : json(req.trace_path);
  } else {
    result["status"] = nullptr;
    result["generations"] = 0;
    result["trace_path"] = nullptr;
  }

  return {{"schema_version", kManifestSchemaVersion},
          {"tool", "ecga"},
          {"tool_version", ECGA_VERSION},
          {"config", cfg},
          {"result", result},
          {"started_at", started_at},
          {"finished_at", finished_at}};
}

ReplayPlan replay_plan(const json& manifest) {
  if (get<int>(manifest, "schema_version") != kManifestSchemaVersion) {
    throw Error(ErrorCode::InvalidConfig, "manifest: unsupported schema_version");
  }
  const json& cfg = field(manifest, "config");
  const json& result = field(manifest, "result");

  ReplayPlan plan;
  GenerateRequest& req = plan.request;
  const json& image = field(cfg, "image");
  req.image_path = get<std::string>(image, "path");
  plan.image_sha256 = get<std::string>(image, "sha256");

  const json& curve = field(cfg, "curve");
  req.curve_spec = get<std::string>(curve, "argument");
  req.curve = ec::CurveParams::create(get<std::string>(curve, "name"),
                                      ec::parse_bigint(get<std::string>(curve, "p")),
                                      ec::parse_bigint(get<std::string>(curve, "a")),
                                      ec::parse_bigint(get<std::string>(curve, "b")),
                                      ec::parse_bigint(get<std::string>(curve, "gx")),
                                      ec::parse_bigint(get<std::string>(curve, "gy")));

  const json& triplet = field(cfg, "triplet");
  req.triplet = {get<std::uint64_t>(triplet, "phi"), get<std::uint64_t>(triplet, "psi"),
                 get<std::uint64_t>(triplet, "varphi")};
  req.bz_seed = from_hex(get<std::string>(cfg, "bz_seed"));
  if (get<unsigned>(cfg, "m") != 8) throw Error(ErrorCode::InvalidConfig, "manifest: only m = 8 is supported");
  req.length = get<std::size_t>(cfg, "length");
  req.optimize = get<bool>(cfg, "optimize");
  if (req.optimize) {
    const json& opt = field(cfg, "optimizer");
    req.optimizer.rng_seed = get<std::uint64_t>(opt, "rng_seed");
    req.optimizer.max_generations = get<std::uint64_t>(opt, "max_generations");
    req.optimizer.epsilon = get<double>(opt, "epsilon");
  }

  const json& output = field(result, "output");
  req.out_path = get<std::string>(output, "path");
  plan.output_sha256 = get<std::string>(output, "sha256");
  if (const json& tp = field(result, "trace_path"); tp.is_string()) req.trace_path = tp.get<std::string>();
  return plan;
}

}  // namespace ecga::cli
