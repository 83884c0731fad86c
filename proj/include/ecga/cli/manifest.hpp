#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ecga/field_ec.hpp"
#include "ecga/idprng.hpp"
#include "ecga/moga.hpp"

namespace ecga::cli {

inline constexpr int kManifestSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

/// Everything `generate` needs, whether it came from flags or a manifest.
struct GenerateRequest {
  std::string image_path;
  std::string curve_spec;                 // as given on the command line
  std::optional<ec::CurveParams> curve;   // resolved parameters
  Triplet triplet;
  std::vector<std::uint8_t> bz_seed;
  std::size_t length = 0;
  bool optimize = false;
  moga::OptimizerConfig optimizer;
  std::string out_path;
  std::string manifest_path;
  std::string trace_path;
};

struct GenerateOutcome {
  std::string image_sha256;   // hex of H_I
  std::size_t image_width = 0;
  std::size_t image_height = 0;
  std::size_t n_points = 0;
  moga::FitnessValue initial;
  moga::FitnessValue final;
  std::optional<moga::OptimizationTrace> trace;
  std::string output_sha256;
  std::size_t output_bytes = 0;
};

[[nodiscard]] std::string utc_timestamp(std::chrono::system_clock::time_point t);

[[nodiscard]] nlohmann::json build_manifest(const GenerateRequest& req, const GenerateOutcome& out,
                                            const std::string& started_at, const std::string& finished_at);

/// What a manifest promises: the request to rerun and the digests the rerun
/// must reproduce.
struct ReplayPlan {
  GenerateRequest request;
  std::string image_sha256;
  std::string output_sha256;
};

/// Throws InvalidConfig for a missing key, wrong type or unknown schema version.
[[nodiscard]] ReplayPlan replay_plan(const nlohmann::json& manifest);

}  // namespace ecga::cli
