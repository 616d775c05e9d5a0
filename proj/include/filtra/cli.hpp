#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "filtra/coefficient.hpp"
#include "filtra/invariants.hpp"
#include "json.hpp"

namespace filtra {

inline constexpr const char* kReportVersion = "filtra-report/1";
inline constexpr const char* kSummaryVersion = "filtra-summary/1";
inline constexpr std::uint64_t kDefaultPrime = 32003;

struct JobConfig {
  std::string name;
  Field field = Field::prime(kDefaultPrime);
  std::vector<std::string> vars, relations;

  std::string filtration_type = "adic";         // adic | ratliff_rush | explicit
  std::vector<std::vector<std::string>> ideals;  // one list unless explicit
  int k_max = 10;

  std::string reduction_type = "explicit";  // explicit | search
  std::vector<std::string> reduction_gens;
  int attempts = 20;
  std::uint64_t seed = 1;

  int horizon = 12;
  int power_bound = 2;
  bool strict = false;
  std::set<std::string> checks;

  nlohmann::json echo;  // the input document
};

/// Validates the document shape and values before any algebra runs.
/// Throws ConfigError naming the offending key.
JobConfig parse_config(const nlohmann::json& doc, const std::string& default_name = "job");
JobConfig load_config(const std::filesystem::path& path);

enum class ReportFormat { Json, Markdown, Both };

struct VerifyFlags {
  std::optional<int> horizon;
  ReportFormat format = ReportFormat::Json;
  std::optional<std::filesystem::path> out_dir;
  bool stable_output = false;
};

struct JobOutcome {
  int exit_code = 0;
  nlohmann::json report;
};

/// Runs the pipeline on a parsed config. Never throws; errors land in the
/// report with their stage and exit code 1.
JobOutcome run_job(const JobConfig& cfg, const VerifyFlags& flags);

/// Serializes a verdict; timings are added by run_job.
nlohmann::json report_to_json(const VerdictReport& r);
/// Human form, derived from the JSON report alone.
std::string render_markdown(const nlohmann::json& report);

/// Loads, runs and writes reports (stdout when no out_dir). Returns the exit code.
int run_verify(const std::filesystem::path& config_path, const VerifyFlags& flags);

struct CorpusFlags {
  VerifyFlags verify;
  int jobs = 1;
};

struct CorpusOutcome {
  int exit_code = 0;
  nlohmann::json summary;
};

/// Every *.json in dir, in name order. Throws ConfigError for an empty or missing dir.
CorpusOutcome run_corpus(const std::filesystem::path& dir, const CorpusFlags& flags);
std::string render_summary_markdown(const nlohmann::json& summary);

}  // namespace filtra
