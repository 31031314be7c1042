#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picard/coset_table.hpp"

namespace picard::cli {

inline constexpr const char* kArtifactName = "picard";
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Exit codes: 0 success / all match, 1 mismatch, 2 input error, 3 resource
/// limit.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInputError = 2,
  kExitResourceLimit = 3,
};

enum class Command { Certify, Order, Index, Abelian, VerifyPaper };

struct JobSpec {
  Command command = Command::Certify;

  // certify
  std::string builtin;         // I0 | R | Ri | Rsigma
  std::string matrix_literal;  // alternative to builtin
  bool quaternion = false;
  std::optional<long> d;

  // presentation-based commands
  std::string presentation_path;
  std::string map_path;  // sidecar generator-to-matrix map
  std::vector<std::string> relator_names;
  std::optional<std::size_t> truncate;

  // enumeration
  fpgroups::Strategy strategy = fpgroups::Strategy::Hlt;
  std::int64_t max_cosets = 10'000'000;
  std::int64_t progress_interval = 0;

  // verify-paper
  std::string data_dir;
  bool skip_slow = false;
  int parallel_jobs = 1;
};

/// A machine-readable report: one JSON document per invocation, with stable
/// key order. Identical inputs produce byte-identical JSON apart from the
/// generated_at and wall-time fields.
struct Report {
  int exit_code = kExitOk;
  std::string json;
};

Report cmd_certify(const JobSpec& job);
Report cmd_order(const JobSpec& job);
Report cmd_index(const JobSpec& job);
Report cmd_abelian(const JobSpec& job);
Report cmd_verify_paper(const JobSpec& job);

Report run_job(const JobSpec& job);

}  // namespace picard::cli
