// Command-line front end: certifies reflection matrices and computes
// normal-closure indices in finitely presented groups, emitting one JSON
// report per invocation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "picard/jobs.hpp"

namespace {

using picard::cli::Command;
using picard::cli::JobSpec;

int emit(const picard::cli::Report& report, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << report.json;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << output_path << "\n";
      return picard::cli::kExitInputError;
    }
    out << report.json;
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reflection certificates and normal-closure index computations"};
  app.require_subcommand(1);

  JobSpec job;
  std::string output_path;
  std::string strategy = "hlt";
  std::string relators;
  long d_value = 0;
  std::size_t truncate = 0;

  auto add_enum_opts = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", strategy, "enumeration strategy: hlt or felsch")
        ->check(CLI::IsMember({"hlt", "felsch"}));
    cmd->add_option("--max-cosets", job.max_cosets, "coset table row limit")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--progress", job.progress_interval,
                    "stream enumeration progress to stderr every N definitions");
  };
  auto add_output_opt = [&](CLI::App* cmd) {
    cmd->add_option("--output", output_path, "write the JSON report to this path");
  };

  auto* certify = app.add_subcommand("certify", "certify a matrix as a reflection");
  certify->add_option("--builtin", job.builtin, "builtin matrix name: I0, R, Ri, Rsigma");
  certify->add_option("--matrix", job.matrix_literal, "matrix literal [a,b,c; d,e,f; g,h,i]");
  certify->add_option("--d", d_value, "square-free d of the quadratic field");
  certify->add_flag("--quaternion", job.quaternion, "quaternionic domain");
  add_output_opt(certify);

  auto* order = app.add_subcommand("order", "order of a finitely presented group");
  order->add_option("presentation", job.presentation_path, "presentation file")->required();
  order->add_option("--truncate", truncate, "keep only the first K relators");
  add_enum_opts(order);
  add_output_opt(order);

  auto* index = app.add_subcommand("index", "index of the normal closure of relators");
  index->add_option("presentation", job.presentation_path, "presentation file")->required();
  index->add_option("--relators", relators, "comma-separated relator names")->required();
  index->add_option("--map", job.map_path, "sidecar generator-to-matrix map file");
  index->add_option("--truncate", truncate, "keep only the first K relators");
  add_enum_opts(index);
  add_output_opt(index);

  auto* abelian = app.add_subcommand("abelian", "abelian invariants of a presentation");
  abelian->add_option("presentation", job.presentation_path, "presentation file")->required();
  abelian->add_option("--relators", relators, "comma-separated relator names to add");
  abelian->add_option("--map", job.map_path, "sidecar generator-to-matrix map file");
  abelian->add_option("--truncate", truncate, "keep only the first K relators");
  add_output_opt(abelian);

  auto* verify = app.add_subcommand("verify-paper", "run the full reproduction battery");
  verify->add_option("--data-dir", job.data_dir, "directory with the presentation data files")
      ->required();
  verify->add_flag("--skip-slow", job.skip_slow, "skip the 96 / 168 / 13824 enumerations");
  verify->add_option("--jobs", job.parallel_jobs, "parallel enumeration jobs")
      ->check(CLI::PositiveNumber);
  add_enum_opts(verify);
  add_output_opt(verify);

  CLI11_PARSE(app, argc, argv);

  if (certify->parsed()) job.command = Command::Certify;
  if (order->parsed()) job.command = Command::Order;
  if (index->parsed()) job.command = Command::Index;
  if (abelian->parsed()) job.command = Command::Abelian;
  if (verify->parsed()) job.command = Command::VerifyPaper;

  job.strategy = strategy == "felsch" ? picard::fpgroups::Strategy::Felsch
                                      : picard::fpgroups::Strategy::Hlt;
  if (d_value > 0) job.d = d_value;
  if (truncate > 0) job.truncate = truncate;
  if (!relators.empty()) {
    std::string cur;
    for (char c : relators + ",") {
      if (c == ',') {
        if (!cur.empty()) job.relator_names.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      }
    }
  }

  try {
    return emit(picard::cli::run_job(job), output_path);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return picard::cli::kExitInputError;
  }
}
