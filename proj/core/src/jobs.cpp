#include "picard/jobs.hpp"

#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include "picard/abelian.hpp"
#include "picard/errors.hpp"
#include "picard/hermitian.hpp"
#include "picard/reflections.hpp"
#include "report_util.hpp"

namespace picard::cli {

namespace fs = std::filesystem;
using fpgroups::EnumerationLimits;
using fpgroups::EnumResult;
using fpgroups::GeneratorMap;
using fpgroups::Presentation;
using fpgroups::Word;
using hermitian::QuadMatrix;
using hermitian::QuatMatrix;
using rings::QuadElt;
using rings::RingSpec;

namespace {

QuadMatrix complex_builtin(const std::string& name, RingSpec spec) {
  for (const auto& [n, m] : hermitian::paper_generators(spec)) {
    if (n == name) return m;
  }
  throw std::invalid_argument("unknown builtin matrix '" + name + "' (complex domain has I0, R)");
}

QuatMatrix quaternion_builtin(const std::string& name) {
  for (const auto& [n, m] : hermitian::paper_generators_quaternion()) {
    if (n == name) return m;
  }
  throw std::invalid_argument("unknown builtin matrix '" + name +
                              "' (quaternion domain has I0, Ri, Rsigma)");
}

Json certify_complex_json(const QuadMatrix& A) {
  if (!hermitian::is_isometry(A)) {
    throw NotIsometryError("matrix does not satisfy A*JA = J");
  }
  const auto cert = reflections::is_complex_reflection(A);
  Json out;
  out["is_isometry"] = true;
  out["isometry_type"] = reflections::to_string(reflections::classify_isometry(A));
  out["char_poly"] = reflections::char_poly(A).str();
  Json eigs = Json::array();
  for (const auto& rec : cert.eigenvalues) eigs.push_back(eig_record_json(rec));
  out["eigenvalues"] = std::move(eigs);
  out["verdict"] = cert.is_reflection;
  out["mirror"] = cert.mirror ? eig_record_json(*cert.mirror) : Json(nullptr);
  if (const auto ord = hermitian::projective_order(A)) out["projective_order"] = *ord;
  return out;
}

Json certify_quaternion_json(const QuatMatrix& A) {
  if (!hermitian::is_isometry(A)) {
    throw NotIsometryError("matrix does not satisfy A*JA = J");
  }
  const auto cert = reflections::is_quaternionic_reflection(A);
  Json out;
  out["is_isometry"] = true;
  out["adjoint_char_poly"] = reflections::adjoint_char_poly(A).str();
  Json classes = Json::array();
  for (const auto& rec : cert.classes) classes.push_back(eig_record_json(rec));
  out["eigenvalue_classes"] = std::move(classes);
  out["verdict"] = cert.is_reflection;
  out["mirror"] = cert.mirror ? eig_record_json(*cert.mirror) : Json(nullptr);
  return out;
}

Presentation load_presentation(const JobSpec& job) {
  Presentation p = fpgroups::parse_presentation_file(job.presentation_path);
  if (job.truncate) p = fpgroups::truncate_presentation(p, *job.truncate);
  return p;
}

EnumerationLimits limits_for(const JobSpec& job, const std::string& label) {
  EnumerationLimits limits;
  limits.max_cosets = job.max_cosets;
  limits.strategy = job.strategy;
  limits.progress_interval = job.progress_interval;
  if (job.progress_interval > 0) {
    limits.progress = [label](const fpgroups::EnumerationStats& s) {
      std::cerr << label << ": defined=" << s.cosets_defined << " live=" << s.live_cosets
                << " coincidences=" << s.coincidences << "\n";
    };
  }
  return limits;
}

/// Resolves a relator name against the presentation: either a literal
/// generator name, or (with a sidecar map) the name of a builtin matrix that
/// equals some mapped generator up to a unit scalar.
struct ResolvedRelator {
  std::string name;        // as given
  std::string generator;   // resolved presentation generator
  Word word;
  Json certificate;        // cross-validation, when a map is available
};

std::vector<ResolvedRelator> resolve_relators(const Presentation& p,
                                              const std::vector<std::string>& names,
                                              const GeneratorMap* map) {
  std::vector<ResolvedRelator> out;
  for (const std::string& name : names) {
    ResolvedRelator r;
    r.name = name;
    if (const auto idx = p.generator_index(name)) {
      r.generator = name;
      r.word = Word{*idx};
    } else if (map) {
      // Match the builtin matrix against mapped generators projectively.
      if (map->quaternion) {
        const QuatMatrix target = quaternion_builtin(name);
        for (const auto& [gen, m] : map->quaternion_entries) {
          const auto mu = hermitian::scalar_ratio(m, target);
          if (mu && mu->is_real() && mu->norm() == 1) {
            r.generator = gen;
            break;
          }
        }
      } else {
        const QuadMatrix target = complex_builtin(name, *map->spec);
        for (const auto& [gen, m] : map->complex_entries) {
          const auto mu = hermitian::scalar_ratio(m, target);
          if (mu && mu->is_unit_modulus()) {
            r.generator = gen;
            break;
          }
        }
      }
      if (r.generator.empty()) {
        throw std::invalid_argument("relator name '" + name +
                                    "' matches no presentation generator via the map file");
      }
      const auto idx2 = p.generator_index(r.generator);
      if (!idx2) {
        throw std::invalid_argument("map file generator '" + r.generator +
                                    "' is not a generator of the presentation");
      }
      r.word = Word{*idx2};
    } else {
      throw std::invalid_argument("unresolved relator name '" + name +
                                  "' (no such generator and no map file)");
    }
    // Cross-validate against the reflection certificates when possible.
    if (map) {
      if (map->quaternion) {
        if (const auto* m = map->find_quaternion(r.generator)) {
          r.certificate = certify_quaternion_json(*m);
        }
      } else if (const auto* m = map->find_complex(r.generator)) {
        r.certificate = certify_complex_json(*m);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json resolved_relators_json(const std::vector<ResolvedRelator>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) {
    Json j;
    j["name"] = r.name;
    j["generator"] = r.generator;
    if (!r.certificate.is_null()) j["certificate"] = r.certificate;
    arr.push_back(std::move(j));
  }
  return arr;
}

Report error_report(Json body, const std::exception& e, int code) {
  body["error"] = e.what();
  return {code, finalize_report(std::move(body))};
}

int code_for(const std::exception& e) {
  (void)e;
  return kExitInputError;
}

}  // namespace

Report cmd_certify(const JobSpec& job) {
  Json body = report_header("certify");
  Json echo;
  if (!job.builtin.empty()) echo["builtin"] = job.builtin;
  if (!job.matrix_literal.empty()) echo["matrix"] = job.matrix_literal;
  echo["domain"] = job.quaternion ? "quaternion" : ("d=" + std::to_string(job.d.value_or(0)));
  body["job"] = std::move(echo);
  try {
    if (job.builtin.empty() == job.matrix_literal.empty()) {
      throw std::invalid_argument("certify requires exactly one of --builtin or --matrix");
    }
    if (job.quaternion) {
      const QuatMatrix A = job.builtin.empty()
                               ? hermitian::parse_matrix_quaternion(job.matrix_literal)
                               : quaternion_builtin(job.builtin);
      body["matrix"] = A.to_string();
      body["outcome"] = certify_quaternion_json(A);
    } else {
      if (!job.d) throw std::invalid_argument("complex certification requires --d");
      const RingSpec spec(*job.d);
      const QuadMatrix A = job.builtin.empty() ? hermitian::parse_matrix(job.matrix_literal, spec)
                                               : complex_builtin(job.builtin, spec);
      body["matrix"] = A.to_string();
      body["outcome"] = certify_complex_json(A);
    }
  } catch (const std::exception& e) {
    return error_report(std::move(body), e, code_for(e));
  }
  return {kExitOk, finalize_report(std::move(body))};
}

Report cmd_order(const JobSpec& job) {
  Json body = report_header("order");
  body["job"] = Json{{"presentation", job.presentation_path},
                     {"strategy", fpgroups::to_string(job.strategy)},
                     {"max_cosets", job.max_cosets}};
  try {
    const Presentation p = load_presentation(job);
    body["presentation"] = presentation_json(p);
    const EnumResult r = fpgroups::todd_coxeter(p, limits_for(job, p.name));
    body["outcome"] = enum_result_json(r);
    if (r.finite && p.truncated_from) {
      body["outcome"]["note"] =
          "presentation is truncated: the full group's order divides this value";
    }
    return {r.finite ? kExitOk : kExitResourceLimit, finalize_report(std::move(body))};
  } catch (const std::exception& e) {
    return error_report(std::move(body), e, code_for(e));
  }
}

Report cmd_index(const JobSpec& job) {
  Json body = report_header("index");
  body["job"] = Json{{"presentation", job.presentation_path},
                     {"relators", job.relator_names},
                     {"strategy", fpgroups::to_string(job.strategy)},
                     {"max_cosets", job.max_cosets}};
  try {
    const Presentation p = load_presentation(job);
    body["presentation"] = presentation_json(p);
    std::optional<GeneratorMap> map;
    if (!job.map_path.empty()) map = fpgroups::parse_generator_map_file(job.map_path);
    const auto resolved = resolve_relators(p, job.relator_names, map ? &*map : nullptr);
    body["relators"] = resolved_relators_json(resolved);
    std::vector<Word> ws;
    for (const auto& r : resolved) ws.push_back(r.word);
    const EnumResult r =
        fpgroups::index_of_normal_closure(p, ws, limits_for(job, p.name));
    body["outcome"] = enum_result_json(r);
    if (r.finite) {
      const bool exact = !p.truncated_from.has_value();
      body["outcome"]["index"] = r.order;
      body["outcome"]["exact"] = exact;
      body["outcome"]["claim"] = (exact ? "index = " : "index divides ") + std::to_string(r.order);
    }
    return {r.finite ? kExitOk : kExitResourceLimit, finalize_report(std::move(body))};
  } catch (const std::exception& e) {
    return error_report(std::move(body), e, code_for(e));
  }
}

Report cmd_abelian(const JobSpec& job) {
  Json body = report_header("abelian");
  body["job"] = Json{{"presentation", job.presentation_path}, {"relators", job.relator_names}};
  try {
    Presentation p = load_presentation(job);
    body["presentation"] = presentation_json(p);
    if (!job.relator_names.empty()) {
      std::optional<GeneratorMap> map;
      if (!job.map_path.empty()) map = fpgroups::parse_generator_map_file(job.map_path);
      const auto resolved = resolve_relators(p, job.relator_names, map ? &*map : nullptr);
      std::vector<Word> ws;
      for (const auto& r : resolved) ws.push_back(r.word);
      p = fpgroups::normal_closure_quotient(p, ws);
    }
    const auto inv = fpgroups::abelianization(p);
    Json factors = Json::array();
    for (const auto& f : inv.factors) factors.push_back(f.get_str());
    body["outcome"] = Json{{"invariant_factors", std::move(factors)},
                           {"torsion_order", inv.torsion_order().get_str()},
                           {"description", inv.to_string()}};
    return {kExitOk, finalize_report(std::move(body))};
  } catch (const std::exception& e) {
    return error_report(std::move(body), e, code_for(e));
  }
}

namespace {

struct PaperIndexJob {
  const char* file;
  long d;  // 0 = quaternionic
  std::vector<const char*> relators;
  std::int64_t expected;
  bool divides;  // truncated source: the claim is "index divides expected"
  bool slow;
};

const std::vector<PaperIndexJob>& paper_index_jobs() {
  static const std::vector<PaperIndexJob> jobs = {
      {"Picard3.txt", 3, {"R"}, 1, false, false},
      {"Picard1.txt", 1, {"R", "I0"}, 1, false, false},
      {"Picard1.txt", 1, {"I0"}, 4, false, false},
      {"Picard1.txt", 1, {"R"}, 96, false, true},
      {"Picard7.txt", 7, {"I0"}, 1, false, false},
      {"Picard7.txt", 7, {"R"}, 168, false, true},
      {"Picard2.txt", 2, {"I0"}, 4, false, false},
      {"Picard2.txt", 2, {"R", "I0"}, 4, false, false},
      {"Picard11.txt", 11, {"R", "I0"}, 4, false, false},
      {"Picard11.txt", 11, {"R"}, 13824, false, true},
      {"QuaternionsTruncated1000.txt", 0, {"Rsigma"}, 1, true, false},
      {"QuaternionsTruncated1000.txt", 0, {"I0"}, 12, true, false},
      {"QuaternionsTruncated1000.txt", 0, {"Ri"}, 648, true, false},
  };
  return jobs;
}

Json reflection_battery_json(bool& all_true) {
  struct Entry {
    const char* label;
    bool quaternion;
    long d;
    const char* builtin;   // nullptr: explicit matrix below
    const char* literal;
  };
  static const Entry entries[] = {
      {"I0 (complex)", false, 7, "I0", nullptr},
      {"R with u=i", false, 1, "R", nullptr},
      {"R with u=(-1+r)/2", false, 3, nullptr, "[1,0,0; 0,-1/2+1/2*r,0; 0,0,1]"},
      {"R with u=(1+r)/2", false, 3, "R", nullptr},
      {"R with u=-1", false, 7, "R", nullptr},
      {"I0 (quaternionic)", true, 0, "I0", nullptr},
      {"Ri", true, 0, "Ri", nullptr},
      {"Rsigma", true, 0, "Rsigma", nullptr},
  };
  Json arr = Json::array();
  all_true = true;
  for (const auto& e : entries) {
    Json j;
    j["name"] = e.label;
    Json cert;
    if (e.quaternion) {
      cert = certify_quaternion_json(quaternion_builtin(e.builtin));
      j["domain"] = "quaternion";
    } else {
      const RingSpec spec(e.d);
      const QuadMatrix A =
          e.builtin ? complex_builtin(e.builtin, spec) : hermitian::parse_matrix(e.literal, spec);
      cert = certify_complex_json(A);
      j["domain"] = "d=" + std::to_string(e.d);
    }
    j["verdict"] = cert["verdict"];
    j["mirror_value"] = cert["mirror"].is_null() ? Json(nullptr) : cert["mirror"]["value"];
    j["mirror_multiplicity"] =
        cert["mirror"].is_null() ? Json(nullptr) : cert["mirror"]["multiplicity"];
    all_true = all_true && cert["verdict"].get<bool>();
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

Report cmd_verify_paper(const JobSpec& job) {
  Json body = report_header("verify-paper");
  body["job"] = Json{{"data_dir", job.data_dir},
                     {"skip_slow", job.skip_slow},
                     {"strategy", fpgroups::to_string(job.strategy)},
                     {"max_cosets", job.max_cosets},
                     {"jobs", job.parallel_jobs}};

  bool certificates_ok = false;
  try {
    body["reflection_certificates"] = reflection_battery_json(certificates_ok);
  } catch (const std::exception& e) {
    return error_report(std::move(body), e, kExitInputError);
  }

  const auto& jobs = paper_index_jobs();
  std::vector<Json> results(jobs.size());
  std::vector<int> codes(jobs.size(), kExitOk);

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      const PaperIndexJob& pj = jobs[i];
      Json j;
      j["file"] = pj.file;
      j["domain"] = pj.d == 0 ? Json("quaternion") : Json("d=" + std::to_string(pj.d));
      j["relators"] = pj.relators;
      j["expected"] = pj.expected;
      j["claim"] = std::string(pj.divides ? "index divides " : "index = ") +
                   std::to_string(pj.expected);
      j["source"] = "bundled expected-index table";
      if (pj.slow) j["slow"] = true;
      if (pj.slow && job.skip_slow) {
        j["status"] = "skipped";
        results[i] = std::move(j);
        continue;
      }
      const fs::path path = fs::path(job.data_dir) / pj.file;
      if (!fs::exists(path)) {
        j["status"] = "missing-file";
        j["error"] = "data file not found: " + path.string();
        codes[i] = kExitInputError;
        results[i] = std::move(j);
        continue;
      }
      try {
        const Presentation p = fpgroups::parse_presentation_file(path.string());
        j["presentation"] = presentation_json(p);
        std::optional<GeneratorMap> map;
        const fs::path map_path = fs::path(job.data_dir) / (std::string(pj.file) + ".map");
        if (fs::exists(map_path)) map = fpgroups::parse_generator_map_file(map_path.string());
        std::vector<std::string> names(pj.relators.begin(), pj.relators.end());
        const auto resolved = resolve_relators(p, names, map ? &*map : nullptr);
        j["resolved_relators"] = resolved_relators_json(resolved);
        std::vector<Word> ws;
        for (const auto& r : resolved) ws.push_back(r.word);
        JobSpec sub = job;
        const EnumResult res = fpgroups::index_of_normal_closure(
            p, ws, limits_for(sub, std::string(pj.file) + ":" + names.front()));
        j["enumeration"] = enum_result_json(res);
        if (!res.finite) {
          j["status"] = "inconclusive";
          codes[i] = kExitResourceLimit;
        } else if (res.order == pj.expected) {
          j["status"] = "match";
          j["computed"] = res.order;
        } else {
          j["status"] = "mismatch";
          j["computed"] = res.order;
          codes[i] = kExitMismatch;
        }
      } catch (const std::exception& e) {
        j["status"] = "error";
        j["error"] = e.what();
        codes[i] = kExitInputError;
      }
      results[i] = std::move(j);
    }
  };

  const int nthreads = std::max(1, std::min<int>(job.parallel_jobs, static_cast<int>(jobs.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Json arr = Json::array();
  int matches = 0, mismatches = 0, missing = 0, skipped = 0, inconclusive = 0, errors = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const std::string status = results[i]["status"];
    if (status == "match") ++matches;
    if (status == "mismatch") ++mismatches;
    if (status == "missing-file") ++missing;
    if (status == "skipped") ++skipped;
    if (status == "inconclusive") ++inconclusive;
    if (status == "error") ++errors;
    arr.push_back(std::move(results[i]));
  }
  body["index_computations"] = std::move(arr);
  body["summary"] = Json{{"certificates_all_true", certificates_ok},
                         {"index_jobs", jobs.size()},
                         {"matches", matches},
                         {"mismatches", mismatches},
                         {"missing_files", missing},
                         {"skipped", skipped},
                         {"inconclusive", inconclusive},
                         {"errors", errors}};

  int code = kExitOk;
  if (inconclusive > 0) code = kExitResourceLimit;
  if (missing > 0 || errors > 0) code = kExitInputError;
  if (mismatches > 0 || !certificates_ok) code = kExitMismatch;
  body["summary"]["all_match"] = code == kExitOk;
  return {code, finalize_report(std::move(body))};
}

Report run_job(const JobSpec& job) {
  switch (job.command) {
    case Command::Certify: return cmd_certify(job);
    case Command::Order: return cmd_order(job);
    case Command::Index: return cmd_index(job);
    case Command::Abelian: return cmd_abelian(job);
    case Command::VerifyPaper: return cmd_verify_paper(job);
  }
  throw std::logic_error("unknown command");
}

}  // namespace picard::cli
