#include "report_util.hpp"

#include <ctime>

namespace picard::cli {

std::string iso_timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json report_header(const char* command) {
  Json j;
  j["artifact"] = Json{{"name", kArtifactName}, {"version", kArtifactVersion}};
  j["command"] = command;
  return j;
}

std::string finalize_report(Json body) {
  body["generated_at"] = iso_timestamp_now();
  return body.dump(2) + "\n";
}

Json presentation_json(const fpgroups::Presentation& p) {
  Json j;
  j["name"] = p.name;
  j["generators"] = p.generators;
  j["relator_count"] = p.relators.size();
  if (p.truncated_from) j["truncated_from"] = *p.truncated_from;
  if (!p.content_hash.empty()) j["sha256"] = p.content_hash;
  if (p.dropped_empty_relators) j["dropped_empty_relators"] = p.dropped_empty_relators;
  if (p.dropped_duplicate_relators) j["dropped_duplicate_relators"] = p.dropped_duplicate_relators;
  return j;
}

Json enum_result_json(const fpgroups::EnumResult& r) {
  Json j;
  j["outcome"] = r.finite ? "finite" : "limit-exceeded";
  if (r.finite) j["order"] = r.order;
  j["max_cosets"] = r.limit;
  j["statistics"] = Json{{"cosets_defined", r.stats.cosets_defined},
                         {"live_cosets", r.stats.live_cosets},
                         {"coincidences", r.stats.coincidences},
                         {"max_allocated", r.stats.max_allocated},
                         {"wall_ms", r.stats.wall_ms}};
  return j;
}

}  // namespace picard::cli
