#pragma once

// Internal JSON-building helpers shared by the job implementations; not
// installed with the public headers.

#include <json.hpp>

#include "picard/coset_table.hpp"
#include "picard/jobs.hpp"
#include "picard/presentation.hpp"
#include "picard/reflections.hpp"

namespace picard::cli {

using Json = nlohmann::ordered_json;

std::string iso_timestamp_now();

Json report_header(const char* command);

std::string finalize_report(Json body);

template <class S>
std::string vector_to_string(const hermitian::Vec3<S>& v) {
  return "(" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + ")";
}

template <class S>
Json eig_record_json(const reflections::EigRecord<S>& rec) {
  Json j;
  j["value"] = rec.value.to_string();
  if (!rec.value.is_rational()) j["value_field_d"] = rec.value.d();
  j["multiplicity"] = rec.multiplicity;
  j["negative_type"] = rec.negative_type;
  Json basis = Json::array();
  for (const auto& v : rec.basis) basis.push_back(vector_to_string(v));
  j["basis"] = std::move(basis);
  if (!rec.witnesses.empty()) {
    Json w = Json::array();
    for (const auto& mu : rec.witnesses) {
      if (mu) {
        w.push_back(mu->to_string());
      } else {
        w.push_back(nullptr);
      }
    }
    j["eigenvalue_witnesses"] = std::move(w);
  }
  return j;
}

Json presentation_json(const fpgroups::Presentation& p);

Json enum_result_json(const fpgroups::EnumResult& r);

}  // namespace picard::cli
