#pragma once

#include <string>

#include <json.hpp>

#include "singer/difference_set.hpp"
#include "singer/f1_space.hpp"
#include "singer/hyperstructure.hpp"
#include "singer/incidence.hpp"

namespace singer {

// std::map-backed, so keys come out sorted.
using Json = nlohmann::json;

Json to_json(const PartialDifferenceSet& s);
PartialDifferenceSet difference_set_from_json(const Json& j);

/// [{ "target", "chosen_x", "added" }, ...]
Json log_to_json(const BuilderState& state);

Json to_json(const IncidenceStructure& s, Json meta = Json::object());
IncidenceStructure incidence_from_json(const Json& j);

Json to_json(const HyperTable& t);
HyperTable hypertable_from_json(const Json& j);

Json to_json(const PlaneCertificate& c);
Json to_json(const SingerCertificate& c);
Json to_json(const AxiomReport& r);
Json to_json(const ChainReport& r);
Json to_json(const EmbeddingCertificate& c);

std::string hex64(std::uint64_t v);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

struct VerifyOutcome {
  bool recognised = false;
  bool passed = false;
  Json report;
};

/// Re-checks an emitted difference-set, incidence or hypertable document, or
/// every such document found among the top-level members of a payload.
VerifyOutcome verify_document(const Json& j);

}  // namespace singer
