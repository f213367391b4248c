#pragma once
// JSON encodings of module results, shared by the HTTP service, the CLI and
// the Python bindings.

#include "lexdiv/analytics.hpp"
#include "lexdiv/ingest.hpp"
#include "lexdiv/layout.hpp"
#include "lexdiv/store.hpp"

#include <json.hpp>

namespace lexdiv::json {

using nlohmann::json;

json encode(const LanguageDescriptor& language);
json encode(const Concept& concept_id);
json encode(const ConceptRelation& relation);
json encode(const Sense& sense);
json encode(const Violation& violation);
json encode(const WordMatch& match);
json encode(const ConceptNeighborhood& neighborhood);
json encode(const DomainTree& tree);
json encode(const LanguageProfile& profile);
json encode_lexicalisations(const std::string& concept_id, const std::map<std::string, LexicalisationEntry>& entries);
json encode(const analytics::CognateClustering& clustering, const Store& store);
json encode(const std::string& concept_id, const analytics::Diversity& diversity);
json encode(const analytics::SimilarityRecord& record);
json encode(const layout::LayoutParams& params);
json encode(const ingest::IngestReport& report);
json encode_layout(const layout::SimilarityGraph& graph, const layout::LayoutResult& result, const Store& store);

json error_envelope(const std::string& code, const std::string& message);

}  // namespace lexdiv::json
