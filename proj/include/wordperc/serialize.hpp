#pragma once

// JSON forms of chains, embeddings, event specs and reports.
//
// Sites are [x, y, z] arrays of stored coordinates; word prefixes are digit
// strings such as "0011".

#include <vector>

#include "json.hpp"
#include "wordperc/embedder.hpp"
#include "wordperc/montecarlo.hpp"
#include "wordperc/renorm.hpp"

namespace wordperc {

using json = nlohmann::ordered_json;

json to_json(const Site& s);
Site site_from_json(const json& j);

json to_json(const Path& path);
Path path_from_json(const json& j);

json to_json(const OutletVertices& o);
json to_json(const OutletChain& chain);

json to_json(const SplicePlan& plan);
SplicePlan plan_from_json(const json& j);

json to_json(const EmbeddingResult& result);
// Throws std::invalid_argument on missing fields or malformed digits.
EmbeddingResult embedding_from_json(const json& j);

json to_json(const Word& word);
Word word_from_json(const json& j);

json to_json(const EventSpec& spec);
EventSpec spec_from_json(const json& j);

json to_json(const EstimateReport& report);
EstimateReport report_from_json(const json& j);

}  // namespace wordperc
