#pragma once

#include "json.hpp"

#include "sepekr/compression.hpp"
#include "sepekr/graph.hpp"
#include "sepekr/search.hpp"
#include "sepekr/weighted.hpp"

namespace sepekr {

using json = nlohmann::ordered_json;

// Counts that fit in 64 bits serialize as numbers, larger ones as strings.
json count_json(Count value);

// {"n": 7, "elems": [1, 3, 5]}
json to_json(const CircSet& a);
CircSet circset_from_json(const json& j);

// {"n":..., "r":..., "k":..., "sets": [[1,3], [1,4], ...]}
json to_json(const SetFamily& family);
SetFamily family_from_json(const json& j);

// {"n","r","k","family_size","passed","clauses":[{"clause_id","passed","witnesses":[...]}]}
json to_json(const LemmaReport& report);

// {"n","r","k","optimum","witness","classes","nodes"}; "nodes" only with diagnostics.
json to_json(const SearchResult& result, bool diagnostics = false);

// {"optimum","star_weight","binomial","pass"} plus parameters and witness.
json to_json(const WeightedReport& report, bool diagnostics = false);

// {"vertices":[[...]], "edges":[[u,v], ...]} with 0-based vertex indices.
json adjacency_json(const DisjointnessGraph& g);

}  // namespace sepekr
