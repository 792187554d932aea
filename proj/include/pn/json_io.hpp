#pragma once

#include <json.hpp>

#include "pn/decimation.hpp"
#include "pn/graph.hpp"
#include "pn/spectrum.hpp"

namespace pn {

/// {"n", "level", "vertices": [address strings], "edges": [[i,j],...],
///  "boundary": [indices]} — vertices in canonical order, edges sorted.
nlohmann::ordered_json graph_to_json(const ApproxGraph& g);

/// {"n", "seed_level", "seed_lambda", "signs", "lambdas", "renormalized",
///  "limit", "valid", "forbidden_hit"}
nlohmann::ordered_json trace_to_json(const DecimationTrace& t,
                                     std::optional<double> limit = std::nullopt);

nlohmann::ordered_json spectrum_to_json(const SpectrumReport& rep);

}  // namespace pn
