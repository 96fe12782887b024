#pragma once

// Instance files (JSON) and their validation. Errors name the offending JSON
// path, e.g. "complex.facets[1][0]: vertex 0 outside [1, 3]".

#include <optional>
#include <string>

#include "json.hpp"

#include "gmac/hochster.hpp"

namespace gmac {

/// `field` replaces the file's field when given.
Instance parse_instance(const nlohmann::json& j, const std::optional<Field>& field = std::nullopt);
Instance load_instance(const std::string& path, const std::optional<Field>& field = std::nullopt);

/// Inverse of parse_instance: sphere pairs keep their parameters, simplicial
/// factors their facets, everything else is written as raw content.
nlohmann::json instance_to_json(const Instance& inst);

nlohmann::json field_to_json(const Field& f);
nlohmann::json dims_to_json(const GradedDims& g);
nlohmann::json vertex_set_to_json(VertexSet s);

}  // namespace gmac
