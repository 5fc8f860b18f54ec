#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"

namespace excol {

using Json = nlohmann::ordered_json;

// One structured document per run, stable field order, diffable. A coloring
// is re-verified against the input graph before it is admitted.
struct RunReport {
    std::string command;
    std::string verdict;  // "true" / "false" / "found" / "absent" / "error"
    std::optional<PartialColoring> coloring;
    std::uint64_t lattice_entries = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t attempts = 0;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
    Json parameters = Json::object();

    Json to_json(const Graph* g = nullptr) const;
};

std::string rational_string(const Rational& r);

}  // namespace excol
