#pragma once

// JSON instance files, graph files (JSON or compact text), and serialization.

#include <optional>
#include <string>

#include "json.hpp"

#include "pskew/exactalg.hpp"
#include "pskew/leavitt.hpp"
#include "pskew/paction.hpp"

namespace pskew {

/// Input that cannot be turned into an instance (bad JSON, unknown names, ...).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::optional<PrimeField> field; // absent when the file does not name one
    SetPartialAction action;
};

/// {"type":"cyclic","n":4} or {"type":"table","mul":[[...]]}
Group parse_group(const nlohmann::json& j);
nlohmann::json group_to_json(const Group& g);

/// {"field":{"p":2}, "group":{...}, "carrier":[...],
///  "action":[{"t":1,"pairs":[["e2","e1"],...]}, ...]}
Instance parse_instance(const nlohmann::json& j);
Instance parse_instance_text(const std::string& text);
nlohmann::json instance_to_json(const SetPartialAction& a, const std::optional<PrimeField>& field);

/// {"vertices":["v1","v2"], "edges":[{"name":"e","src":"v1","rng":"v2"}]}
Graph parse_graph_json(const nlohmann::json& j);
/// One edge per line "e: v1 -> v2", lone vertices as "v;", '#' comments.
Graph parse_graph_text(const std::string& text);
/// Dispatches on the first non-blank character ('{' means JSON).
Graph parse_graph(const std::string& text);
nlohmann::json graph_to_json(const Graph& g);

std::string read_file(const std::string& path);

} // namespace pskew
