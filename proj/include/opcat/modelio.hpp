#pragma once

/// Reading, writing and exporting model documents. The on-disk format is a
/// single UTF-8 JSON object with the top-level keys
///   schema_version, resources, boxes, diagrams, capability_algebra,
///   structure_algebra, behavior_algebra, requirements, recovery_catalog,
///   scenarios
/// and nothing else. Serialization is byte-stable: equal documents always
/// produce identical text.

#include <string>

#include "opcat/colimit.hpp"
#include "opcat/model.hpp"

namespace opcat {

/// Parses a document and resolves every cross-reference eagerly. Throws
/// ParseError (with position), SchemaVersionMismatch or
/// UnresolvedReference; semantic findings are the caller's business via
/// validate_model.
ModelDocument parse_model(const std::string& text, const std::string& origin = "<memory>");

ModelDocument load_model(const std::string& path);

std::string serialize_model(const ModelDocument& model);

/// Deterministic Graphviz output: boxes as nodes labeled with occurrence
/// names, wires as edges labeled with their topic label or resource.
std::string export_dot(const WiringDiagram& diagram);

/// Pushout classes as merged record nodes carrying their member lists;
/// aliases replace canonical names when provided.
std::string export_dot(const PushoutResult& result,
                       const std::map<std::string, std::string>& aliases = {});

} // namespace opcat
