#pragma once

/// The model document: every resource, box, diagram, algebra, requirement
/// map, recovery action and scenario of one system model, as loaded from a
/// .model file. Cross-reference checking lives here; file parsing and
/// serialization live in modelio.

#include <map>
#include <string>
#include <vector>

#include "opcat/algebra.hpp"
#include "opcat/wiring.hpp"

namespace opcat {

enum class ContingencyMode { FillerFailed, ResourceDegraded };

const char* to_string(ContingencyMode mode);
ContingencyMode contingency_mode_from_string(const std::string& text);

enum class TargetKind { Filler, Wire, Resource };

const char* to_string(TargetKind kind);
TargetKind target_kind_from_string(const std::string& text);

/// A runtime failure or environmental change. Wire targets address wires
/// by label, resource targets by resource type name.
struct Contingency {
    std::string name;
    ContingencyMode mode = ContingencyMode::FillerFailed;
    TargetKind target_kind = TargetKind::Filler;
    std::string target;
    std::string description;

    bool operator==(const Contingency&) const = default;
};

enum class RecoveryActionKind { SubstituteFiller, InsertAdapter, ClearResource, Spin, Wait };

const char* to_string(RecoveryActionKind kind);
RecoveryActionKind recovery_action_kind_from_string(const std::string& text);

/// One atomic recovery step. `params` is kind-specific:
///   substitute_filler: target, replacement (structure filler names)
///   insert_adapter:    box, structure_filler, behavior_filler[, diagram]
///   clear_resource:    label (wire label of the resource instance)
///   spin / wait:       timeout
/// `triggers` lists the contingency names this action answers.
struct RecoveryAction {
    std::string name;
    RecoveryActionKind kind = RecoveryActionKind::Wait;
    std::map<std::string, std::string> params;
    std::vector<std::string> triggers;

    bool operator==(const RecoveryAction&) const = default;
};

/// Scripted contingency with its expected analysis outcome.
struct Scenario {
    std::string name;
    Contingency contingency;
    std::string expected_first_valid;
    std::map<std::string, std::vector<std::string>> expected_invalid; // plan -> finding codes

    bool operator==(const Scenario&) const = default;
};

/// Requirement maps tie capability fillers to the structure and behavior
/// fillers that realize them. A capability may list several candidates;
/// the first one is the primary trace used for span display.
struct Requirements {
    std::string span_name = "design";
    std::string root_diagram; // optional; inferred when empty
    std::map<std::string, std::vector<std::string>> structure_entries; // SR
    std::map<std::string, std::vector<std::string>> behavior_entries;  // BR
    std::map<std::string, std::string> aliases;                        // class name -> display name
    std::map<std::string, std::string> delta_overrides;                // structure -> behavior filler

    bool operator==(const Requirements&) const = default;
};

struct ModelDocument {
    std::string schema_version = "1";
    std::vector<ResourceType> resources;
    std::vector<Box> boxes;
    std::vector<WiringDiagram> diagrams;
    Algebra capability_algebra;
    Algebra structure_algebra;
    Algebra behavior_algebra;
    Requirements requirements;
    std::vector<RecoveryAction> recovery_catalog;
    std::vector<Scenario> scenarios;

    const ResourceType* find_resource(const std::string& name) const;
    const Box* find_box(const std::string& name) const;
    const WiringDiagram* find_diagram(const std::string& name) const;
    const Algebra& algebra(AlgebraKind kind) const;
    const RecoveryAction* find_action(const std::string& name) const;
    const Scenario* find_scenario(const std::string& name) const;
    const Contingency* find_contingency(const std::string& name) const;

    /// Diagrams whose outer box is `box`, in declaration order.
    std::vector<const WiringDiagram*> diagrams_for_box(const std::string& box) const;

    /// The diagram the design space is enumerated over: the explicit root
    /// when set, otherwise the unique diagram whose outer box occurs
    /// nowhere as an inner box. Null when the model has no diagrams.
    const WiringDiagram* root_diagram() const;

    bool operator==(const ModelDocument&) const = default;
};

/// Cross-reference and semantic validation of a whole model: wiring of
/// every diagram, filler interfaces, requirement coverage, catalog and
/// scenario references. Structural breakage (duplicate or missing names)
/// throws UnresolvedReference; everything else is reported.
ValidationReport validate_model(const ModelDocument& model);

} // namespace opcat
