#pragma once

/// Contingency analysis and recovery validation. A plan rewrites the
/// realization (substituting fillers, inserting adapters, annotating
/// resource state) and carries the structure/behavior substitution maps
/// alpha_str and alpha_beh. A plan is valid when the rewritten wiring
/// still checks out and delta' ∘ alpha_str = alpha_beh ∘ delta holds on
/// every structure filler of the original realization.

#include <map>
#include <string>
#include <vector>

#include "opcat/design.hpp"

namespace opcat {

struct RecoveryPlan {
    std::string name;
    std::vector<RecoveryAction> actions;
    std::map<std::string, std::string> alpha_str; // structure filler -> filler
    std::map<std::string, std::string> alpha_beh; // behavior filler -> filler
    std::vector<std::string> side_effects;        // element ids touched beyond the target

    bool operator==(const RecoveryPlan&) const = default;
};

/// Everything downstream of a failed element along resource flow.
struct ImpactReport {
    std::vector<std::string> occurrences; // flat occurrence paths
    std::vector<std::string> wires;       // "label (src -> dst)" ids
    std::vector<std::string> behavior_fillers;
    std::vector<std::string> structure_fillers;

    bool operator==(const ImpactReport&) const = default;
};

/// Fully flattened behavior diagram of a realization: every composite part
/// substituted recursively, occurrence paths dot-separated.
WiringDiagram flatten(const Realization& realization);

/// Breadth-first reachability from the contingency target over the flat
/// wire graph, plus the structure fillers paired with the reached behavior
/// fillers. Throws UnknownTarget when the target is not in the realization.
ImpactReport detect_impact(const ModelDocument& model, const Realization& realization,
                           const Contingency& contingency);

/// Candidate plans for a contingency: one per triggered catalog action plus
/// the escalation ladder of all triggered actions in catalog order. Ordered
/// by validity, then fewest side effects, then fewest actions, then catalog
/// order.
std::vector<RecoveryPlan> propose_recoveries(const ModelDocument& model,
                                             const Realization& realization,
                                             const Contingency& contingency,
                                             const std::vector<RecoveryAction>& catalog);

/// Builds a plan (alpha maps and side effects included) from explicit
/// actions, in the context of a contingency when one applies.
RecoveryPlan make_plan(const ModelDocument& model, const Realization& realization,
                       const std::vector<RecoveryAction>& actions,
                       const Contingency* contingency = nullptr);

/// Applies the plan to a copy and reports every failing naturality square,
/// wiring violation and capability coverage gap. Empty report = valid.
ValidationReport validate_recovery(const ModelDocument& model, const Realization& realization,
                                   const RecoveryPlan& plan);

/// The recovered realization. Throws InvalidPlan unless validate_recovery
/// is clean.
Realization apply_recovery(const ModelDocument& model, const Realization& realization,
                           const RecoveryPlan& plan);

} // namespace opcat
