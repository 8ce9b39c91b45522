#pragma once

/// The design space: structure and behavior composites linked through
/// capabilities by a pushout, filtered by coverage and ordered by
/// performance (descending), then cost (ascending), then name. The winner
/// of that order is the realization.

#include <map>
#include <string>
#include <vector>

#include "opcat/colimit.hpp"
#include "opcat/model.hpp"

namespace opcat {

/// One valid pairing of a structure composite with a behavior composite.
struct Design {
    std::string name;
    Filler structure;
    Filler behavior;
    /// capability -> the (structure, behavior) fillers that satisfy it.
    std::map<std::string, std::pair<std::string, std::string>> satisfied;
    double cost = 0.0;
    double performance = 0.0;

    bool operator==(const Design&) const = default;
};

struct DesignSpace {
    std::vector<Design> designs;
    ValidationReport coverage; // unsatisfiable capabilities and similar
};

/// A selected design together with the structure-to-behavior map restricted
/// to it, the diagrams it runs on, and any resource state annotations.
struct Realization {
    Design design;
    std::map<std::string, std::string> delta;      // structure -> behavior filler
    std::map<std::string, WiringDiagram> diagrams; // by diagram name
    std::map<std::string, std::vector<std::string>> annotations;
    std::string provenance; // recovery trail; empty for fresh realizations

    /// Names of every filler in the design's structure tree (pre-order).
    std::vector<std::string> structure_filler_names() const;
    std::vector<std::string> behavior_filler_names() const;

    /// Equality up to provenance.
    bool equivalent(const Realization& other) const;
};

/// Pushout of structure <- capability -> behavior; a thin wrapper over
/// pushout_partial so the design space and the plain set construction
/// cannot drift apart.
PushoutResult design_pushout(const FinSet& capability_set, const FinSet& structure_set,
                             const FinSet& behavior_set, const PartialFinFunction& structure_req,
                             const PartialFinFunction& behavior_req);

/// The model's requirement span over all registered fillers, using each
/// capability's primary trace. This is what `pushout <span>` prints.
Span requirement_span(const ModelDocument& model);

/// Every filler a box can take: its registered atomic fillers plus one
/// composite per choice combination of each decomposition diagram.
/// Throws CyclicDecomposition when a box decomposes into itself.
std::vector<Filler> box_fillers(const ModelDocument& model, const Algebra& algebra,
                                const std::string& box);

/// Cartesian product of root structure and behavior composites, filtered
/// to pairs whose fillers cover every capability through the requirement
/// maps. Deterministic order.
DesignSpace enumerate_designs(const ModelDocument& model);

/// Performance descending, then cost ascending, then name ascending.
bool design_precedes(const Design& a, const Design& b);

/// Winner of design_precedes plus the derived delta and diagram table.
/// Throws EmptyDesignSpace when there is nothing to select.
Realization select_realization(const ModelDocument& model, const DesignSpace& space);

/// Non-dominated designs under (performance max, cost min), in the same
/// deterministic order.
std::vector<Design> pareto_front(const std::vector<Design>& designs);

/// delta for a specific design: the design-level pairing recursed through
/// matching composite parts, then the model's explicit overrides on top.
std::map<std::string, std::string> derive_delta(const ModelDocument& model, const Design& design);

} // namespace opcat
