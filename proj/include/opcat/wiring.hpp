#pragma once

/// Typed wiring diagrams: boxes expose required and provided resource
/// ports, a diagram wires inner box occurrences into an outer composite
/// interface, and substitution splices one diagram into an occurrence of
/// another. Outer ports flip polarity inside a diagram: an outer required
/// port feeds the inside, an outer provided port consumes from it.
/// Fan-out from a provider is legal (one topic, many subscribers); every
/// consumer must be fed exactly once.

#include <string>
#include <vector>

#include "opcat/errors.hpp"
#include "opcat/report.hpp"

namespace opcat {

struct ResourceType {
    std::string name;
    std::string description;

    bool operator==(const ResourceType&) const = default;
};

enum class PortDirection { Required, Provided };

const char* to_string(PortDirection direction);

struct Port {
    std::string name;
    PortDirection direction = PortDirection::Required;
    std::string resource;

    bool operator==(const Port&) const = default;
};

struct Box {
    std::string name;
    std::vector<Port> ports;

    const Port* find_port(const std::string& port_name) const;

    bool operator==(const Box&) const = default;
};

/// Same ports, directions and resource types, ignoring declaration order
/// and the box name.
bool same_interface(const Box& a, const Box& b);

/// Reserved occurrence id that addresses the outer interface in wires.
inline const std::string kOuter = "outer";

struct Endpoint {
    std::string occurrence; // kOuter for the outer interface
    std::string port;

    bool is_outer() const { return occurrence == kOuter; }
    std::string to_string() const { return occurrence + "." + port; }

    bool operator==(const Endpoint&) const = default;
    auto operator<=>(const Endpoint&) const = default;
};

struct Wire {
    Endpoint source; // provider side
    Endpoint target; // consumer side
    std::string label;

    bool operator==(const Wire&) const = default;
    auto operator<=>(const Wire&) const = default;
};

struct BoxOccurrence {
    std::string name;
    Box box;

    bool operator==(const BoxOccurrence&) const = default;
};

struct WiringDiagram {
    std::string name;
    Box outer;
    std::vector<BoxOccurrence> occurrences;
    std::vector<Wire> wires;

    const BoxOccurrence* find_occurrence(const std::string& occurrence_name) const;

    bool operator==(const WiringDiagram&) const = default;
};

/// The straight-through diagram on a box: one occurrence, every port wired
/// to the matching outer port. Substituting it is a no-op up to renaming.
WiringDiagram identity_diagram(const Box& box, const std::string& occurrence_name = "inner");

/// Type mismatches, unfed and double-fed consumers, direction errors.
/// Throws UnresolvedReference when a wire names a missing occurrence or
/// port, or an occurrence is named "outer".
ValidationReport validate_diagram(const WiringDiagram& diagram);

/// Replaces `occurrence` by the contents of `inner`, splicing boundary
/// wires through inner's outer-port wiring. Inner occurrence names are
/// prefixed with "<occurrence>.". Throws InterfaceMismatch when inner's
/// outer interface differs from the occurrence's box.
WiringDiagram substitute(const WiringDiagram& outer, const std::string& occurrence,
                         const WiringDiagram& inner);

/// Occurrences, ports and wires brought into a canonical order so that
/// structural equality is plain equality. Idempotent.
WiringDiagram canonical_form(const WiringDiagram& diagram);

} // namespace opcat
