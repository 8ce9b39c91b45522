#pragma once

/// Algebras assign concrete fillers to boxes. Applying an algebra to a
/// wiring diagram combines one filler per occurrence into a composite
/// filler of the outer box; composites can be registered and used as parts
/// again, so application nests. Attribute combination is fixed here:
/// composite cost is the sum of part costs, composite performance the
/// minimum of part performances (bottleneck rule).

#include <map>
#include <string>
#include <vector>

#include "opcat/fincat.hpp"
#include "opcat/wiring.hpp"

namespace opcat {

enum class AlgebraKind { Capability, Structure, Behavior };

const char* to_string(AlgebraKind kind);
AlgebraKind algebra_kind_from_string(const std::string& text);

/// A concrete inhabitant of a box. Atomic fillers have no parts; composite
/// fillers remember the diagram and the part chosen for each occurrence.
struct Filler {
    std::string name;
    std::string box;
    AlgebraKind kind = AlgebraKind::Structure;
    double cost = 0.0;
    double performance = 0.0;
    std::map<std::string, std::string> attributes;
    std::string diagram;                 // empty for atomic fillers
    std::map<std::string, Filler> parts; // occurrence -> part

    bool atomic() const { return parts.empty(); }

    /// This filler plus all parts, recursively (pre-order).
    std::vector<const Filler*> closure() const;

    bool operator==(const Filler&) const = default;
};

/// Declared name for a specific (diagram, parts) combination, so familiar
/// composites keep their model-given names during enumeration.
struct CompositeDecl {
    std::string name;
    std::string diagram;
    std::map<std::string, std::string> parts; // occurrence -> filler name

    bool operator==(const CompositeDecl&) const = default;
};

struct Algebra {
    std::string name;
    AlgebraKind kind = AlgebraKind::Structure;
    std::map<std::string, std::vector<Filler>> assignment; // box -> fillers
    std::vector<CompositeDecl> composites;

    void register_box(const std::string& box);
    bool has_box(const std::string& box) const;
    void add_filler(Filler filler);

    /// Fillers registered for a box. Throws UnknownBox when the box was
    /// never registered; an empty result is legal.
    const std::vector<Filler>& fillers(const std::string& box) const;

    const Filler* find_filler(const std::string& name) const;

    bool operator==(const Algebra&) const = default;
};

/// The assignment set as a finite set of filler names.
FinSet list_fillers(const Algebra& algebra, const std::string& box);

/// Combines one filler per occurrence into a composite of the outer box.
/// Throws MissingChoice when an occurrence has no entry and WrongBoxFiller
/// when a chosen filler fills a different box. The composite is named by a
/// matching CompositeDecl when one exists, mechanically otherwise.
Filler apply_algebra(const Algebra& algebra, const WiringDiagram& diagram,
                     const std::map<std::string, Filler>& choice);

/// One composite per element of the product of assignment sets over the
/// diagram's occurrences; empty when any occurrence has no filler.
std::vector<Filler> enumerate_composites(const Algebra& algebra, const WiringDiagram& diagram);

} // namespace opcat
