#include "opcat/algebra.hpp"

#include <algorithm>
#include <limits>

namespace opcat {

const char* to_string(AlgebraKind kind) {
    switch (kind) {
    case AlgebraKind::Capability: return "capability";
    case AlgebraKind::Structure: return "structure";
    case AlgebraKind::Behavior: return "behavior";
    }
    return "?";
}

AlgebraKind algebra_kind_from_string(const std::string& text) {
    if (text == "capability") {
        return AlgebraKind::Capability;
    }
    if (text == "structure") {
        return AlgebraKind::Structure;
    }
    if (text == "behavior") {
        return AlgebraKind::Behavior;
    }
    raise(ErrorCode::ParseError, "unknown algebra kind '" + text + "'");
}

std::vector<const Filler*> Filler::closure() const {
    std::vector<const Filler*> out{this};
    for (const auto& [occ, part] : parts) {
        auto sub = part.closure();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

void Algebra::register_box(const std::string& box) { assignment.try_emplace(box); }

bool Algebra::has_box(const std::string& box) const { return assignment.count(box) > 0; }

void Algebra::add_filler(Filler filler) {
    auto& list = assignment[filler.box];
    list.push_back(std::move(filler));
}

const std::vector<Filler>& Algebra::fillers(const std::string& box) const {
    auto it = assignment.find(box);
    if (it == assignment.end()) {
        raise(ErrorCode::UnknownBox, "box '" + box + "' is not registered in algebra '" + name + "'");
    }
    return it->second;
}

const Filler* Algebra::find_filler(const std::string& filler_name) const {
    for (const auto& [box, list] : assignment) {
        for (const auto& f : list) {
            if (f.name == filler_name) {
                return &f;
            }
        }
    }
    return nullptr;
}

FinSet list_fillers(const Algebra& algebra, const std::string& box) {
    std::vector<std::string> names;
    for (const auto& f : algebra.fillers(box)) {
        names.push_back(f.name);
    }
    return FinSet{algebra.name + "(" + box + ")", names};
}

namespace {

std::string mechanical_name(const WiringDiagram& diagram, const std::map<std::string, Filler>& choice) {
    std::string out = diagram.name + "{";
    bool first = true;
    for (const auto& [occ, filler] : choice) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += occ + "=" + filler.name;
    }
    return out + "}";
}

const CompositeDecl* matching_decl(const Algebra& algebra, const WiringDiagram& diagram,
                                   const std::map<std::string, Filler>& choice) {
    for (const auto& decl : algebra.composites) {
        if (decl.diagram != diagram.name || decl.parts.size() != choice.size()) {
            continue;
        }
        bool match = true;
        for (const auto& [occ, filler_name] : decl.parts) {
            auto it = choice.find(occ);
            if (it == choice.end() || it->second.name != filler_name) {
                match = false;
                break;
            }
        }
        if (match) {
            return &decl;
        }
    }
    return nullptr;
}

} // namespace

Filler apply_algebra(const Algebra& algebra, const WiringDiagram& diagram,
                     const std::map<std::string, Filler>& choice) {
    Filler composite;
    composite.box = diagram.outer.name;
    composite.kind = algebra.kind;
    composite.diagram = diagram.name;
    composite.performance = std::numeric_limits<double>::infinity();

    for (const auto& occ : diagram.occurrences) {
        auto it = choice.find(occ.name);
        if (it == choice.end()) {
            raise(ErrorCode::MissingChoice,
                  "occurrence '" + occ.name + "' of diagram '" + diagram.name + "' has no filler");
        }
        const Filler& part = it->second;
        if (part.box != occ.box.name) {
            raise(ErrorCode::WrongBoxFiller,
                  "filler '" + part.name + "' fills box '" + part.box + "', not '" + occ.box.name + "'");
        }
        composite.cost += part.cost;
        composite.performance = std::min(composite.performance, part.performance);
        composite.parts[occ.name] = part;
    }
    if (diagram.occurrences.empty()) {
        composite.performance = 0.0;
    }
    const CompositeDecl* decl = matching_decl(algebra, diagram, composite.parts);
    composite.name = decl ? decl->name : mechanical_name(diagram, composite.parts);
    return composite;
}

std::vector<Filler> enumerate_composites(const Algebra& algebra, const WiringDiagram& diagram) {
    std::vector<Filler> out;
    std::map<std::string, Filler> choice;

    // Depth-first product over occurrences, in declaration order.
    auto recurse = [&](auto&& self, std::size_t index) -> void {
        if (index == diagram.occurrences.size()) {
            out.push_back(apply_algebra(algebra, diagram, choice));
            return;
        }
        const BoxOccurrence& occ = diagram.occurrences[index];
        for (const Filler& f : algebra.fillers(occ.box.name)) {
            choice[occ.name] = f;
            self(self, index + 1);
        }
        choice.erase(occ.name);
    };
    recurse(recurse, 0);
    return out;
}

} // namespace opcat
