#include "opcat/wiring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace opcat {

const char* to_string(PortDirection direction) {
    return direction == PortDirection::Required ? "required" : "provided";
}

const Port* Box::find_port(const std::string& port_name) const {
    for (const auto& p : ports) {
        if (p.name == port_name) {
            return &p;
        }
    }
    return nullptr;
}

bool same_interface(const Box& a, const Box& b) {
    if (a.ports.size() != b.ports.size()) {
        return false;
    }
    auto key = [](const Box& box) {
        std::vector<std::tuple<std::string, PortDirection, std::string>> k;
        for (const auto& p : box.ports) {
            k.emplace_back(p.name, p.direction, p.resource);
        }
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

const BoxOccurrence* WiringDiagram::find_occurrence(const std::string& occurrence_name) const {
    for (const auto& occ : occurrences) {
        if (occ.name == occurrence_name) {
            return &occ;
        }
    }
    return nullptr;
}

WiringDiagram identity_diagram(const Box& box, const std::string& occurrence_name) {
    WiringDiagram wd;
    wd.name = "id_" + box.name;
    wd.outer = box;
    wd.occurrences.push_back({occurrence_name, box});
    for (const auto& p : box.ports) {
        if (p.direction == PortDirection::Required) {
            wd.wires.push_back({{kOuter, p.name}, {occurrence_name, p.name}, ""});
        } else {
            wd.wires.push_back({{occurrence_name, p.name}, {kOuter, p.name}, ""});
        }
    }
    return wd;
}

namespace {

struct ResolvedEndpoint {
    const Port* port;
    bool provider; // acts as provider inside this diagram
};

ResolvedEndpoint resolve(const WiringDiagram& wd, const Endpoint& ep, const Wire& wire) {
    const Box* box = nullptr;
    if (ep.is_outer()) {
        box = &wd.outer;
    } else {
        const BoxOccurrence* occ = wd.find_occurrence(ep.occurrence);
        if (!occ) {
            raise(ErrorCode::UnresolvedReference,
                  "wire " + wire.source.to_string() + " -> " + wire.target.to_string() +
                      " names unknown occurrence '" + ep.occurrence + "' in diagram '" + wd.name + "'");
        }
        box = &occ->box;
    }
    const Port* port = box->find_port(ep.port);
    if (!port) {
        raise(ErrorCode::UnresolvedReference,
              "wire " + wire.source.to_string() + " -> " + wire.target.to_string() + " names unknown port '" +
                  ep.port + "' on '" + (ep.is_outer() ? wd.outer.name : ep.occurrence) + "'");
    }
    // Outer ports flip polarity inside the diagram.
    const bool provides = ep.is_outer() ? port->direction == PortDirection::Required
                                        : port->direction == PortDirection::Provided;
    return {port, provides};
}

} // namespace

ValidationReport validate_diagram(const WiringDiagram& wd) {
    ValidationReport report;

    std::set<std::string> names;
    for (const auto& occ : wd.occurrences) {
        if (occ.name == kOuter) {
            raise(ErrorCode::UnresolvedReference, "occurrence may not be named 'outer'");
        }
        if (!names.insert(occ.name).second) {
            report.add("duplicate_occurrence", occ.name, "occurrence name used twice");
        }
    }

    auto check_ports = [&report](const std::string& owner, const Box& box) {
        std::set<std::string> port_names;
        for (const auto& p : box.ports) {
            if (!port_names.insert(p.name).second) {
                report.add("duplicate_port", owner + "." + p.name, "port name used twice on '" + box.name + "'");
            }
        }
    };
    check_ports(kOuter, wd.outer);
    for (const auto& occ : wd.occurrences) {
        check_ports(occ.name, occ.box);
    }

    // Consumer endpoints and their fan-in counts. Providers may fan out or
    // stay unconnected; consumers need exactly one feed.
    std::map<Endpoint, int> fed;
    for (const auto& occ : wd.occurrences) {
        for (const auto& p : occ.box.ports) {
            if (p.direction == PortDirection::Required) {
                fed[{occ.name, p.name}] = 0;
            }
        }
    }
    for (const auto& p : wd.outer.ports) {
        if (p.direction == PortDirection::Provided) {
            fed[{kOuter, p.name}] = 0;
        }
    }

    for (const auto& wire : wd.wires) {
        const ResolvedEndpoint src = resolve(wd, wire.source, wire);
        const ResolvedEndpoint dst = resolve(wd, wire.target, wire);
        const std::string subject = wire.source.to_string() + " -> " + wire.target.to_string();
        if (!src.provider) {
            report.add("wire_direction", subject, "source is not a provider endpoint");
        }
        if (dst.provider) {
            report.add("wire_direction", subject, "target is not a consumer endpoint");
        }
        if (src.port->resource != dst.port->resource) {
            report.add("type_mismatch", subject,
                       "carries '" + src.port->resource + "' into a '" + dst.port->resource + "' port");
        }
        if (!dst.provider) {
            auto it = fed.find(wire.target);
            if (it != fed.end()) {
                ++it->second;
            }
        }
    }

    for (const auto& [endpoint, count] : fed) {
        if (count == 0) {
            report.add("unfed_required_port", endpoint.to_string(), "consumer has no feeding wire");
        } else if (count > 1) {
            report.add("double_fed_port", endpoint.to_string(),
                       "consumer fed by " + std::to_string(count) + " wires");
        }
    }
    return report;
}

WiringDiagram substitute(const WiringDiagram& outer, const std::string& occurrence,
                         const WiringDiagram& inner) {
    const BoxOccurrence* occ = outer.find_occurrence(occurrence);
    if (!occ) {
        raise(ErrorCode::UnresolvedReference,
              "no occurrence '" + occurrence + "' in diagram '" + outer.name + "'");
    }
    if (!same_interface(occ->box, inner.outer)) {
        raise(ErrorCode::InterfaceMismatch,
              "outer interface of '" + inner.name + "' does not match box '" + occ->box.name + "'");
    }

    const std::string prefix = occurrence + ".";
    auto renamed = [&prefix](const Endpoint& ep) {
        return ep.is_outer() ? ep : Endpoint{prefix + ep.occurrence, ep.port};
    };

    // How the inner diagram presents each boundary port: a required outer
    // port is a provider inside and feeds a list of inner consumers; a
    // provided outer port is fed by exactly one inner provider.
    std::map<std::string, std::vector<std::pair<Endpoint, std::string>>> inner_consumers;
    std::map<std::string, std::pair<Endpoint, std::string>> inner_provider;
    for (const auto& wire : inner.wires) {
        if (wire.source.is_outer()) {
            inner_consumers[wire.source.port].emplace_back(renamed(wire.target), wire.label);
        }
        if (wire.target.is_outer()) {
            inner_provider[wire.target.port] = {renamed(wire.source), wire.label};
        }
    }

    WiringDiagram result;
    result.name = outer.name;
    result.outer = outer.outer;
    for (const auto& o : outer.occurrences) {
        if (o.name != occurrence) {
            result.occurrences.push_back(o);
        }
    }
    for (const auto& o : inner.occurrences) {
        result.occurrences.push_back({prefix + o.name, o.box});
    }

    // Interior wires of the inner diagram survive unchanged modulo renaming.
    for (const auto& wire : inner.wires) {
        if (!wire.source.is_outer() && !wire.target.is_outer()) {
            result.wires.push_back({renamed(wire.source), renamed(wire.target), wire.label});
        }
    }

    auto pick_label = [](const std::string& inner_label, const std::string& outer_label) {
        return inner_label.empty() ? outer_label : inner_label;
    };

    for (const auto& wire : outer.wires) {
        const bool src_here = !wire.source.is_outer() && wire.source.occurrence == occurrence;
        const bool dst_here = !wire.target.is_outer() && wire.target.occurrence == occurrence;
        if (!src_here && !dst_here) {
            result.wires.push_back(wire);
            continue;
        }
        // Resolve the provider end first, then fan out over consumers.
        std::vector<std::pair<Endpoint, std::string>> sources;
        if (src_here) {
            auto it = inner_provider.find(wire.source.port);
            if (it == inner_provider.end()) {
                continue; // inner diagram never feeds this port; wire dissolves
            }
            sources.push_back(it->second);
        } else {
            sources.push_back({wire.source, ""});
        }
        std::vector<std::pair<Endpoint, std::string>> targets;
        if (dst_here) {
            auto it = inner_consumers.find(wire.target.port);
            if (it == inner_consumers.end()) {
                continue; // resource unused inside; wire dissolves
            }
            targets = it->second;
        } else {
            targets.push_back({wire.target, ""});
        }
        for (const auto& [src, src_label] : sources) {
            for (const auto& [dst, dst_label] : targets) {
                result.wires.push_back(
                    {src, dst, pick_label(pick_label(src_label, dst_label), wire.label)});
            }
        }
    }
    return result;
}

WiringDiagram canonical_form(const WiringDiagram& diagram) {
    WiringDiagram wd = diagram;
    auto sort_box = [](Box& box) {
        std::sort(box.ports.begin(), box.ports.end(), [](const Port& a, const Port& b) {
            return std::tie(a.name, a.direction, a.resource) < std::tie(b.name, b.direction, b.resource);
        });
    };
    sort_box(wd.outer);
    for (auto& occ : wd.occurrences) {
        sort_box(occ.box);
    }
    std::sort(wd.occurrences.begin(), wd.occurrences.end(),
              [](const BoxOccurrence& a, const BoxOccurrence& b) { return a.name < b.name; });
    std::sort(wd.wires.begin(), wd.wires.end());
    return wd;
}

} // namespace opcat
