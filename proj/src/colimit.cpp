#include "opcat/colimit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace opcat {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    std::vector<std::size_t> size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::size_t find(std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        // Union by size; ties keep the smaller index as root so runs are
        // reproducible regardless of merge order.
        if (size[a] < size[b] || (size[a] == size[b] && b < a)) {
            std::swap(a, b);
        }
        parent[b] = a;
        size[a] += size[b];
    }
};

void check_span(const Span& span, bool require_total) {
    if (span.left.domain != span.apex || span.right.domain != span.apex) {
        raise(ErrorCode::MalformedSpan, "both legs must have the apex '" + span.apex.name + "' as domain");
    }
    const ValidationReport left_report = span.left.validate();
    const ValidationReport right_report = span.right.validate();
    if (!left_report.ok() || !right_report.ok()) {
        raise(ErrorCode::MalformedSpan,
              "ill-formed legs: " + left_report.to_text() + right_report.to_text());
    }
    if (require_total && (!span.left.is_total() || !span.right.is_total())) {
        raise(ErrorCode::MalformedSpan, "pushout of a span requires total legs; use pushout_partial");
    }
}

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& label : labels) {
        if (!out.empty()) {
            out += "+";
        }
        out += label;
    }
    return out;
}

std::vector<std::string> sorted_unique(std::vector<std::string> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

} // namespace

const PushoutClass& PushoutResult::class_of(const std::string& name) const {
    for (const auto& cls : classes) {
        if (cls.name == name) {
            return cls;
        }
    }
    raise(ErrorCode::MissingEntry, "no pushout class named '" + name + "'");
}

PushoutResult pushout_partial(const Span& span) {
    check_span(span, false);
    const FinSet& X = span.left.codomain;
    const FinSet& Y = span.right.codomain;
    const FinSet& A = span.apex;

    // Node layout: X elements, then Y elements, then apex elements. The
    // apex nodes play the role of the free-completion sentinels: when a leg
    // is undefined at a, the apex node simply stays on that side unmerged.
    const std::size_t x_base = 0;
    const std::size_t y_base = X.size();
    const std::size_t a_base = X.size() + Y.size();
    auto x_index = [&](const std::string& label) {
        return x_base + static_cast<std::size_t>(std::find(X.elements.begin(), X.elements.end(), label) -
                                                 X.elements.begin());
    };
    auto y_index = [&](const std::string& label) {
        return y_base + static_cast<std::size_t>(std::find(Y.elements.begin(), Y.elements.end(), label) -
                                                 Y.elements.begin());
    };

    UnionFind uf(X.size() + Y.size() + A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        const std::string& a = A.elements[i];
        if (span.left.defined_at(a)) {
            uf.unite(a_base + i, x_index(span.left.at(a)));
        }
        if (span.right.defined_at(a)) {
            uf.unite(a_base + i, y_index(span.right.at(a)));
        }
    }

    std::map<std::size_t, PushoutClass> groups;
    for (std::size_t i = 0; i < X.size(); ++i) {
        groups[uf.find(x_base + i)].left_members.push_back(X.elements[i]);
    }
    for (std::size_t i = 0; i < Y.size(); ++i) {
        groups[uf.find(y_base + i)].right_members.push_back(Y.elements[i]);
    }
    for (std::size_t i = 0; i < A.size(); ++i) {
        groups[uf.find(a_base + i)].apex_members.push_back(A.elements[i]);
    }

    std::vector<PushoutClass> classes;
    for (auto& [root, cls] : groups) {
        cls.left_members = sorted_unique(std::move(cls.left_members));
        cls.right_members = sorted_unique(std::move(cls.right_members));
        cls.apex_members = sorted_unique(std::move(cls.apex_members));
        std::vector<std::string> named = cls.left_members;
        named.insert(named.end(), cls.right_members.begin(), cls.right_members.end());
        named = sorted_unique(std::move(named));
        // Classes holding only absorbed sentinels are named by their apex
        // elements so every class has a printable identity.
        cls.name = named.empty() ? join_labels(cls.apex_members) : join_labels(named);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const PushoutClass& a, const PushoutClass& b) {
        if (a.name != b.name) {
            return a.name < b.name;
        }
        return std::tie(a.left_members, a.right_members, a.apex_members) <
               std::tie(b.left_members, b.right_members, b.apex_members);
    });
    // Equal labels in X and Y can collide after deduplication; keep names
    // unique by suffixing the later classes in canonical order.
    std::map<std::string, int> seen;
    for (auto& cls : classes) {
        int n = ++seen[cls.name];
        if (n > 1) {
            cls.name += "#" + std::to_string(n);
        }
    }

    PushoutResult result;
    result.span = span;
    std::vector<std::string> object_elements;
    object_elements.reserve(classes.size());
    for (const auto& cls : classes) {
        object_elements.push_back(cls.name);
    }
    result.object = FinSet{X.name + "+_" + A.name + "+" + Y.name, object_elements};
    result.inj_left = FinFunction{X, result.object, {}};
    result.inj_right = FinFunction{Y, result.object, {}};
    for (const auto& cls : classes) {
        for (const auto& x : cls.left_members) {
            result.inj_left.mapping[x] = cls.name;
        }
        for (const auto& y : cls.right_members) {
            result.inj_right.mapping[y] = cls.name;
        }
    }
    result.classes = std::move(classes);
    return result;
}

PushoutResult pushout(const Span& span) {
    check_span(span, true);
    return pushout_partial(span);
}

bool cocone_commutes(const Span& span, const Cocone& cocone) {
    for (const auto& a : span.apex.elements) {
        if (!span.left.defined_at(a) || !span.right.defined_at(a)) {
            continue;
        }
        if (cocone.leg_left(span.left.at(a)) != cocone.leg_right(span.right.at(a))) {
            return false;
        }
    }
    return true;
}

FinFunction universal_morphism(const PushoutResult& result, const Cocone& cocone) {
    const Span& span = result.span;
    if (cocone.leg_left.domain != span.left.codomain || cocone.leg_right.domain != span.right.codomain) {
        raise(ErrorCode::MalformedSpan, "cocone legs must start at the span feet");
    }
    if (cocone.leg_left.codomain != cocone.target || cocone.leg_right.codomain != cocone.target) {
        raise(ErrorCode::MalformedSpan, "cocone legs must end at the cocone target");
    }
    if (!cocone_commutes(span, cocone)) {
        raise(ErrorCode::NotACocone,
              "legs do not commute with the span into '" + cocone.target.name + "'");
    }

    FinFunction u{result.object, cocone.target, {}};
    for (const auto& cls : result.classes) {
        std::set<std::string> images;
        for (const auto& x : cls.left_members) {
            images.insert(cocone.leg_left(x));
        }
        for (const auto& y : cls.right_members) {
            images.insert(cocone.leg_right(y));
        }
        if (images.empty()) {
            raise(ErrorCode::NotACocone,
                  "class '" + cls.name + "' has no X or Y member, so the cocone determines no image");
        }
        if (images.size() > 1) {
            raise(ErrorCode::InconsistentCocone,
                  "members of class '" + cls.name + "' map to different target elements");
        }
        u.mapping[cls.name] = *images.begin();
    }
    return u;
}

} // namespace opcat
