#include "opcat/fincat.hpp"

#include <algorithm>
#include <set>

namespace opcat {

FinSet::FinSet(std::string set_name, std::vector<std::string> labels)
    : name(std::move(set_name)), elements(std::move(labels)) {
    std::set<std::string> seen;
    for (const auto& e : elements) {
        if (!seen.insert(e).second) {
            raise(ErrorCode::MalformedTable, "duplicate element '" + e + "' in set '" + name + "'");
        }
    }
}

bool FinSet::contains(const std::string& label) const {
    return std::find(elements.begin(), elements.end(), label) != elements.end();
}

const std::string& FinFunction::operator()(const std::string& element) const {
    auto it = mapping.find(element);
    if (it == mapping.end()) {
        raise(ErrorCode::MissingEntry,
              "function " + domain.name + " -> " + codomain.name + " has no image for '" + element + "'");
    }
    return it->second;
}

ValidationReport FinFunction::validate() const {
    ValidationReport report;
    for (const auto& e : domain.elements) {
        if (!mapping.count(e)) {
            report.add("missing_image", e, "no image under " + domain.name + " -> " + codomain.name);
        }
    }
    for (const auto& [from, to] : mapping) {
        if (!domain.contains(from)) {
            report.add("foreign_domain_element", from, "not an element of " + domain.name);
        }
        if (!codomain.contains(to)) {
            report.add("foreign_image", from, "image '" + to + "' not in " + codomain.name);
        }
    }
    return report;
}

bool PartialFinFunction::defined_at(const std::string& element) const {
    return mapping.count(element) > 0;
}

const std::string& PartialFinFunction::at(const std::string& element) const {
    auto it = mapping.find(element);
    if (it == mapping.end()) {
        raise(ErrorCode::MissingEntry, "partial function undefined at '" + element + "'");
    }
    return it->second;
}

bool PartialFinFunction::is_total() const {
    for (const auto& e : domain.elements) {
        if (!mapping.count(e)) {
            return false;
        }
    }
    return true;
}

FinFunction PartialFinFunction::to_total() const {
    if (!is_total()) {
        raise(ErrorCode::MissingEntry, "partial function " + domain.name + " -> " + codomain.name + " is not total");
    }
    return FinFunction{domain, codomain, mapping};
}

ValidationReport PartialFinFunction::validate() const {
    ValidationReport report;
    for (const auto& [from, to] : mapping) {
        if (!domain.contains(from)) {
            report.add("foreign_domain_element", from, "not an element of " + domain.name);
        }
        if (!codomain.contains(to)) {
            report.add("foreign_image", from, "image '" + to + "' not in " + codomain.name);
        }
    }
    return report;
}

bool FinCategory::has_object(const std::string& id) const {
    return std::find(objects.begin(), objects.end(), id) != objects.end();
}

const MorphismDecl* FinCategory::find_morphism(const std::string& id) const {
    for (const auto& m : morphisms) {
        if (m.id == id) {
            return &m;
        }
    }
    return nullptr;
}

std::string compose(const FinCategory& cat, const std::string& f, const std::string& g) {
    const MorphismDecl* mf = cat.find_morphism(f);
    const MorphismDecl* mg = cat.find_morphism(g);
    if (!mf || !mg) {
        raise(ErrorCode::MalformedTable,
              "unknown morphism '" + (mf ? g : f) + "' in category '" + cat.name + "'");
    }
    if (mf->target != mg->source) {
        raise(ErrorCode::NotComposable,
              g + " after " + f + ": cod(" + f + ")=" + mf->target + " but dom(" + g + ")=" + mg->source);
    }
    auto it = cat.composition.find({f, g});
    if (it == cat.composition.end()) {
        raise(ErrorCode::MissingEntry, "no composition entry for (" + f + ", " + g + ")");
    }
    return it->second;
}

namespace {

// Structural pass shared by the validators: every id a table mentions must
// be declared, otherwise law checking is meaningless.
void require_declared(const FinCategory& cat) {
    for (const auto& m : cat.morphisms) {
        if (!cat.has_object(m.source) || !cat.has_object(m.target)) {
            raise(ErrorCode::MalformedTable,
                  "morphism '" + m.id + "' references undeclared object in '" + cat.name + "'");
        }
    }
    for (const auto& [obj, id] : cat.identities) {
        if (!cat.has_object(obj)) {
            raise(ErrorCode::MalformedTable, "identity table references undeclared object '" + obj + "'");
        }
        if (!cat.find_morphism(id)) {
            raise(ErrorCode::MalformedTable, "identity table references undeclared morphism '" + id + "'");
        }
    }
    for (const auto& [pair, result] : cat.composition) {
        if (!cat.find_morphism(pair.first) || !cat.find_morphism(pair.second) || !cat.find_morphism(result)) {
            raise(ErrorCode::MalformedTable,
                  "composition entry (" + pair.first + ", " + pair.second + ") references an undeclared morphism");
        }
    }
}

// Table lookup that never throws; nullptr when absent.
const std::string* table_entry(const FinCategory& cat, const std::string& f, const std::string& g) {
    auto it = cat.composition.find({f, g});
    return it == cat.composition.end() ? nullptr : &it->second;
}

} // namespace

ValidationReport validate_category(const FinCategory& cat) {
    require_declared(cat);
    ValidationReport report;

    std::set<std::string> morphism_ids;
    for (const auto& m : cat.morphisms) {
        if (!morphism_ids.insert(m.id).second) {
            report.add("duplicate_morphism", m.id, "declared more than once");
        }
    }

    // Identity existence and endpoints.
    for (const auto& obj : cat.objects) {
        auto it = cat.identities.find(obj);
        if (it == cat.identities.end()) {
            report.add("missing_identity", obj, "no identity morphism declared");
            continue;
        }
        const MorphismDecl* id_m = cat.find_morphism(it->second);
        if (id_m->source != obj || id_m->target != obj) {
            report.add("identity_endpoints", obj,
                       "identity '" + it->second + "' is " + id_m->source + " -> " + id_m->target);
        }
    }

    // Entry typing: declared entries must be composable pairs with a result
    // of the right shape, and every composable pair needs an entry.
    for (const auto& [pair, result] : cat.composition) {
        const MorphismDecl* mf = cat.find_morphism(pair.first);
        const MorphismDecl* mg = cat.find_morphism(pair.second);
        const MorphismDecl* mr = cat.find_morphism(result);
        if (mf->target != mg->source) {
            report.add("spurious_entry", pair.first + "," + pair.second,
                       "entry for a non-composable pair");
            continue;
        }
        if (mr->source != mf->source || mr->target != mg->target) {
            report.add("ill_typed_composite", pair.first + "," + pair.second,
                       "result '" + result + "' is " + mr->source + " -> " + mr->target + ", expected " +
                           mf->source + " -> " + mg->target);
        }
    }
    for (const auto& f : cat.morphisms) {
        for (const auto& g : cat.morphisms) {
            if (f.target != g.source) {
                continue;
            }
            if (!table_entry(cat, f.id, g.id)) {
                report.add("missing_entry", f.id + "," + g.id, "composable pair has no table entry");
            }
        }
    }

    // Unitality: id then f, and f then id.
    for (const auto& f : cat.morphisms) {
        auto src_id = cat.identities.find(f.source);
        if (src_id != cat.identities.end()) {
            if (const std::string* r = table_entry(cat, src_id->second, f.id); r && *r != f.id) {
                report.add("unitality_failure", f.id,
                           f.id + " after " + src_id->second + " gives '" + *r + "'");
            }
        }
        auto tgt_id = cat.identities.find(f.target);
        if (tgt_id != cat.identities.end()) {
            if (const std::string* r = table_entry(cat, f.id, tgt_id->second); r && *r != f.id) {
                report.add("unitality_failure", f.id,
                           tgt_id->second + " after " + f.id + " gives '" + *r + "'");
            }
        }
    }

    // Associativity over every composable triple. A side that cannot be
    // evaluated (missing or ill-typed intermediate) counts as a violation.
    for (const auto& f : cat.morphisms) {
        for (const auto& g : cat.morphisms) {
            if (f.target != g.source) {
                continue;
            }
            for (const auto& h : cat.morphisms) {
                if (g.target != h.source) {
                    continue;
                }
                const std::string triple = f.id + "," + g.id + "," + h.id;
                const std::string* gf = table_entry(cat, f.id, g.id);
                const std::string* hg = table_entry(cat, g.id, h.id);
                const std::string* lhs = gf ? table_entry(cat, *gf, h.id) : nullptr;
                const std::string* rhs = hg ? table_entry(cat, f.id, *hg) : nullptr;
                if (!lhs || !rhs) {
                    report.add("assoc_failure", triple, "a side of the associativity equation is undefined");
                } else if (*lhs != *rhs) {
                    report.add("assoc_failure", triple,
                               "(h∘g)∘f = '" + *lhs + "' but h∘(g∘f) = '" + *rhs + "'");
                }
            }
        }
    }
    return report;
}

ValidationReport validate_functor(const CatFunctor& functor) {
    require_declared(functor.source);
    require_declared(functor.target);
    ValidationReport report;
    const FinCategory& src = functor.source;
    const FinCategory& tgt = functor.target;

    for (const auto& [obj, image] : functor.object_map) {
        if (!src.has_object(obj)) {
            raise(ErrorCode::MalformedTable, "object_map references undeclared object '" + obj + "'");
        }
        if (!tgt.has_object(image)) {
            raise(ErrorCode::MalformedTable, "object_map sends '" + obj + "' to undeclared '" + image + "'");
        }
    }
    for (const auto& [mor, image] : functor.morphism_map) {
        if (!src.find_morphism(mor)) {
            raise(ErrorCode::MalformedTable, "morphism_map references undeclared morphism '" + mor + "'");
        }
        if (!tgt.find_morphism(image)) {
            raise(ErrorCode::MalformedTable, "morphism_map sends '" + mor + "' to undeclared '" + image + "'");
        }
    }

    for (const auto& obj : src.objects) {
        if (!functor.object_map.count(obj)) {
            report.add("unmapped_object", obj, "object_map is not total");
        }
    }
    for (const auto& m : src.morphisms) {
        if (!functor.morphism_map.count(m.id)) {
            report.add("unmapped_morphism", m.id, "morphism_map is not total");
        }
    }
    if (!report.ok()) {
        return report;
    }

    // Endpoint consistency with the object map.
    for (const auto& m : src.morphisms) {
        const MorphismDecl* image = tgt.find_morphism(functor.morphism_map.at(m.id));
        const std::string& want_src = functor.object_map.at(m.source);
        const std::string& want_tgt = functor.object_map.at(m.target);
        if (image->source != want_src || image->target != want_tgt) {
            report.add("endpoint_mismatch", m.id,
                       "image '" + image->id + "' is " + image->source + " -> " + image->target +
                           ", expected " + want_src + " -> " + want_tgt);
        }
    }

    // Identity preservation.
    for (const auto& obj : src.objects) {
        auto src_id = src.identities.find(obj);
        if (src_id == src.identities.end()) {
            continue;
        }
        auto tgt_id = tgt.identities.find(functor.object_map.at(obj));
        if (tgt_id == tgt.identities.end()) {
            report.add("identity_preservation", obj, "target object has no identity to compare");
            continue;
        }
        if (functor.morphism_map.at(src_id->second) != tgt_id->second) {
            report.add("identity_preservation", obj,
                       "F(" + src_id->second + ") = '" + functor.morphism_map.at(src_id->second) +
                           "' but id_F(" + obj + ") = '" + tgt_id->second + "'");
        }
    }

    // Composition preservation over every composable pair.
    for (const auto& f : src.morphisms) {
        for (const auto& g : src.morphisms) {
            if (f.target != g.source) {
                continue;
            }
            const std::string* gf = table_entry(src, f.id, g.id);
            if (!gf) {
                continue; // reported by validate_category on the source
            }
            const std::string* image_composite =
                table_entry(tgt, functor.morphism_map.at(f.id), functor.morphism_map.at(g.id));
            if (!image_composite) {
                report.add("composition_preservation", f.id + "," + g.id,
                           "images are not composable in the target table");
                continue;
            }
            if (functor.morphism_map.at(*gf) != *image_composite) {
                report.add("composition_preservation", f.id + "," + g.id,
                           "F(g∘f) = '" + functor.morphism_map.at(*gf) + "' but F(g)∘F(f) = '" +
                               *image_composite + "'");
            }
        }
    }
    return report;
}

CatFunctor identity_functor(const FinCategory& cat) {
    CatFunctor functor{cat, cat, {}, {}};
    for (const auto& obj : cat.objects) {
        functor.object_map[obj] = obj;
    }
    for (const auto& m : cat.morphisms) {
        functor.morphism_map[m.id] = m.id;
    }
    return functor;
}

CatFunctor compose_functors(const CatFunctor& first, const CatFunctor& then) {
    CatFunctor out{first.source, then.target, {}, {}};
    for (const auto& [obj, mid] : first.object_map) {
        out.object_map[obj] = then.object_map.at(mid);
    }
    for (const auto& [mor, mid] : first.morphism_map) {
        out.morphism_map[mor] = then.morphism_map.at(mid);
    }
    return out;
}

ValidationReport validate_natural_transformation(const NatTransformation& alpha) {
    const CatFunctor& F = alpha.source_functor;
    const CatFunctor& G = alpha.target_functor;
    if (F.source != G.source || F.target != G.target) {
        raise(ErrorCode::MalformedTable, "functors of a transformation must share source and target categories");
    }
    ValidationReport report;
    const FinCategory& src = F.source;
    const FinCategory& tgt = F.target;

    for (const auto& [obj, comp] : alpha.components) {
        if (!src.has_object(obj)) {
            raise(ErrorCode::MalformedTable, "component table references undeclared object '" + obj + "'");
        }
        if (!tgt.find_morphism(comp)) {
            raise(ErrorCode::MalformedTable, "component at '" + obj + "' is an undeclared morphism '" + comp + "'");
        }
    }
    for (const auto& obj : src.objects) {
        if (!alpha.components.count(obj)) {
            report.add("missing_component", obj, "no component morphism");
        }
    }
    if (!report.ok()) {
        return report;
    }

    for (const auto& obj : src.objects) {
        const MorphismDecl* comp = tgt.find_morphism(alpha.components.at(obj));
        const std::string& fc = F.object_map.at(obj);
        const std::string& gc = G.object_map.at(obj);
        if (comp->source != fc || comp->target != gc) {
            report.add("component_endpoints", obj,
                       "component '" + comp->id + "' is " + comp->source + " -> " + comp->target +
                           ", expected " + fc + " -> " + gc);
        }
    }
    if (!report.ok()) {
        return report;
    }

    // Naturality square for every morphism of the source category.
    for (const auto& m : src.morphisms) {
        const std::string& ff = F.morphism_map.at(m.id);
        const std::string& gf = G.morphism_map.at(m.id);
        const std::string& ac = alpha.components.at(m.source);
        const std::string& ad = alpha.components.at(m.target);
        const std::string* left = table_entry(tgt, ff, ad);  // alpha_d ∘ F(f)
        const std::string* right = table_entry(tgt, ac, gf); // G(f) ∘ alpha_c
        if (!left || !right) {
            report.add("naturality_failure", m.id, "a side of the square is undefined in the target table");
        } else if (*left != *right) {
            report.add("naturality_failure", m.id,
                       "alpha_d∘F(" + m.id + ") = '" + *left + "' but G(" + m.id + ")∘alpha_c = '" + *right + "'");
        }
    }
    return report;
}

NatTransformation identity_transformation(const CatFunctor& functor) {
    NatTransformation alpha{functor, functor, {}};
    for (const auto& obj : functor.source.objects) {
        alpha.components[obj] = functor.target.identities.at(functor.object_map.at(obj));
    }
    return alpha;
}

NatTransformation vertical_composite(const NatTransformation& alpha, const NatTransformation& beta) {
    NatTransformation out{alpha.source_functor, beta.target_functor, {}};
    const FinCategory& tgt = alpha.source_functor.target;
    for (const auto& obj : alpha.source_functor.source.objects) {
        out.components[obj] = compose(tgt, alpha.components.at(obj), beta.components.at(obj));
    }
    return out;
}

FinCategory discrete_category(std::string name, std::vector<std::string> objects) {
    FinCategory cat;
    cat.name = std::move(name);
    cat.objects = std::move(objects);
    for (const auto& obj : cat.objects) {
        const std::string id = "id_" + obj;
        cat.morphisms.push_back({id, obj, obj});
        cat.identities[obj] = id;
        cat.composition[{id, id}] = id;
    }
    return cat;
}

namespace {

// Fill identity-composite entries for a thin category whose non-identity
// morphisms are given with a concatenation rule encoded by the caller.
void add_identity_entries(FinCategory& cat) {
    for (const auto& m : cat.morphisms) {
        cat.composition[{cat.identities.at(m.source), m.id}] = m.id;
        cat.composition[{m.id, cat.identities.at(m.target)}] = m.id;
    }
}

} // namespace

FinCategory chain_category(std::string name, std::size_t object_count) {
    FinCategory cat;
    cat.name = std::move(name);
    for (std::size_t i = 0; i < object_count; ++i) {
        const std::string obj = "o" + std::to_string(i);
        cat.objects.push_back(obj);
        const std::string id = "id" + std::to_string(i);
        cat.morphisms.push_back({id, obj, obj});
        cat.identities[obj] = id;
    }
    auto arrow = [](std::size_t i, std::size_t j) {
        return "m" + std::to_string(i) + std::to_string(j);
    };
    for (std::size_t i = 0; i < object_count; ++i) {
        for (std::size_t j = i + 1; j < object_count; ++j) {
            cat.morphisms.push_back({arrow(i, j), "o" + std::to_string(i), "o" + std::to_string(j)});
        }
    }
    add_identity_entries(cat);
    for (std::size_t i = 0; i < object_count; ++i) {
        for (std::size_t j = i + 1; j < object_count; ++j) {
            for (std::size_t k = j + 1; k < object_count; ++k) {
                cat.composition[{arrow(i, j), arrow(j, k)}] = arrow(i, k);
            }
        }
    }
    return cat;
}

FinCategory square_category(std::string name) {
    FinCategory cat;
    cat.name = std::move(name);
    cat.objects = {"a", "b", "c", "d"};
    for (const auto& obj : cat.objects) {
        const std::string id = "id_" + obj;
        cat.morphisms.push_back({id, obj, obj});
        cat.identities[obj] = id;
    }
    cat.morphisms.push_back({"ab", "a", "b"});
    cat.morphisms.push_back({"ac", "a", "c"});
    cat.morphisms.push_back({"bd", "b", "d"});
    cat.morphisms.push_back({"cd", "c", "d"});
    cat.morphisms.push_back({"ad", "a", "d"});
    add_identity_entries(cat);
    cat.composition[{"ab", "bd"}] = "ad";
    cat.composition[{"ac", "cd"}] = "ad";
    return cat;
}

FinCategory parallel_pair_category(std::string name) {
    FinCategory cat;
    cat.name = std::move(name);
    cat.objects = {"e", "v"};
    cat.morphisms.push_back({"id_e", "e", "e"});
    cat.morphisms.push_back({"id_v", "v", "v"});
    cat.identities["e"] = "id_e";
    cat.identities["v"] = "id_v";
    cat.morphisms.push_back({"src", "e", "v"});
    cat.morphisms.push_back({"tgt", "e", "v"});
    cat.composition[{"id_e", "id_e"}] = "id_e";
    cat.composition[{"id_v", "id_v"}] = "id_v";
    add_identity_entries(cat);
    return cat;
}

} // namespace opcat
