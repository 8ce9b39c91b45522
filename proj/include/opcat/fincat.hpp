#pragma once

/// Finite sets and maps, plus small categories presented by explicit
/// hom-sets and full composition tables. With everything finite the
/// category laws are decidable, so they are checked by exhaustive
/// enumeration rather than assumed. Constructors accept ill-formed data
/// on purpose: validation is a separate step, which lets tests assert
/// that injected violations are detected.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opcat/errors.hpp"
#include "opcat/report.hpp"

namespace opcat {

/// Named finite set of string labels. Element order is declaration order
/// and is kept through every transformation for deterministic output.
struct FinSet {
    std::string name;
    std::vector<std::string> elements;

    FinSet() = default;
    FinSet(std::string set_name, std::vector<std::string> labels);

    bool contains(const std::string& label) const;
    std::size_t size() const { return elements.size(); }

    bool operator==(const FinSet&) const = default;
};

/// Total map between finite sets, stored elementwise.
struct FinFunction {
    FinSet domain;
    FinSet codomain;
    std::map<std::string, std::string> mapping;

    /// Image of a domain element. Throws MissingEntry when unmapped.
    const std::string& operator()(const std::string& element) const;

    /// Totality and image membership.
    ValidationReport validate() const;

    bool operator==(const FinFunction&) const = default;
};

/// Like FinFunction but domain elements may be left unmapped.
struct PartialFinFunction {
    FinSet domain;
    FinSet codomain;
    std::map<std::string, std::string> mapping;

    bool defined_at(const std::string& element) const;
    const std::string& at(const std::string& element) const;
    bool is_total() const;
    FinFunction to_total() const;

    /// Mapped images must lie in the codomain; gaps are fine.
    ValidationReport validate() const;

    bool operator==(const PartialFinFunction&) const = default;
};

struct MorphismDecl {
    std::string id;
    std::string source;
    std::string target;

    bool operator==(const MorphismDecl&) const = default;
};

using ComposablePair = std::pair<std::string, std::string>;

/// A finite category: objects, morphisms, an identity per object and a
/// composition table keyed by (f, g) with cod(f) = dom(g), holding g∘f.
struct FinCategory {
    std::string name;
    std::vector<std::string> objects;
    std::vector<MorphismDecl> morphisms;
    std::map<std::string, std::string> identities;
    std::map<ComposablePair, std::string> composition;

    bool has_object(const std::string& id) const;
    const MorphismDecl* find_morphism(const std::string& id) const;

    bool operator==(const FinCategory&) const = default;
};

/// Table entry for g∘f. Throws NotComposable when cod(f) != dom(g),
/// MissingEntry when the table has no entry, MalformedTable on unknown ids.
std::string compose(const FinCategory& cat, const std::string& f, const std::string& g);

/// Checks identity, unitality and associativity exhaustively; the report
/// lists every violated instance. Throws MalformedTable when a table
/// references an undeclared id.
ValidationReport validate_category(const FinCategory& cat);

struct CatFunctor {
    FinCategory source;
    FinCategory target;
    std::map<std::string, std::string> object_map;
    std::map<std::string, std::string> morphism_map;

    bool operator==(const CatFunctor&) const = default;
};

/// Totality, endpoint consistency, identity and composition preservation,
/// checked over every object and composable pair.
ValidationReport validate_functor(const CatFunctor& functor);

CatFunctor identity_functor(const FinCategory& cat);

/// then ∘ first, tablewise.
CatFunctor compose_functors(const CatFunctor& first, const CatFunctor& then);

struct NatTransformation {
    CatFunctor source_functor;
    CatFunctor target_functor;
    std::map<std::string, std::string> components;

    bool operator==(const NatTransformation&) const = default;
};

/// Checks component endpoints and every naturality square
/// alpha_d ∘ F(f) = G(f) ∘ alpha_c; lists each failing square.
ValidationReport validate_natural_transformation(const NatTransformation& alpha);

NatTransformation identity_transformation(const CatFunctor& functor);

/// Componentwise composite of alpha: F => G and beta: G => H.
NatTransformation vertical_composite(const NatTransformation& alpha, const NatTransformation& beta);

// Stock categories. These double as the bundled law-check corpus: their
// hom-sets are thin, so any single wrong composition entry is detectable.

FinCategory discrete_category(std::string name, std::vector<std::string> objects);

/// Free category on the linear quiver with `object_count` nodes; the unique
/// path i -> j is morphism "m<i><j>", identities are "id<i>".
FinCategory chain_category(std::string name, std::size_t object_count);

/// Commuting square poset on objects {a, b, c, d} with both paths a -> d
/// identified.
FinCategory square_category(std::string name);

/// Two objects {e, v} with parallel arrows src, tgt: e -> v.
FinCategory parallel_pair_category(std::string name);

} // namespace opcat
