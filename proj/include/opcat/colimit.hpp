#pragma once

/// Pushouts of finite sets. The pushout of X <- A -> Y is the quotient of
/// X ⊔ Y by the equivalence generated by f(a) ~ g(a), computed with a
/// union-find. Partial legs are handled by free completion: an unmapped
/// apex element contributes a fresh sentinel that is absorbed into its
/// class and recorded as apex provenance, never named. Class names are
/// mechanical (member labels sorted and joined with "+"); display aliases
/// are a concern of the model layer.

#include <string>
#include <vector>

#include "opcat/fincat.hpp"

namespace opcat {

/// Two legs out of a shared apex. Total legs are partial functions that
/// happen to be total.
struct Span {
    FinSet apex;
    PartialFinFunction left;  // apex -> X
    PartialFinFunction right; // apex -> Y

    bool operator==(const Span&) const = default;
};

/// One equivalence class of the quotient. Member lists are sorted.
/// `apex_members` is provenance: the apex elements glued into this class.
struct PushoutClass {
    std::string name;
    std::vector<std::string> left_members;
    std::vector<std::string> right_members;
    std::vector<std::string> apex_members;

    bool operator==(const PushoutClass&) const = default;
};

struct PushoutResult {
    Span span;
    FinSet object;
    FinFunction inj_left;  // X -> object
    FinFunction inj_right; // Y -> object
    std::vector<PushoutClass> classes; // aligned with object.elements

    const PushoutClass& class_of(const std::string& name) const;

    bool operator==(const PushoutResult&) const = default;
};

/// A candidate target for the universal property.
struct Cocone {
    FinSet target;
    FinFunction leg_left;  // X -> T
    FinFunction leg_right; // Y -> T

    bool operator==(const Cocone&) const = default;
};

/// Pushout of a span with total legs. Throws MalformedSpan otherwise.
PushoutResult pushout(const Span& span);

/// Pushout after freely completing partial legs. On total input this is
/// exactly pushout().
PushoutResult pushout_partial(const Span& span);

/// True when leg_left ∘ f = leg_right ∘ g wherever both legs are defined.
bool cocone_commutes(const Span& span, const Cocone& cocone);

/// The unique mediating map u with u ∘ inj_left = leg_left and
/// u ∘ inj_right = leg_right. Throws NotACocone when the cocone does not
/// commute with the span (or a class has no X/Y member to read an image
/// from), InconsistentCocone when members of one class disagree.
FinFunction universal_morphism(const PushoutResult& result, const Cocone& cocone);

} // namespace opcat
