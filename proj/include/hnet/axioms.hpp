#ifndef HNET_AXIOMS_HPP
#define HNET_AXIOMS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hnet/core.hpp"
#include "hnet/hypernetwork.hpp"

namespace hnet {

// Axioms A1-A5 and operator conditions C1-C7.
enum class Rule { A1, A2, A3, A4, A5, C1, C2, C3, C4, C5, C6, C7 };

std::string_view to_string(Rule r) noexcept;

struct Violation {
    Rule rule;
    ElementId element;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(Rule rule, ElementId element, std::string detail) {
        violations.push_back({rule, std::move(element), std::move(detail)});
    }
    void append(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

// --- auxiliary predicates ---------------------------------------------------

bool eq_vertex(const Vertex& a, const Vertex& b);

// Identical id, relation signature, aggregation type, participants and tags.
// Alpha participants compare as sequences, beta participants as sets.
// Conflict markers are identical only to identical conflict markers.
bool eq_hs(const Hypersimplex& a, const Hypersimplex& b);

// Same relation symbol, arity and role sequence.
bool roles_compatible(const Hypersimplex& a, const Hypersimplex& b);

// Compatibility used by the beta rows of merge, meet and difference: both beta,
// same relation symbol, and one role sequence is a prefix of the other (beta
// signatures are resized when participant sets grow or shrink).
bool beta_compatible(const Hypersimplex& a, const Hypersimplex& b);

// Aggregation declared, participant count equal to arity, roles well formed,
// every participant resolves in `h`, and every tag is registered in `h`.
bool wellformed(const Hypersimplex& hs, const Hypernetwork& h);

// True iff no hypersimplex of `h` lists `e` as a participant.
bool orphan(const Element& e, const Hypernetwork& h);

// Element-level identity: vertices by id, anti-vertices by id, hypersimplices by eq_hs.
bool identical(const Element& a, const Element& b);

// True iff `h` holds an element with the same id that is identical to `e`.
bool identical_in(const Hypernetwork& h, const Element& e);

// --- validation -------------------------------------------------------------

ValidationReport validate(const Hypernetwork& h);

// h_small ⊑ h_big: every element of h_small is identical_in h_big.
bool is_sub_hypernetwork(const Hypernetwork& h_small, const Hypernetwork& h_big);

} // namespace hnet

#endif // HNET_AXIOMS_HPP
