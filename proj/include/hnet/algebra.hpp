#ifndef HNET_ALGEBRA_HPP
#define HNET_ALGEBRA_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hnet/axioms.hpp"
#include "hnet/core.hpp"
#include "hnet/hypernetwork.hpp"

namespace hnet {

// ---------------------------------------------------------------------------
// Insert
// ---------------------------------------------------------------------------

enum class InsertOutcome {
    Inserted,  // new element (participants auto-inserted first)
    Ignored,   // identical element already present, or a bare vertex whose id a hypersimplex defines
    Promoted,  // bare vertex replaced by a hypersimplex with the same id
    Unified,   // same-name compatible beta hypersimplices; participant sets joined
    Conflict,  // replaced (or created) a SameName conflict marker
    Rejected,  // malformed identifier; nothing stored
};

std::string_view to_string(InsertOutcome o) noexcept;

struct InsertStep {
    InsertOutcome outcome = InsertOutcome::Inserted;
    // For conflicts: the axiom the clash violates, and why.
    std::optional<Rule> rule;
    std::string detail;
};

// Applies the merge decision table for one element directly to `h`.
// Bare participant ids that do not resolve are inserted as vertices ("~X" ids
// as anti-vertices) before the hypersimplex itself.
InsertStep insert_into(Hypernetwork& h, const Element& e);

// Value-returning insert; the result is revalidated (throws ClosureViolation).
Hypernetwork insert(const Hypernetwork& h, const Element& e);

// ---------------------------------------------------------------------------
// Binary operators
// ---------------------------------------------------------------------------

// h1 ⊔ h2: inserts h2's elements into h1 in h2's insertion order.
Hypernetwork merge(const Hypernetwork& h1, const Hypernetwork& h2);

// h1 ⊓ h2: id-matched elements common to both operands.
Hypernetwork meet(const Hypernetwork& h1, const Hypernetwork& h2);

// h1 / h2: structure of h1 not present in h2.
Hypernetwork difference(const Hypernetwork& h1, const Hypernetwork& h2);

// ---------------------------------------------------------------------------
// Prune
// ---------------------------------------------------------------------------

struct SelectorItem {
    enum class Kind {
        Vertex,        // "v:<id>", a vertex or an anti-vertex ("v:~X")
        Hypersimplex,  // "hs:<id>"
        Relation,      // "rel:<symbol>", every hypersimplex bound to the symbol
        Boundary,      // "b:<id>", every element carrying the tag
    };

    Kind kind = Kind::Vertex;
    std::string name;

    auto operator<=>(const SelectorItem&) const = default;

    // Parses "v:X", "hs:X", "rel:R" or "b:B"; throws std::invalid_argument.
    static SelectorItem parse(std::string_view text);
    std::string str() const;
};

using PruneSelector = std::set<SelectorItem>;

// Whether prune rejects selector items that name nothing in the hypernetwork.
enum class MissingItems { Reject, Ignore };

// Items of `s` that resolve to nothing in `h`.
std::vector<SelectorItem> unresolved_items(const Hypernetwork& h, const PruneSelector& s);

// h ⊖ s. Selected participants are replaced by their anti-vertices, then
// selected, dangling, fully excluded and orphaned structure is deleted until a
// fixpoint is reached. Throws UnknownSelector (MissingItems::Reject) for items
// that resolve to nothing.
Hypernetwork prune(const Hypernetwork& h, const PruneSelector& s,
                   MissingItems missing = MissingItems::Reject);

// ---------------------------------------------------------------------------
// Split
// ---------------------------------------------------------------------------

struct SplitCriterion {
    struct ByBoundary {
        ElementId boundary;
    };
    struct BySeeds {
        IdSet seeds;
    };
    struct Universal {};

    std::variant<ByBoundary, BySeeds, Universal> rule;

    static SplitCriterion boundary(ElementId b) { return {ByBoundary{std::move(b)}}; }
    static SplitCriterion seeds(IdSet s) { return {BySeeds{std::move(s)}}; }
    static SplitCriterion all() { return {Universal{}}; }
};

// π_c(h). Boundary projections keep elements tagged with the boundary plus
// their transitive participants; seed projections close the seed set over
// every hypersimplex touching it; the universal criterion returns `h`.
// Throws UnknownBoundary / UnknownSeed.
Hypernetwork split(const Hypernetwork& h, const SplitCriterion& c);

} // namespace hnet

#endif // HNET_ALGEBRA_HPP
