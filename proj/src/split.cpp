#include "closure.hpp"
#include "hnet/algebra.hpp"
#include "hnet/error.hpp"

namespace hnet {

namespace {

Hypernetwork project_boundary(const Hypernetwork& h, const ElementId& b) {
    const Boundary* boundary = h.boundaries().find(b);
    if (!boundary) throw UnknownBoundary(b);

    detail::Selection chosen;
    for (const auto& e : h.elements())
        if (tags_of(e).count(b)) chosen.emplace(id_of(e), e);
    // A percolating boundary scopes the transitive participants of tagged
    // elements. A non-percolating one scopes only the tagged elements, but the
    // projection still has to be closed, which pulls in the same participants.
    detail::close_over_participants(chosen, h);
    return detail::assemble_in_order(chosen, h, h.boundaries());
}

Hypernetwork project_seeds(const Hypernetwork& h, const IdSet& seeds) {
    for (const auto& s : seeds) {
        const Element* e = h.find(s);
        if (!e || is_hypersimplex(*e)) throw UnknownSeed(s);
    }

    IdSet reached = seeds;
    detail::Selection chosen;
    for (const auto& s : seeds) chosen.emplace(s, *h.find(s));

    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : h.elements()) {
            const auto* hs = as_hypersimplex(e);
            if (!hs || chosen.count(hs->id)) continue;
            bool touches = reached.count(hs->id) != 0;
            for (const auto& p : hs->participants) touches = touches || reached.count(p) != 0;
            if (!touches) continue;
            chosen.emplace(hs->id, e);
            reached.insert(hs->id);
            reached.insert(hs->participants.begin(), hs->participants.end());
            grew = true;
        }
    }
    for (const auto& id : reached)
        if (const Element* e = h.find(id)) chosen.emplace(id, *e);
    detail::close_over_participants(chosen, h);
    return detail::assemble_in_order(chosen, h, h.boundaries());
}

} // namespace

Hypernetwork split(const Hypernetwork& h, const SplitCriterion& c) {
    Hypernetwork out = std::visit(
        [&h](const auto& rule) -> Hypernetwork {
            using T = std::decay_t<decltype(rule)>;
            if constexpr (std::is_same_v<T, SplitCriterion::ByBoundary>)
                return project_boundary(h, rule.boundary);
            else if constexpr (std::is_same_v<T, SplitCriterion::BySeeds>)
                return project_seeds(h, rule.seeds);
            else
                return h;
        },
        c.rule);
    detail::require_valid(out, "split");
    return out;
}

} // namespace hnet
