#include "closure.hpp"

#include <vector>

#include "hnet/axioms.hpp"
#include "hnet/error.hpp"

namespace hnet::detail {

void close_over_participants(Selection& chosen, const Hypernetwork& source) {
    std::vector<ElementId> pending;
    for (const auto& [id, e] : chosen)
        if (const auto* hs = as_hypersimplex(e))
            pending.insert(pending.end(), hs->participants.begin(), hs->participants.end());

    while (!pending.empty()) {
        ElementId id = std::move(pending.back());
        pending.pop_back();
        if (chosen.count(id)) continue;
        const Element* e = source.find(id);
        if (!e) continue;  // reported by validation
        chosen.emplace(id, *e);
        if (const auto* hs = as_hypersimplex(*e))
            pending.insert(pending.end(), hs->participants.begin(), hs->participants.end());
    }
}

Hypernetwork assemble_in_order(const Selection& chosen, const Hypernetwork& source,
                               BoundaryRegistry boundaries) {
    std::vector<Element> ordered;
    ordered.reserve(chosen.size());
    for (const auto& e : source.elements()) {
        auto it = chosen.find(id_of(e));
        if (it != chosen.end()) ordered.push_back(it->second);
    }
    return Hypernetwork::assemble(std::move(ordered), std::move(boundaries));
}

void register_used_tags(BoundaryRegistry& registry, const Hypernetwork& h,
                        const BoundaryRegistry& primary, const BoundaryRegistry& secondary) {
    for (const auto& e : h.elements()) {
        for (const auto& t : tags_of(e)) {
            if (registry.contains(t)) continue;
            if (const auto* b = primary.find(t))
                registry.add(*b);
            else if (const auto* b2 = secondary.find(t))
                registry.add(*b2);
        }
    }
}

void require_valid(const Hypernetwork& h, const char* op) {
    auto report = validate(h);
    if (report.ok()) return;
    const auto& v = report.violations.front();
    throw ClosureViolation(std::string(op) + " produced an invalid hypernetwork: " +
                           std::string(to_string(v.rule)) + " " + v.element.str() + " " + v.detail);
}

} // namespace hnet::detail
