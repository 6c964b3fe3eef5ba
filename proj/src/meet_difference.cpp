#include <algorithm>

#include "closure.hpp"
#include "hnet/algebra.hpp"

namespace hnet {

namespace {

IdSet participant_set(const Hypersimplex& hs) {
    return IdSet(hs.participants.begin(), hs.participants.end());
}

// Participants of `hs`, in order and without repeats, that satisfy `keep`.
template <class Pred>
std::vector<ElementId> filtered_participants(const Hypersimplex& hs, Pred keep) {
    std::vector<ElementId> out;
    for (const auto& p : hs.participants)
        if (keep(p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

// Meet row for a same-name pair of hypersimplices; nullopt is Null.
std::optional<Hypersimplex> meet_pair(const Hypersimplex& a, const Hypersimplex& b) {
    if (a.is_conflict() || b.is_conflict()) {
        if (eq_hs(a, b)) return a;
        return std::nullopt;
    }
    if (a.agg != b.agg) return std::nullopt;

    if (a.agg == Aggregation::Alpha) {
        // Alpha participants are identity-defining: overlap only when equal.
        if (!roles_compatible(a, b) || a.participants != b.participants) return std::nullopt;
        Hypersimplex out = a;
        out.tags.insert(b.tags.begin(), b.tags.end());
        return out;
    }

    if (!beta_compatible(a, b)) return std::nullopt;
    const IdSet other = participant_set(b);
    auto common = filtered_participants(a, [&other](const ElementId& p) { return other.count(p) != 0; });
    if (common.empty()) return std::nullopt;
    Hypersimplex out = a;
    out.relation = resized_signature(a.relation, common.size());
    out.participants = std::move(common);
    out.tags.insert(b.tags.begin(), b.tags.end());
    return out;
}

enum class DiffRow { Retain, Drop, Subtract };

} // namespace

Hypernetwork meet(const Hypernetwork& h1, const Hypernetwork& h2) {
    detail::Selection chosen;
    for (const auto& e1 : h1.elements()) {
        const ElementId id = id_of(e1);
        const Element* e2 = h2.find(id);
        if (!e2 || e1.index() != e2->index()) continue;
        if (const auto* a = as_hypersimplex(e1)) {
            if (auto overlap = meet_pair(*a, std::get<Hypersimplex>(*e2)))
                chosen.emplace(id, std::move(*overlap));
        } else {
            chosen.emplace(id, e1);  // vertices and anti-vertices match by id
        }
    }
    detail::close_over_participants(chosen, h1);

    BoundaryRegistry boundaries;
    for (const auto& [id, b] : h1.boundaries())
        if (h2.boundaries().contains(id)) boundaries.add(b);
    Hypernetwork out = detail::assemble_in_order(chosen, h1, boundaries);
    detail::register_used_tags(out.boundaries(), out, h1.boundaries(), h2.boundaries());
    detail::require_valid(out, "meet");
    return out;
}

Hypernetwork difference(const Hypernetwork& h1, const Hypernetwork& h2) {
    detail::Selection chosen;
    for (const auto& e : h1.elements()) {
        const ElementId id = id_of(e);
        const Element* other = h2.find(id);
        const auto* hs = as_hypersimplex(e);

        if (!hs) {
            const bool present = other && other->index() == e.index();
            if (!present) chosen.emplace(id, e);
            continue;
        }

        const auto* match = other ? as_hypersimplex(*other) : nullptr;
        if (!match) {
            chosen.emplace(id, e);  // no same-name hypersimplex
            continue;
        }

        DiffRow row = DiffRow::Retain;  // incomparable unless shown compatible
        if (hs->is_conflict() || match->is_conflict()) {
            if (eq_hs(*hs, *match)) row = DiffRow::Drop;
        } else if (hs->agg == Aggregation::Alpha && match->agg == Aggregation::Alpha) {
            if (roles_compatible(*hs, *match) && hs->participants == match->participants)
                row = DiffRow::Drop;
        } else if (beta_compatible(*hs, *match)) {
            row = DiffRow::Subtract;
        }

        if (row == DiffRow::Retain) {
            chosen.emplace(id, e);
        } else if (row == DiffRow::Subtract) {
            const IdSet removed = participant_set(*match);
            auto rest = filtered_participants(*hs, [&removed](const ElementId& p) { return removed.count(p) == 0; });
            if (rest.empty()) continue;
            Hypersimplex out = *hs;
            out.relation = resized_signature(hs->relation, rest.size());
            out.participants = std::move(rest);
            chosen.emplace(id, std::move(out));
        }
    }
    detail::close_over_participants(chosen, h1);

    BoundaryRegistry boundaries;
    for (const auto& [id, b] : h1.boundaries())
        if (!h2.boundaries().contains(id)) boundaries.add(b);
    Hypernetwork out = detail::assemble_in_order(chosen, h1, boundaries);
    detail::register_used_tags(out.boundaries(), out, h1.boundaries(), h2.boundaries());
    detail::require_valid(out, "difference");
    return out;
}

} // namespace hnet
