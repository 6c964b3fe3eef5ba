#include <algorithm>
#include <stdexcept>

#include "closure.hpp"
#include "hnet/algebra.hpp"
#include "hnet/error.hpp"

namespace hnet {

SelectorItem SelectorItem::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("selector item needs a kind prefix: " + std::string(text));
    const auto prefix = text.substr(0, colon);
    std::string name(text.substr(colon + 1));

    SelectorItem item;
    if (prefix == "v")
        item.kind = Kind::Vertex;
    else if (prefix == "hs")
        item.kind = Kind::Hypersimplex;
    else if (prefix == "rel")
        item.kind = Kind::Relation;
    else if (prefix == "b")
        item.kind = Kind::Boundary;
    else
        throw std::invalid_argument("unknown selector kind '" + std::string(prefix) + "'");

    const bool ok = item.kind == Kind::Vertex ? ElementId::is_well_formed(name)
                                              : ElementId::is_plain_identifier(name);
    if (!ok) throw std::invalid_argument("malformed selector name '" + name + "'");
    item.name = std::move(name);
    return item;
}

std::string SelectorItem::str() const {
    switch (kind) {
    case Kind::Vertex: return "v:" + name;
    case Kind::Hypersimplex: return "hs:" + name;
    case Kind::Relation: return "rel:" + name;
    case Kind::Boundary: return "b:" + name;
    }
    return name;
}

std::vector<SelectorItem> unresolved_items(const Hypernetwork& h, const PruneSelector& s) {
    std::vector<SelectorItem> missing;
    for (const auto& item : s) {
        bool found = false;
        switch (item.kind) {
        case SelectorItem::Kind::Vertex: {
            const Element* e = h.find(ElementId(item.name));
            found = e && !is_hypersimplex(*e);
            break;
        }
        case SelectorItem::Kind::Hypersimplex: {
            const Element* e = h.find(ElementId(item.name));
            found = e && is_hypersimplex(*e);
            break;
        }
        case SelectorItem::Kind::Relation:
            found = std::any_of(h.elements().begin(), h.elements().end(), [&item](const Element& e) {
                const auto* hs = as_hypersimplex(e);
                return hs && !hs->is_conflict() && hs->relation.symbol == item.name;
            });
            break;
        case SelectorItem::Kind::Boundary:
            found = h.boundaries().contains(ElementId(item.name));
            break;
        }
        if (!found) missing.push_back(item);
    }
    return missing;
}

namespace {

struct Selection {
    IdSet elements;  // v: and hs: items
    std::set<std::string> relations;
    IdSet boundaries;

    explicit Selection(const PruneSelector& s) {
        for (const auto& item : s) {
            switch (item.kind) {
            case SelectorItem::Kind::Vertex:
            case SelectorItem::Kind::Hypersimplex: elements.insert(ElementId(item.name)); break;
            case SelectorItem::Kind::Relation: relations.insert(item.name); break;
            case SelectorItem::Kind::Boundary: boundaries.insert(ElementId(item.name)); break;
            }
        }
    }

    bool tags_selected(const IdSet& tags) const {
        return std::any_of(tags.begin(), tags.end(), [this](const ElementId& t) { return boundaries.count(t) != 0; });
    }
};

bool all_excluded(const Hypersimplex& hs) {
    return !hs.participants.empty() &&
           std::all_of(hs.participants.begin(), hs.participants.end(),
                       [](const ElementId& p) { return p.is_anti(); });
}

class PruneSweep {
public:
    PruneSweep(const Hypernetwork& h, const PruneSelector& s) : net_(h), sel_(s) {
        for (const auto& [id, containers] : h.part_of())
            if (!containers.empty()) had_container_.insert(id);
    }

    Hypernetwork run() {
        // Every productive pass rewrites or deletes at least one element.
        const std::size_t bound = 2 * net_.size() + 2;
        for (std::size_t pass = 0; pass < bound; ++pass)
            if (!sweep()) break;
        return std::move(net_);
    }

private:
    bool sweep() {
        bool changed = false;
        for (const auto& id : net_.insertion_order()) {
            const Element* e = net_.find(id);
            if (!e || !is_hypersimplex(*e)) continue;
            Hypersimplex hs = std::get<Hypersimplex>(*e);
            if (rewrite(hs)) changed = true;
            if (doomed(hs)) {
                net_.erase(id);
                changed = true;
            }
        }
        for (const auto& id : net_.insertion_order()) {
            const Element* e = net_.find(id);
            if (!e || is_hypersimplex(*e)) continue;
            if (sel_.elements.count(id) || unreachable(id)) {
                net_.erase(id);
                changed = true;
            }
        }
        for (const auto& id : net_.insertion_order()) {
            const Element* e = net_.find(id);
            if (e && is_hypersimplex(*e) && unreachable(id)) {
                net_.erase(id);
                changed = true;
            }
        }
        return changed;
    }

    // Replaces selected participants by their anti-vertices.
    bool rewrite(Hypersimplex& hs) {
        if (hs.is_conflict()) return false;
        bool touched = false;
        for (auto& p : hs.participants) {
            if (p.is_anti() || !sel_.elements.count(p)) continue;
            AntiVertex anti{p};
            p = anti.id();
            if (!net_.contains(p)) {
                net_.append(anti);
                had_container_.insert(p);
            }
            touched = true;
        }
        if (touched) {
            rewritten_.insert(hs.id);
            net_.replace(hs);
        }
        return touched;
    }

    bool doomed(const Hypersimplex& hs) const {
        if (sel_.elements.count(hs.id)) return true;
        if (!hs.is_conflict() && sel_.relations.count(hs.relation.symbol)) return true;
        if (sel_.tags_selected(hs.tags)) return true;
        if (!wellformed(hs, net_)) return true;  // includes dangling roles after deletions
        if (rewritten_.count(hs.id) && all_excluded(hs)) return true;
        return false;
    }

    // Lost every container during this prune.
    bool unreachable(const ElementId& id) const {
        return had_container_.count(id) && net_.containers_of(id).empty();
    }

    Hypernetwork net_;
    Selection sel_;
    IdSet had_container_;
    IdSet rewritten_;
};

} // namespace

Hypernetwork prune(const Hypernetwork& h, const PruneSelector& s, MissingItems missing) {
    if (missing == MissingItems::Reject) {
        auto unresolved = unresolved_items(h, s);
        if (!unresolved.empty()) throw UnknownSelector(unresolved.front().str());
    }
    Hypernetwork out = PruneSweep(h, s).run();
    detail::require_valid(out, "prune");
    return out;
}

} // namespace hnet
